#include "skillscope/analyzers/toolchain.hpp"

#include <nlohmann/json.hpp>

#include "skillscope/core/error.hpp"
#include "skillscope/core/format.hpp"

namespace skillscope {
namespace {

std::string box_text(const Box& b) {
  return "[" + fixed4(b.x0) + "," + fixed4(b.y0) + "," + fixed4(b.x1) + "," + fixed4(b.y1) + "]";
}

std::string payload_text(const EvidencePayload& payload) {
  return std::visit(
      [](const auto& p) -> std::string {
        using T = std::decay_t<decltype(p)>;
        std::string s;
        if constexpr (std::is_same_v<T, FrequencyEvidence>) {
          s = "hf_ratio=" + fixed4(p.hf_ratio) + " nyquist_peak=" + fixed4(p.nyquist_peak) +
              " cutoff=" + fixed4(p.cutoff) + " radial_profile=[";
          for (std::size_t i = 0; i < p.radial_profile.size(); ++i) {
            if (i) s += ",";
            s += fixed4(p.radial_profile[i]);
          }
          s += "]";
        } else if constexpr (std::is_same_v<T, PixelEvidence>) {
          s = "factor=" + std::to_string(p.factor) + " residual_mean=" + fixed4(p.residual_mean) +
              " residual_var=" + fixed4(p.residual_var) + " residual_max=" + fixed4(p.residual_max) +
              " periodicity=" + fixed4(p.periodicity_score);
        } else if constexpr (std::is_same_v<T, OcrResult>) {
          s = std::to_string(p.items.size()) + " text regions, coverage=" + fixed4(text_coverage(p));
          for (const auto& it : p.items) {
            s += "\n  text=" + nlohmann::json(it.text).dump() + " box=" + box_text(it.box) +
                 " confidence=" + fixed4(it.confidence);
          }
        } else if constexpr (std::is_same_v<T, LineSegments>) {
          s = std::to_string(p.segments.size()) + " line segments";
          for (const auto& l : p.segments) {
            s += "\n  from=(" + fixed4(l.x0) + "," + fixed4(l.y0) + ") to=(" + fixed4(l.x1) + "," + fixed4(l.y1) +
                 ") angle=" + fixed4(l.angle);
          }
        } else if constexpr (std::is_same_v<T, ShadowPairs>) {
          s = std::to_string(p.pairs.size()) + " object/shadow pairs";
          for (const auto& sp : p.pairs) {
            s += "\n  object=" + box_text(sp.object) + " shadow=" + box_text(sp.shadow) +
                 " direction=" + fixed4(sp.direction);
          }
        } else if constexpr (std::is_same_v<T, RegionMasks>) {
          s = std::to_string(p.regions.size()) + " regions";
          for (const auto& r : p.regions) {
            s += "\n  box=" + box_text(r.box) + " area=" + fixed4(r.area_fraction);
          }
        } else {
          s = std::to_string(p.views.size()) + " views";
          for (const auto& v : p.views) {
            s += "\n  " + v.id + " " + std::to_string(v.pixels.width()) + "x" + std::to_string(v.pixels.height()) +
                 "x" + std::to_string(v.pixels.channels());
          }
        }
        return s;
      },
      payload);
}

EvidencePayload run_producer(Producer producer, const Pixels& pixels, const ToolClient* tools,
                             const AnalyzerSettings& settings) {
  auto need_tools = [&]() -> const ToolClient& {
    if (!tools) throw Error(ErrorCode::ToolUnavailable, "no tool client configured");
    return *tools;
  };
  switch (producer) {
    case Producer::FrequencyAnalyzer: return frequency_evidence(pixels, settings.hf_cutoff);
    case Producer::PixelAnalyzer: return pixel_evidence(pixels, settings.pixel_factor);
    case Producer::TransformViews: return ViewSet{transform_views(pixels)};
    case Producer::OcrClient: return std::get<OcrResult>(need_tools().call(pixels, ToolKind::Ocr));
    case Producer::LightingClient: return std::get<LineSegments>(need_tools().call(pixels, ToolKind::Lighting));
    case Producer::ShadowClient: return std::get<ShadowPairs>(need_tools().call(pixels, ToolKind::Shadow));
    case Producer::RegionClient: return std::get<RegionMasks>(need_tools().call(pixels, ToolKind::Region));
  }
  throw Error(ErrorCode::AnalyzerFailure, "unknown producer");
}

}  // namespace

std::vector<TransformView> EvidenceBundle::views() const {
  for (const auto& item : items) {
    if (const auto* vs = std::get_if<ViewSet>(&item.payload)) return vs->views;
  }
  return {};
}

std::string render_summary(SkillId skill, const std::vector<EvidenceItem>& items) {
  if (items.empty()) return "checklist:" + std::string(skill.name());
  std::string s = "skill:" + std::string(skill.name());
  for (const auto& item : items) {
    s += "\n[";
    s += to_string(item.producer);
    s += "] ";
    s += payload_text(item.payload);
  }
  return s;
}

EvidenceBundle run_toolchain(SkillId skill, const Pixels& pixels, const SkillRegistry& registry,
                             const ToolClient* tools, const AnalyzerSettings& settings) {
  const auto& binding = registry.binding(skill);
  EvidenceBundle bundle;
  bundle.skill = skill;
  for (Producer producer : binding.producers) {
    try {
      bundle.items.push_back({producer, run_producer(producer, pixels, tools, settings)});
    } catch (const Error& e) {
      throw e.with_context("skill " + std::string(skill.name()) + ": producer " + std::string(to_string(producer)));
    }
  }
  bundle.summary = render_summary(skill, bundle.items);
  return bundle;
}

}  // namespace skillscope
