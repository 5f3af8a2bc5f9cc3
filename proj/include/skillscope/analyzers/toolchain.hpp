#pragma once

#include <string>
#include <variant>
#include <vector>

#include "skillscope/analyzers/frequency.hpp"
#include "skillscope/analyzers/pixel_residual.hpp"
#include "skillscope/analyzers/tool_client.hpp"
#include "skillscope/analyzers/tool_types.hpp"
#include "skillscope/analyzers/views.hpp"
#include "skillscope/core/registry.hpp"

namespace skillscope {

struct ViewSet {
  std::vector<TransformView> views;
  friend bool operator==(const ViewSet&, const ViewSet&) = default;
};

using EvidencePayload =
    std::variant<FrequencyEvidence, PixelEvidence, OcrResult, LineSegments, ShadowPairs, RegionMasks, ViewSet>;

struct EvidenceItem {
  Producer producer;
  EvidencePayload payload;
  friend bool operator==(const EvidenceItem&, const EvidenceItem&) = default;
};

struct EvidenceBundle {
  SkillId skill = SkillId::Value::CS;
  std::vector<EvidenceItem> items;
  std::string summary;

  /// Derived views carried by a transform-views item, if any.
  [[nodiscard]] std::vector<TransformView> views() const;
  friend bool operator==(const EvidenceBundle&, const EvidenceBundle&) = default;
};

struct AnalyzerSettings {
  double hf_cutoff = 0.75;
  int pixel_factor = 2;
};

/// Deterministic text rendering of a bundle (4 fractional digits).
/// Prompt-only bundles render as `checklist:<Skill>`.
std::string render_summary(SkillId skill, const std::vector<EvidenceItem>& items);

/// Runs the producers bound to `skill` in declared order. `tools` may be
/// null when the binding needs no external tool. Producer errors are
/// rethrown with "skill <S>: producer <p>" context.
EvidenceBundle run_toolchain(SkillId skill, const Pixels& pixels, const SkillRegistry& registry,
                             const ToolClient* tools, const AnalyzerSettings& settings = {});

}  // namespace skillscope
