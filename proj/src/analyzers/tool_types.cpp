#include "skillscope/analyzers/tool_types.hpp"

#include <algorithm>
#include <cmath>

#include "skillscope/core/error.hpp"
#include "skillscope/core/format.hpp"

namespace skillscope {
namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedToolResponse, what); }

double unit_value(const json& j, const char* what) {
  if (!j.is_number()) malformed(std::string(what) + " is not a number");
  const double v = j.get<double>();
  if (!(v >= 0.0 && v <= 1.0)) malformed(std::string(what) + " outside [0,1]: " + j.dump());
  return v;
}

double finite_value(const json& j, const char* what) {
  if (!j.is_number()) malformed(std::string(what) + " is not a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) malformed(std::string(what) + " is not finite");
  return v;
}

std::array<double, 4> quad(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 4) malformed(std::string(what) + " must be 4 numbers");
  return {unit_value(j[0], what), unit_value(j[1], what), unit_value(j[2], what), unit_value(j[3], what)};
}

Box parse_box(const json& j, const char* what) {
  const auto q = quad(j, what);
  Box b{q[0], q[1], q[2], q[3]};
  if (b.x0 > b.x1 || b.y0 > b.y1) malformed(std::string(what) + " has inverted corners");
  return b;
}

json box_json(const Box& b) { return json::array({b.x0, b.y0, b.x1, b.y1}); }

const json& list_field(const json& root, const char* key) {
  if (!root.is_object() || !root.contains(key) || !root.at(key).is_array()) {
    malformed(std::string("response lacks array field '") + key + "'");
  }
  return root.at(key);
}

}  // namespace

std::string_view to_string(ToolKind kind) {
  switch (kind) {
    case ToolKind::Ocr: return "ocr";
    case ToolKind::Lighting: return "lighting";
    case ToolKind::Shadow: return "shadow";
    case ToolKind::Region: return "region";
  }
  return "ocr";
}

ToolKind tool_kind_from_string(std::string_view text) {
  const auto t = to_lower(text);
  if (t == "ocr") return ToolKind::Ocr;
  if (t == "lighting") return ToolKind::Lighting;
  if (t == "shadow") return ToolKind::Shadow;
  if (t == "region") return ToolKind::Region;
  throw Error(ErrorCode::ConfigError, "unknown tool kind '" + std::string(text) + "'");
}

ToolResult parse_tool_response(ToolKind kind, std::string_view body) {
  json root;
  try {
    root = json::parse(body);
  } catch (const json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  try {
    switch (kind) {
      case ToolKind::Ocr: {
        OcrResult r;
        for (const auto& it : list_field(root, "items")) {
          if (!it.contains("text") || !it.at("text").is_string()) malformed("ocr item lacks text");
          r.items.push_back(
              {it.at("text").get<std::string>(), parse_box(it.at("box"), "ocr box"),
               unit_value(it.at("confidence"), "ocr confidence")});
        }
        return r;
      }
      case ToolKind::Lighting: {
        LineSegments r;
        for (const auto& it : list_field(root, "segments")) {
          const auto e = quad(it.at("endpoints"), "segment endpoints");
          r.segments.push_back({e[0], e[1], e[2], e[3], finite_value(it.at("angle"), "segment angle")});
        }
        return r;
      }
      case ToolKind::Shadow: {
        ShadowPairs r;
        for (const auto& it : list_field(root, "pairs")) {
          r.pairs.push_back({parse_box(it.at("object"), "object box"), parse_box(it.at("shadow"), "shadow box"),
                             finite_value(it.at("direction"), "shadow direction")});
        }
        return r;
      }
      case ToolKind::Region: {
        RegionMasks r;
        for (const auto& it : list_field(root, "regions")) {
          r.regions.push_back(
              {parse_box(it.at("box"), "region box"), unit_value(it.at("area_fraction"), "region area_fraction")});
        }
        return r;
      }
    }
  } catch (const json::exception& e) {
    malformed(std::string(to_string(kind)) + " response: " + e.what());
  }
  malformed("unknown tool kind");
}

json tool_response_json(const ToolResult& result) {
  return std::visit(
      [](const auto& r) -> json {
        using T = std::decay_t<decltype(r)>;
        json list = json::array();
        if constexpr (std::is_same_v<T, OcrResult>) {
          for (const auto& it : r.items) {
            list.push_back({{"text", it.text}, {"box", box_json(it.box)}, {"confidence", it.confidence}});
          }
          return {{"items", list}};
        } else if constexpr (std::is_same_v<T, LineSegments>) {
          for (const auto& s : r.segments) {
            list.push_back({{"endpoints", json::array({s.x0, s.y0, s.x1, s.y1})}, {"angle", s.angle}});
          }
          return {{"segments", list}};
        } else if constexpr (std::is_same_v<T, ShadowPairs>) {
          for (const auto& p : r.pairs) {
            list.push_back({{"object", box_json(p.object)}, {"shadow", box_json(p.shadow)}, {"direction", p.direction}});
          }
          return {{"pairs", list}};
        } else {
          for (const auto& m : r.regions) {
            list.push_back({{"box", box_json(m.box)}, {"area_fraction", m.area_fraction}});
          }
          return {{"regions", list}};
        }
      },
      result);
}

double text_coverage(const OcrResult& ocr) {
  std::vector<double> xs{0.0, 1.0};
  std::vector<double> ys{0.0, 1.0};
  for (const auto& it : ocr.items) {
    xs.push_back(it.box.x0);
    xs.push_back(it.box.x1);
    ys.push_back(it.box.y0);
    ys.push_back(it.box.y1);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  double area = 0.0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double cx = 0.5 * (xs[i] + xs[i + 1]);
    for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
      const double cy = 0.5 * (ys[j] + ys[j + 1]);
      const bool covered = std::any_of(ocr.items.begin(), ocr.items.end(), [&](const OcrItem& it) {
        return cx >= it.box.x0 && cx <= it.box.x1 && cy >= it.box.y0 && cy <= it.box.y1;
      });
      if (covered) area += (xs[i + 1] - xs[i]) * (ys[j + 1] - ys[j]);
    }
  }
  return std::clamp(area, 0.0, 1.0);
}

}  // namespace skillscope
