#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace skillscope {

enum class ToolKind { Ocr, Lighting, Shadow, Region };

std::string_view to_string(ToolKind kind);
ToolKind tool_kind_from_string(std::string_view text);

/// Axis-aligned box in relative [0,1] image coordinates.
struct Box {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;

  [[nodiscard]] double area() const { return (x1 - x0) * (y1 - y0); }
  friend bool operator==(const Box&, const Box&) = default;
};

struct OcrItem {
  std::string text;
  Box box;
  double confidence = 0;
  friend bool operator==(const OcrItem&, const OcrItem&) = default;
};

struct LineSegment {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  double angle = 0;  // radians
  friend bool operator==(const LineSegment&, const LineSegment&) = default;
};

struct ShadowPair {
  Box object;
  Box shadow;
  double direction = 0;  // radians
  friend bool operator==(const ShadowPair&, const ShadowPair&) = default;
};

struct RegionMask {
  Box box;
  double area_fraction = 0;
  friend bool operator==(const RegionMask&, const RegionMask&) = default;
};

struct OcrResult {
  std::vector<OcrItem> items;
  friend bool operator==(const OcrResult&, const OcrResult&) = default;
};
struct LineSegments {
  std::vector<LineSegment> segments;
  friend bool operator==(const LineSegments&, const LineSegments&) = default;
};
struct ShadowPairs {
  std::vector<ShadowPair> pairs;
  friend bool operator==(const ShadowPairs&, const ShadowPairs&) = default;
};
struct RegionMasks {
  std::vector<RegionMask> regions;
  friend bool operator==(const RegionMasks&, const RegionMasks&) = default;
};

using ToolResult = std::variant<OcrResult, LineSegments, ShadowPairs, RegionMasks>;

/// Decodes and validates a wire response for `kind`. Throws
/// MalformedToolResponse on bad structure or out-of-range values.
ToolResult parse_tool_response(ToolKind kind, std::string_view body);
nlohmann::json tool_response_json(const ToolResult& result);

/// Area of the union of OCR boxes (fraction of the image, in [0,1]).
double text_coverage(const OcrResult& ocr);

}  // namespace skillscope
