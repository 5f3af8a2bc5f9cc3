#pragma once

#include <string>

#include "skillscope/analyzers/tool_client.hpp"
#include "skillscope/analyzers/toolchain.hpp"
#include "skillscope/core/types.hpp"

namespace skillscope {

/// Cheap heuristic clues used for skill routing.
struct ClueSet {
  double hf_ratio = 0.0;         // [0,1]
  double residual_energy = 0.0;  // mean |x - Up(Down(x))| at factor 2
  double text_likelihood = 0.0;  // OCR box coverage, 0 without an OCR client
  double luminance_mean = 0.0;
  double luminance_var = 0.0;
  std::string image_id;

  friend bool operator==(const ClueSet&, const ClueSet&) = default;
};

/// Analyzer errors surface as AnalyzerFailure; OCR client errors propagate
/// unchanged.
ClueSet extract_clues(const Pixels& pixels, const ToolClient* ocr, const AnalyzerSettings& settings = {},
                      std::string image_id = {});

/// One-line rendering used in the routing prompt.
std::string clue_summary(const ClueSet& clues);

}  // namespace skillscope
