#include "skillscope/router/clues.hpp"

#include "skillscope/analyzers/frequency.hpp"
#include "skillscope/analyzers/pixel_residual.hpp"
#include "skillscope/core/error.hpp"
#include "skillscope/core/format.hpp"

namespace skillscope {

ClueSet extract_clues(const Pixels& pixels, const ToolClient* ocr, const AnalyzerSettings& settings,
                      std::string image_id) {
  ClueSet c;
  c.image_id = std::move(image_id);
  try {
    c.hf_ratio = frequency_evidence(pixels, settings.hf_cutoff).hf_ratio;
    c.residual_energy = pixel_evidence(pixels, 2).residual_mean;
  } catch (const Error& e) {
    throw Error(ErrorCode::AnalyzerFailure, "clue extraction: " + std::string(e.what()));
  }
  if (ocr) c.text_likelihood = text_coverage(ocr->ocr(pixels));

  const auto lum = pixels.luminance();
  double sum = 0.0;
  for (double v : lum) sum += v;
  c.luminance_mean = sum / static_cast<double>(lum.size());
  double sq = 0.0;
  for (double v : lum) sq += (v - c.luminance_mean) * (v - c.luminance_mean);
  c.luminance_var = sq / static_cast<double>(lum.size());
  return c;
}

std::string clue_summary(const ClueSet& c) {
  return "hf_ratio=" + fixed4(c.hf_ratio) + " residual_energy=" + fixed4(c.residual_energy) +
         " text_likelihood=" + fixed4(c.text_likelihood) + " luminance_mean=" + fixed4(c.luminance_mean) +
         " luminance_var=" + fixed4(c.luminance_var);
}

}  // namespace skillscope
