#pragma once

#include <vector>

#include "skillscope/core/types.hpp"

namespace skillscope {

struct FrequencyEvidence {
  double hf_ratio = 0.0;      // non-DC energy beyond cutoff * Nyquist, as a fraction
  double nyquist_peak = 0.0;  // energy at (W/2, H/2) over non-DC energy; 0 for odd sizes
  std::vector<double> radial_profile;
  double cutoff = 0.75;

  friend bool operator==(const FrequencyEvidence&, const FrequencyEvidence&) = default;
};

/// Normalized radius of bin (u, v): distance from DC in cycles/pixel divided
/// by Nyquist (0.5), so the range is [0, sqrt(2)].
double normalized_radius(int u, int v, int width, int height);

/// Spectral statistics of the mean-removed luminance. Requires width and
/// height >= 8 (ImageTooSmall) and cutoff in (0, 1) (InvalidSpec).
FrequencyEvidence frequency_evidence(const Pixels& pixels, double cutoff = 0.75);

}  // namespace skillscope
