#pragma once

#include "skillscope/core/types.hpp"

namespace skillscope {

/// Statistics of |x - Up(Down(x))| on the luminance plane, where Down is a
/// factor x factor box average (ragged edges dropped) and Up is
/// nearest-neighbour replication.
struct PixelEvidence {
  int factor = 2;
  double residual_mean = 0.0;
  double residual_var = 0.0;
  double residual_max = 0.0;
  double periodicity_score = 0.0;  // residual autocorrelation at lag = factor, clamped to [0,1]

  friend bool operator==(const PixelEvidence&, const PixelEvidence&) = default;
};

/// Requires factor >= 2 (InvalidSpec) and width, height >= 2 * factor (ImageTooSmall).
PixelEvidence pixel_evidence(const Pixels& pixels, int factor = 2);

}  // namespace skillscope
