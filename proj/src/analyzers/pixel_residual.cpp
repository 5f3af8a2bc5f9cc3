#include "skillscope/analyzers/pixel_residual.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "skillscope/core/error.hpp"

namespace skillscope {

PixelEvidence pixel_evidence(const Pixels& pixels, int factor) {
  if (factor < 2) throw Error(ErrorCode::InvalidSpec, "pixel factor must be >= 2");
  if (pixels.width() < 2 * factor || pixels.height() < 2 * factor) {
    throw Error(ErrorCode::ImageTooSmall, "pixel analysis with factor " + std::to_string(factor) + " needs at least " +
                                              std::to_string(2 * factor) + "x" + std::to_string(2 * factor));
  }
  const int w = pixels.width();
  const int dw = w / factor;
  const int dh = pixels.height() / factor;
  const int rw = dw * factor;
  const int rh = dh * factor;
  const auto lum = pixels.luminance();
  auto px = [&](int x, int y) { return lum[static_cast<std::size_t>(y) * w + x]; };

  // Down: block mean written as first + mean(offsets), which is exact when
  // the block is constant (so nearest-upsampled inputs give zero residual).
  std::vector<double> down(static_cast<std::size_t>(dw) * dh);
  for (int by = 0; by < dh; ++by) {
    for (int bx = 0; bx < dw; ++bx) {
      const double first = px(bx * factor, by * factor);
      double acc = 0.0;
      for (int dy = 0; dy < factor; ++dy) {
        for (int dx = 0; dx < factor; ++dx) acc += px(bx * factor + dx, by * factor + dy) - first;
      }
      down[static_cast<std::size_t>(by) * dw + bx] = first + acc / (factor * factor);
    }
  }

  std::vector<double> residual(static_cast<std::size_t>(rw) * rh);
  for (int y = 0; y < rh; ++y) {
    for (int x = 0; x < rw; ++x) {
      const double up = down[static_cast<std::size_t>(y / factor) * dw + x / factor];
      residual[static_cast<std::size_t>(y) * rw + x] = std::abs(px(x, y) - up);
    }
  }

  PixelEvidence ev;
  ev.factor = factor;
  const double n = static_cast<double>(residual.size());
  double sum = 0.0;
  for (double r : residual) {
    sum += r;
    ev.residual_max = std::max(ev.residual_max, r);
  }
  ev.residual_mean = sum / n;
  double sq = 0.0;
  for (double r : residual) sq += (r - ev.residual_mean) * (r - ev.residual_mean);
  ev.residual_var = sq / n;

  if (ev.residual_var > 0.0) {
    auto c = [&](int x, int y) { return residual[static_cast<std::size_t>(y) * rw + x] - ev.residual_mean; };
    double prod = 0.0;
    long pairs = 0;
    for (int y = 0; y < rh; ++y) {
      for (int x = 0; x + factor < rw; ++x, ++pairs) prod += c(x, y) * c(x + factor, y);
    }
    for (int y = 0; y + factor < rh; ++y) {
      for (int x = 0; x < rw; ++x, ++pairs) prod += c(x, y) * c(x, y + factor);
    }
    if (pairs > 0) ev.periodicity_score = std::clamp(prod / pairs / ev.residual_var, 0.0, 1.0);
  }
  // Guard the ordering invariant against rounding in the mean.
  ev.residual_mean = std::min(ev.residual_mean, ev.residual_max);
  return ev;
}

}  // namespace skillscope
