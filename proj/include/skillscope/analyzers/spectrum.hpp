#pragma once

#include <complex>
#include <span>
#include <vector>

#include "skillscope/core/types.hpp"

namespace skillscope {

/// Unnormalized forward 2-D DFT, row-major: bin (u, v) at index v*width + u.
struct Spectrum {
  int width = 0;
  int height = 0;
  std::vector<std::complex<double>> bins;

  [[nodiscard]] const std::complex<double>& at(int u, int v) const {
    return bins[static_cast<std::size_t>(v) * width + u];
  }
};

/// DFT of the luminance plane.
Spectrum dft2(const Pixels& pixels);
Spectrum dft2(std::span<const double> plane, int width, int height);

}  // namespace skillscope
