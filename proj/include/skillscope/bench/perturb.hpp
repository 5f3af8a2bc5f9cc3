#pragma once

#include <string>
#include <string_view>

#include "skillscope/core/types.hpp"

namespace skillscope {

enum class PerturbationKind { Jpeg, Blur, Resize };

struct PerturbationSpec {
  PerturbationKind kind = PerturbationKind::Jpeg;
  double parameter = 85;  // quality factor, sigma or scale

  /// Throws InvalidSpec when the parameter is out of range.
  void validate() const;
  /// "jpeg QF=85", "blur sigma=1.0", "resize x0.5".
  [[nodiscard]] std::string label() const;

  friend bool operator==(const PerturbationSpec&, const PerturbationSpec&) = default;
};

/// Parses "jpeg:85", "blur:1.0" or "resize:0.5". Throws InvalidSpec.
PerturbationSpec parse_perturbation(std::string_view text);

/// The robustness suite: jpeg:85, jpeg:70, blur:1.0, blur:2.0, resize:0.5.
std::vector<PerturbationSpec> robustness_suite();

Pixels perturb(const Pixels& pixels, const PerturbationSpec& spec);

Pixels jpeg_roundtrip(const Pixels& pixels, int quality);
/// Separable normalized Gaussian, radius ceil(3 sigma), reflect-101 borders.
Pixels gaussian_blur(const Pixels& pixels, double sigma);
/// Bilinear with half-pixel centres to (floor(W s), floor(H s)), at least 1x1.
Pixels resize_bilinear(const Pixels& pixels, double scale);

/// Peak signal-to-noise ratio in dB for peak 1.0; infinity for equal images.
double psnr(const Pixels& a, const Pixels& b);

}  // namespace skillscope
