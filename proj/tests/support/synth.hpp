#pragma once

#include <cstdint>

#include "skillscope/core/types.hpp"

namespace skillscope::synth {

/// 64x64 RGB test raster for a (skill, label) pair, already on the 8-bit
/// grid so a PNG roundtrip is lossless. Fakes carry a skill-flavoured
/// artifact; reals are smooth gradients with mild noise.
Pixels record_image(SkillId skill, Label label, std::uint64_t seed);

/// Values snapped to multiples of 1/255.
Pixels snap8(const Pixels& p);

Pixels checkerboard(int w, int h, double lo, double hi);
Pixels nearest_upsample(const Pixels& small, int factor);
Pixels uniform_noise(int w, int h, int channels, std::uint64_t seed);
Pixels radial_gradient(int w, int h);

}  // namespace skillscope::synth
