#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skillscope/bench/manifest.hpp"

namespace skillscope {

struct FewShotResult {
  Manifest manifest;
  std::vector<std::string> warnings;
};

/// Seeded uniform sample of `n_per_skill` real and `n_per_skill` fake
/// train-split records per skill. Skills (in ordinal order) and labels
/// (real, then fake) share one mt19937_64 stream; each pool is sampled by
/// partial Fisher-Yates. Short pools contribute everything and add a
/// warning. Output keeps manifest order. Throws ConfigError for n < 1.
FewShotResult few_shot_sample(const Manifest& manifest, int n_per_skill, std::uint64_t seed);

}  // namespace skillscope
