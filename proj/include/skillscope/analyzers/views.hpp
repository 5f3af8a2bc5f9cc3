#pragma once

#include <string>
#include <vector>

#include "skillscope/core/types.hpp"

namespace skillscope {

struct TransformView {
  std::string id;
  Pixels pixels;

  friend bool operator==(const TransformView&, const TransformView&) = default;
};

Pixels rotate90(const Pixels& p);  // clockwise; swaps width and height
Pixels rotate180(const Pixels& p);
Pixels to_grayscale(const Pixels& p);
Pixels swap_channels(const Pixels& p);  // RGB -> BGR; identity on gray

/// rot90, rot180, grayscale, channel_swap, in that order.
std::vector<TransformView> transform_views(const Pixels& pixels);

}  // namespace skillscope
