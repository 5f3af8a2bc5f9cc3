#include "skillscope/analyzers/views.hpp"

namespace skillscope {

Pixels rotate90(const Pixels& p) {
  const int w = p.width();
  const int h = p.height();
  const int c = p.channels();
  std::vector<double> out(p.data().size());
  // Output is h wide and w tall; out(x', y') = in(y', h - 1 - x').
  for (int yo = 0; yo < w; ++yo) {
    for (int xo = 0; xo < h; ++xo) {
      for (int k = 0; k < c; ++k) {
        out[(static_cast<std::size_t>(yo) * h + xo) * c + k] = p.at(yo, h - 1 - xo, k);
      }
    }
  }
  return Pixels(h, w, c, std::move(out));
}

Pixels rotate180(const Pixels& p) {
  const int w = p.width();
  const int h = p.height();
  const int c = p.channels();
  std::vector<double> out(p.data().size());
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int k = 0; k < c; ++k) {
        out[(static_cast<std::size_t>(y) * w + x) * c + k] = p.at(w - 1 - x, h - 1 - y, k);
      }
    }
  }
  return Pixels(w, h, c, std::move(out));
}

Pixels to_grayscale(const Pixels& p) {
  if (p.channels() == 1) return p;
  return Pixels(p.width(), p.height(), 1, p.luminance());
}

Pixels swap_channels(const Pixels& p) {
  if (p.channels() == 1) return p;
  std::vector<double> out(p.data());
  for (std::size_t i = 0; i < out.size(); i += 3) std::swap(out[i], out[i + 2]);
  return Pixels(p.width(), p.height(), 3, std::move(out));
}

std::vector<TransformView> transform_views(const Pixels& pixels) {
  std::vector<TransformView> views;
  views.push_back({"rot90", rotate90(pixels)});
  views.push_back({"rot180", rotate180(pixels)});
  views.push_back({"grayscale", to_grayscale(pixels)});
  views.push_back({"channel_swap", swap_channels(pixels)});
  return views;
}

}  // namespace skillscope
