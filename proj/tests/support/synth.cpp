#include "synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "skillscope/io/image_io.hpp"

namespace skillscope::synth {

Pixels snap8(const Pixels& p) { return from_8bit(p.width(), p.height(), p.channels(), quantize_8bit(p)); }

Pixels checkerboard(int w, int h, double lo, double hi) {
  std::vector<double> d(static_cast<std::size_t>(w) * h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) d[static_cast<std::size_t>(y) * w + x] = (x + y) % 2 ? hi : lo;
  }
  return Pixels(w, h, 1, std::move(d));
}

Pixels nearest_upsample(const Pixels& s, int f) {
  const int w = s.width() * f, h = s.height() * f, c = s.channels();
  std::vector<double> d(static_cast<std::size_t>(w) * h * c);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int ch = 0; ch < c; ++ch) d[(static_cast<std::size_t>(y) * w + x) * c + ch] = s.at(x / f, y / f, ch);
    }
  }
  return Pixels(w, h, c, std::move(d));
}

Pixels uniform_noise(int w, int h, int channels, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<double> d(static_cast<std::size_t>(w) * h * channels);
  for (double& v : d) v = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  return Pixels(w, h, channels, std::move(d));
}

Pixels radial_gradient(int w, int h) {
  std::vector<double> d(static_cast<std::size_t>(w) * h);
  const double cx = (w - 1) / 2.0, cy = (h - 1) / 2.0, rmax = std::hypot(cx, cy);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) d[static_cast<std::size_t>(y) * w + x] = 1.0 - std::hypot(x - cx, y - cy) / rmax;
  }
  return Pixels(w, h, 1, std::move(d));
}

Pixels record_image(SkillId skill, Label label, std::uint64_t seed) {
  constexpr int W = 64, H = 64;
  std::mt19937_64 gen(seed * 1315423911ULL + static_cast<std::uint64_t>(skill.ordinal()) * 2 +
                      (label == Label::Fake ? 1 : 0));
  auto unit = [&] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
  const double hue = skill.ordinal() / 12.0;
  std::vector<double> d(static_cast<std::size_t>(W) * H * 3);
  for (int y = 0; y < H; ++y) {
    for (int x = 0; x < W; ++x) {
      const double u = x / (W - 1.0), v = y / (H - 1.0);
      const double base[3] = {0.25 + 0.4 * u + 0.2 * hue, 0.3 + 0.35 * v, 0.55 - 0.3 * u * v + 0.1 * hue};
      for (int c = 0; c < 3; ++c) d[(static_cast<std::size_t>(y) * W + x) * 3 + c] = base[c] + 0.04 * (unit() - 0.5);
    }
  }
  auto px = [&](int x, int y, int c) -> double& { return d[(static_cast<std::size_t>(y) * W + x) * 3 + c]; };
  if (label == Label::Fake) {
    switch (skill.value()) {
      case SkillId::Value::Freq:
        for (int y = 0; y < H; ++y) {
          for (int x = 0; x < W; ++x) {
            for (int c = 0; c < 3; ++c) px(x, y, c) += (x + y) % 2 ? 0.08 : -0.08;
          }
        }
        break;
      case SkillId::Value::Pixel:
        for (int y = 0; y < H; y += 2) {
          for (int x = 0; x < W; x += 2) {
            for (int c = 0; c < 3; ++c) {
              const double v = px(x, y, c);
              px(x + 1, y, c) = v;
              px(x, y + 1, c) = v;
              px(x + 1, y + 1, c) = v;
            }
          }
        }
        break;
      case SkillId::Value::OCR:
        for (int y = 8; y < 16; ++y) {
          for (int x = 6; x < 58; ++x) {
            if ((x / 3) % 2 == 0) {
              for (int c = 0; c < 3; ++c) px(x, y, c) = 0.05;
            }
          }
        }
        break;
      default: {
        // A flat patch whose position depends on the skill.
        const int x0 = 8 + 3 * skill.ordinal(), y0 = 40 - 2 * skill.ordinal();
        for (int y = y0; y < y0 + 14; ++y) {
          for (int x = x0; x < x0 + 14; ++x) {
            px(x, y, 0) = 0.9;
            px(x, y, 1) = 0.85 - 0.05 * hue;
            px(x, y, 2) = 0.2;
          }
        }
        break;
      }
    }
  }
  for (double& v : d) v = std::clamp(v, 0.0, 1.0);
  return snap8(Pixels(W, H, 3, std::move(d)));
}

}  // namespace skillscope::synth
