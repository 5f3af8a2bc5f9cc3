#include "skillscope/bench/perturb.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

#include "skillscope/core/error.hpp"
#include "skillscope/core/format.hpp"
#include "skillscope/io/image_io.hpp"
#include "skillscope/io/jpeg_codec.hpp"

namespace skillscope {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorCode::InvalidSpec, msg); }

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  if (std::strtod(buf, nullptr) == v) return buf;
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

int reflect101(int i, int n) {
  if (n == 1) return 0;
  const int period = 2 * (n - 1);
  i %= period;
  if (i < 0) i += period;
  return i < n ? i : period - i;
}

}  // namespace

void PerturbationSpec::validate() const {
  switch (kind) {
    case PerturbationKind::Jpeg:
      if (parameter != std::floor(parameter) || parameter < 1 || parameter > 100) {
        invalid("jpeg quality must be an integer in 1..100, got " + short_number(parameter));
      }
      break;
    case PerturbationKind::Blur:
      if (!std::isfinite(parameter) || parameter <= 0) invalid("blur sigma must be positive");
      break;
    case PerturbationKind::Resize:
      if (!std::isfinite(parameter) || parameter <= 0) invalid("resize scale must be positive");
      break;
  }
}

std::string PerturbationSpec::label() const {
  switch (kind) {
    case PerturbationKind::Jpeg:
      return "jpeg QF=" + std::to_string(static_cast<int>(parameter));
    case PerturbationKind::Blur:
      return "blur sigma=" + short_number(parameter);
    case PerturbationKind::Resize:
      return "resize x" + short_number(parameter);
  }
  return {};
}

PerturbationSpec parse_perturbation(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    invalid("perturbation must look like kind:param (jpeg:85, blur:1.0, resize:0.5), got '" + std::string(text) + "'");
  }
  const std::string kind = to_lower(trim(text.substr(0, colon)));
  const std::string param(trim(text.substr(colon + 1)));
  PerturbationSpec spec;
  if (kind == "jpeg") {
    spec.kind = PerturbationKind::Jpeg;
  } else if (kind == "blur") {
    spec.kind = PerturbationKind::Blur;
  } else if (kind == "resize") {
    spec.kind = PerturbationKind::Resize;
  } else {
    invalid("unknown perturbation kind '" + kind + "'");
  }
  double value = 0;
  const auto [end, ec] = std::from_chars(param.data(), param.data() + param.size(), value);
  if (param.empty() || ec != std::errc() || end != param.data() + param.size()) {
    invalid("bad perturbation parameter '" + param + "'");
  }
  spec.parameter = value;
  spec.validate();
  return spec;
}

std::vector<PerturbationSpec> robustness_suite() {
  return {{PerturbationKind::Jpeg, 85},
          {PerturbationKind::Jpeg, 70},
          {PerturbationKind::Blur, 1.0},
          {PerturbationKind::Blur, 2.0},
          {PerturbationKind::Resize, 0.5}};
}

Pixels perturb(const Pixels& pixels, const PerturbationSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case PerturbationKind::Jpeg:
      return jpeg_roundtrip(pixels, static_cast<int>(spec.parameter));
    case PerturbationKind::Blur:
      return gaussian_blur(pixels, spec.parameter);
    case PerturbationKind::Resize:
      return resize_bilinear(pixels, spec.parameter);
  }
  invalid("unhandled perturbation");
}

Pixels jpeg_roundtrip(const Pixels& pixels, int quality) {
  const auto bytes = encode_jpeg(pixels, quality);
  Pixels out = decode_image(bytes);
  if (out.channels() != pixels.channels()) invalid("jpeg roundtrip changed the channel count");
  return out;
}

Pixels gaussian_blur(const Pixels& pixels, double sigma) {
  if (!std::isfinite(sigma) || sigma <= 0) invalid("blur sigma must be positive");
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> kernel(2 * radius + 1);
  double sum = 0.0;
  for (int k = -radius; k <= radius; ++k) {
    kernel[k + radius] = std::exp(-(k * k) / (2.0 * sigma * sigma));
    sum += kernel[k + radius];
  }
  for (double& k : kernel) k /= sum;

  const int w = pixels.width(), h = pixels.height(), c = pixels.channels();
  const auto& src = pixels.data();
  std::vector<double> tmp(src.size()), dst(src.size());
  auto idx = [&](int x, int y, int ch) { return (static_cast<std::size_t>(y) * w + x) * c + ch; };
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int ch = 0; ch < c; ++ch) {
        double acc = 0.0;
        for (int k = -radius; k <= radius; ++k) acc += kernel[k + radius] * src[idx(reflect101(x + k, w), y, ch)];
        tmp[idx(x, y, ch)] = acc;
      }
    }
  }
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int ch = 0; ch < c; ++ch) {
        double acc = 0.0;
        for (int k = -radius; k <= radius; ++k) acc += kernel[k + radius] * tmp[idx(x, reflect101(y + k, h), ch)];
        dst[idx(x, y, ch)] = std::clamp(acc, 0.0, 1.0);
      }
    }
  }
  return Pixels(w, h, c, std::move(dst));
}

Pixels resize_bilinear(const Pixels& pixels, double scale) {
  if (!std::isfinite(scale) || scale <= 0) invalid("resize scale must be positive");
  const int w = pixels.width(), h = pixels.height(), c = pixels.channels();
  const int ow = std::max(1, static_cast<int>(std::floor(w * scale)));
  const int oh = std::max(1, static_cast<int>(std::floor(h * scale)));
  const double sx = static_cast<double>(w) / ow, sy = static_cast<double>(h) / oh;
  std::vector<double> out(static_cast<std::size_t>(ow) * oh * c);
  for (int y = 0; y < oh; ++y) {
    const double fy = std::clamp((y + 0.5) * sy - 0.5, 0.0, static_cast<double>(h - 1));
    const int y0 = static_cast<int>(fy);
    const int y1 = std::min(y0 + 1, h - 1);
    const double ty = fy - y0;
    for (int x = 0; x < ow; ++x) {
      const double fx = std::clamp((x + 0.5) * sx - 0.5, 0.0, static_cast<double>(w - 1));
      const int x0 = static_cast<int>(fx);
      const int x1 = std::min(x0 + 1, w - 1);
      const double tx = fx - x0;
      for (int ch = 0; ch < c; ++ch) {
        const double top = pixels.at(x0, y0, ch) * (1 - tx) + pixels.at(x1, y0, ch) * tx;
        const double bottom = pixels.at(x0, y1, ch) * (1 - tx) + pixels.at(x1, y1, ch) * tx;
        out[(static_cast<std::size_t>(y) * ow + x) * c + ch] = std::clamp(top * (1 - ty) + bottom * ty, 0.0, 1.0);
      }
    }
  }
  return Pixels(ow, oh, c, std::move(out));
}

double psnr(const Pixels& a, const Pixels& b) {
  if (a.width() != b.width() || a.height() != b.height() || a.channels() != b.channels()) {
    invalid("psnr needs images of equal shape");
  }
  double se = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    const double d = a.data()[i] - b.data()[i];
    se += d * d;
  }
  if (se == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(static_cast<double>(a.data().size()) / se);
}

}  // namespace skillscope
