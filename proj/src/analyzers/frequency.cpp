#include "skillscope/analyzers/frequency.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "skillscope/analyzers/spectrum.hpp"
#include "skillscope/core/error.hpp"

namespace skillscope {

double normalized_radius(int u, int v, int width, int height) {
  const double fu = static_cast<double>(std::min(u, width - u)) / width;
  const double fv = static_cast<double>(std::min(v, height - v)) / height;
  return std::sqrt(fu * fu + fv * fv) / 0.5;
}

FrequencyEvidence frequency_evidence(const Pixels& pixels, double cutoff) {
  if (pixels.width() < 8 || pixels.height() < 8) {
    throw Error(ErrorCode::ImageTooSmall, "frequency analysis needs at least 8x8, got " +
                                              std::to_string(pixels.width()) + "x" + std::to_string(pixels.height()));
  }
  if (!(cutoff > 0.0 && cutoff < 1.0)) throw Error(ErrorCode::InvalidSpec, "hf cutoff must be in (0,1)");

  const int w = pixels.width();
  const int h = pixels.height();
  auto lum = pixels.luminance();
  // Shifted mean: exact for constant planes, so they transform to exact zeros.
  const double first = lum.front();
  double acc = 0.0;
  for (double v : lum) acc += v - first;
  const double mean = first + acc / static_cast<double>(lum.size());
  for (double& v : lum) v -= mean;

  const Spectrum spec = dft2(lum, w, h);
  const int nbins = (std::min(w, h) + 1) / 2;
  std::vector<double> ring_power(nbins, 0.0);
  std::vector<int> ring_count(nbins, 0);
  double total = 0.0;
  double high = 0.0;
  const double norm = static_cast<double>(w) * h;
  for (int v = 0; v < h; ++v) {
    for (int u = 0; u < w; ++u) {
      if (u == 0 && v == 0) continue;
      const double e = std::norm(spec.at(u, v));
      const double r = normalized_radius(u, v, w, h);
      total += e;
      if (r > cutoff) high += e;
      const int bin = std::min(nbins - 1, static_cast<int>(r * nbins));
      ring_power[bin] += e / norm;
      ring_count[bin] += 1;
    }
  }

  FrequencyEvidence ev;
  ev.cutoff = cutoff;
  ev.radial_profile.resize(nbins);
  for (int b = 0; b < nbins; ++b) ev.radial_profile[b] = ring_count[b] ? ring_power[b] / ring_count[b] : 0.0;
  if (total > 0.0) {
    ev.hf_ratio = std::clamp(high / total, 0.0, 1.0);
    if (w % 2 == 0 && h % 2 == 0) ev.nyquist_peak = std::norm(spec.at(w / 2, h / 2)) / total;
  }
  return ev;
}

}  // namespace skillscope
