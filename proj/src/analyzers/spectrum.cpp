#include "skillscope/analyzers/spectrum.hpp"

#include <fftw3.h>

#include <mutex>

#include "skillscope/core/error.hpp"

namespace skillscope {
namespace {

// FFTW planning is not thread-safe; execution on distinct arrays is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

Spectrum dft2(std::span<const double> plane, int width, int height) {
  if (width <= 0 || height <= 0 || plane.size() != static_cast<std::size_t>(width) * height) {
    throw Error(ErrorCode::AnalyzerFailure, "dft2: plane does not match dimensions");
  }
  Spectrum s;
  s.width = width;
  s.height = height;
  std::vector<std::complex<double>> in(plane.begin(), plane.end());
  s.bins.resize(in.size());
  auto* in_ptr = reinterpret_cast<fftw_complex*>(in.data());
  auto* out_ptr = reinterpret_cast<fftw_complex*>(s.bins.data());
  fftw_plan plan = nullptr;
  {
    std::lock_guard lock(planner_mutex());
    // FFTW_ESTIMATE picks the same algorithm on every run, so results are
    // bit-reproducible.
    plan = fftw_plan_dft_2d(height, width, in_ptr, out_ptr, FFTW_FORWARD, FFTW_ESTIMATE);
  }
  if (!plan) throw Error(ErrorCode::AnalyzerFailure, "dft2: FFTW planning failed");
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  return s;
}

Spectrum dft2(const Pixels& pixels) {
  const auto lum = pixels.luminance();
  return dft2(lum, pixels.width(), pixels.height());
}

}  // namespace skillscope
