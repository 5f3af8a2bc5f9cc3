#include "skillscope/core/types.hpp"

#include <algorithm>
#include <cmath>

#include "skillscope/core/error.hpp"
#include "skillscope/core/format.hpp"

namespace skillscope {

std::string_view to_string(Label label) { return label == Label::Fake ? "fake" : "real"; }

Label label_from_string(std::string_view text) {
  const auto t = to_lower(text);
  if (t == "real") return Label::Real;
  if (t == "fake") return Label::Fake;
  throw Error(ErrorCode::ParseError, "label must be 'real' or 'fake', got '" + std::string(text) + "'");
}

std::string_view to_string(Split split) { return split == Split::Train ? "train" : "test"; }

Split split_from_string(std::string_view text) {
  const auto t = to_lower(text);
  if (t == "train") return Split::Train;
  if (t == "test") return Split::Test;
  throw Error(ErrorCode::ParseError, "split must be 'train' or 'test', got '" + std::string(text) + "'");
}

Pixels::Pixels(int width, int height, int channels, std::vector<double> data)
    : width_(width), height_(height), channels_(channels), data_(std::move(data)) {
  if (width <= 0 || height <= 0) throw Error(ErrorCode::InvalidImage, "non-positive dimensions");
  if (channels != 1 && channels != 3) {
    throw Error(ErrorCode::InvalidImage, "channels must be 1 or 3, got " + std::to_string(channels));
  }
  if (data_.size() != static_cast<std::size_t>(width) * height * channels) {
    throw Error(ErrorCode::InvalidImage, "data length does not match width*height*channels");
  }
  for (double v : data_) {
    if (!(v >= 0.0 && v <= 1.0)) throw Error(ErrorCode::InvalidImage, "sample outside [0,1]");
  }
}

Pixels Pixels::filled(int width, int height, int channels, double value) {
  return Pixels(width, height, channels,
                std::vector<double>(static_cast<std::size_t>(width) * height * channels, value));
}

std::vector<double> Pixels::luminance() const {
  if (channels_ == 1) return data_;
  std::vector<double> out(static_cast<std::size_t>(width_) * height_);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double* p = &data_[i * 3];
    out[i] = std::min(1.0, 0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2]);
  }
  return out;
}

Verdict Verdict::from_code(int code) {
  if (code == 0) return Verdict{Label::Real};
  if (code == 1) return Verdict{Label::Fake};
  throw Error(ErrorCode::IndeterminateOutput, "answer code " + std::to_string(code));
}

}  // namespace skillscope
