#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skillscope/core/skill.hpp"

namespace skillscope {

enum class Label { Real, Fake };

std::string_view to_string(Label label);
/// Accepts "real" / "fake" (case-insensitive).
Label label_from_string(std::string_view text);

enum class Split { Train, Test };

std::string_view to_string(Split split);
Split split_from_string(std::string_view text);

struct ImageRecord {
  std::string id;
  std::string path;
  Label label = Label::Real;
  SkillId skill = SkillId::Value::Light;
  std::string source;
  Split split = Split::Test;

  friend bool operator==(const ImageRecord&, const ImageRecord&) = default;
};

/// Row-major raster with samples in [0,1]. Channel-interleaved for RGB.
class Pixels {
 public:
  /// Validates dimensions, channel count and the [0,1] range.
  Pixels(int width, int height, int channels, std::vector<double> data);

  static Pixels filled(int width, int height, int channels, double value);

  [[nodiscard]] int width() const { return width_; }
  [[nodiscard]] int height() const { return height_; }
  [[nodiscard]] int channels() const { return channels_; }
  [[nodiscard]] const std::vector<double>& data() const { return data_; }

  [[nodiscard]] double at(int x, int y, int c = 0) const {
    return data_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c];
  }

  /// 0.299 R + 0.587 G + 0.114 B for RGB; the samples themselves for gray.
  [[nodiscard]] std::vector<double> luminance() const;

  friend bool operator==(const Pixels&, const Pixels&) = default;

 private:
  int width_;
  int height_;
  int channels_;
  std::vector<double> data_;
};

/// Binary decision: Real <-> 0, Fake <-> 1.
struct Verdict {
  Label value = Label::Real;

  static Verdict from_code(int code);
  [[nodiscard]] int code() const { return value == Label::Fake ? 1 : 0; }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct RewardWeights {
  double answer = 1.0;
  double skill = 1.0;
  double format = 1.0;

  friend bool operator==(const RewardWeights&, const RewardWeights&) = default;
};

}  // namespace skillscope
