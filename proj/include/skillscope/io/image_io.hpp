#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "skillscope/core/types.hpp"

namespace skillscope {

/// Decodes PNG, baseline JPEG or binary PGM/PPM. 8-bit samples are divided
/// by 255; alpha is dropped. Throws InvalidImage or IoError.
Pixels load_image(const std::filesystem::path& path);
Pixels decode_image(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> encode_png(const Pixels& pixels);
void save_png(const Pixels& pixels, const std::filesystem::path& path);

/// round(v * 255) per sample.
std::vector<std::uint8_t> quantize_8bit(const Pixels& pixels);
Pixels from_8bit(int width, int height, int channels, std::span<const std::uint8_t> samples);

}  // namespace skillscope
