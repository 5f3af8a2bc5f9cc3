#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skillscope/core/types.hpp"

namespace skillscope {

std::string sha256_hex(std::string_view bytes);

/// Digest of an image's 8-bit quantized content and shape. Independent of
/// the container format, so a PNG and its decoded raster share a digest.
std::string image_digest(const Pixels& pixels);

std::string base64_encode(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> base64_decode(std::string_view text);

}  // namespace skillscope
