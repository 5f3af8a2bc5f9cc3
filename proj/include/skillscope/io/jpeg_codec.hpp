#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "skillscope/core/types.hpp"

namespace skillscope {

using QuantTable = std::array<std::uint16_t, 64>;

/// Reference luminance / chrominance tables (ITU-T T.81 Annex K), natural
/// (row-major) order.
const QuantTable& annex_k_luma();
const QuantTable& annex_k_chroma();

/// Conventional quality mapping: scale = 5000/q for q < 50, 200 - 2q
/// otherwise; entries become (base*scale + 50)/100 clamped to [1, 255].
QuantTable scale_quant_table(const QuantTable& base, int quality);

/// Baseline sequential JPEG with the scaled Annex-K tables (4:2:0 chroma
/// for RGB input).
std::vector<std::uint8_t> encode_jpeg(const Pixels& pixels, int quality);

}  // namespace skillscope
