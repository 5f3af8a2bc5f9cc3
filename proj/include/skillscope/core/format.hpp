#pragma once

#include <string>
#include <string_view>

namespace skillscope {

/// Fixed 4-fractional-digit rendering. Rounds the exact binary value
/// half-to-even and never prints a negative zero.
std::string fixed4(double value);

std::string to_lower(std::string_view s);
std::string_view trim(std::string_view s);

}  // namespace skillscope
