#include "skillscope/core/format.hpp"

#include <cctype>
#include <cstdio>

namespace skillscope {

std::string fixed4(double value) {
  // glibc printf rounds the exact binary value using the current rounding
  // mode, which is round-half-even by default.
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", value);
  std::string out(buf);
  if (out == "-0.0000") out = "0.0000";
  return out;
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (auto& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

std::string_view trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace skillscope
