#include "format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace ar1lt::cli {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 40> buffer{};
  const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                                       std::chars_format::general, 17);
  return std::string(buffer.data(), end);
}

std::string format_shortest(double value) {
  if (!std::isfinite(value)) return format_double(value);
  std::array<char, 40> buffer{};
  const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), end);
}

}  // namespace ar1lt::cli
