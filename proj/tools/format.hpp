#pragma once

#include <string>

namespace ar1lt::cli {

/// Locale-independent rendering with 17 significant digits; "nan", "inf"
/// and "-inf" for non-finite values.
std::string format_double(double value);

/// Shortest string that round-trips to `value`.
std::string format_shortest(double value);

}  // namespace ar1lt::cli
