#include "ar1lt/error.hpp"

namespace ar1lt {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_parameter: return "invalid_parameter";
    case Errc::domain_boundary: return "domain_boundary";
    case Errc::out_of_domain: return "out_of_domain";
    case Errc::singular_sequence: return "singular_sequence";
    case Errc::singular_constant: return "singular_constant";
    case Errc::out_of_range: return "out_of_range";
    case Errc::not_positive_definite: return "not_positive_definite";
    case Errc::quadrature_accuracy: return "quadrature_accuracy";
  }
  return "unknown";
}

}  // namespace ar1lt
