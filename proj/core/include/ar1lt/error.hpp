#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ar1lt {

enum class Errc {
  invalid_parameter,
  domain_boundary,     // |lambda+| == |lambda-|, root labelling undefined
  out_of_domain,       // alpha outside D
  singular_sequence,   // psi_t vanished
  singular_constant,   // alpha == 0 in B's 1/(-2 alpha) factor
  out_of_range,        // horizon above a documented cap
  not_positive_definite,
  quadrature_accuracy,
};

/// Stable machine-readable name, e.g. "out_of_domain".
std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ar1lt
