#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hua {

enum class Errc {
  non_square_free,
  tolerance_not_positive,
  unknown_type,
  invalid_parameters,
  order_out_of_range,
  leading_coefficient_not_positive,
  wrong_degree,
  degree_zero,
  mu_not_positive,
  search_limit_exceeded,
  boundary_mu,
  oracle_non_convergence,
  unsupported_type,
  point_outside_domain,
  quadrature_budget_exceeded,
  parse_error,
  internal_inconsistency,
};

std::string_view errc_name(Errc code);

// Single exception type for the library; the code identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hua
