#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sesq {

enum class Errc {
  not_composable,
  no_pullback,
  cone_mismatch,
  missing_entry,
  not_vertically_composable,
  not_whiskerable,
  not_invertible,
  unsupported_backend,
  shape_mismatch,
  not_natural_pair,
  not_composable_cells,
  action_axiom_violation,
  unknown_object,
  not_cartesian_here,
  type_mismatch,
  missing_pullback,
  delta_not_central,
  delta_not_in_kernel,
  side_condition_violation,
  quotient_ill_typed,
  invalid_presentation,
  parse_error,
  resolve_error,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sesq
