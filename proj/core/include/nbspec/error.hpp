#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nbspec {

/// Failure categories surfaced by the library. The CLI maps them onto exit
/// codes: the input-side ones to 2, the numeric ones to 3.
enum class Errc {
  invalid_parameters,
  bad_input,
  too_large,
  degree_too_small,
  not_symmetric,
  singular_matrix,
  not_qep_diagonalizable,
  no_convergence,
};

std::string_view to_string(Errc code) noexcept;

/// True for failures caused by the caller's data rather than by arithmetic.
bool is_input_error(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace nbspec
