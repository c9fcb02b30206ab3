#include "nbspec/error.hpp"

namespace nbspec {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_parameters: return "invalid-parameters";
    case Errc::bad_input: return "bad-input";
    case Errc::too_large: return "too-large";
    case Errc::degree_too_small: return "degree-too-small";
    case Errc::not_symmetric: return "not-symmetric";
    case Errc::singular_matrix: return "singular-matrix";
    case Errc::not_qep_diagonalizable: return "not-qep-diagonalizable";
    case Errc::no_convergence: return "no-convergence";
  }
  return "unknown";
}

bool is_input_error(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_parameters:
    case Errc::bad_input:
    case Errc::too_large:
    case Errc::degree_too_small:
    case Errc::not_symmetric:
      return true;
    default:
      return false;
  }
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace nbspec
