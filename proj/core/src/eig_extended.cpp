#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

#include "nbspec/eig.hpp"
#include "nbspec/error.hpp"

namespace nbspec {

using Quad = boost::multiprecision::cpp_bin_float_quad;
using QuadMatrix = Eigen::Matrix<Quad, Eigen::Dynamic, Eigen::Dynamic>;

Spectrum eigs_general_extended(const DenseRealMatrix& m) {
  if (!m.is_square()) throw Error(Errc::invalid_parameters, "matrix is not square");
  if (!all_finite(m)) throw Error(Errc::invalid_parameters, "matrix has non-finite entries");
  if (m.rows() > extended_precision_cap) {
    throw Error(Errc::too_large, "dimension " + std::to_string(m.rows()) +
                                     " exceeds the extended-precision cap " +
                                     std::to_string(extended_precision_cap));
  }
  Spectrum out;
  if (m.empty()) return out;

  const auto n = static_cast<Eigen::Index>(m.rows());
  QuadMatrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  Eigen::EigenSolver<QuadMatrix> solver(a, false);
  if (solver.info() != Eigen::Success) {
    throw Error(Errc::no_convergence, "extended-precision QR iteration did not converge");
  }
  out.values.reserve(m.rows());
  double abs_sum = 0.0;
  Complex sum{};
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto& z = solver.eigenvalues()[k];
    out.values.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    abs_sum += std::abs(out.values.back());
    sum += out.values.back();
  }
  if (std::abs(sum - trace(m)) > 1e-6 * std::max(1.0, abs_sum)) {
    throw Error(Errc::no_convergence, "eigenvalue sum disagrees with the trace");
  }
  return out;
}

}  // namespace nbspec
