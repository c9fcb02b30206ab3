#include "nbspec/eig.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "nbspec/error.hpp"

namespace nbspec {

Spectrum Spectrum::scaled(double s) const {
  Spectrum out = *this;
  for (Complex& z : out.values) z *= s;
  out.scale *= s;
  return out;
}

Spectrum Spectrum::reciprocals() const {
  Spectrum out = *this;
  for (Complex& z : out.values) {
    if (z == Complex{}) throw Error(Errc::singular_matrix, "zero eigenvalue has no reciprocal");
    z = 1.0 / z;
  }
  return out;
}

Spectrum Spectrum::sorted() const {
  Spectrum out = *this;
  std::sort(out.values.begin(), out.values.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

std::vector<double> Spectrum::real_parts() const {
  std::vector<double> out;
  out.reserve(values.size());
  for (Complex z : values) out.push_back(z.real());
  return out;
}

bool Spectrum::conjugate_closed(double tol) const {
  for (Complex z : values) {
    if (std::abs(z.imag()) <= tol) continue;
    const Complex target = std::conj(z);
    const bool found = std::any_of(values.begin(), values.end(),
                                   [&](Complex w) { return std::abs(w - target) <= tol; });
    if (!found) return false;
  }
  return true;
}

Spectrum merge(const Spectrum& a, const Spectrum& b) {
  Spectrum out = a;
  out.values.insert(out.values.end(), b.values.begin(), b.values.end());
  return out;
}

SymmetricEigen eigs_symmetric(const DenseRealMatrix& m, bool with_vectors) {
  if (!m.is_square()) throw Error(Errc::not_symmetric, "matrix is not square");
  if (!all_finite(m)) throw Error(Errc::invalid_parameters, "matrix has non-finite entries");
  if (!is_symmetric(m, 1e-12)) throw Error(Errc::not_symmetric, "matrix is not symmetric within 1e-12");
  SymmetricEigen out;
  if (m.empty()) return out;
  DenseRealMatrix work = m;
  const auto n = static_cast<lapack_int>(m.rows());
  out.values.resize(m.rows());
  const lapack_int info = LAPACKE_dsyevd(LAPACK_ROW_MAJOR, with_vectors ? 'V' : 'N', 'U', n,
                                         work.data(), n, out.values.data());
  if (info != 0) {
    throw Error(Errc::no_convergence, "dsyevd failed, info=" + std::to_string(info));
  }
  if (with_vectors) out.vectors = std::move(work);
  return out;
}

Spectrum to_spectrum(const SymmetricEigen& eig) {
  Spectrum out;
  out.values.reserve(eig.values.size());
  for (double v : eig.values) out.values.emplace_back(v, 0.0);
  return out;
}

Spectrum eigs_general(const DenseRealMatrix& m) {
  if (!m.is_square()) throw Error(Errc::invalid_parameters, "matrix is not square");
  if (!all_finite(m)) throw Error(Errc::invalid_parameters, "matrix has non-finite entries");
  Spectrum out;
  if (m.empty()) return out;
  DenseRealMatrix work = m;
  const auto n = static_cast<lapack_int>(m.rows());
  std::vector<double> wr(m.rows());
  std::vector<double> wi(m.rows());
  const lapack_int info = LAPACKE_dgeev(LAPACK_ROW_MAJOR, 'N', 'N', n, work.data(), n, wr.data(),
                                        wi.data(), nullptr, n, nullptr, n);
  if (info < 0) throw Error(Errc::invalid_parameters, "dgeev rejected argument " + std::to_string(-info));
  if (info > 0) {
    throw Error(Errc::no_convergence,
                "QR iteration stalled: " + std::to_string(m.rows() - static_cast<std::size_t>(info)) +
                    " of " + std::to_string(m.rows()) + " eigenvalues converged");
  }
  out.values.reserve(m.rows());
  double abs_sum = 0.0;
  Complex sum{};
  for (std::size_t k = 0; k < m.rows(); ++k) {
    out.values.emplace_back(wr[k], wi[k]);
    abs_sum += std::abs(out.values.back());
    sum += out.values.back();
  }
  if (std::abs(sum - trace(m)) > 1e-6 * std::max(1.0, abs_sum)) {
    throw Error(Errc::no_convergence, "eigenvalue sum disagrees with the trace");
  }
  return out;
}

std::pair<Complex, Complex> quadratic_roots(double a, Complex x) {
  if (x.imag() == 0.0) {
    const double xr = x.real();
    const double disc = a * a + 4.0 * xr;
    if (disc >= 0.0) {
      const double s = std::sqrt(disc);
      const double big = a >= 0.0 ? 0.5 * (a + s) : 0.5 * (a - s);
      const double small = big != 0.0 ? -xr / big : 0.0;
      return big >= small ? std::pair{Complex{big, 0.0}, Complex{small, 0.0}}
                          : std::pair{Complex{small, 0.0}, Complex{big, 0.0}};
    }
    const double im = 0.5 * std::sqrt(-disc);
    return {Complex{0.5 * a, im}, Complex{0.5 * a, -im}};
  }
  const Complex s = std::sqrt(Complex{a * a, 0.0} + 4.0 * x);
  const Complex plus = 0.5 * (a + s);
  const Complex minus = 0.5 * (a - s);
  const Complex big = std::abs(plus) >= std::abs(minus) ? plus : minus;
  const Complex small = big != Complex{} ? -x / big : Complex{};
  const bool big_first =
      big.imag() != small.imag() ? big.imag() > small.imag() : big.real() >= small.real();
  return big_first ? std::pair{big, small} : std::pair{small, big};
}

Spectrum quadratic_spectrum(const std::vector<double>& a_values, const std::vector<Complex>& x_values) {
  if (a_values.size() != x_values.size()) {
    throw Error(Errc::invalid_parameters, "coefficient lists differ in length");
  }
  Spectrum out;
  out.values.reserve(2 * a_values.size());
  for (std::size_t k = 0; k < a_values.size(); ++k) {
    const auto [r1, r2] = quadratic_roots(a_values[k], x_values[k]);
    out.values.push_back(r1);
    out.values.push_back(r2);
  }
  return out;
}

std::pair<std::size_t, double> nearest(const Spectrum& spec, Complex z) {
  if (spec.values.empty()) throw Error(Errc::invalid_parameters, "nearest value in an empty spectrum");
  std::size_t best = 0;
  double best_d = std::abs(spec.values[0] - z);
  for (std::size_t k = 1; k < spec.values.size(); ++k) {
    const double d = std::abs(spec.values[k] - z);
    if (d < best_d) {
      best_d = d;
      best = k;
    }
  }
  return {best, best_d};
}

void write_spectrum_csv(std::ostream& out, const Spectrum& spec) {
  const auto old_precision = out.precision(17);
  out << "re,im\n";
  for (Complex z : spec.values) out << z.real() << ',' << z.imag() << '\n';
  out.precision(old_precision);
}

}  // namespace nbspec
