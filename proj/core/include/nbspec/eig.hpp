#pragma once

#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

#include "nbspec/matrix.hpp"

namespace nbspec {

/// Multiset of eigenvalues. `scale` records a normalization already applied
/// to the values (1 when none), `tolerance` the matching tolerance that
/// downstream comparisons should use.
struct Spectrum {
  std::vector<Complex> values;
  double scale = 1.0;
  double tolerance = 1e-8;

  std::size_t size() const noexcept { return values.size(); }

  /// Values multiplied by s; `scale` is multiplied as well.
  Spectrum scaled(double s) const;
  /// 1/z for every value. Throws Errc::singular_matrix on a zero value.
  Spectrum reciprocals() const;
  /// Sorted by (real, imag).
  Spectrum sorted() const;
  std::vector<double> real_parts() const;
  /// Every non-real value has a partner within `tol` of its conjugate.
  bool conjugate_closed(double tol) const;
};

/// Concatenation of two multisets.
Spectrum merge(const Spectrum& a, const Spectrum& b);

struct SymmetricEigen {
  std::vector<double> values;  // ascending
  DenseRealMatrix vectors;     // column k pairs with values[k]; empty unless requested
};

/// Throws Errc::not_symmetric unless m is symmetric within 1e-12 relative.
SymmetricEigen eigs_symmetric(const DenseRealMatrix& m, bool with_vectors = false);

Spectrum to_spectrum(const SymmetricEigen& eig);

/// Full complex spectrum (Hessenberg reduction + implicitly shifted QR via
/// LAPACK dgeev). Throws Errc::no_convergence, naming how many eigenvalues
/// did converge, when the QR iteration stalls.
Spectrum eigs_general(const DenseRealMatrix& m);

inline constexpr std::size_t extended_precision_cap = 512;

/// Same spectrum computed in quadruple precision (113-bit significand),
/// rounded back to double. Meant for small matrices with defective
/// eigenvalues, where a k-by-k Jordan block costs about eps^(1/k) accuracy.
/// Throws Errc::too_large above extended_precision_cap.
Spectrum eigs_general_extended(const DenseRealMatrix& m);

/// Roots of z^2 - a z - x = 0. A real pair comes back in descending order; a
/// conjugate pair with positive imaginary part first. The larger-magnitude
/// root is formed directly and the other from the product -x.
std::pair<Complex, Complex> quadratic_roots(double a, Complex x);

/// Union over `a_values` of quadratic_roots(a_k, x_k).
Spectrum quadratic_spectrum(const std::vector<double>& a_values, const std::vector<Complex>& x_values);

struct SpectrumMatch {
  std::vector<std::size_t> assignment;  // lhs index -> rhs index
  double max_gap = 0.0;
  bool optimal_used = false;
};

/// Pairs two equal-size multisets. Greedy nearest-neighbour in (re, im)
/// order; if that leaves a gap above `tol`, an optimal assignment (minimum
/// total distance) is tried as well and the better of the two kept.
SpectrumMatch match_spectra(const Spectrum& lhs, const Spectrum& rhs, double tol);

/// Index of the value nearest to z, and the distance.
std::pair<std::size_t, double> nearest(const Spectrum& spec, Complex z);

/// Columns `re,im`, 17 significant digits, with a header line.
void write_spectrum_csv(std::ostream& out, const Spectrum& spec);

}  // namespace nbspec
