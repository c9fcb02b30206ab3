#pragma once

// Test-side reference computations. None of these call into the library's
// numerical kernels; they work from definitions, in exact integer arithmetic
// where possible.

#include <complex>
#include <cstdint>
#include <vector>

#include "nbspec/graph.hpp"
#include "nbspec/matrix.hpp"

namespace oracle {

using IntMatrix = std::vector<std::vector<std::int64_t>>;
/// Coefficients lowest degree first.
using IntPoly = std::vector<std::int64_t>;

/// det(zI - M) by Faddeev-LeVerrier over the integers.
IntPoly charpoly(const IntMatrix& m);

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_pow(const IntPoly& a, int k);
std::complex<double> poly_eval(const IntPoly& p, std::complex<double> z);

/// B straight from the definition: rows and columns indexed by the sorted
/// directed edges, entry 1 when the head of the first is the tail of the
/// second and the walk does not reverse.
IntMatrix nonbacktracking_matrix(const nbspec::Graph& g);

/// [[A, I - D], [I, 0]] with integer entries.
IntMatrix h_matrix(const nbspec::Graph& g);

/// log|det| and sign by Gaussian elimination with partial pivoting in long
/// double.
struct LogDet {
  long double log_abs = 0.0L;
  int sign = 0;
};
LogDet log_det(const nbspec::DenseRealMatrix& m);

/// P(|d - alpha| <= t) for d = Bin(n/2 - 1, p) + Bin(n/2, q), by exact
/// convolution of the two probability mass functions.
double degree_within(int n, double p, double q, double t);

/// Semicircle CDF on [-r, r] by composite Simpson integration of the density
/// (in the angle variable, where the integrand is smooth).
double semicircle_cdf_numeric(double x, double r, int panels = 20000);

/// sup_x |F_n(x) - F(x)| evaluated by brute force at both sides of each jump.
double ks_brute(std::vector<double> sample, double r);

/// Greedy-free multiset gap: the max distance of an optimal matching found
/// by trying every permutation (m <= 9 only).
double multiset_gap_bruteforce(const std::vector<std::complex<double>>& a,
                               const std::vector<std::complex<double>>& b);

/// alpha, beta straight from the definitions in long double.
long double alpha_of(int n, long double p, long double q);
long double beta_of(int n, long double p, long double q);

}  // namespace oracle
