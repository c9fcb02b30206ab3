#pragma once

#include <cstddef>
#include <vector>

#include "nbspec/matrix.hpp"

namespace nbspec {

/// Singular values in descending order.
std::vector<double> singular_values(const DenseRealMatrix& m);
std::vector<double> singular_values(const DenseComplexMatrix& m);

/// ||P|| ||P^-1|| in the spectral norm. Throws Errc::singular_matrix when the
/// smallest singular value vanishes to working precision.
double condition_number(const DenseRealMatrix& p);
double condition_number(const DenseComplexMatrix& p);

struct LogDeterminant {
  double log_abs = 0.0;  // -inf when singular
  int sign = 0;          // -1, 0 or +1
};

LogDeterminant log_determinant(const DenseRealMatrix& m);

struct PowerIterationOptions {
  double tolerance = 1e-9;
  std::size_t max_iterations = 10000;
};

struct NormEstimate {
  double value = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Largest singular value by power iteration on M^T M.
NormEstimate spectral_norm(const DenseRealMatrix& m, const PowerIterationOptions& opts = {});

/// ||F + mu G|| for real F, G and complex mu. Both operands are applied
/// through a compressed representation when they are mostly zero, which is
/// the common case (diagonal F, adjacency-shaped G).
class AffineNorm {
 public:
  AffineNorm(const DenseRealMatrix& f, const DenseRealMatrix& g,
             PowerIterationOptions opts = {});

  NormEstimate operator()(Complex mu) const;

  bool g_is_zero() const noexcept { return g_zero_; }

 private:
  struct Operand {
    std::size_t n = 0;
    bool sparse = false;
    DenseRealMatrix dense;
    std::vector<std::size_t> row_start;
    std::vector<std::size_t> col;
    std::vector<double> val;
    // transpose in the same compressed form
    std::vector<std::size_t> t_row_start;
    std::vector<std::size_t> t_col;
    std::vector<double> t_val;

    void apply(const std::vector<Complex>& x, std::vector<Complex>& y, bool transposed) const;
  };

  static Operand compress(const DenseRealMatrix& m);

  Operand f_;
  Operand g_;
  bool g_zero_ = false;
  PowerIterationOptions opts_;
};

/// Deterministic start vector shared by every power iteration: all-ones plus
/// a fixed low-discrepancy ripple so that invariant subspaces of graph
/// matrices (the constant vector in particular) cannot trap the iteration.
std::vector<double> power_start_vector(std::size_t n);

}  // namespace nbspec
