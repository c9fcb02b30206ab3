#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace nbspec {

using Complex = std::complex<double>;

/// Dense row-major matrix. Storage is a single contiguous buffer, so rows are
/// spans and the whole matrix can be handed to LAPACK in row-major layout.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), values_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  static Matrix diagonal(std::span<const T> diag) {
    Matrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return values_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return values_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {values_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {values_.data() + i * cols_, cols_}; }

  std::span<T> values() noexcept { return values_; }
  std::span<const T> values() const noexcept { return values_; }
  T* data() noexcept { return values_.data(); }
  const T* data() const noexcept { return values_.data(); }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> values_;
};

using DenseRealMatrix = Matrix<double>;
using DenseComplexMatrix = Matrix<Complex>;

DenseRealMatrix operator+(const DenseRealMatrix& a, const DenseRealMatrix& b);
DenseRealMatrix operator-(const DenseRealMatrix& a, const DenseRealMatrix& b);
DenseRealMatrix operator*(double s, const DenseRealMatrix& a);
DenseRealMatrix multiply(const DenseRealMatrix& a, const DenseRealMatrix& b);
DenseRealMatrix transpose(const DenseRealMatrix& a);

std::vector<double> multiply(const DenseRealMatrix& a, std::span<const double> x);

double frobenius_norm(const DenseRealMatrix& a);
double max_abs(const DenseRealMatrix& a);
double trace(const DenseRealMatrix& a);
bool all_finite(const DenseRealMatrix& a);
bool is_diagonal(const DenseRealMatrix& a);

/// Symmetric within `rel_tol` of the largest entry magnitude.
bool is_symmetric(const DenseRealMatrix& a, double rel_tol = 1e-12);

/// The block companion matrix [[a, x], [I, 0]].
DenseRealMatrix companion(const DenseRealMatrix& a, const DenseRealMatrix& x);

/// Extracts rows [r0, r0+rows) x cols [c0, c0+cols).
DenseRealMatrix block(const DenseRealMatrix& m, std::size_t r0, std::size_t c0,
                      std::size_t rows, std::size_t cols);

/// One row per line, comma separated, 17 significant digits.
void write_csv(std::ostream& out, const DenseRealMatrix& m);

}  // namespace nbspec
