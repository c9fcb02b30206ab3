#include "nbspec/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "nbspec/error.hpp"

namespace nbspec {

namespace {

void require_same_shape(const DenseRealMatrix& a, const DenseRealMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Errc::invalid_parameters, "matrix shapes differ");
  }
}

}  // namespace

DenseRealMatrix operator+(const DenseRealMatrix& a, const DenseRealMatrix& b) {
  require_same_shape(a, b);
  DenseRealMatrix out = a;
  auto dst = out.values();
  auto src = b.values();
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += src[k];
  return out;
}

DenseRealMatrix operator-(const DenseRealMatrix& a, const DenseRealMatrix& b) {
  require_same_shape(a, b);
  DenseRealMatrix out = a;
  auto dst = out.values();
  auto src = b.values();
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] -= src[k];
  return out;
}

DenseRealMatrix operator*(double s, const DenseRealMatrix& a) {
  DenseRealMatrix out = a;
  for (double& v : out.values()) v *= s;
  return out;
}

DenseRealMatrix multiply(const DenseRealMatrix& a, const DenseRealMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(Errc::invalid_parameters, "inner dimensions differ");
  }
  DenseRealMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      auto src = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) dst[j] += aik * src[j];
    }
  }
  return out;
}

DenseRealMatrix transpose(const DenseRealMatrix& a) {
  DenseRealMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

std::vector<double> multiply(const DenseRealMatrix& a, std::span<const double> x) {
  if (a.cols() != x.size()) {
    throw Error(Errc::invalid_parameters, "vector length differs from column count");
  }
  std::vector<double> y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto r = a.row(i);
    double acc = 0.0;
    for (std::size_t j = 0; j < r.size(); ++j) acc += r[j] * x[j];
    y[i] = acc;
  }
  return y;
}

double frobenius_norm(const DenseRealMatrix& a) {
  double acc = 0.0;
  for (double v : a.values()) acc += v * v;
  return std::sqrt(acc);
}

double max_abs(const DenseRealMatrix& a) {
  double m = 0.0;
  for (double v : a.values()) m = std::max(m, std::abs(v));
  return m;
}

double trace(const DenseRealMatrix& a) {
  double t = 0.0;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
  return t;
}

bool all_finite(const DenseRealMatrix& a) {
  return std::all_of(a.values().begin(), a.values().end(),
                     [](double v) { return std::isfinite(v); });
}

bool is_diagonal(const DenseRealMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j && a(i, j) != 0.0) return false;
    }
  }
  return true;
}

bool is_symmetric(const DenseRealMatrix& a, double rel_tol) {
  if (!a.is_square()) return false;
  const double tol = rel_tol * max_abs(a);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      if (std::abs(a(i, j) - a(j, i)) > tol) return false;
    }
  }
  return true;
}

DenseRealMatrix companion(const DenseRealMatrix& a, const DenseRealMatrix& x) {
  if (!a.is_square() || !x.is_square() || a.rows() != x.rows()) {
    throw Error(Errc::invalid_parameters, "companion blocks must be square and equal-sized");
  }
  const std::size_t n = a.rows();
  DenseRealMatrix out(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = a(i, j);
      out(i, n + j) = x(i, j);
    }
    out(n + i, i) = 1.0;
  }
  return out;
}

DenseRealMatrix block(const DenseRealMatrix& m, std::size_t r0, std::size_t c0,
                      std::size_t rows, std::size_t cols) {
  if (r0 + rows > m.rows() || c0 + cols > m.cols()) {
    throw Error(Errc::invalid_parameters, "block exceeds matrix bounds");
  }
  DenseRealMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = m(r0 + i, c0 + j);
  }
  return out;
}

void write_csv(std::ostream& out, const DenseRealMatrix& m) {
  const auto old_precision = out.precision(17);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j) out << ',';
      out << r[j];
    }
    out << '\n';
  }
  out.precision(old_precision);
}

}  // namespace nbspec
