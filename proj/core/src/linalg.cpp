#include "nbspec/linalg.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "nbspec/error.hpp"

namespace nbspec {

std::vector<double> singular_values(const DenseRealMatrix& m) {
  if (m.empty()) return {};
  DenseRealMatrix work = m;
  const auto rows = static_cast<lapack_int>(m.rows());
  const auto cols = static_cast<lapack_int>(m.cols());
  std::vector<double> s(std::min(m.rows(), m.cols()));
  const lapack_int info = LAPACKE_dgesdd(LAPACK_ROW_MAJOR, 'N', rows, cols, work.data(), cols,
                                         s.data(), nullptr, std::max(rows, cols), nullptr,
                                         std::max(rows, cols));
  if (info != 0) {
    throw Error(Errc::no_convergence, "dgesdd failed, info=" + std::to_string(info));
  }
  return s;
}

std::vector<double> singular_values(const DenseComplexMatrix& m) {
  if (m.empty()) return {};
  DenseComplexMatrix work = m;
  const auto rows = static_cast<lapack_int>(m.rows());
  const auto cols = static_cast<lapack_int>(m.cols());
  std::vector<double> s(std::min(m.rows(), m.cols()));
  const lapack_int info =
      LAPACKE_zgesdd(LAPACK_ROW_MAJOR, 'N', rows, cols,
                     reinterpret_cast<lapack_complex_double*>(work.data()), cols, s.data(),
                     nullptr, std::max(rows, cols), nullptr, std::max(rows, cols));
  if (info != 0) {
    throw Error(Errc::no_convergence, "zgesdd failed, info=" + std::to_string(info));
  }
  return s;
}

namespace {

double ratio_or_throw(const std::vector<double>& s, std::size_t dim) {
  if (s.empty()) throw Error(Errc::invalid_parameters, "condition number of an empty matrix");
  const double largest = s.front();
  const double smallest = s.back();
  const double floor =
      largest * static_cast<double>(dim) * std::numeric_limits<double>::epsilon();
  if (!(smallest > floor)) {
    throw Error(Errc::singular_matrix, "smallest singular value is zero to working precision");
  }
  return largest / smallest;
}

}  // namespace

double condition_number(const DenseRealMatrix& p) {
  if (!p.is_square()) throw Error(Errc::invalid_parameters, "condition number needs a square matrix");
  return ratio_or_throw(singular_values(p), p.rows());
}

double condition_number(const DenseComplexMatrix& p) {
  if (!p.is_square()) throw Error(Errc::invalid_parameters, "condition number needs a square matrix");
  return ratio_or_throw(singular_values(p), p.rows());
}

LogDeterminant log_determinant(const DenseRealMatrix& m) {
  if (!m.is_square()) throw Error(Errc::invalid_parameters, "determinant needs a square matrix");
  if (m.empty()) return {0.0, 1};
  DenseRealMatrix lu = m;
  const auto n = static_cast<lapack_int>(m.rows());
  std::vector<lapack_int> pivots(m.rows());
  const lapack_int info = LAPACKE_dgetrf(LAPACK_ROW_MAJOR, n, n, lu.data(), n, pivots.data());
  if (info < 0) throw Error(Errc::invalid_parameters, "dgetrf rejected its arguments");
  LogDeterminant out{0.0, 1};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const double u = lu(i, i);
    if (u == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
    if (u < 0) out.sign = -out.sign;
    if (pivots[i] != static_cast<lapack_int>(i + 1)) out.sign = -out.sign;
    out.log_abs += std::log(std::abs(u));
  }
  return out;
}

std::vector<double> power_start_vector(std::size_t n) {
  std::vector<double> v(n);
  constexpr double golden = 0.6180339887498949;
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double frac = std::fmod(static_cast<double>(i + 1) * golden, 1.0);
    v[i] = 1.0 + 0.1 * (frac - 0.5);
    norm += v[i] * v[i];
  }
  norm = std::sqrt(norm);
  for (double& x : v) x /= norm;
  return v;
}

NormEstimate spectral_norm(const DenseRealMatrix& m, const PowerIterationOptions& opts) {
  AffineNorm norm(m, DenseRealMatrix(m.rows(), m.cols()), opts);
  return norm(Complex{0.0, 0.0});
}

namespace {

double vector_norm(const std::vector<Complex>& v) {
  double acc = 0.0;
  for (const Complex& x : v) acc += std::norm(x);
  return std::sqrt(acc);
}

}  // namespace

AffineNorm::Operand AffineNorm::compress(const DenseRealMatrix& m) {
  Operand op;
  op.n = m.rows();
  std::size_t nnz = 0;
  for (double v : m.values()) nnz += (v != 0.0);
  op.sparse = m.size() > 0 && static_cast<double>(nnz) <= 0.3 * static_cast<double>(m.size());
  if (!op.sparse) {
    op.dense = m;
    return op;
  }
  const auto fill = [&](const DenseRealMatrix& src, std::vector<std::size_t>& starts,
                        std::vector<std::size_t>& cols, std::vector<double>& vals) {
    starts.assign(1, 0);
    cols.reserve(nnz);
    vals.reserve(nnz);
    for (std::size_t i = 0; i < src.rows(); ++i) {
      for (std::size_t j = 0; j < src.cols(); ++j) {
        if (src(i, j) != 0.0) {
          cols.push_back(j);
          vals.push_back(src(i, j));
        }
      }
      starts.push_back(cols.size());
    }
  };
  fill(m, op.row_start, op.col, op.val);
  fill(transpose(m), op.t_row_start, op.t_col, op.t_val);
  return op;
}

void AffineNorm::Operand::apply(const std::vector<Complex>& x, std::vector<Complex>& y,
                                bool transposed) const {
  y.assign(n, Complex{});
  if (sparse) {
    const auto& starts = transposed ? t_row_start : row_start;
    const auto& cols = transposed ? t_col : col;
    const auto& vals = transposed ? t_val : val;
    for (std::size_t i = 0; i < n; ++i) {
      Complex acc{};
      for (std::size_t k = starts[i]; k < starts[i + 1]; ++k) acc += vals[k] * x[cols[k]];
      y[i] = acc;
    }
    return;
  }
  if (transposed) {
    for (std::size_t i = 0; i < n; ++i) {
      auto r = dense.row(i);
      const Complex xi = x[i];
      if (xi == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) y[j] += r[j] * xi;
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      auto r = dense.row(i);
      double re = 0.0;
      double im = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        re += r[j] * x[j].real();
        im += r[j] * x[j].imag();
      }
      y[i] = {re, im};
    }
  }
}

AffineNorm::AffineNorm(const DenseRealMatrix& f, const DenseRealMatrix& g,
                       PowerIterationOptions opts)
    : opts_(opts) {
  if (!f.is_square() || !g.is_square() || f.rows() != g.rows()) {
    throw Error(Errc::invalid_parameters, "affine norm operands must be square and equal-sized");
  }
  f_ = compress(f);
  g_zero_ = std::all_of(g.values().begin(), g.values().end(), [](double v) { return v == 0.0; });
  if (!g_zero_) g_ = compress(g);
}

NormEstimate AffineNorm::operator()(Complex mu) const {
  const std::size_t n = f_.n;
  NormEstimate est;
  if (n == 0) {
    est.converged = true;
    return est;
  }
  const bool use_g = !g_zero_ && mu != Complex{};
  const auto start = power_start_vector(n);
  std::vector<Complex> v(start.begin(), start.end());
  std::vector<Complex> w(n), tmp(n), u(n);

  const auto forward = [&](const std::vector<Complex>& in, std::vector<Complex>& out) {
    f_.apply(in, out, false);
    if (use_g) {
      g_.apply(in, tmp, false);
      for (std::size_t i = 0; i < n; ++i) out[i] += mu * tmp[i];
    }
  };
  const auto adjoint = [&](const std::vector<Complex>& in, std::vector<Complex>& out) {
    f_.apply(in, out, true);
    if (use_g) {
      g_.apply(in, tmp, true);
      const Complex mu_bar = std::conj(mu);
      for (std::size_t i = 0; i < n; ++i) out[i] += mu_bar * tmp[i];
    }
  };

  double previous = -1.0;
  for (std::size_t it = 1; it <= opts_.max_iterations; ++it) {
    forward(v, w);
    const double sigma = vector_norm(w);
    est.value = sigma;
    est.iterations = it;
    if (sigma == 0.0) {
      est.converged = true;
      return est;
    }
    if (previous >= 0.0 && std::abs(sigma - previous) <= opts_.tolerance * sigma) {
      est.converged = true;
      return est;
    }
    previous = sigma;
    adjoint(w, u);
    const double un = vector_norm(u);
    if (un == 0.0) {
      est.converged = true;
      return est;
    }
    for (std::size_t i = 0; i < n; ++i) v[i] = u[i] / un;
  }
  return est;
}

}  // namespace nbspec
