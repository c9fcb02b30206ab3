#include "nbspec/qep.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <utility>

#include "nbspec/error.hpp"

namespace nbspec {

namespace {

constexpr double commutation_tolerance = 1e-8;
constexpr double diagonal_residual_tolerance = 1e-8;
// irrational mixing weight for the generic combination A + t X
constexpr double mixing_weight = 0.6180339887498949;

bool is_scalar_identity(const DenseRealMatrix& x) {
  if (!is_diagonal(x)) return false;
  for (std::size_t i = 1; i < x.rows(); ++i) {
    if (x(i, i) != x(0, 0)) return false;
  }
  return true;
}

std::pair<Complex, Complex> roots_complex(Complex a, Complex x) {
  if (a.imag() == 0.0) return quadratic_roots(a.real(), x);
  const Complex s = std::sqrt(a * a + 4.0 * x);
  const Complex plus = 0.5 * (a + s);
  const Complex minus = 0.5 * (a - s);
  const Complex big = std::abs(plus) >= std::abs(minus) ? plus : minus;
  const Complex small = big != Complex{} ? -x / big : Complex{};
  return {big, small};
}

// V^T M V for a real orthonormal V stored in columns; returns the
// off-diagonal Frobenius mass and fills the diagonal.
double rotated_off_diagonal(const DenseRealMatrix& m, const DenseRealMatrix& v,
                            std::vector<double>& diag) {
  const DenseRealMatrix rotated = multiply(transpose(v), multiply(m, v));
  diag.assign(rotated.rows(), 0.0);
  double off = 0.0;
  for (std::size_t i = 0; i < rotated.rows(); ++i) {
    for (std::size_t j = 0; j < rotated.cols(); ++j) {
      if (i == j) {
        diag[i] = rotated(i, i);
      } else {
        off += rotated(i, j) * rotated(i, j);
      }
    }
  }
  return std::sqrt(off);
}

CoDiagonalization symmetric_codiagonalize(const DenseRealMatrix& a, const DenseRealMatrix& x) {
  const std::size_t n = a.rows();
  CoDiagonalization cd;
  cd.orthonormal = true;
  cd.kappa = 1.0;
  DenseRealMatrix basis;
  if (is_scalar_identity(x)) {
    SymmetricEigen eig = eigs_symmetric(a, true);
    basis = std::move(eig.vectors);
    cd.a_values.assign(eig.values.begin(), eig.values.end());
    cd.x_values.assign(n, Complex{n ? x(0, 0) : 0.0, 0.0});
  } else {
    const double fa = frobenius_norm(a);
    const double fx = frobenius_norm(x);
    const double t = fx > 0.0 ? mixing_weight * std::max(fa, 1.0) / fx : 0.0;
    SymmetricEigen eig = eigs_symmetric(a + t * x, true);
    basis = std::move(eig.vectors);
    std::vector<double> da;
    std::vector<double> dx;
    const double off_a = rotated_off_diagonal(a, basis, da);
    const double off_x = rotated_off_diagonal(x, basis, dx);
    if (off_a > diagonal_residual_tolerance * std::max(fa, 1.0) ||
        off_x > diagonal_residual_tolerance * std::max(fx, 1.0)) {
      throw Error(Errc::not_qep_diagonalizable, "no common orthonormal eigenbasis found");
    }
    cd.a_values.assign(da.begin(), da.end());
    cd.x_values.assign(dx.begin(), dx.end());
  }
  cd.basis = DenseComplexMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cd.basis(i, j) = basis(i, j);
  return cd;
}

DenseComplexMatrix right_eigenvectors(const DenseRealMatrix& m) {
  const std::size_t n = m.rows();
  DenseRealMatrix work = m;
  DenseRealMatrix vr(n, n);
  std::vector<double> wr(n), wi(n);
  const auto ln = static_cast<lapack_int>(n);
  const lapack_int info = LAPACKE_dgeev(LAPACK_ROW_MAJOR, 'N', 'V', ln, work.data(), ln, wr.data(),
                                        wi.data(), nullptr, ln, vr.data(), ln);
  if (info != 0) {
    throw Error(Errc::no_convergence, "dgeev (vectors) failed, info=" + std::to_string(info));
  }
  DenseComplexMatrix v(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (wi[k] == 0.0) {
      for (std::size_t i = 0; i < n; ++i) v(i, k) = vr(i, k);
    } else {
      // conjugate pair stored as (re, im) in columns k, k+1
      for (std::size_t i = 0; i < n; ++i) {
        v(i, k) = Complex{vr(i, k), vr(i, k + 1)};
        v(i, k + 1) = Complex{vr(i, k), -vr(i, k + 1)};
      }
      ++k;
    }
  }
  return v;
}

// (v^H M v) / (v^H v) and the residual ||M v - c v|| for column k.
std::pair<Complex, double> rayleigh(const DenseRealMatrix& m, const DenseComplexMatrix& v,
                                    std::size_t k) {
  const std::size_t n = m.rows();
  std::vector<Complex> mv(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex acc{};
    for (std::size_t j = 0; j < n; ++j) acc += m(i, j) * v(j, k);
    mv[i] = acc;
  }
  Complex num{};
  double den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    num += std::conj(v(i, k)) * mv[i];
    den += std::norm(v(i, k));
  }
  const Complex c = num / den;
  double res = 0.0;
  for (std::size_t i = 0; i < n; ++i) res += std::norm(mv[i] - c * v(i, k));
  return {c, std::sqrt(res / den)};
}

CoDiagonalization general_codiagonalize(const DenseRealMatrix& a, const DenseRealMatrix& x) {
  const std::size_t n = a.rows();
  const double fa = frobenius_norm(a);
  const double fx = frobenius_norm(x);
  const double t = fx > 0.0 ? mixing_weight * std::max(fa, 1.0) / fx : 0.0;
  CoDiagonalization cd;
  cd.basis = right_eigenvectors(a + t * x);
  cd.a_values.resize(n);
  cd.x_values.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto [ca, ra] = rayleigh(a, cd.basis, k);
    const auto [cx, rx] = rayleigh(x, cd.basis, k);
    if (ra > diagonal_residual_tolerance * std::max(fa, 1.0) ||
        rx > diagonal_residual_tolerance * std::max(fx, 1.0)) {
      throw Error(Errc::not_qep_diagonalizable, "A and X share no eigenbasis");
    }
    cd.a_values[k] = ca;
    cd.x_values[k] = cx;
  }
  try {
    cd.kappa = condition_number(cd.basis);
  } catch (const Error& e) {
    if (e.code() == Errc::singular_matrix) {
      throw Error(Errc::not_qep_diagonalizable, "eigenvector matrix is singular (defective pencil)");
    }
    throw;
  }
  return cd;
}

}  // namespace

QepPair QepPair::from_blocks(DenseRealMatrix a, DenseRealMatrix x) {
  if (!a.is_square() || !x.is_square() || a.rows() != x.rows()) {
    throw Error(Errc::invalid_parameters, "QEP blocks must be square and of equal dimension");
  }
  QepPair pair;
  pair.linearization = companion(a, x);
  pair.a_block = std::move(a);
  pair.x_block = std::move(x);
  return pair;
}

QepPair QepPair::from(const Linearization& lin) {
  if (lin.kind == LinearizationKind::B) {
    throw Error(Errc::invalid_parameters, "B is not a block companion linearization");
  }
  QepPair pair;
  pair.a_block = lin.a_block;
  pair.x_block = lin.x_block;
  pair.linearization = lin.matrix;
  return pair;
}

CoDiagonalization co_diagonalize(const DenseRealMatrix& a, const DenseRealMatrix& x) {
  if (!a.is_square() || !x.is_square() || a.rows() != x.rows()) {
    throw Error(Errc::invalid_parameters, "QEP blocks must be square and of equal dimension");
  }
  const double fa = frobenius_norm(a);
  const double fx = frobenius_norm(x);
  const double commutator = frobenius_norm(multiply(a, x) - multiply(x, a));
  if (commutator > commutation_tolerance * fa * fx) {
    throw Error(Errc::not_qep_diagonalizable, "A and X do not commute");
  }
  if (is_symmetric(a) && is_symmetric(x)) return symmetric_codiagonalize(a, x);
  return general_codiagonalize(a, x);
}

Spectrum qep_spectrum(const CoDiagonalization& cd) {
  Spectrum out;
  out.values.reserve(2 * cd.a_values.size());
  for (std::size_t k = 0; k < cd.a_values.size(); ++k) {
    const auto [r1, r2] = roots_complex(cd.a_values[k], cd.x_values[k]);
    out.values.push_back(r1);
    out.values.push_back(r2);
  }
  return out;
}

QepBoundReport qep_bound(const QepPair& l0, const QepPair& l, const QepBoundOptions& opts) {
  return qep_bound(l0, l, eigs_general(l.linearization), opts);
}

QepBoundReport qep_bound(const QepPair& l0, const QepPair& l, const Spectrum& spectrum_l,
                         const QepBoundOptions& opts) {
  if (l0.dimension() != l.dimension()) {
    throw Error(Errc::invalid_parameters, "pencils differ in dimension");
  }
  if (spectrum_l.size() != 2 * l.dimension()) {
    throw Error(Errc::invalid_parameters, "Spec(L) must hold 2n values");
  }
  const CoDiagonalization cd = co_diagonalize(l0.a_block, l0.x_block);

  QepBoundReport report;
  report.kappa = cd.kappa;
  report.spectrum_l = spectrum_l;
  report.spectrum_l0 = opts.l0_spectrum_from_roots ? qep_spectrum(cd) : eigs_general(l0.linearization);

  const AffineNorm norm(l0.x_block - l.x_block, l0.a_block - l.a_block, opts.power);
  std::map<std::pair<double, double>, NormEstimate> cache;
  const auto norm_at = [&](Complex mu) {
    const auto key = norm.g_is_zero() ? std::pair{0.0, 0.0}
                                      : std::pair{mu.real(), std::abs(mu.imag())};
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, norm(mu)).first;
    return it->second;
  };

  const double root_kappa = std::sqrt(cd.kappa);
  report.per_mu.reserve(spectrum_l.size());
  for (Complex mu : spectrum_l.values) {
    const NormEstimate est = norm_at(mu);
    MuBound b;
    b.mu = mu;
    b.radius = root_kappa * std::sqrt(est.value);
    b.norm_converged = est.converged;
    const auto [idx, dist] = nearest(report.spectrum_l0, mu);
    b.nearest = report.spectrum_l0.values[idx];
    b.distance = dist;
    if (dist > b.radius + opts.slack * (1.0 + std::abs(mu))) ++report.violations;
    report.epsilon_global = std::max(report.epsilon_global, b.radius);
    report.per_mu.push_back(b);
  }
  return report;
}

double corollary_bound(const DenseRealMatrix& a, const DenseRealMatrix& x, const DenseRealMatrix& y,
                       const PowerIterationOptions& power) {
  const CoDiagonalization cd = co_diagonalize(a, x);
  return std::sqrt(cd.kappa * spectral_norm(x - y, power).value);
}

double classical_bauer_fike_radius(const QepPair& l0, const QepPair& l,
                                   const PowerIterationOptions& power) {
  const CoDiagonalization cd = co_diagonalize(l0.a_block, l0.x_block);
  const std::size_t n = l0.dimension();
  DenseComplexMatrix q(2 * n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto [r1, r2] = roots_complex(cd.a_values[k], cd.x_values[k]);
    const Complex roots[2] = {r1, r2};
    for (std::size_t s = 0; s < 2; ++s) {
      const std::size_t col = 2 * k + s;
      double norm2 = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        q(i, col) = roots[s] * cd.basis(i, k);
        q(n + i, col) = cd.basis(i, k);
        norm2 += std::norm(q(i, col)) + std::norm(q(n + i, col));
      }
      const double inv = 1.0 / std::sqrt(norm2);
      for (std::size_t i = 0; i < 2 * n; ++i) q(i, col) *= inv;
    }
  }
  double kappa_q = std::numeric_limits<double>::infinity();
  try {
    kappa_q = condition_number(q);
  } catch (const Error& e) {
    if (e.code() != Errc::singular_matrix) throw;
  }
  const double perturbation = spectral_norm(l.linearization - l0.linearization, power).value;
  return kappa_q * perturbation;
}

ClusterCertificate cluster_certificate(const Spectrum& spec0, const Spectrum& spec, double epsilon,
                                       const std::vector<std::size_t>& subset) {
  if (epsilon < 0.0) throw Error(Errc::invalid_parameters, "epsilon must be non-negative");
  ClusterCertificate out;
  out.centers = subset;
  std::sort(out.centers.begin(), out.centers.end());
  out.centers.erase(std::unique(out.centers.begin(), out.centers.end()), out.centers.end());
  for (std::size_t k : out.centers) {
    if (k >= spec0.size()) throw Error(Errc::invalid_parameters, "cluster index out of range");
  }
  out.radius = epsilon;
  out.expected = out.centers.size();

  std::vector<char> inside(spec0.size(), 0);
  for (std::size_t k : out.centers) inside[k] = 1;
  out.separated = true;
  for (std::size_t i : out.centers) {
    for (std::size_t j = 0; j < spec0.size() && out.separated; ++j) {
      if (!inside[j] && std::abs(spec0.values[i] - spec0.values[j]) <= 2.0 * epsilon) {
        out.separated = false;
      }
    }
  }
  for (Complex mu : spec.values) {
    const bool covered = std::any_of(out.centers.begin(), out.centers.end(), [&](std::size_t k) {
      return std::abs(mu - spec0.values[k]) <= epsilon;
    });
    out.observed += covered;
  }
  return out;
}

RandomQepTrial random_qep_trial(std::uint64_t seed, int max_dim, double max_norm) {
  if (max_dim < 1 || !(max_norm > 0.0)) throw Error(Errc::invalid_parameters, "bad trial limits");
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> dim(1, max_dim);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  std::uniform_real_distribution<double> scalar(0.5, 2.0);
  std::uniform_real_distribution<double> size(0.0, max_norm);
  std::normal_distribution<double> gauss;

  const auto n = static_cast<std::size_t>(dim(gen));
  DenseRealMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = entry(gen);
  }
  const double c = scalar(gen);
  DenseRealMatrix x = c * DenseRealMatrix::identity(n);
  DenseRealMatrix e(n, n);
  for (double& v : e.values()) v = gauss(gen);
  double target = size(gen);
  if (target == 0.0) target = max_norm;
  const double current = singular_values(e).front();
  e = (target / current) * e;

  RandomQepTrial trial;
  trial.perturbation_norm = target;
  trial.l = QepPair::from_blocks(a, x + e);
  trial.l0 = QepPair::from_blocks(std::move(a), std::move(x));
  return trial;
}

}  // namespace nbspec
