#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "nbspec/eig.hpp"
#include "nbspec/linalg.hpp"
#include "nbspec/matrix.hpp"
#include "nbspec/operators.hpp"

namespace nbspec {

/// The quadratic pencil z^2 I - z A - X together with its linearization
/// [[A, X], [I, 0]].
struct QepPair {
  DenseRealMatrix a_block;
  DenseRealMatrix x_block;
  DenseRealMatrix linearization;

  static QepPair from_blocks(DenseRealMatrix a, DenseRealMatrix x);
  static QepPair from(const Linearization& lin);

  std::size_t dimension() const noexcept { return a_block.rows(); }
};

/// A common eigenbasis of A and X: A V = V diag(a), X V = V diag(x).
struct CoDiagonalization {
  DenseComplexMatrix basis;
  std::vector<Complex> a_values;
  std::vector<Complex> x_values;
  double kappa = 1.0;
  bool orthonormal = false;
};

/// Commutation gate ||AX - XA||_F <= 1e-8 ||A||_F ||X||_F, then a basis that
/// diagonalizes both. The symmetric case yields an orthonormal basis and
/// kappa = 1 exactly. Throws Errc::not_qep_diagonalizable otherwise.
CoDiagonalization co_diagonalize(const DenseRealMatrix& a, const DenseRealMatrix& x);

/// Spec(L0) in closed form: the roots of z^2 - a_k z - x_k over the basis.
Spectrum qep_spectrum(const CoDiagonalization& cd);

struct MuBound {
  Complex mu;
  double radius = 0.0;  // sqrt(kappa) sqrt(||X - Y + mu (A - B)||)
  Complex nearest;
  double distance = 0.0;
  bool norm_converged = true;
};

struct ClusterCertificate {
  std::vector<std::size_t> centers;  // indices into Spec(L0)
  double radius = 0.0;
  std::size_t expected = 0;
  std::size_t observed = 0;
  bool separated = false;

  bool certified() const noexcept { return separated && expected == observed; }
};

struct QepBoundReport {
  double kappa = 1.0;
  std::vector<MuBound> per_mu;
  double epsilon_global = 0.0;
  Spectrum spectrum_l0;
  Spectrum spectrum_l;
  std::vector<ClusterCertificate> clusters;
  /// Eigenvalues of L with distance > radius + slack. Any nonzero count is
  /// an implementation defect, not a property of the inputs.
  std::size_t violations = 0;
};

struct QepBoundOptions {
  /// Take Spec(L0) from the closed form instead of a dense eigensolve.
  bool l0_spectrum_from_roots = true;
  /// Slack allowed on top of each radius before counting a violation.
  double slack = 1e-8;
  PowerIterationOptions power;
};

/// Evaluates the QEP Bauer-Fike radius at every eigenvalue of L and locates
/// the nearest eigenvalue of L0.
QepBoundReport qep_bound(const QepPair& l0, const QepPair& l, const QepBoundOptions& opts = {});
/// Same, with Spec(L) supplied by the caller.
QepBoundReport qep_bound(const QepPair& l0, const QepPair& l, const Spectrum& spectrum_l,
                         const QepBoundOptions& opts = {});

/// The single radius sqrt(kappa ||X - Y||) valid when both pencils share A.
double corollary_bound(const DenseRealMatrix& a, const DenseRealMatrix& x, const DenseRealMatrix& y,
                       const PowerIterationOptions& power = {});

/// Classical Bauer-Fike radius kappa(Q) ||L - L0|| with Q the eigenvector
/// matrix of L0, assembled from the co-diagonalization (columns normalized).
double classical_bauer_fike_radius(const QepPair& l0, const QepPair& l,
                                   const PowerIterationOptions& power = {});

/// Counts eigenvalues of `spec` inside the union of epsilon-balls around
/// spec0[k], k in `subset`, provided that union is disjoint from the balls
/// around the remaining values of spec0.
ClusterCertificate cluster_certificate(const Spectrum& spec0, const Spectrum& spec, double epsilon,
                                       const std::vector<std::size_t>& subset);

/// A random instance for exercising the bound: A symmetric with entries
/// uniform in [-1, 1], X = cI with c uniform in [0.5, 2], B = A, and
/// Y = X + E with E Gaussian rescaled to spectral norm uniform in (0, max_norm].
struct RandomQepTrial {
  QepPair l0;
  QepPair l;
  double perturbation_norm = 0.0;
};

RandomQepTrial random_qep_trial(std::uint64_t seed, int max_dim = 12, double max_norm = 0.5);

}  // namespace nbspec
