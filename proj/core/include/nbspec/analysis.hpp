#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nbspec/eig.hpp"
#include "nbspec/graph.hpp"
#include "nbspec/operators.hpp"

namespace nbspec {

// ---------------------------------------------------------------------------
// Spectrum classification

struct ClassifyOptions {
  /// Annulus half-width: outliers need |z| > (1 + tau) sqrt(gamma), insiders
  /// |z| < (1 - tau) sqrt(gamma).
  double tau = 0.25;
  /// A value counts as real when |Im z| <= real_tolerance * sqrt(alpha).
  double real_tolerance = 1e-8;
  /// Width, in units of sqrt(alpha), of the band around the circle used for
  /// the bulk_fraction_within_band summary.
  double bulk_band = 0.2;
  /// Set when the spectrum came from B and the trivial +-1 values were removed.
  std::optional<std::size_t> trivial_multiplicity;
};

/// An isolated real eigenvalue matched to its predicted location.
struct IsolatedEigenvalue {
  std::string role;  // "lambda1", "lambda2", "xi1", "xi2"
  Complex value;
  double target = 0.0;
  double gap = 0.0;
};

struct BulkEigenvalue {
  Complex value;
  double distance = 0.0;  // | |z| - sqrt(gamma) |
};

struct ClassificationReport {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  bool two_blocks = false;
  double tau = 0.25;
  double circle_radius = 0.0;  // sqrt(gamma)
  /// alpha^(3/4): scale of the outlier-location error term.
  double outlier_gap_scale = 0.0;
  std::vector<IsolatedEigenvalue> outliers;
  std::vector<IsolatedEigenvalue> insiders;
  std::vector<BulkEigenvalue> bulk;
  std::size_t outlier_candidates = 0;
  std::size_t insider_candidates = 0;
  std::size_t expected_outliers = 0;
  std::size_t expected_insiders = 0;
  /// Candidate counts differ from the expected (2, 2) or (1, 1).
  bool ambiguous = false;
  double max_bulk_distance = 0.0;
  double bulk_quantile_50 = 0.0;
  double bulk_quantile_90 = 0.0;
  double bulk_quantile_99 = 0.0;
  double bulk_band = 0.0;  // absolute width, bulk_band * sqrt(alpha)
  double bulk_fraction_within_band = 1.0;
  std::optional<std::size_t> trivial_multiplicity;
  std::size_t total = 0;

  const IsolatedEigenvalue* find(const std::string& role) const;
};

/// Splits a spectrum of H (or of B with the trivial values removed) into
/// outliers near {alpha, beta}, insiders near {1, alpha/beta}, and bulk.
/// Throws Errc::invalid_parameters unless alpha > 1.
ClassificationReport classify_spectrum(const Spectrum& spec, const DegreeStats& stats,
                                       const ClassifyOptions& opts = {});

/// Removes `multiplicity` copies each of +1 and -1, nearest first.
Spectrum remove_trivial(const Spectrum& spec_b, std::size_t multiplicity);

// ---------------------------------------------------------------------------
// Ihara-Bass and structural checks

struct IharaBassResult {
  bool match = false;
  double max_gap = 0.0;
  std::ptrdiff_t trivial_multiplicity = 0;  // |E| - |V|
  bool h_extended = false;                   // Spec(H) computed in quadruple precision
  Spectrum spectrum_b;
  Spectrum spectrum_h;
};

/// Compares Spec(B) with Spec(H) plus |E| - |V| copies each of +1 and -1
/// (moved to the B side when |E| < |V|). Spec(H) uses the extended-precision
/// solver when 2n fits under its cap. Throws Errc::too_large above the dense cap.
IharaBassResult ihara_bass_check(const Graph& graph, std::size_t dense_cap = default_dense_cap,
                                 double tol = 1e-6);

struct InclusionResult {
  bool holds = true;
  double worst_violation = 0.0;
};

/// Non-real eigenvalues of H in sqrt(d_min - 1) <= |z| <= sqrt(d_max - 1),
/// real ones in 1 <= |z| <= d_max - 1. Needs d_min >= 2.
InclusionResult spectral_inclusion(const Spectrum& spec_h, const Graph& graph, double tol = 1e-8);

// ---------------------------------------------------------------------------
// Empirical spectral distribution

enum class EsdMode {
  adjacency,        // Spec(A)/sqrt(alpha) against the semicircle on [-2, 2]
  real_parts,       // Re Spec(H or H0)/sqrt(alpha) against the semicircle on [-1, 1]
};

struct EsdReport {
  std::vector<double> sample;  // sorted, scaled
  double radius = 2.0;         // semicircle support [-radius, radius]
  double ks_distance = 0.0;
};

/// 1/2 + x sqrt(R^2 - x^2) / (pi R^2) + arcsin(x / R) / pi, clamped outside [-R, R].
double semicircle_cdf(double x, double radius);

/// sup |F_n - F| for a sorted sample.
double ks_distance(const std::vector<double>& sorted_sample, double radius);

EsdReport semicircle_ks(const Spectrum& spec, EsdMode mode, const DegreeStats& stats);

// ---------------------------------------------------------------------------
// Community recovery

struct RecoveryOptions {
  /// Overrides r = alpha / beta.
  std::optional<double> r;
  /// Estimate alpha by the mean degree and beta by the second adjacency
  /// eigenvalue instead of taking them from the stats.
  bool estimate = false;
  /// Cluster on every eigenvector with a negative eigenvalue (2-means)
  /// instead of the sign of the second-smallest eigenvector.
  bool all_negative = false;
};

struct CommunityResult {
  double r = 0.0;
  std::size_t negative_eigenvalue_count = 0;
  std::vector<int> predicted_labels;  // +1 / -1
  double accuracy = 0.5;              // best over a global label flip
};

/// Fraction of vertices whose sign label agrees with the planted block,
/// maximized over the global flip.
double label_accuracy(const std::vector<int>& predicted, std::span<const int> planted);

CommunityResult recover_communities(const Graph& graph, const DegreeStats& stats,
                                    const RecoveryOptions& opts = {});

}  // namespace nbspec
