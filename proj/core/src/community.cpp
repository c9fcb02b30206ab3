#include <algorithm>
#include <cmath>
#include <limits>

#include "nbspec/analysis.hpp"
#include "nbspec/error.hpp"

namespace nbspec {

namespace {

double resolve_r(const Graph& graph, const DegreeStats& stats, const RecoveryOptions& opts) {
  if (opts.r) {
    if (!std::isfinite(*opts.r)) throw Error(Errc::invalid_parameters, "r must be finite");
    return *opts.r;
  }
  if (opts.estimate) {
    const SymmetricEigen eig = eigs_symmetric(adjacency_matrix(graph));
    if (eig.values.size() < 2) throw Error(Errc::invalid_parameters, "graph too small to estimate beta");
    const double alpha_hat = graph.mean_degree();
    const double beta_hat = eig.values[eig.values.size() - 2];
    if (!(beta_hat > 0.0)) throw Error(Errc::invalid_parameters, "estimated beta is not positive");
    return alpha_hat / beta_hat;
  }
  if (!stats.has_two_blocks() || !(stats.beta > 0.0)) {
    throw Error(Errc::invalid_parameters, "community recovery needs beta > 0");
  }
  return stats.alpha / stats.beta;
}

// Lloyd iterations on the rows of the first k eigenvectors, seeded by the
// extremes of the second one.
std::vector<int> two_means(const DenseRealMatrix& vectors, std::size_t k) {
  const std::size_t n = vectors.rows();
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (vectors(i, 1) < vectors(lo, 1)) lo = i;
    if (vectors(i, 1) > vectors(hi, 1)) hi = i;
  }
  std::vector<double> c0(k), c1(k);
  for (std::size_t j = 0; j < k; ++j) {
    c0[j] = vectors(lo, j);
    c1[j] = vectors(hi, j);
  }
  std::vector<int> assign(n, -1);
  for (int iter = 0; iter < 100; ++iter) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      double d0 = 0.0, d1 = 0.0;
      for (std::size_t j = 0; j < k; ++j) {
        d0 += (vectors(i, j) - c0[j]) * (vectors(i, j) - c0[j]);
        d1 += (vectors(i, j) - c1[j]) * (vectors(i, j) - c1[j]);
      }
      const int a = d0 <= d1 ? 0 : 1;
      changed |= a != assign[i];
      assign[i] = a;
    }
    if (!changed) break;
    std::fill(c0.begin(), c0.end(), 0.0);
    std::fill(c1.begin(), c1.end(), 0.0);
    std::size_t n0 = 0, n1 = 0;
    for (std::size_t i = 0; i < n; ++i) {
      auto& c = assign[i] == 0 ? c0 : c1;
      (assign[i] == 0 ? n0 : n1) += 1;
      for (std::size_t j = 0; j < k; ++j) c[j] += vectors(i, j);
    }
    if (n0 == 0 || n1 == 0) break;
    for (std::size_t j = 0; j < k; ++j) {
      c0[j] /= static_cast<double>(n0);
      c1[j] /= static_cast<double>(n1);
    }
  }
  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = assign[i] == 0 ? 1 : -1;
  return labels;
}

}  // namespace

double label_accuracy(const std::vector<int>& predicted, std::span<const int> planted) {
  if (predicted.size() != planted.size() || predicted.empty()) {
    throw Error(Errc::bad_input, "label vectors differ in length or are empty");
  }
  std::size_t agree = 0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    agree += (planted[i] == 0 ? 1 : -1) == predicted[i];
  }
  const double f = static_cast<double>(agree) / static_cast<double>(predicted.size());
  return std::max(f, 1.0 - f);
}

CommunityResult recover_communities(const Graph& graph, const DegreeStats& stats,
                                    const RecoveryOptions& opts) {
  const int n = graph.vertex_count();
  if (n < 2) throw Error(Errc::invalid_parameters, "recovery needs at least two vertices");

  CommunityResult out;
  out.r = resolve_r(graph, stats, opts);
  const SymmetricEigen eig = eigs_symmetric(bethe_hessian(graph, out.r).matrix, true);
  for (double v : eig.values) out.negative_eigenvalue_count += v < 0.0;

  const auto un = static_cast<std::size_t>(n);
  if (opts.all_negative && out.negative_eigenvalue_count >= 2) {
    out.predicted_labels = two_means(eig.vectors, out.negative_eigenvalue_count);
  } else {
    std::vector<double> v(un);
    for (std::size_t i = 0; i < un; ++i) v[i] = eig.vectors(i, 1);
    // A degenerate bottom pair leaves the basis arbitrary; take the
    // combination orthogonal to the constant vector.
    const double gap = eig.values[1] - eig.values[0];
    if (gap <= 1e-9 * std::max(1.0, std::abs(eig.values[1]))) {
      double s0 = 0.0, s1 = 0.0;
      for (std::size_t i = 0; i < un; ++i) {
        s0 += eig.vectors(i, 0);
        s1 += eig.vectors(i, 1);
      }
      if (std::abs(s0) + std::abs(s1) > 1e-12) {
        for (std::size_t i = 0; i < un; ++i) v[i] = s1 * eig.vectors(i, 0) - s0 * eig.vectors(i, 1);
      }
    }
    out.predicted_labels.resize(un);
    for (std::size_t i = 0; i < un; ++i) out.predicted_labels[i] = v[i] >= 0.0 ? 1 : -1;
  }
  if (!graph.labels().empty()) out.accuracy = label_accuracy(out.predicted_labels, graph.labels());
  return out;
}

}  // namespace nbspec
