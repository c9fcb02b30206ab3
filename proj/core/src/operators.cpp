#include "nbspec/operators.hpp"

#include <algorithm>
#include <string>

#include "nbspec/error.hpp"

namespace nbspec {

std::string_view to_string(LinearizationKind kind) noexcept {
  switch (kind) {
    case LinearizationKind::B: return "B";
    case LinearizationKind::H: return "H";
    case LinearizationKind::H0: return "H0";
    case LinearizationKind::K: return "K";
    case LinearizationKind::K0: return "K0";
  }
  return "?";
}

namespace {

Provenance provenance_of(const Graph& graph, std::optional<DegreeStats> stats = std::nullopt) {
  return {graph.vertex_count(), graph.edge_count(), stats};
}

Linearization make_companion(LinearizationKind kind, DenseRealMatrix a, DenseRealMatrix x,
                             Provenance source) {
  Linearization lin;
  lin.kind = kind;
  lin.matrix = companion(a, x);
  lin.a_block = std::move(a);
  lin.x_block = std::move(x);
  lin.source = std::move(source);
  return lin;
}

}  // namespace

DenseRealMatrix adjacency_matrix(const Graph& graph) {
  const auto n = static_cast<std::size_t>(graph.vertex_count());
  DenseRealMatrix a(n, n);
  for (const auto& [i, j] : graph.edges()) {
    a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = 1.0;
    a(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = 1.0;
  }
  return a;
}

std::vector<std::pair<int, int>> directed_edges(const Graph& graph) {
  std::vector<std::pair<int, int>> out;
  out.reserve(2 * graph.edge_count());
  for (const auto& [i, j] : graph.edges()) {
    out.emplace_back(i, j);
    out.emplace_back(j, i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Linearization build_B(const Graph& graph, std::size_t dense_cap) {
  const std::size_t m2 = 2 * graph.edge_count();
  if (m2 > dense_cap) {
    throw Error(Errc::too_large, "B would be " + std::to_string(m2) + "x" + std::to_string(m2) +
                                     ", above the dense cap " + std::to_string(dense_cap) +
                                     "; use build_H");
  }
  const auto darts = directed_edges(graph);
  const auto index_of = [&](int i, int j) {
    const auto it = std::lower_bound(darts.begin(), darts.end(), std::pair{i, j});
    return static_cast<std::size_t>(it - darts.begin());
  };
  Linearization lin;
  lin.kind = LinearizationKind::B;
  lin.matrix = DenseRealMatrix(m2, m2);
  for (std::size_t row = 0; row < darts.size(); ++row) {
    const auto [i, j] = darts[row];
    for (int l : graph.neighbors(j)) {
      if (l != i) lin.matrix(row, index_of(j, l)) = 1.0;
    }
  }
  lin.source = provenance_of(graph);
  return lin;
}

Linearization build_H(const Graph& graph) {
  const auto n = static_cast<std::size_t>(graph.vertex_count());
  DenseRealMatrix x(n, n);
  for (std::size_t i = 0; i < n; ++i) x(i, i) = 1.0 - graph.degrees()[i];
  return make_companion(LinearizationKind::H, adjacency_matrix(graph), std::move(x),
                        provenance_of(graph));
}

Linearization build_H0(const Graph& graph, const DegreeStats& stats) {
  if (!(stats.gamma > 0.0)) {
    throw Error(Errc::invalid_parameters, "H0 needs gamma = alpha - 1 > 0");
  }
  const auto n = static_cast<std::size_t>(graph.vertex_count());
  return make_companion(LinearizationKind::H0, adjacency_matrix(graph),
                        -stats.gamma * DenseRealMatrix::identity(n), provenance_of(graph, stats));
}

Linearization build_K(const Graph& graph) {
  const auto n = static_cast<std::size_t>(graph.vertex_count());
  for (std::size_t i = 0; i < n; ++i) {
    if (graph.degrees()[i] <= 1) {
      throw Error(Errc::degree_too_small,
                  "vertex " + std::to_string(i) + " has degree " +
                      std::to_string(graph.degrees()[i]) + "; K needs every degree >= 2");
    }
  }
  DenseRealMatrix a = adjacency_matrix(graph);
  DenseRealMatrix x(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const double inv = 1.0 / (graph.degrees()[i] - 1.0);
    for (double& v : a.row(i)) v *= inv;
    x(i, i) = -inv;
  }
  return make_companion(LinearizationKind::K, std::move(a), std::move(x), provenance_of(graph));
}

Linearization build_K0(const Graph& graph, const DegreeStats& stats) {
  if (!(stats.alpha > 1.0)) {
    throw Error(Errc::invalid_parameters, "K0 needs alpha > 1");
  }
  const auto n = static_cast<std::size_t>(graph.vertex_count());
  const double inv = 1.0 / (stats.alpha - 1.0);
  return make_companion(LinearizationKind::K0, inv * adjacency_matrix(graph),
                        -inv * DenseRealMatrix::identity(n), provenance_of(graph, stats));
}

BetheHessian bethe_hessian(const Graph& graph, double r) {
  const auto n = static_cast<std::size_t>(graph.vertex_count());
  BetheHessian out;
  out.r = r;
  out.matrix = DenseRealMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) out.matrix(i, i) = r * r - 1.0 + graph.degrees()[i];
  for (const auto& [i, j] : graph.edges()) {
    out.matrix(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = -r;
    out.matrix(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = -r;
  }
  return out;
}

}  // namespace nbspec
