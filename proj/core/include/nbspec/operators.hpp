#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "nbspec/graph.hpp"
#include "nbspec/matrix.hpp"

namespace nbspec {

enum class LinearizationKind { B, H, H0, K, K0 };

std::string_view to_string(LinearizationKind kind) noexcept;

/// Where a linearization came from.
struct Provenance {
  int vertex_count = 0;
  std::size_t edge_count = 0;
  std::optional<DegreeStats> stats;
};

/// A non-backtracking-type operator. For H, H0, K and K0 the matrix is the
/// companion [[a_block, x_block], [I, 0]]; for B the blocks are empty.
struct Linearization {
  LinearizationKind kind = LinearizationKind::H;
  DenseRealMatrix matrix;
  DenseRealMatrix a_block;
  DenseRealMatrix x_block;
  Provenance source;
};

/// (r^2 - 1) I + D - r A.
struct BetheHessian {
  double r = 0.0;
  DenseRealMatrix matrix;
};

inline constexpr std::size_t default_dense_cap = 4000;

DenseRealMatrix adjacency_matrix(const Graph& graph);

/// Directed edges (i, j) and (j, i) for every edge, in lexicographic order.
/// This is the row/column order of build_B.
std::vector<std::pair<int, int>> directed_edges(const Graph& graph);

/// B_{(i,j),(k,l)} = 1 iff j == k and i != l. Throws Errc::too_large when
/// 2|E| exceeds `dense_cap`.
Linearization build_B(const Graph& graph, std::size_t dense_cap = default_dense_cap);

/// [[A, I - D], [I, 0]].
Linearization build_H(const Graph& graph);

/// [[A, -gamma I], [I, 0]]; throws Errc::invalid_parameters unless gamma > 0.
Linearization build_H0(const Graph& graph, const DegreeStats& stats);

/// [[(D-I)^-1 A, -(D-I)^-1], [I, 0]]; throws Errc::degree_too_small if some d_i <= 1.
Linearization build_K(const Graph& graph);

/// [[A / (alpha-1), -I / (alpha-1)], [I, 0]]; throws unless alpha > 1.
Linearization build_K0(const Graph& graph, const DegreeStats& stats);

BetheHessian bethe_hessian(const Graph& graph, double r);

}  // namespace nbspec
