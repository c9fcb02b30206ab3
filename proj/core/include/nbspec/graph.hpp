#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace nbspec {

/// Two-block stochastic block model: blocks of n/2 vertices, intra-block
/// edge probability p, inter-block probability q.
struct SbmParams {
  int n = 0;
  double p = 0.0;
  double q = 0.0;
  std::uint64_t seed = 0;
  /// Scatter the block labels with a seeded shuffle instead of using the
  /// first and second halves of the vertex range.
  bool permute_labels = false;

  /// (p - q) / (p + q); the admissible window for it is left to the caller.
  double signal_ratio() const noexcept;

  /// Throws Errc::invalid_parameters unless n is even, n >= 4 and p, q lie in (0, 1).
  void validate() const;
};

/// Unordered edge stored with first < second.
using Edge = std::pair<int, int>;

/// Simple undirected graph with planted block labels. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Edges may come in any order and orientation; self-loops and duplicates
  /// are rejected with Errc::bad_input. Empty `labels` means first half 0,
  /// second half 1.
  Graph(int n, std::vector<Edge> edges, std::vector<int> labels = {});

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Sorted lexicographically.
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const int> labels() const noexcept { return labels_; }
  std::span<const int> degrees() const noexcept { return degrees_; }
  /// Sorted ascending.
  std::span<const int> neighbors(int v) const;

  int degree(int v) const { return degrees_.at(static_cast<std::size_t>(v)); }
  bool has_edge(int i, int j) const;
  int min_degree() const noexcept;
  int max_degree() const noexcept;
  double mean_degree() const noexcept;
  bool is_connected() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> labels_;
  std::vector<int> degrees_;
  std::vector<std::size_t> adjacency_start_;
  std::vector<int> adjacency_;
};

/// How beta relates to the community structure of the parameters.
enum class BetaStatus {
  positive,     // two-block signal, alpha > beta > 0
  nonpositive,  // beta <= 0: boundary (e.g. p = q + 2p/n) or below it
  undefined,    // p == q or no parameters: a single community
};

struct DegreeStats {
  double alpha = 0.0;  // mean degree
  double beta = 0.0;   // mean difference degree
  double gamma = 0.0;  // alpha - 1
  BetaStatus beta_status = BetaStatus::undefined;
  double signal_ratio = 0.0;
  // filled by degree_concentration
  double max_deviation = 0.0;
  double relative_deviation = 0.0;
  bool concentrated = false;

  bool has_two_blocks() const noexcept { return beta_status == BetaStatus::positive; }
};

/// Samples the SBM. Pairs (i, j), i < j, are visited in lexicographic order;
/// each draws one 64-bit word w from std::mt19937_64(seed) and the edge is
/// present iff (w >> 11) * 2^-53 < probability. Identical params give
/// identical graphs on every platform.
Graph sample_sbm(const SbmParams& params);

/// alpha = n(p+q)/2 - p, beta = n(p-q)/2 - p (or n(q-p)/2 + p when q > p),
/// gamma = alpha - 1.
DegreeStats expected_stats(const SbmParams& params);

/// Stats of an arbitrary graph: alpha is the observed mean degree, beta is
/// left undefined.
DegreeStats observed_stats(const Graph& graph);

/// Fills max_i |d_i - alpha|, its ratio to alpha, and the concentrated flag.
DegreeStats degree_concentration(const Graph& graph, DegreeStats stats, double threshold = 0.3);

// Deterministic fixtures.
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);
Graph empty_graph(int n);
/// Seeded d-regular graph: a circulant start randomized by degree-preserving
/// double-edge swaps. Requires n * d even and d < n.
Graph random_regular_graph(int n, int d, std::uint64_t seed);
/// G(n, p) with the same stream order as sample_sbm.
Graph erdos_renyi(int n, double p, std::uint64_t seed);

/// Plain-text edge list. Header `n m seed p q`, then m lines `i j`, then one
/// line of n characters '0'/'1' holding the block labels.
struct EdgeListHeader {
  int n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  double p = 0.0;
  double q = 0.0;
};

void write_edge_list(std::ostream& out, const Graph& graph, const EdgeListHeader& header);

struct EdgeListFile {
  EdgeListHeader header;
  Graph graph;
};

/// Throws Errc::bad_input on malformed content.
EdgeListFile read_edge_list(std::istream& in);

}  // namespace nbspec
