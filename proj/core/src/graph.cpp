#include "nbspec/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <string>

#include "nbspec/error.hpp"

namespace nbspec {

namespace {

double unit_draw(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

std::vector<int> half_labels(int n) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i < n / 2 ? 0 : 1;
  return labels;
}

}  // namespace

double SbmParams::signal_ratio() const noexcept { return (p - q) / (p + q); }

void SbmParams::validate() const {
  if (n < 4 || n % 2 != 0) {
    throw Error(Errc::invalid_parameters, "n must be even and at least 4, got " + std::to_string(n));
  }
  const auto in_open_unit = [](double x) { return x > 0.0 && x < 1.0; };
  if (!in_open_unit(p) || !in_open_unit(q)) {
    throw Error(Errc::invalid_parameters, "p and q must lie in (0, 1)");
  }
}

Graph::Graph(int n, std::vector<Edge> edges, std::vector<int> labels) : n_(n) {
  if (n < 0) throw Error(Errc::bad_input, "negative vertex count");
  for (auto& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first < 0 || e.second >= n) {
      throw Error(Errc::bad_input, "edge endpoint out of range");
    }
    if (e.first == e.second) throw Error(Errc::bad_input, "self-loop at vertex " + std::to_string(e.first));
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw Error(Errc::bad_input, "duplicate edge");
  }
  edges_ = std::move(edges);

  if (labels.empty()) {
    labels_ = half_labels(n);
  } else {
    if (labels.size() != static_cast<std::size_t>(n)) {
      throw Error(Errc::bad_input, "label vector length differs from n");
    }
    for (int l : labels) {
      if (l != 0 && l != 1) throw Error(Errc::bad_input, "labels must be 0 or 1");
    }
    labels_ = std::move(labels);
  }

  const auto un = static_cast<std::size_t>(n);
  degrees_.assign(un, 0);
  for (const auto& [i, j] : edges_) {
    ++degrees_[static_cast<std::size_t>(i)];
    ++degrees_[static_cast<std::size_t>(j)];
  }
  adjacency_start_.assign(un + 1, 0);
  for (std::size_t v = 0; v < un; ++v) {
    adjacency_start_[v + 1] = adjacency_start_[v] + static_cast<std::size_t>(degrees_[v]);
  }
  adjacency_.assign(adjacency_start_.back(), 0);
  std::vector<std::size_t> cursor(adjacency_start_.begin(), adjacency_start_.end() - 1);
  for (const auto& [i, j] : edges_) {
    adjacency_[cursor[static_cast<std::size_t>(i)]++] = j;
    adjacency_[cursor[static_cast<std::size_t>(j)]++] = i;
  }
  for (std::size_t v = 0; v < un; ++v) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(adjacency_start_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(adjacency_start_[v + 1]));
  }
}

std::span<const int> Graph::neighbors(int v) const {
  const auto uv = static_cast<std::size_t>(v);
  if (v < 0 || uv >= degrees_.size()) throw Error(Errc::invalid_parameters, "vertex out of range");
  return {adjacency_.data() + adjacency_start_[uv], adjacency_start_[uv + 1] - adjacency_start_[uv]};
}

bool Graph::has_edge(int i, int j) const {
  const auto nb = neighbors(i);
  return std::binary_search(nb.begin(), nb.end(), j);
}

int Graph::min_degree() const noexcept {
  return degrees_.empty() ? 0 : *std::min_element(degrees_.begin(), degrees_.end());
}

int Graph::max_degree() const noexcept {
  return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

double Graph::mean_degree() const noexcept {
  return n_ == 0 ? 0.0 : 2.0 * static_cast<double>(edges_.size()) / n_;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

Graph sample_sbm(const SbmParams& params) {
  params.validate();
  const int n = params.n;
  std::vector<int> labels = half_labels(n);
  if (params.permute_labels) {
    // separate stream so the edge draws stay aligned with the unpermuted case
    std::mt19937_64 shuffle_gen(params.seed ^ 0x9E3779B97F4A7C15ULL);
    for (std::size_t i = labels.size() - 1; i > 0; --i) {
      const std::size_t k = static_cast<std::size_t>(shuffle_gen() % (i + 1));
      std::swap(labels[i], labels[k]);
    }
  }
  std::mt19937_64 gen(params.seed);
  std::vector<Edge> edges;
  const double expected = 0.5 * n * (n - 1) * std::max(params.p, params.q);
  edges.reserve(static_cast<std::size_t>(expected * 1.1) + 16);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool same = labels[static_cast<std::size_t>(i)] == labels[static_cast<std::size_t>(j)];
      if (unit_draw(gen) < (same ? params.p : params.q)) edges.emplace_back(i, j);
    }
  }
  return Graph(n, std::move(edges), std::move(labels));
}

DegreeStats expected_stats(const SbmParams& params) {
  params.validate();
  const double n = params.n;
  DegreeStats s;
  s.alpha = n * (params.p + params.q) / 2.0 - params.p;
  if (params.q > params.p) {
    s.beta = n * (params.q - params.p) / 2.0 + params.p;
  } else {
    s.beta = n * (params.p - params.q) / 2.0 - params.p;
  }
  s.gamma = s.alpha - 1.0;
  s.signal_ratio = params.signal_ratio();
  if (params.p == params.q) {
    s.beta_status = BetaStatus::undefined;
  } else if (s.beta <= 1e-9 * s.alpha) {
    s.beta_status = BetaStatus::nonpositive;
  } else {
    s.beta_status = BetaStatus::positive;
  }
  return s;
}

DegreeStats observed_stats(const Graph& graph) {
  DegreeStats s;
  s.alpha = graph.mean_degree();
  s.gamma = s.alpha - 1.0;
  s.beta = 0.0;
  s.beta_status = BetaStatus::undefined;
  return s;
}

DegreeStats degree_concentration(const Graph& graph, DegreeStats stats, double threshold) {
  double worst = 0.0;
  for (int d : graph.degrees()) worst = std::max(worst, std::abs(d - stats.alpha));
  stats.max_deviation = worst;
  stats.relative_deviation = stats.alpha > 0.0 ? worst / stats.alpha
                                                : std::numeric_limits<double>::infinity();
  stats.concentrated = stats.relative_deviation <= threshold;
  return stats;
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(Errc::invalid_parameters, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  return Graph(n, std::move(edges));
}

Graph star_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph(n, std::move(edges));
}

Graph empty_graph(int n) { return Graph(n, {}); }

Graph random_regular_graph(int n, int d, std::uint64_t seed) {
  if (d < 0 || d >= n || (static_cast<long long>(n) * d) % 2 != 0) {
    throw Error(Errc::invalid_parameters, "need 0 <= d < n and n*d even for a d-regular graph");
  }
  // circulant: offsets 1..d/2, plus the antipodal chord when d is odd
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int k = 1; k <= d / 2; ++k) {
      const int j = (i + k) % n;
      edges.emplace_back(std::min(i, j), std::max(i, j));
    }
    if (d % 2 == 1 && i < n / 2) edges.emplace_back(i, i + n / 2);
  }
  std::sort(edges.begin(), edges.end());
  if (edges.size() < 2) return Graph(n, std::move(edges));

  std::set<Edge> present(edges.begin(), edges.end());
  const auto contains = [&](int a, int b) {
    return present.count(Edge{std::min(a, b), std::max(a, b)}) > 0;
  };
  std::mt19937_64 gen(seed);
  const std::size_t swaps = 10 * edges.size();
  for (std::size_t s = 0; s < swaps; ++s) {
    const std::size_t x = static_cast<std::size_t>(gen() % edges.size());
    const std::size_t y = static_cast<std::size_t>(gen() % edges.size());
    if (x == y) continue;
    auto [a, b] = edges[x];
    auto [c, e] = edges[y];
    if (gen() & 1U) std::swap(c, e);
    // (a,b),(c,e) -> (a,c),(b,e)
    if (a == c || b == e || a == e || b == c) continue;
    if (contains(a, c) || contains(b, e)) continue;
    present.erase(edges[x]);
    present.erase(edges[y]);
    edges[x] = {std::min(a, c), std::max(a, c)};
    edges[y] = {std::min(b, e), std::max(b, e)};
    present.insert(edges[x]);
    present.insert(edges[y]);
  }
  return Graph(n, std::move(edges));
}

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
  if (n < 1 || !(p >= 0.0 && p <= 1.0)) throw Error(Errc::invalid_parameters, "need n >= 1 and p in [0, 1]");
  std::mt19937_64 gen(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (unit_draw(gen) < p) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

}  // namespace nbspec
