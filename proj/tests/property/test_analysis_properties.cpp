#include <cmath>

#include "nbspec/analysis.hpp"
#include "test_util.hpp"

using namespace nbspec;

TEST(AnalysisProperty, PartitionIsComplete) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const SbmParams params{120, 0.25, 0.05, seed};
    const Graph g = sample_sbm(params);
    const auto stats = expected_stats(params);
    const auto spec = eigs_general(build_H(g).matrix);
    const auto r = classify_spectrum(spec, stats);
    ASSERT_EQ(r.outliers.size() + r.insiders.size() + r.bulk.size(), spec.size());
    ASSERT_EQ(r.total, spec.size());
  }
}

TEST(AnalysisProperty, TrivialRemovalThenPartitionIsComplete) {
  const Graph g = sample_sbm({24, 0.5, 0.2, 3});
  const auto stats = observed_stats(g);
  const auto spec_b = eigs_general(build_B(g).matrix);
  const auto excess = static_cast<std::size_t>(g.edge_count() - g.vertex_count());
  const auto reduced = remove_trivial(spec_b, excess);
  ASSERT_EQ(reduced.size(), 2u * g.vertex_count());
  ClassifyOptions opts;
  opts.trivial_multiplicity = excess;
  const auto r = classify_spectrum(reduced, stats, opts);
  EXPECT_EQ(r.outliers.size() + r.insiders.size() + r.bulk.size(), reduced.size());
}

TEST(AnalysisProperty, InsiderOneIsExactOnConnectedGraphs) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const SbmParams params{200, 0.2, 0.05, seed};
    const Graph g = sample_sbm(params);
    if (!g.is_connected()) continue;
    const auto r = classify_spectrum(eigs_general(build_H(g).matrix), expected_stats(params));
    const auto* xi1 = r.find("xi1");
    ASSERT_NE(xi1, nullptr) << seed;
    ASSERT_LE(std::abs(xi1->value - 1.0), 1e-8) << seed;
  }
}

TEST(AnalysisProperty, ClassificationMatchesThroughK) {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const SbmParams params{160, 0.25, 0.06, seed};
    const Graph g = sample_sbm(params);
    if (g.min_degree() < 2) continue;
    const auto stats = expected_stats(params);
    const auto from_h = classify_spectrum(eigs_general(build_H(g).matrix), stats);
    const auto from_k = classify_spectrum(eigs_general(build_K(g).matrix).reciprocals(), stats);
    ASSERT_EQ(from_h.outliers.size(), from_k.outliers.size());
    ASSERT_EQ(from_h.insiders.size(), from_k.insiders.size());
    ASSERT_EQ(from_h.bulk.size(), from_k.bulk.size());
    for (std::size_t i = 0; i < from_h.outliers.size(); ++i)
      ASSERT_NEAR(std::abs(from_h.outliers[i].value - from_k.outliers[i].value), 0.0, 1e-6);
    for (std::size_t i = 0; i < from_h.insiders.size(); ++i)
      ASSERT_NEAR(std::abs(from_h.insiders[i].value - from_k.insiders[i].value), 0.0, 1e-6);
  }
}

TEST(AnalysisProperty, IharaBassOnRandomGraphs) {
  for (std::uint64_t seed = 100; seed < 112; ++seed) {
    const Graph g = erdos_renyi(6 + static_cast<int>(seed % 12), 0.4, seed);
    if (g.min_degree() < 1) continue;
    const auto r = ihara_bass_check(g);
    ASSERT_TRUE(r.match) << seed << " gap " << r.max_gap;
  }
}

TEST(AnalysisProperty, KsDistanceInUnitInterval) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const SbmParams params{100, 0.2, 0.1, seed};
    const auto stats = expected_stats(params);
    const auto spec = to_spectrum(eigs_symmetric(adjacency_matrix(sample_sbm(params))));
    const auto r = semicircle_ks(spec, EsdMode::adjacency, stats);
    ASSERT_GE(r.ks_distance, 0.0);
    ASSERT_LE(r.ks_distance, 1.0);
    ASSERT_TRUE(std::is_sorted(r.sample.begin(), r.sample.end()));
  }
}
