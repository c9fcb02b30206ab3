#include <cmath>

#include "nbspec/analysis.hpp"
#include "test_util.hpp"

using namespace nbspec;

TEST(IharaBass, TriangleHasNoTrivialPadding) {
  const auto r = ihara_bass_check(complete_graph(3));
  EXPECT_EQ(r.trivial_multiplicity, 0);
  EXPECT_TRUE(r.match);
  EXPECT_LE(r.max_gap, 1e-8);
}

TEST(IharaBass, K4) {
  const auto r = ihara_bass_check(complete_graph(4));
  EXPECT_EQ(r.trivial_multiplicity, 2);
  EXPECT_EQ(r.spectrum_b.size(), 12u);
  EXPECT_EQ(r.spectrum_h.size(), 8u);
  EXPECT_LE(r.max_gap, 1e-8);
}

TEST(IharaBass, TreesPadTheBSide) {
  // |E| - |V| = -1 on a tree: Spec(B) plus {+1, -1} equals Spec(H)
  const auto r = ihara_bass_check(path_graph(5));
  EXPECT_EQ(r.trivial_multiplicity, -1);
  EXPECT_TRUE(r.match) << r.max_gap;
}

TEST(IharaBass, ErdosRenyiSweep) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Graph g = erdos_renyi(14, 0.4, seed);
    if (g.min_degree() < 1) continue;
    const auto r = ihara_bass_check(g);
    EXPECT_TRUE(r.match) << "seed " << seed << " gap " << r.max_gap;
  }
}

TEST(IharaBass, CapPropagates) {
  EXPECT_ERRC(ihara_bass_check(complete_graph(6), 10), Errc::too_large);
}

TEST(SpectralInclusion, RegularGraphHolds) {
  const Graph g = random_regular_graph(30, 4, 1);
  const auto r = spectral_inclusion(eigs_general(build_H(g).matrix), g);
  EXPECT_TRUE(r.holds) << r.worst_violation;
}

TEST(SpectralInclusion, IrregularGraphHolds) {
  const Graph g = sample_sbm({60, 0.3, 0.2, 4});
  ASSERT_GE(g.min_degree(), 2);
  const auto r = spectral_inclusion(eigs_general(build_H(g).matrix), g);
  EXPECT_TRUE(r.holds) << r.worst_violation;
}

TEST(SpectralInclusion, DetectsViolation) {
  const Graph g = cycle_graph(6);
  Spectrum s;
  s.values = {Complex(0.5, 0.0)};
  EXPECT_FALSE(spectral_inclusion(s, g).holds);
  EXPECT_ERRC(spectral_inclusion(s, path_graph(4)), Errc::degree_too_small);
}
