#include <cmath>
#include <sstream>

#include "nbspec/graph.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace nbspec;

namespace {

SbmParams fig1(std::uint64_t seed) {
  const int n = 1000;
  const double base = std::pow(std::log(n), 2) / n;
  return {n, 3 * base, base, seed};
}

}  // namespace

TEST(Graph, RejectsLoopsAndDuplicates) {
  EXPECT_ERRC(Graph(3, {{0, 0}}), Errc::bad_input);
  EXPECT_ERRC(Graph(3, {{0, 1}, {1, 0}}), Errc::bad_input);
  EXPECT_ERRC(Graph(3, {{0, 3}}), Errc::bad_input);
}

TEST(Graph, NormalizesOrientationAndOrder) {
  const Graph g(4, {{3, 1}, {1, 0}, {2, 0}});
  const std::vector<Edge> expected{{0, 1}, {0, 2}, {1, 3}};
  EXPECT_EQ(std::vector<Edge>(g.edges().begin(), g.edges().end()), expected);
  EXPECT_TRUE(g.has_edge(3, 1));
  EXPECT_FALSE(g.has_edge(2, 3));
  EXPECT_EQ(g.degree(0), 2);
  EXPECT_EQ(g.labels()[0], 0);
  EXPECT_EQ(g.labels()[3], 1);
}

TEST(Graph, Fixtures) {
  EXPECT_EQ(complete_graph(4).edge_count(), 6u);
  EXPECT_EQ(path_graph(3).edge_count(), 2u);
  EXPECT_EQ(cycle_graph(5).min_degree(), 2);
  EXPECT_EQ(star_graph(6).max_degree(), 5);
  EXPECT_FALSE(empty_graph(3).is_connected());
  EXPECT_TRUE(path_graph(7).is_connected());
  const Graph r = random_regular_graph(30, 4, 7);
  EXPECT_EQ(r.min_degree(), 4);
  EXPECT_EQ(r.max_degree(), 4);
  EXPECT_ERRC(random_regular_graph(5, 3, 1), Errc::invalid_parameters);
}

TEST(Sbm, ValidationRejectsOddN) {
  EXPECT_ERRC((SbmParams{5, 0.5, 0.5, 1}.validate()), Errc::invalid_parameters);
  EXPECT_ERRC((SbmParams{4, 0.0, 0.5, 1}.validate()), Errc::invalid_parameters);
}

TEST(Sbm, DenseLimitIsComplete) {
  const Graph g = sample_sbm({4, 1 - 1e-12, 1 - 1e-12, 3});
  EXPECT_EQ(g.edge_count(), 6u);
}

TEST(Sbm, SparseLimitIsEmpty) {
  const Graph g = sample_sbm({4, 1e-15, 1e-15, 3});
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(Sbm, Fig1EdgeCountNearExpectation) {
  const auto params = fig1(1);
  const Graph g = sample_sbm(params);
  const double expected = params.n * static_cast<double>(oracle::alpha_of(params.n, params.p, params.q)) / 2;
  EXPECT_NEAR(expected, 47646.0, 1.0);
  EXPECT_LE(std::abs(static_cast<double>(g.edge_count()) - expected), 0.1 * expected);
}

TEST(Sbm, Reproducible) {
  const SbmParams params{60, 0.3, 0.1, 42};
  const Graph a = sample_sbm(params);
  const Graph b = sample_sbm(params);
  EXPECT_TRUE(std::equal(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end()));
  const Graph c = sample_sbm({60, 0.3, 0.1, 43});
  EXPECT_FALSE(std::equal(a.edges().begin(), a.edges().end(), c.edges().begin(), c.edges().end()));
}

TEST(Sbm, PermutedLabelsStayBalanced) {
  SbmParams params{40, 0.3, 0.1, 5};
  params.permute_labels = true;
  const Graph g = sample_sbm(params);
  int ones = 0;
  for (int l : g.labels()) ones += l;
  EXPECT_EQ(ones, 20);
}

TEST(ExpectedStats, Fig1Values) {
  const auto s = expected_stats(fig1(1));
  EXPECT_NEAR(s.alpha, 95.291, 1e-3);
  EXPECT_NEAR(s.beta, 47.574, 1e-3);
  EXPECT_NEAR(s.alpha / s.beta, 2.003, 1e-3);
  EXPECT_NEAR(s.gamma, s.alpha - 1, 1e-15);
  EXPECT_EQ(s.beta_status, BetaStatus::positive);
  EXPECT_NEAR(s.alpha, static_cast<double>(oracle::alpha_of(1000, fig1(1).p, fig1(1).q)), 1e-12);
  EXPECT_NEAR(s.beta, static_cast<double>(oracle::beta_of(1000, fig1(1).p, fig1(1).q)), 1e-12);
}

TEST(ExpectedStats, EqualProbabilitiesGiveSingleCommunity) {
  const auto s = expected_stats({4, 0.5, 0.5, 1});
  EXPECT_EQ(s.beta_status, BetaStatus::undefined);
  EXPECT_FALSE(s.has_two_blocks());
}

TEST(ExpectedStats, BoundaryBetaZero) {
  // p = q + 2p/n with n = 10: q = 0.8 p
  const auto s = expected_stats({10, 0.5, 0.4, 1});
  EXPECT_NEAR(s.beta, 0.0, 1e-12);
  EXPECT_EQ(s.beta_status, BetaStatus::nonpositive);
}

TEST(DegreeConcentration, RegularHasNoDeviation) {
  const Graph g = random_regular_graph(20, 3, 2);
  DegreeStats s;
  s.alpha = 3;
  s = degree_concentration(g, s);
  EXPECT_EQ(s.max_deviation, 0.0);
  EXPECT_TRUE(s.concentrated);
}

TEST(DegreeConcentration, StarIsNotConcentrated) {
  const Graph g = star_graph(20);
  const auto s = degree_concentration(g, observed_stats(g));
  EXPECT_NEAR(s.alpha, 2.0 * 19 / 20, 1e-12);
  EXPECT_NEAR(s.max_deviation, 19 - 1.9, 1e-12);
  EXPECT_GT(s.relative_deviation, 1.0);
  EXPECT_FALSE(s.concentrated);
}

TEST(EdgeList, RoundTrip) {
  const Graph g = sample_sbm({12, 0.5, 0.2, 9});
  std::stringstream buf;
  write_edge_list(buf, g, {12, g.edge_count(), 9, 0.5, 0.2});
  const auto file = read_edge_list(buf);
  EXPECT_EQ(file.header.seed, 9u);
  EXPECT_EQ(file.header.p, 0.5);
  EXPECT_TRUE(std::equal(g.edges().begin(), g.edges().end(), file.graph.edges().begin(),
                         file.graph.edges().end()));
  EXPECT_TRUE(std::equal(g.labels().begin(), g.labels().end(), file.graph.labels().begin()));
}

TEST(EdgeList, MalformedInput) {
  std::istringstream empty("");
  EXPECT_ERRC(read_edge_list(empty), Errc::bad_input);
  std::istringstream short_body("3 2 1 0.5 0.5\n0 1\n");
  EXPECT_ERRC(read_edge_list(short_body), Errc::bad_input);
  std::istringstream bad_vertex("3 1 1 0.5 0.5\n0 7\n000\n");
  EXPECT_ERRC(read_edge_list(bad_vertex), Errc::bad_input);
}
