#include <cmath>

#include "nbspec/analysis.hpp"
#include "nbspec/eig.hpp"
#include "test_util.hpp"

using namespace nbspec;
using testutil::spectrum_of;

namespace {

DegreeStats stats_for(double alpha, double beta, bool two_blocks) {
  DegreeStats s;
  s.alpha = alpha;
  s.beta = beta;
  s.gamma = alpha - 1;
  s.beta_status = two_blocks ? BetaStatus::positive : BetaStatus::undefined;
  return s;
}

}  // namespace

TEST(Classify, SyntheticTwoBlockSpectrum) {
  const auto stats = stats_for(100, 50, true);
  std::vector<Complex> values{104.0, 46.0, 1.0, 2.1};
  for (int k = 0; k < 20; ++k) values.push_back(std::polar(std::sqrt(99.0), 0.3 + 0.25 * k));
  const auto report = classify_spectrum(spectrum_of(values), stats);
  EXPECT_FALSE(report.ambiguous);
  ASSERT_NE(report.find("lambda1"), nullptr);
  EXPECT_EQ(report.find("lambda1")->value, Complex(104.0));
  EXPECT_EQ(report.find("lambda2")->value, Complex(46.0));
  EXPECT_EQ(report.find("xi1")->value, Complex(1.0));
  EXPECT_NEAR(report.find("xi2")->gap, 0.1, 1e-12);
  EXPECT_EQ(report.outliers.size() + report.insiders.size() + report.bulk.size(), values.size());
  EXPECT_EQ(report.bulk_fraction_within_band, 1.0);
  EXPECT_NEAR(report.circle_radius, std::sqrt(99.0), 1e-12);
  EXPECT_NEAR(report.outlier_gap_scale, std::pow(100.0, 0.75), 1e-9);
}

TEST(Classify, RegularGraphSingleOutlierAndInsider) {
  // roots of z^2 - d z + (d - 1): {d - 1, 1}, plus a bulk on the circle
  const Graph g = random_regular_graph(40, 5, 3);
  const auto stats = observed_stats(g);
  const auto report = classify_spectrum(eigs_general(build_H(g).matrix), stats);
  EXPECT_EQ(report.expected_outliers, 1u);
  EXPECT_EQ(report.expected_insiders, 1u);
  ASSERT_NE(report.find("lambda1"), nullptr);
  ASSERT_NE(report.find("xi1"), nullptr);
  EXPECT_NEAR(report.find("lambda1")->value.real(), 4.0, 1e-8);
  EXPECT_NEAR(report.find("xi1")->value.real(), 1.0, 1e-8);
  EXPECT_EQ(report.find("lambda2"), nullptr);
}

TEST(Classify, ExtraCandidatesAreUnmatchedAndAmbiguous) {
  const auto stats = stats_for(100, 50, false);
  const auto report = classify_spectrum(spectrum_of({101.0, 60.0, 1.0}), stats);
  EXPECT_TRUE(report.ambiguous);
  EXPECT_EQ(report.outliers.size(), 2u);
  EXPECT_EQ(report.outliers[1].role, "unmatched");
  EXPECT_EQ(report.find("lambda1")->value, Complex(101.0));
}

TEST(Classify, ComplexValuesNeverIsolated) {
  const auto stats = stats_for(100, 50, true);
  const auto report = classify_spectrum(spectrum_of({{100.0, 1.0}, {1.0, 0.5}}), stats);
  EXPECT_EQ(report.outlier_candidates, 0u);
  EXPECT_EQ(report.insider_candidates, 0u);
  EXPECT_EQ(report.bulk.size(), 2u);
}

TEST(Classify, ParameterChecks) {
  EXPECT_ERRC(classify_spectrum(spectrum_of({1.0}), stats_for(1.0, 0, false)), Errc::invalid_parameters);
  ClassifyOptions opts;
  opts.tau = 1.0;
  EXPECT_ERRC(classify_spectrum(spectrum_of({1.0}), stats_for(5, 0, false), opts), Errc::invalid_parameters);
}

TEST(RemoveTrivial, RemovesNearestCopies) {
  const auto s = spectrum_of({1.0, 1.0 + 1e-9, -1.0, -1.0, 3.0, {0.5, 0.5}});
  const auto out = remove_trivial(s, 2);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out.values[0], Complex(3.0));
  EXPECT_ERRC(remove_trivial(s, 4), Errc::invalid_parameters);
}
