#include "nbspec/report.hpp"

#include <string_view>

namespace nbspec {

namespace {

std::string_view beta_status_name(BetaStatus s) {
  switch (s) {
    case BetaStatus::positive: return "positive";
    case BetaStatus::nonpositive: return "nonpositive";
    case BetaStatus::undefined: return "undefined";
  }
  return "undefined";
}

}  // namespace

nlohmann::json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

void to_json(nlohmann::json& j, const SbmParams& p) {
  j = {{"n", p.n}, {"p", p.p}, {"q", p.q}, {"seed", p.seed}, {"permute_labels", p.permute_labels}};
}

void to_json(nlohmann::json& j, const DegreeStats& s) {
  j = {{"alpha", s.alpha},
       {"beta", s.beta},
       {"gamma", s.gamma},
       {"beta_status", beta_status_name(s.beta_status)},
       {"signal_ratio", s.signal_ratio},
       {"max_deviation", s.max_deviation},
       {"relative_deviation", s.relative_deviation},
       {"concentrated", s.concentrated}};
}

void to_json(nlohmann::json& j, const Spectrum& s) {
  j = nlohmann::json::array();
  for (Complex z : s.values) j.push_back(complex_json(z));
}

void to_json(nlohmann::json& j, const IsolatedEigenvalue& e) {
  j = {{"role", e.role}, {"value", complex_json(e.value)}, {"target", e.target}, {"gap", e.gap}};
}

nlohmann::json classification_summary(const ClassificationReport& r) {
  nlohmann::json j = {{"alpha", r.alpha},
                      {"beta", r.beta},
                      {"gamma", r.gamma},
                      {"two_blocks", r.two_blocks},
                      {"tau", r.tau},
                      {"circle_radius", r.circle_radius},
                      {"outlier_gap_scale", r.outlier_gap_scale},
                      {"outliers", r.outliers},
                      {"insiders", r.insiders},
                      {"outlier_candidates", r.outlier_candidates},
                      {"insider_candidates", r.insider_candidates},
                      {"expected_outliers", r.expected_outliers},
                      {"expected_insiders", r.expected_insiders},
                      {"ambiguous", r.ambiguous},
                      {"bulk_count", r.bulk.size()},
                      {"max_bulk_distance", r.max_bulk_distance},
                      {"bulk_distance_quantiles",
                       {{"q50", r.bulk_quantile_50}, {"q90", r.bulk_quantile_90}, {"q99", r.bulk_quantile_99}}},
                      {"bulk_band", r.bulk_band},
                      {"bulk_fraction_within_band", r.bulk_fraction_within_band},
                      {"total", r.total}};
  j["trivial_multiplicity"] = r.trivial_multiplicity ? nlohmann::json(*r.trivial_multiplicity) : nlohmann::json();
  return j;
}

void to_json(nlohmann::json& j, const ClassificationReport& r) {
  j = classification_summary(r);
  auto& bulk = j["bulk"] = nlohmann::json::array();
  for (const auto& b : r.bulk) bulk.push_back({{"value", complex_json(b.value)}, {"distance", b.distance}});
}

void to_json(nlohmann::json& j, const IharaBassResult& r) {
  j = {{"match", r.match}, {"max_gap", r.max_gap}, {"trivial_multiplicity", r.trivial_multiplicity}};
}

void to_json(nlohmann::json& j, const InclusionResult& r) {
  j = {{"holds", r.holds}, {"worst_violation", r.worst_violation}};
}

void to_json(nlohmann::json& j, const EsdReport& r) {
  j = {{"reference", r.radius == 2.0 ? "semicircle[-2,2]" : "semicircle[-1,1]"},
       {"radius", r.radius},
       {"sample_size", r.sample.size()},
       {"ks_distance", r.ks_distance}};
}

void to_json(nlohmann::json& j, const CommunityResult& r) {
  j = {{"r", r.r},
       {"negative_eigenvalue_count", r.negative_eigenvalue_count},
       {"accuracy", r.accuracy},
       {"predicted_labels", r.predicted_labels}};
}

void to_json(nlohmann::json& j, const MuBound& b) {
  j = {{"mu", complex_json(b.mu)},
       {"radius", b.radius},
       {"nearest", complex_json(b.nearest)},
       {"distance", b.distance},
       {"norm_converged", b.norm_converged}};
}

void to_json(nlohmann::json& j, const ClusterCertificate& c) {
  j = {{"centers", c.centers},
       {"radius", c.radius},
       {"expected", c.expected},
       {"observed", c.observed},
       {"separated", c.separated},
       {"certified", c.certified()}};
}

void to_json(nlohmann::json& j, const QepBoundReport& r) {
  j = {{"kappa", r.kappa},
       {"epsilon_global", r.epsilon_global},
       {"violations", r.violations},
       {"per_mu", r.per_mu},
       {"clusters", r.clusters},
       {"spectrum_l0", r.spectrum_l0},
       {"spectrum_l", r.spectrum_l}};
}

}  // namespace nbspec
