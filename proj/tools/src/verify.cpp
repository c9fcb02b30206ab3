#include <algorithm>
#include <cmath>
#include <ostream>

#include "commands.hpp"
#include "nbspec/analysis.hpp"
#include "nbspec/error.hpp"
#include "nbspec/linalg.hpp"
#include "nbspec/qep.hpp"
#include "nbspec/report.hpp"

namespace nbspec::cli {

using nlohmann::json;

namespace {

constexpr double fault_size = 1e-3;

// Erdos-Renyi graphs on 6..24 vertices with p = 0.4, re-drawn until every
// vertex has a neighbour.
std::vector<Graph> er_battery(int count, std::uint64_t seed) {
  std::vector<Graph> graphs;
  std::uint64_t s = seed;
  for (int k = 0; k < count; ++k) {
    const int n = 6 + (7 * k) % 19;
    Graph g;
    do {
      g = erdos_renyi(n, 0.4, s++);
    } while (g.min_degree() < 1);
    graphs.push_back(std::move(g));
  }
  return graphs;
}

json check(const std::string& name, bool pass, json details) {
  details["name"] = name;
  details["status"] = pass ? "pass" : "fail";
  return details;
}

json skipped(const std::string& name, const std::string& reason) {
  return {{"name", name}, {"status", "skipped"}, {"reason", reason}};
}

json check_ihara_bass(const std::vector<Graph>& graphs, const RunConfig& cfg) {
  for (const auto& g : graphs) {
    if (2 * g.edge_count() > cfg.dense_cap) {
      return skipped("ihara-bass", "2|E| = " + std::to_string(2 * g.edge_count()) +
                                       " exceeds the dense cap " + std::to_string(cfg.dense_cap));
    }
  }
  double worst = 0.0;
  bool pass = true;
  for (const auto& g : graphs) {
    IharaBassResult r = ihara_bass_check(g, cfg.dense_cap, 1e-6);
    if (cfg.inject_fault) {
      Spectrum lhs = r.spectrum_b;
      Spectrum rhs = r.spectrum_h;
      rhs.values.front() += fault_size;
      Spectrum& padded = r.trivial_multiplicity >= 0 ? rhs : lhs;
      for (std::ptrdiff_t k = 0; k < std::abs(r.trivial_multiplicity); ++k) {
        padded.values.emplace_back(1.0, 0.0);
        padded.values.emplace_back(-1.0, 0.0);
      }
      r.max_gap = match_spectra(lhs, rhs, 1e-6).max_gap;
      r.match = r.max_gap <= 1e-6;
    }
    worst = std::max(worst, r.max_gap);
    pass = pass && r.match;
  }
  return check("ihara-bass", pass, {{"graphs", graphs.size()}, {"max_gap", worst}, {"tolerance", 1e-6}});
}

json check_det_identity(const std::vector<Graph>& graphs) {
  double worst = 0.0;
  bool pass = true;
  for (const auto& g : graphs) {
    const LogDeterminant det = log_determinant(build_H(g).matrix);
    double log_expected = 0.0;
    int sign_expected = 1;
    for (int d : g.degrees()) {
      if (d == 1) {
        sign_expected = 0;
      } else {
        log_expected += std::log(std::abs(d - 1.0));
      }
    }
    if (sign_expected == 0) {
      // singular: the computed determinant must be negligible
      pass = pass && (det.sign == 0 || det.log_abs < log_expected + std::log(1e-8));
      continue;
    }
    const double rel = std::abs(det.log_abs - log_expected) / std::max(1.0, std::abs(log_expected));
    worst = std::max(worst, rel);
    pass = pass && det.sign == sign_expected && rel <= 1e-6;
  }
  return check("det-identity", pass, {{"graphs", graphs.size()}, {"max_relative_error", worst}});
}

json check_eigenvalue_one(const std::vector<Graph>& graphs) {
  double worst = 0.0;
  std::size_t connected = 0;
  for (const auto& g : graphs) {
    if (!g.is_connected()) continue;
    ++connected;
    const DenseRealMatrix h = build_H(g).matrix;
    const Spectrum spec = h.rows() <= extended_precision_cap ? eigs_general_extended(h) : eigs_general(h);
    worst = std::max(worst, nearest(spec, Complex(1.0, 0.0)).second);
  }
  return check("eigenvalue-one", worst <= 1e-8,
               {{"connected_graphs", connected}, {"max_distance", worst}, {"tolerance", 1e-8}});
}

json check_reciprocity(const std::vector<Graph>& graphs) {
  double worst = 0.0;
  std::size_t used = 0;
  for (const auto& g : graphs) {
    if (g.min_degree() < 2) continue;
    ++used;
    const Spectrum h = eigs_general(build_H(g).matrix);
    const Spectrum k = eigs_general(build_K(g).matrix);
    worst = std::max(worst, match_spectra(h.reciprocals(), k, 1e-6).max_gap);
  }
  if (used == 0) return skipped("reciprocity", "no graph with minimum degree >= 2");
  return check("reciprocity", worst <= 1e-6, {{"graphs", used}, {"max_gap", worst}, {"tolerance", 1e-6}});
}

json check_qep_trials(const RunConfig& cfg) {
  std::size_t violations = 0;
  std::size_t brute_violations = 0;
  double worst_ratio = 0.0;
  double worst_closed_form = 0.0;
  const int trials = std::max(cfg.trials, 1) * 4;
  for (int t = 0; t < trials; ++t) {
    const RandomQepTrial trial = random_qep_trial(cfg.seed + static_cast<std::uint64_t>(t));
    const Spectrum spec_l = eigs_general(trial.l.linearization);
    const QepBoundReport report = qep_bound(trial.l0, trial.l, spec_l);
    violations += report.violations;
    // brute force: Spec(L0) from the dense linearization
    const Spectrum spec_l0 = eigs_general(trial.l0.linearization);
    worst_closed_form = std::max(worst_closed_form, match_spectra(spec_l0, report.spectrum_l0, 1e-8).max_gap);
    for (const auto& b : report.per_mu) {
      const double d = nearest(spec_l0, b.mu).second;
      if (d > b.radius + 1e-8 * (1.0 + std::abs(b.mu))) ++brute_violations;
      if (b.radius > 0.0) worst_ratio = std::max(worst_ratio, d / b.radius);
    }
  }
  return check("qep-random-trials", violations == 0 && brute_violations == 0 && worst_closed_form <= 1e-8,
               {{"trials", trials},
                {"violations", violations},
                {"brute_force_violations", brute_violations},
                {"max_distance_over_radius", worst_ratio},
                {"closed_form_gap", worst_closed_form}});
}

json check_semicircle(const RunConfig& cfg) {
  RunConfig local = cfg;
  if (local.preset.empty() && local.graph_file.empty() && !local.p) {
    local.preset = "fig1-right";
    if (!local.n) local.n = 2000;
  }
  const Instance inst = load_instance(local, local.seed);
  if (!(inst.stats.gamma > 0.0)) return skipped("semicircle-ks", "alpha <= 1");
  const SymmetricEigen adj = eigs_symmetric(adjacency_matrix(inst.graph));
  const EsdReport a = semicircle_ks(to_spectrum(adj), EsdMode::adjacency, inst.stats);
  const Spectrum h0 = quadratic_spectrum(
      adj.values, std::vector<Complex>(adj.values.size(), Complex(-inst.stats.gamma, 0.0)));
  const EsdReport r = semicircle_ks(h0, EsdMode::real_parts, inst.stats);
  return check("semicircle-ks", a.ks_distance <= cfg.ks_max && r.ks_distance <= cfg.ks_max,
               {{"vertices", inst.graph.vertex_count()},
                {"adjacency", a},
                {"h0_real_parts", r},
                {"threshold", cfg.ks_max}});
}

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const std::vector<Graph> graphs = er_battery(cfg.trials, cfg.seed);
  json checks = json::array();
  checks.push_back(check_ihara_bass(graphs, cfg));
  checks.push_back(check_det_identity(graphs));
  checks.push_back(check_eigenvalue_one(graphs));
  checks.push_back(check_reciprocity(graphs));
  checks.push_back(check_qep_trials(cfg));
  checks.push_back(check_semicircle(cfg));

  bool pass = true;
  for (const auto& c : checks) pass = pass && c["status"] != "fail";
  json summary = {{"command", "verify"},
                  {"config", cfg.to_json()},
                  {"inject_fault", cfg.inject_fault},
                  {"checks", checks},
                  {"passed", pass}};
  if (!cfg.out_dir.empty() && cfg.wants("json")) {
    write_text(std::filesystem::path(cfg.out_dir) / "verify.json", summary.dump(2) + "\n");
  }
  out << summary.dump(2) << "\n";
  return pass ? 0 : 1;
}

}  // namespace nbspec::cli
