#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "nbspec/analysis.hpp"
#include "nbspec/error.hpp"
#include "nbspec/qep.hpp"
#include "nbspec/report.hpp"
#include "nbspec/svg.hpp"

namespace nbspec::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json instance_json(const Instance& inst) {
  json j = {{"source", inst.source},
            {"seed", inst.seed},
            {"vertices", inst.graph.vertex_count()},
            {"edges", inst.graph.edge_count()},
            {"min_degree", inst.graph.min_degree()},
            {"max_degree", inst.graph.max_degree()},
            {"connected", inst.graph.is_connected()},
            {"stats", inst.stats}};
  j["sbm"] = inst.sbm ? json(*inst.sbm) : json();
  return j;
}

std::string csv_text(const Spectrum& spec) {
  std::ostringstream s;
  write_spectrum_csv(s, spec);
  return s.str();
}

std::string suffix(const Instance& inst, const RunConfig& cfg) {
  return cfg.seeds > 1 ? "_seed" + std::to_string(inst.seed) : "";
}

// Spec(H0) = roots of z^2 - lambda z + gamma over Spec(A).
Spectrum h0_spectrum_from_adjacency(const SymmetricEigen& adj, double gamma) {
  return quadratic_spectrum(adj.values, std::vector<Complex>(adj.values.size(), Complex(-gamma, 0.0)));
}

json classify_trial(const RunConfig& cfg, std::uint64_t seed) {
  const Instance inst = load_instance(cfg, seed);
  json trial = instance_json(inst);

  ClassifyOptions copts;
  copts.tau = cfg.tau;
  Spectrum spec;
  if (cfg.op == "B") {
    const auto trivial = static_cast<std::ptrdiff_t>(inst.graph.edge_count()) - inst.graph.vertex_count();
    if (trivial < 0) throw Error(Errc::invalid_parameters, "operator B needs |E| >= |V|");
    spec = remove_trivial(eigs_general(build_B(inst.graph, cfg.dense_cap).matrix),
                          static_cast<std::size_t>(trivial));
    copts.trivial_multiplicity = static_cast<std::size_t>(trivial);
  } else {
    spec = eigs_general(build_H(inst.graph).matrix);
  }
  const ClassificationReport report = classify_spectrum(spec, inst.stats, copts);
  trial["operator"] = cfg.op;
  trial["classification"] = classification_summary(report);

  const SymmetricEigen adj = eigs_symmetric(adjacency_matrix(inst.graph));
  json ks = {{"adjacency", semicircle_ks(to_spectrum(adj), EsdMode::adjacency, inst.stats)}};
  if (cfg.op == "H") ks["h_real_parts"] = semicircle_ks(spec, EsdMode::real_parts, inst.stats);
  ks["h0_real_parts"] =
      semicircle_ks(h0_spectrum_from_adjacency(adj, inst.stats.gamma), EsdMode::real_parts, inst.stats);
  trial["ks"] = ks;

  RecoveryOptions ropts;
  ropts.estimate = cfg.estimate;
  ropts.all_negative = cfg.all_negative;
  if (inst.graph.labels().empty()) {
    trial["recovery"] = {{"skipped", "graph carries no planted labels"}};
  } else if (!inst.stats.has_two_blocks() && !cfg.estimate) {
    trial["recovery"] = {{"skipped", "single block: beta undefined or not positive"}};
  } else {
    CommunityResult rec = recover_communities(inst.graph, inst.stats, ropts);
    json r = rec;
    r.erase("predicted_labels");
    trial["recovery"] = r;
  }

  if (!cfg.out_dir.empty()) {
    const std::string tag = suffix(inst, cfg);
    const fs::path dir(cfg.out_dir);
    if (cfg.wants("json")) write_text(dir / ("classification" + tag + ".json"), json(report).dump(2) + "\n");
    if (cfg.wants("csv")) write_text(dir / ("spectrum_" + cfg.op + tag + ".csv"), csv_text(spec));
    if (cfg.wants("svg")) {
      SvgOptions sopts;
      sopts.title = "Spec(" + cfg.op + "), n=" + std::to_string(inst.graph.vertex_count()) +
                    ", seed=" + std::to_string(inst.seed);
      write_text(dir / ("spectrum_" + cfg.op + tag + ".svg"),
                 spectrum_svg(spec, std::sqrt(std::max(0.0, inst.stats.gamma)), sopts));
    }
  }
  return trial;
}

// Runs fn(seed) for every seed of the sweep on worker threads; results come
// back in seed order.
template <typename Fn>
std::vector<json> sweep(const RunConfig& cfg, Fn fn) {
  const auto count = static_cast<std::size_t>(cfg.seeds);
  std::vector<json> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      try {
        results[k] = fn(cfg.seed + k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::min<unsigned>(worker_threads(), static_cast<unsigned>(count));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace

int cmd_sample(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = load_instance(cfg, cfg.seed);
  EdgeListHeader header;
  header.n = inst.graph.vertex_count();
  header.m = inst.graph.edge_count();
  header.seed = inst.seed;
  if (inst.sbm) {
    header.p = inst.sbm->p;
    header.q = inst.sbm->q;
  }
  std::ostringstream text;
  write_edge_list(text, inst.graph, header);
  if (cfg.out_dir.empty()) {
    out << text.str();
    return 0;
  }
  const fs::path file = fs::path(cfg.out_dir) / ("graph_seed" + std::to_string(inst.seed) + ".txt");
  write_text(file, text.str());
  json summary = {{"command", "sample"}, {"config", cfg.to_json()}, {"graph", instance_json(inst)},
                  {"file", file.string()}};
  out << summary.dump(2) << "\n";
  return 0;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = load_instance(cfg, cfg.seed);
  const Spectrum spec_h = eigs_general(build_H(inst.graph).matrix);
  json summary = {{"command", "spectrum"}, {"config", cfg.to_json()}, {"graph", instance_json(inst)}};
  summary["h"] = {{"size", spec_h.size()}, {"spectral_radius", 0.0}};
  double radius = 0.0;
  for (Complex z : spec_h.values) radius = std::max(radius, std::abs(z));
  summary["h"]["spectral_radius"] = radius;

  std::optional<Spectrum> spec_b;
  const std::size_t b_dim = 2 * inst.graph.edge_count();
  if (b_dim <= cfg.dense_cap) {
    spec_b = eigs_general(build_B(inst.graph, cfg.dense_cap).matrix);
    summary["b"] = {{"size", spec_b->size()},
                    {"trivial_multiplicity",
                     static_cast<std::ptrdiff_t>(inst.graph.edge_count()) - inst.graph.vertex_count()}};
  } else {
    summary["b"] = {{"skipped", "2|E| = " + std::to_string(b_dim) + " exceeds the dense cap " +
                                    std::to_string(cfg.dense_cap)}};
  }

  if (!cfg.out_dir.empty()) {
    const fs::path dir(cfg.out_dir);
    if (cfg.wants("csv")) {
      write_text(dir / "spectrum_H.csv", csv_text(spec_h));
      if (spec_b) write_text(dir / "spectrum_B.csv", csv_text(*spec_b));
    }
    if (cfg.wants("svg")) {
      write_text(dir / "spectrum_H.svg",
                 spectrum_svg(spec_h, std::sqrt(std::max(0.0, inst.stats.gamma)), {640, "Spec(H)"}));
    }
    if (cfg.wants("json")) write_text(dir / "spectrum.json", summary.dump(2) + "\n");
  } else if (cfg.formats.size() == 1 && cfg.wants("csv")) {
    out << csv_text(spec_h);
    return 0;
  }
  out << summary.dump(2) << "\n";
  return 0;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.op != "H" && cfg.op != "B") throw Error(Errc::bad_input, "--operator must be H or B");
  const std::vector<json> trials = sweep(cfg, [&](std::uint64_t seed) { return classify_trial(cfg, seed); });

  json summary = {{"command", "classify"}, {"config", cfg.to_json()}};
  if (trials.size() == 1) {
    summary["result"] = trials.front();
  } else {
    std::size_t clean = 0;
    for (const auto& t : trials) clean += !t["classification"]["ambiguous"].get<bool>();
    summary["trials"] = trials;
    summary["unambiguous_trials"] = clean;
  }
  if (!cfg.out_dir.empty() && cfg.wants("json")) {
    write_text(fs::path(cfg.out_dir) / "classify.json", summary.dump(2) + "\n");
  }
  out << summary.dump(2) << "\n";
  return 0;
}

int cmd_bound(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = load_instance(cfg, cfg.seed);
  json summary = {{"command", "bound"}, {"config", cfg.to_json()}, {"graph", instance_json(inst)},
                  {"pair", cfg.pair}};

  Linearization lin0;
  Linearization lin;
  if (cfg.pair == "H0/H") {
    lin0 = build_H0(inst.graph, inst.stats);
    lin = build_H(inst.graph);
  } else if (cfg.pair == "K0/K") {
    lin0 = build_K0(inst.graph, inst.stats);
    lin = build_K(inst.graph);
  } else {
    throw Error(Errc::bad_input, "--pair must be H0/H or K0/K");
  }
  const QepPair l0 = QepPair::from(lin0);
  const QepPair l = QepPair::from(lin);
  QepBoundReport report = qep_bound(l0, l);

  // clusters: single centers at the isolated eigenvalues of L0
  const auto center_near = [&](Complex target) { return nearest(report.spectrum_l0, target).first; };
  std::vector<std::pair<std::string, Complex>> targets;
  const DegreeStats& s = inst.stats;
  if (cfg.pair == "K0/K") {
    targets.emplace_back("zeta1", Complex(1.0, 0.0));
    if (s.has_two_blocks()) targets.emplace_back("zeta2", Complex(s.beta / s.alpha, 0.0));
  } else {
    targets.emplace_back("lambda1", Complex(s.alpha, 0.0));
    if (s.has_two_blocks()) targets.emplace_back("lambda2", Complex(s.beta, 0.0));
  }
  json cluster_names = json::array();
  for (const auto& [name, target] : targets) {
    report.clusters.push_back(
        cluster_certificate(report.spectrum_l0, report.spectrum_l, report.epsilon_global, {center_near(target)}));
    cluster_names.push_back(name);
  }

  double max_distance = 0.0;
  for (const auto& b : report.per_mu) max_distance = std::max(max_distance, b.distance);
  summary["kappa"] = report.kappa;
  summary["epsilon_global"] = report.epsilon_global;
  summary["max_distance"] = max_distance;
  summary["violations"] = report.violations;
  summary["clusters"] = report.clusters;
  summary["cluster_names"] = cluster_names;
  if (cfg.pair == "H0/H") {
    summary["corollary_radius"] = corollary_bound(l0.a_block, l0.x_block, l.x_block);
    summary["sqrt_max_deviation"] = std::sqrt(s.max_deviation);
  }
  if (cfg.classical) summary["classical_radius"] = classical_bauer_fike_radius(l0, l);

  if (!cfg.out_dir.empty() && cfg.wants("json")) {
    json full = summary;
    full["report"] = report;
    write_text(fs::path(cfg.out_dir) / "bound.json", full.dump(2) + "\n");
  }
  out << summary.dump(2) << "\n";
  return report.violations == 0 ? 0 : 1;
}

}  // namespace nbspec::cli
