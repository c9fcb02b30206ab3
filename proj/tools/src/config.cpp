#include "config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <thread>

#include "nbspec/error.hpp"

namespace nbspec::cli {

namespace {

bool parse_regular(const std::string& preset, int& d, int& n) {
  const std::string prefix = "regular:";
  if (preset.rfind(prefix, 0) != 0) return false;
  const std::string rest = preset.substr(prefix.size());
  const auto comma = rest.find(',');
  if (comma == std::string::npos) throw Error(Errc::bad_input, "preset regular expects regular:d,n");
  try {
    std::size_t used = 0;
    d = std::stoi(rest.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("d");
    const std::string ns = rest.substr(comma + 1);
    n = std::stoi(ns, &used);
    if (used != ns.size()) throw std::invalid_argument("n");
  } catch (const std::logic_error&) {
    throw Error(Errc::bad_input, "preset regular expects integers, got '" + preset + "'");
  }
  return true;
}

}  // namespace

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j;
  j["n"] = n ? nlohmann::json(*n) : nlohmann::json();
  j["p"] = p ? nlohmann::json(*p) : nlohmann::json();
  j["q"] = q ? nlohmann::json(*q) : nlohmann::json();
  j["seed"] = seed;
  j["seeds"] = seeds;
  j["preset"] = preset;
  j["graph"] = graph_file;
  j["tau"] = tau;
  j["dense_cap"] = dense_cap;
  j["permute"] = permute;
  return j;
}

double fig1_density(int n) {
  const double l = std::log(static_cast<double>(n));
  return l * l / n;
}

std::optional<SbmParams> resolve_sbm(const RunConfig& cfg, std::uint64_t seed) {
  SbmParams params;
  params.seed = seed;
  params.permute_labels = cfg.permute;
  if (cfg.preset == "fig1-left" || cfg.preset == "fig1-right") {
    params.n = cfg.n.value_or(1000);
    const double base = fig1_density(params.n);
    params.p = cfg.preset == "fig1-right" ? 3.0 * base : base;
    params.q = base;
    if (cfg.p) params.p = *cfg.p;
    if (cfg.q) params.q = *cfg.q;
  } else if (!cfg.preset.empty()) {
    return std::nullopt;
  } else if (!cfg.graph_file.empty()) {
    return std::nullopt;
  } else {
    if (!cfg.n || !cfg.p) throw Error(Errc::bad_input, "need --preset, --graph, or --n with --p");
    params.n = *cfg.n;
    params.p = *cfg.p;
    params.q = cfg.q.value_or(*cfg.p);
  }
  params.validate();
  return params;
}

Instance load_instance(const RunConfig& cfg, std::uint64_t seed) {
  Instance inst;
  inst.seed = seed;
  if (auto sbm = resolve_sbm(cfg, seed)) {
    inst.graph = sample_sbm(*sbm);
    inst.stats = expected_stats(*sbm);
    inst.sbm = sbm;
    inst.source = cfg.preset.empty() ? "sbm" : cfg.preset;
  } else if (!cfg.graph_file.empty()) {
    std::ifstream in(cfg.graph_file);
    if (!in) throw Error(Errc::bad_input, "cannot open " + cfg.graph_file);
    EdgeListFile file = read_edge_list(in);
    inst.graph = std::move(file.graph);
    inst.seed = file.header.seed;
    inst.source = "file";
    const SbmParams header{file.header.n, file.header.p, file.header.q, file.header.seed, false};
    bool is_sbm = file.header.p > 0.0 && file.header.q > 0.0;
    if (is_sbm) {
      try {
        header.validate();
      } catch (const Error&) {
        is_sbm = false;
      }
    }
    if (is_sbm) {
      inst.stats = expected_stats(header);
      inst.sbm = header;
    } else {
      inst.stats = observed_stats(inst.graph);
    }
  } else {
    int d = 0;
    int n = 0;
    if (cfg.preset == "k3") {
      inst.graph = complete_graph(3);
    } else if (cfg.preset == "k4") {
      inst.graph = complete_graph(4);
    } else if (parse_regular(cfg.preset, d, n)) {
      inst.graph = random_regular_graph(n, d, seed);
    } else {
      throw Error(Errc::bad_input, "unknown preset '" + cfg.preset + "'");
    }
    inst.stats = observed_stats(inst.graph);
    inst.source = cfg.preset.rfind("regular:", 0) == 0 ? "regular" : cfg.preset;
  }
  inst.stats = degree_concentration(inst.graph, inst.stats);
  return inst;
}

unsigned worker_threads() {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("NBSPEC_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) threads = static_cast<unsigned>(v);
  }
  return threads;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::bad_input, "cannot write " + path.string());
  out << text;
}

}  // namespace nbspec::cli
