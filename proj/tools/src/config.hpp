#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "nbspec/graph.hpp"
#include "nbspec/operators.hpp"

namespace nbspec::cli {

struct RunConfig {
  std::optional<int> n;
  std::optional<double> p;
  std::optional<double> q;
  std::uint64_t seed = 1;
  int seeds = 1;
  std::string preset;
  std::string graph_file;
  double tau = 0.25;
  std::size_t dense_cap = default_dense_cap;
  std::string out_dir;
  std::set<std::string> formats{"csv", "json", "svg"};
  bool permute = false;

  // classify
  std::string op = "H";
  bool estimate = false;
  bool all_negative = false;

  // verify
  int trials = 50;
  bool inject_fault = false;
  double ks_max = 0.05;

  // bound
  std::string pair = "H0/H";
  bool classical = false;

  bool wants(const std::string& format) const { return formats.count(format) != 0; }
  nlohmann::json to_json() const;
};

/// A graph together with the degree statistics used to interpret it.
struct Instance {
  Graph graph;
  DegreeStats stats;
  std::optional<SbmParams> sbm;  // set when the graph is an SBM sample
  std::string source;            // "sbm", "file", "k3", "regular", ...
  std::uint64_t seed = 0;
};

/// (log n)^2 / n, the base edge density of the figure configurations.
double fig1_density(int n);

/// Resolves --preset / --graph / --n --p --q into SBM parameters when the
/// source is an SBM; returns nullopt for fixed graphs. Throws Errc::bad_input
/// or Errc::invalid_parameters.
std::optional<SbmParams> resolve_sbm(const RunConfig& cfg, std::uint64_t seed);

Instance load_instance(const RunConfig& cfg, std::uint64_t seed);

/// Threads from NBSPEC_THREADS, else hardware concurrency, at least 1.
unsigned worker_threads();

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace nbspec::cli
