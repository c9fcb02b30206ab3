#include <exception>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "commands.hpp"
#include "nbspec/blas_env.hpp"
#include "nbspec/error.hpp"

namespace {

using nbspec::cli::RunConfig;

void add_graph_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--n", cfg.n, "Number of vertices (even, >= 4)");
  cmd->add_option("--p", cfg.p, "Intra-block edge probability");
  cmd->add_option("--q", cfg.q, "Inter-block edge probability (defaults to p)");
  cmd->add_option("--seed", cfg.seed, "PRNG seed")->capture_default_str();
  cmd->add_option("--preset", cfg.preset, "fig1-left, fig1-right, k3, k4 or regular:d,n");
  cmd->add_option("--graph", cfg.graph_file, "Edge-list file instead of sampling");
  cmd->add_flag("--permute", cfg.permute, "Shuffle block labels after sampling");
  cmd->add_option("--dense-cap", cfg.dense_cap, "Largest dense B dimension")->capture_default_str();
  cmd->add_option("--out", cfg.out_dir, "Output directory");
  cmd->add_option("--format", cfg.formats, "Artifacts to write: csv, json, svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}))
      ->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
  nbspec::maybe_reexec_with_stable_blas(argc, argv);

  CLI::App app{"Non-backtracking spectra of stochastic block models"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* sample = app.add_subcommand("sample", "Sample a graph and write its edge list");
  add_graph_options(sample, cfg);

  auto* spectrum = app.add_subcommand("spectrum", "Spectra of H (and B under the dense cap)");
  add_graph_options(spectrum, cfg);

  auto* classify = app.add_subcommand("classify", "Outliers, insiders and bulk of the spectrum");
  add_graph_options(classify, cfg);
  classify->add_option("--seeds", cfg.seeds, "Number of consecutive seeds to sweep")
      ->check(CLI::PositiveNumber);
  classify->add_option("--tau", cfg.tau, "Annulus half-width")->capture_default_str();
  classify->add_option("--operator", cfg.op, "H or B")->check(CLI::IsMember({"H", "B"}));
  classify->add_flag("--estimate", cfg.estimate, "Estimate alpha and beta for community recovery");
  classify->add_flag("--all-negative", cfg.all_negative,
                     "Cluster on all negative Bethe Hessian eigenvectors");

  auto* verify = app.add_subcommand("verify", "Structural identities and bound checks");
  add_graph_options(verify, cfg);
  verify->add_option("--trials", cfg.trials,
                     "Random graphs per check; the QEP check runs four times as many")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--ks-max", cfg.ks_max, "Largest accepted KS distance")->capture_default_str();
  verify->add_flag("--inject-fault", cfg.inject_fault, "Perturb one spectrum to exercise failure paths");

  auto* bound = app.add_subcommand("bound", "QEP Bauer-Fike radii for (H0, H) or (K0, K)");
  add_graph_options(bound, cfg);
  bound->add_option("--pair", cfg.pair, "H0/H or K0/K")->check(CLI::IsMember({"H0/H", "K0/K"}));
  bound->add_flag("--classical", cfg.classical, "Also compute the classical Bauer-Fike radius");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  using Command = int (*)(const RunConfig&, std::ostream&);
  const std::map<CLI::App*, Command> commands{{sample, nbspec::cli::cmd_sample},
                                              {spectrum, nbspec::cli::cmd_spectrum},
                                              {classify, nbspec::cli::cmd_classify},
                                              {verify, nbspec::cli::cmd_verify},
                                              {bound, nbspec::cli::cmd_bound}};
  try {
    for (const auto& [sub, run] : commands) {
      if (sub->parsed()) return run(cfg, std::cout);
    }
  } catch (const nbspec::Error& e) {
    std::cerr << "nbspec: " << e.what() << "\n";
    return nbspec::is_input_error(e.code()) ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "nbspec: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
