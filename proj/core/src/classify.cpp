#include <algorithm>
#include <cmath>
#include <limits>

#include "nbspec/analysis.hpp"
#include "nbspec/error.hpp"

namespace nbspec {

namespace {

struct Target {
  const char* role;
  double location;
};

// Assigns distinct candidates to targets minimizing the total gap; leftover
// candidates are kept with role "unmatched" against their nearest target.
std::vector<IsolatedEigenvalue> assign(const std::vector<Complex>& candidates,
                                       const std::vector<Target>& targets) {
  std::vector<IsolatedEigenvalue> out;
  if (candidates.empty()) return out;
  const auto gap = [&](std::size_t c, std::size_t t) {
    return std::abs(candidates[c].real() - targets[t].location);
  };

  std::vector<std::size_t> chosen(targets.size(), candidates.size());  // target -> candidate
  double best = std::numeric_limits<double>::infinity();
  const std::size_t nc = candidates.size();
  if (targets.size() == 1) {
    for (std::size_t c = 0; c < nc; ++c) {
      if (gap(c, 0) < best) {
        best = gap(c, 0);
        chosen[0] = c;
      }
    }
  } else {
    // two targets: either both matched, or a single candidate for the nearer one
    if (nc == 1) {
      chosen[gap(0, 0) <= gap(0, 1) ? 0 : 1] = 0;
    } else {
      for (std::size_t c0 = 0; c0 < nc; ++c0) {
        for (std::size_t c1 = 0; c1 < nc; ++c1) {
          if (c0 == c1) continue;
          const double total = gap(c0, 0) + gap(c1, 1);
          if (total < best) {
            best = total;
            chosen = {c0, c1};
          }
        }
      }
    }
  }

  std::vector<char> used(nc, 0);
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const std::size_t c = chosen[t];
    if (c == nc) continue;
    used[c] = 1;
    out.push_back({targets[t].role, candidates[c], targets[t].location, gap(c, t)});
  }
  for (std::size_t c = 0; c < nc; ++c) {
    if (used[c]) continue;
    std::size_t t_best = 0;
    for (std::size_t t = 1; t < targets.size(); ++t) {
      if (gap(c, t) < gap(c, t_best)) t_best = t;
    }
    out.push_back({"unmatched", candidates[c], targets[t_best].location, gap(c, t_best)});
  }
  return out;
}

double quantile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0.0;
  const auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(sorted.size())));
  return sorted[std::min(sorted.size() - 1, rank == 0 ? 0 : rank - 1)];
}

}  // namespace

const IsolatedEigenvalue* ClassificationReport::find(const std::string& role) const {
  for (const auto* list : {&outliers, &insiders}) {
    for (const auto& e : *list) {
      if (e.role == role) return &e;
    }
  }
  return nullptr;
}

ClassificationReport classify_spectrum(const Spectrum& spec, const DegreeStats& stats,
                                       const ClassifyOptions& opts) {
  if (!(stats.alpha > 1.0)) throw Error(Errc::invalid_parameters, "classification needs alpha > 1");
  if (!(opts.tau > 0.0 && opts.tau < 1.0)) throw Error(Errc::invalid_parameters, "tau must lie in (0, 1)");

  ClassificationReport report;
  report.alpha = stats.alpha;
  report.beta = stats.beta;
  report.gamma = stats.gamma;
  report.two_blocks = stats.has_two_blocks();
  report.tau = opts.tau;
  report.circle_radius = std::sqrt(stats.gamma);
  report.outlier_gap_scale = std::pow(stats.alpha, 0.75);
  report.trivial_multiplicity = opts.trivial_multiplicity;
  report.total = spec.size();
  report.bulk_band = opts.bulk_band * std::sqrt(stats.alpha);

  const double imag_tol = opts.real_tolerance * std::sqrt(stats.alpha);
  const double outer = (1.0 + opts.tau) * report.circle_radius;
  const double inner = (1.0 - opts.tau) * report.circle_radius;

  std::vector<Complex> outer_candidates;
  std::vector<Complex> inner_candidates;
  for (Complex z : spec.values) {
    const bool real = std::abs(z.imag()) <= imag_tol;
    const double modulus = std::abs(z);
    if (real && modulus > outer) {
      outer_candidates.push_back(z);
    } else if (real && modulus < inner) {
      inner_candidates.push_back(z);
    } else {
      report.bulk.push_back({z, std::abs(modulus - report.circle_radius)});
    }
  }
  report.outlier_candidates = outer_candidates.size();
  report.insider_candidates = inner_candidates.size();

  std::vector<Target> outer_targets{{"lambda1", stats.alpha}};
  std::vector<Target> inner_targets{{"xi1", 1.0}};
  if (report.two_blocks) {
    outer_targets.push_back({"lambda2", stats.beta});
    inner_targets.push_back({"xi2", stats.alpha / stats.beta});
  }
  report.expected_outliers = outer_targets.size();
  report.expected_insiders = inner_targets.size();
  report.outliers = assign(outer_candidates, outer_targets);
  report.insiders = assign(inner_candidates, inner_targets);
  report.ambiguous = report.outlier_candidates != report.expected_outliers ||
                     report.insider_candidates != report.expected_insiders;

  std::vector<double> distances;
  distances.reserve(report.bulk.size());
  std::size_t within = 0;
  for (const auto& b : report.bulk) {
    distances.push_back(b.distance);
    within += b.distance <= report.bulk_band;
  }
  std::sort(distances.begin(), distances.end());
  if (!distances.empty()) {
    report.max_bulk_distance = distances.back();
    report.bulk_quantile_50 = quantile(distances, 0.50);
    report.bulk_quantile_90 = quantile(distances, 0.90);
    report.bulk_quantile_99 = quantile(distances, 0.99);
    report.bulk_fraction_within_band =
        static_cast<double>(within) / static_cast<double>(distances.size());
  }
  return report;
}

Spectrum remove_trivial(const Spectrum& spec_b, std::size_t multiplicity) {
  if (2 * multiplicity > spec_b.size()) {
    throw Error(Errc::invalid_parameters, "more trivial values requested than eigenvalues present");
  }
  std::vector<Complex> remaining = spec_b.values;
  for (const double target : {1.0, -1.0}) {
    for (std::size_t k = 0; k < multiplicity; ++k) {
      auto it = std::min_element(remaining.begin(), remaining.end(), [&](Complex a, Complex b) {
        return std::abs(a - target) < std::abs(b - target);
      });
      remaining.erase(it);
    }
  }
  Spectrum out = spec_b;
  out.values = std::move(remaining);
  return out;
}

}  // namespace nbspec
