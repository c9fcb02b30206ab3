#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "nbspec/eig.hpp"
#include "nbspec/error.hpp"

namespace nbspec {

namespace {

constexpr std::size_t optimal_assignment_limit = 1000;

std::vector<std::size_t> sorted_order(const std::vector<Complex>& v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return v[a].real() != v[b].real() ? v[a].real() < v[b].real() : v[a].imag() < v[b].imag();
  });
  return idx;
}

double max_gap_of(const std::vector<Complex>& lhs, const std::vector<Complex>& rhs,
                  const std::vector<std::size_t>& assignment) {
  double gap = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i) gap = std::max(gap, std::abs(lhs[i] - rhs[assignment[i]]));
  return gap;
}

std::vector<std::size_t> greedy(const std::vector<Complex>& lhs, const std::vector<Complex>& rhs) {
  const std::size_t m = lhs.size();
  std::vector<std::size_t> assignment(m, 0);
  std::vector<char> used(m, 0);
  for (std::size_t i : sorted_order(lhs)) {
    std::size_t best = m;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < m; ++j) {
      if (used[j]) continue;
      const double d = std::abs(lhs[i] - rhs[j]);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    used[best] = 1;
    assignment[i] = best;
  }
  return assignment;
}

// Hungarian method with potentials, O(m^3).
std::vector<std::size_t> optimal(const std::vector<Complex>& lhs, const std::vector<Complex>& rhs) {
  const std::size_t m = lhs.size();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(m + 1, 0.0), v(m + 1, 0.0), minv(m + 1);
  std::vector<std::size_t> p(m + 1, 0), way(m + 1, 0);
  std::vector<char> used(m + 1);
  for (std::size_t i = 1; i <= m; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cur = std::abs(lhs[i0 - 1] - rhs[j - 1]) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> assignment(m, 0);
  for (std::size_t j = 1; j <= m; ++j) assignment[p[j] - 1] = j - 1;
  return assignment;
}

}  // namespace

SpectrumMatch match_spectra(const Spectrum& lhs, const Spectrum& rhs, double tol) {
  if (lhs.size() != rhs.size()) {
    throw Error(Errc::invalid_parameters, "spectra differ in cardinality: " +
                                              std::to_string(lhs.size()) + " vs " +
                                              std::to_string(rhs.size()));
  }
  SpectrumMatch out;
  out.assignment = greedy(lhs.values, rhs.values);
  out.max_gap = max_gap_of(lhs.values, rhs.values, out.assignment);
  if (out.max_gap > tol && lhs.size() <= optimal_assignment_limit) {
    auto alt = optimal(lhs.values, rhs.values);
    const double alt_gap = max_gap_of(lhs.values, rhs.values, alt);
    if (alt_gap < out.max_gap) {
      out.assignment = std::move(alt);
      out.max_gap = alt_gap;
      out.optimal_used = true;
    }
  }
  return out;
}

}  // namespace nbspec
