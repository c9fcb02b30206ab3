#include <algorithm>
#include <cmath>
#include <numbers>

#include "nbspec/analysis.hpp"
#include "nbspec/error.hpp"

namespace nbspec {

double semicircle_cdf(double x, double radius) {
  if (x <= -radius) return 0.0;
  if (x >= radius) return 1.0;
  const double r2 = radius * radius;
  return 0.5 + x * std::sqrt(r2 - x * x) / (std::numbers::pi * r2) +
         std::asin(x / radius) / std::numbers::pi;
}

double ks_distance(const std::vector<double>& sorted_sample, double radius) {
  const auto n = static_cast<double>(sorted_sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted_sample.size(); ++i) {
    const double f = semicircle_cdf(sorted_sample[i], radius);
    d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
  }
  return d;
}

EsdReport semicircle_ks(const Spectrum& spec, EsdMode mode, const DegreeStats& stats) {
  if (!(stats.alpha > 0.0)) throw Error(Errc::invalid_parameters, "semicircle scaling needs alpha > 0");
  if (spec.values.empty()) throw Error(Errc::bad_input, "empty spectrum");
  EsdReport out;
  out.radius = mode == EsdMode::adjacency ? 2.0 : 1.0;
  const double s = std::sqrt(stats.alpha);
  out.sample.reserve(spec.size());
  for (Complex z : spec.values) out.sample.push_back(z.real() / s);
  std::sort(out.sample.begin(), out.sample.end());
  out.ks_distance = ks_distance(out.sample, out.radius);
  return out;
}

}  // namespace nbspec
