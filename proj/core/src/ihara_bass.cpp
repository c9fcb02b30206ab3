#include <algorithm>
#include <cmath>

#include "nbspec/analysis.hpp"
#include "nbspec/error.hpp"

namespace nbspec {

IharaBassResult ihara_bass_check(const Graph& graph, std::size_t dense_cap, double tol) {
  IharaBassResult out;
  out.spectrum_b = eigs_general(build_B(graph, dense_cap).matrix);
  // H carries Jordan blocks at 0 for pendant paths and at 1 on unicyclic
  // components; B does not, its tree part is isolated exactly by balancing.
  const DenseRealMatrix h = build_H(graph).matrix;
  out.h_extended = h.rows() <= extended_precision_cap;
  out.spectrum_h = out.h_extended ? eigs_general_extended(h) : eigs_general(h);
  out.trivial_multiplicity = static_cast<std::ptrdiff_t>(graph.edge_count()) - graph.vertex_count();

  // (z^2 - 1)^(|E| - |V|): the trivial values join whichever side has the
  // nonnegative exponent after moving the factor across.
  Spectrum lhs = out.spectrum_b;
  Spectrum rhs = out.spectrum_h;
  Spectrum& padded = out.trivial_multiplicity >= 0 ? rhs : lhs;
  const auto extra = static_cast<std::size_t>(std::abs(out.trivial_multiplicity));
  for (std::size_t k = 0; k < extra; ++k) {
    padded.values.emplace_back(1.0, 0.0);
    padded.values.emplace_back(-1.0, 0.0);
  }
  const SpectrumMatch m = match_spectra(lhs, rhs, tol);
  out.max_gap = m.max_gap;
  out.match = m.max_gap <= tol;
  return out;
}

InclusionResult spectral_inclusion(const Spectrum& spec_h, const Graph& graph, double tol) {
  const int dmin = graph.min_degree();
  const int dmax = graph.max_degree();
  if (dmin < 2) throw Error(Errc::degree_too_small, "spectral inclusion needs minimum degree >= 2");
  const double complex_lo = std::sqrt(dmin - 1.0);
  const double complex_hi = std::sqrt(dmax - 1.0);
  const double real_hi = dmax - 1.0;

  InclusionResult out;
  for (Complex z : spec_h.values) {
    const double modulus = std::abs(z);
    const double slack = tol * std::max(1.0, modulus);
    double violation = 0.0;
    if (std::abs(z.imag()) <= slack) {
      violation = std::max(1.0 - modulus, modulus - real_hi);
    } else {
      violation = std::max(complex_lo - modulus, modulus - complex_hi);
    }
    if (violation > slack) {
      out.holds = false;
      out.worst_violation = std::max(out.worst_violation, violation);
    }
  }
  return out;
}

}  // namespace nbspec
