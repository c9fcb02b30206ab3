#pragma once

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "nbspec/eig.hpp"
#include "nbspec/error.hpp"

#define EXPECT_ERRC(stmt, errc)                                   \
  do {                                                            \
    try {                                                         \
      (void)(stmt);                                               \
      ADD_FAILURE() << "expected " << nbspec::to_string(errc);    \
    } catch (const nbspec::Error& e_) {                           \
      EXPECT_EQ(e_.code(), errc) << e_.what();                    \
    }                                                             \
  } while (0)

namespace testutil {

inline nbspec::Spectrum spectrum_of(std::vector<std::complex<double>> values) {
  nbspec::Spectrum s;
  s.values = std::move(values);
  return s;
}

// Largest matched distance between two multisets.
inline double gap(const nbspec::Spectrum& a, const nbspec::Spectrum& b) {
  return nbspec::match_spectra(a, b, 1e-9).max_gap;
}

inline std::vector<std::complex<double>> repeat(std::complex<double> z, int k) {
  return std::vector<std::complex<double>>(static_cast<std::size_t>(k), z);
}

inline std::vector<std::complex<double>> concat(std::initializer_list<std::vector<std::complex<double>>> parts) {
  std::vector<std::complex<double>> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace testutil
