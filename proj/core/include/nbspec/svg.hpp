#pragma once

#include <string>

#include "nbspec/eig.hpp"

namespace nbspec {

struct SvgOptions {
  int size = 640;  // square canvas, pixels
  std::string title;
};

/// Scatter plot of a spectrum in the complex plane with the circle of the
/// given radius centred at the origin.
std::string spectrum_svg(const Spectrum& spec, double circle_radius, const SvgOptions& opts = {});

}  // namespace nbspec
