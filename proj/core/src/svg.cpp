#include "nbspec/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace nbspec {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string spectrum_svg(const Spectrum& spec, double circle_radius, const SvgOptions& opts) {
  double extent = std::isfinite(circle_radius) ? circle_radius : 0.0;
  for (Complex z : spec.values) extent = std::max({extent, std::abs(z.real()), std::abs(z.imag())});
  if (extent <= 0.0) extent = 1.0;
  extent *= 1.08;

  const double size = opts.size;
  const double margin = 24.0;
  const double scale = (size / 2.0 - margin) / extent;
  const double cx = size / 2.0;
  const double cy = size / 2.0;
  const auto px = [&](double re) { return cx + re * scale; };
  const auto py = [&](double im) { return cy - im * scale; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.size << "\" height=\"" << opts.size
      << "\" viewBox=\"0 0 " << opts.size << ' ' << opts.size << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << fmt(margin) << "\" y1=\"" << fmt(cy) << "\" x2=\"" << fmt(size - margin) << "\" y2=\""
      << fmt(cy) << "\" stroke=\"#999\" stroke-width=\"0.5\"/>\n";
  out << "<line x1=\"" << fmt(cx) << "\" y1=\"" << fmt(margin) << "\" x2=\"" << fmt(cx) << "\" y2=\""
      << fmt(size - margin) << "\" stroke=\"#999\" stroke-width=\"0.5\"/>\n";
  if (std::isfinite(circle_radius) && circle_radius > 0.0) {
    out << "<circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\"" << fmt(circle_radius * scale)
        << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1\"/>\n";
  }
  out << "<g fill=\"#1f77b4\">\n";
  for (Complex z : spec.values) {
    out << "<circle cx=\"" << fmt(px(z.real())) << "\" cy=\"" << fmt(py(z.imag())) << "\" r=\"1.5\"/>\n";
  }
  out << "</g>\n";
  if (!opts.title.empty()) {
    out << "<text x=\"" << fmt(margin) << "\" y=\"16\" font-family=\"sans-serif\" font-size=\"12\">"
        << escape(opts.title) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace nbspec
