#include "semirange/cli/render.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>

#include "semirange/errors.hpp"

namespace semirange::cli {

namespace {

constexpr double kSize = 800.0;
constexpr double kMargin = 40.0;

std::string format(const char* fmt, double a, double b) {
  char buf[96];
  std::snprintf(buf, sizeof buf, fmt, a, b);
  return buf;
}

struct Frame {
  double cx = 0.0, cy = 0.0, scale = 1.0;

  double px(double x) const { return kSize / 2 + (x - cx) * scale; }
  double py(double y) const { return kSize / 2 - (y - cy) * scale; }
  std::string point(Complex z) const { return format("%.3f,%.3f", px(z.real()), py(z.imag())); }
};

Frame fit(const std::vector<std::span<const Complex>>& sets) {
  double lo_x = std::numeric_limits<double>::infinity(), hi_x = -lo_x;
  double lo_y = lo_x, hi_y = -lo_x;
  for (const auto& set : sets) {
    for (const Complex z : set) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) continue;
      lo_x = std::min(lo_x, z.real());
      hi_x = std::max(hi_x, z.real());
      lo_y = std::min(lo_y, z.imag());
      hi_y = std::max(hi_y, z.imag());
    }
  }
  Frame f;
  if (!std::isfinite(lo_x)) return f;
  f.cx = 0.5 * (lo_x + hi_x);
  f.cy = 0.5 * (lo_y + hi_y);
  const double extent = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  f.scale = (kSize - 2 * kMargin) / extent;
  if (hi_x - lo_x < 1e-9 && hi_y - lo_y < 1e-9) f.scale = 1.0;
  return f;
}

std::string points_attr(const Frame& f, std::span<const Complex> pts, bool close) {
  std::string s;
  for (const Complex z : pts) {
    if (!s.empty()) s += ' ';
    s += f.point(z);
  }
  if (close && !pts.empty()) s += ' ' + f.point(pts.front());
  return s;
}

}  // namespace

std::string render_csv(const RangeEstimate& range) {
  std::string out = "theta,support,boundary_re,boundary_im\n";
  char buf[160];
  for (size_t k = 0; k < range.angles.size(); ++k) {
    const Complex b = k < range.boundary.size() ? range.boundary[k] : Complex(0.0, 0.0);
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", range.angles[k], range.support[k], b.real(),
                  b.imag());
    out += buf;
  }
  return out;
}

std::string render_svg(const RangeEstimate& range, std::span<const Complex> markers) {
  const Frame f = fit({range.hull, range.boundary, markers});
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  out += "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n";

  const double ox = f.px(0.0), oy = f.py(0.0);
  if (ox >= 0 && ox <= kSize) {
    out += "  <line x1=" + format("\"%.3f\" y1=\"%.3f\"", ox, 0.0) + " x2=" + format("\"%.3f\" y2=\"%.3f\"", ox, kSize) +
           " stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  }
  if (oy >= 0 && oy <= kSize) {
    out += "  <line x1=" + format("\"%.3f\" y1=\"%.3f\"", 0.0, oy) + " x2=" + format("\"%.3f\" y2=\"%.3f\"", kSize, oy) +
           " stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  }
  if (!range.boundary.empty()) {
    out += "  <polyline id=\"envelope\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1\" stroke-dasharray=\"4 3\" "
           "points=\"" + points_attr(f, range.boundary, true) + "\"/>\n";
  }
  if (!range.hull.empty()) {
    out += "  <polyline id=\"hull\" fill=\"#1f77b4\" fill-opacity=\"0.15\" stroke=\"#1f77b4\" stroke-width=\"2\" "
           "points=\"" + points_attr(f, range.hull, true) + "\"/>\n";
  }
  for (const Complex m : markers) {
    out += "  <circle class=\"spectrum\" cx=" + format("\"%.3f\" cy=\"%.3f\"", f.px(m.real()), f.py(m.imag())) +
           " r=\"4\" fill=\"black\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw Error(ErrorKind::InvalidArgument, "cannot write " + tmp);
    os << content;
    if (!os) throw Error(ErrorKind::InvalidArgument, "write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace semirange::cli
