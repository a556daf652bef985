#include "semirange/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace semirange::geometry {

namespace {

double cross(Complex o, Complex a, Complex b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

double distance_to_segment(Complex p, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  const double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

}  // namespace

std::vector<double> angle_grid(int n) {
  std::vector<double> out(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) out[k] = 2.0 * std::numbers::pi * k / n;
  return out;
}

std::vector<Complex> convex_hull(std::span<const Complex> points) {
  std::vector<Complex> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](Complex l, Complex r) {
    return l.real() != r.real() ? l.real() < r.real() : l.imag() < r.imag();
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;

  std::vector<Complex> hull(2 * pts.size());
  size_t k = 0;
  for (const Complex& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

double support(std::span<const Complex> points, double theta) {
  const Complex rot = std::polar(1.0, -theta);
  double best = -std::numeric_limits<double>::infinity();
  for (const Complex& p : points) best = std::max(best, (rot * p).real());
  return best;
}

std::vector<double> support(std::span<const Complex> points, std::span<const double> angles) {
  std::vector<double> out;
  out.reserve(angles.size());
  for (double a : angles) out.push_back(support(points, a));
  return out;
}

std::vector<Complex> support_envelope(std::span<const double> angles, std::span<const double> values) {
  const size_t n = angles.size();
  std::vector<Complex> out;
  out.reserve(n);
  for (size_t k = 0; k < n; ++k) {
    const size_t j = (k + 1) % n;
    const double c1 = std::cos(angles[k]), s1 = std::sin(angles[k]);
    const double c2 = std::cos(angles[j]), s2 = std::sin(angles[j]);
    const double det = c1 * s2 - s1 * c2;
    if (std::abs(det) < 1e-14) {
      out.emplace_back(values[k] * c1, values[k] * s1);
      continue;
    }
    const double x = (values[k] * s2 - values[j] * s1) / det;
    const double y = (c1 * values[j] - c2 * values[k]) / det;
    out.emplace_back(x, y);
  }
  return out;
}

bool point_in_convex(Complex p, std::span<const Complex> hull, double slack) {
  return distance_to_convex(p, hull) <= slack;
}

double distance_to_convex(Complex p, std::span<const Complex> hull) {
  if (hull.empty()) return std::numeric_limits<double>::infinity();
  if (hull.size() == 1) return std::abs(p - hull[0]);
  if (hull.size() == 2) return distance_to_segment(p, hull[0], hull[1]);
  bool inside = true;
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < hull.size(); ++i) {
    const Complex a = hull[i], b = hull[(i + 1) % hull.size()];
    if (cross(a, b, p) < 0) inside = false;
    best = std::min(best, distance_to_segment(p, a, b));
  }
  return inside ? 0.0 : best;
}

double hausdorff(std::span<const Complex> lhs, std::span<const Complex> rhs) {
  // For convex regions the farthest point of one from the other is a vertex.
  double d = 0.0;
  for (const Complex& p : lhs) d = std::max(d, distance_to_convex(p, rhs));
  for (const Complex& p : rhs) d = std::max(d, distance_to_convex(p, lhs));
  return d;
}

std::vector<Complex> ellipse_polygon(Complex center, double semi_major, double semi_minor, double rotation,
                                     int n_points) {
  std::vector<Complex> out;
  out.reserve(static_cast<size_t>(n_points));
  const Complex rot = std::polar(1.0, rotation);
  for (int k = 0; k < n_points; ++k) {
    const double t = 2.0 * std::numbers::pi * k / n_points;
    out.push_back(center + rot * Complex(semi_major * std::cos(t), semi_minor * std::sin(t)));
  }
  return out;
}

}  // namespace semirange::geometry
