#pragma once

#include <span>
#include <vector>

#include "semirange/types.hpp"

namespace semirange::geometry {

/// Uniform grid theta_k = 2 pi k / n, k = 0..n-1.
std::vector<double> angle_grid(int n);

/// Counter-clockwise convex hull (Andrew's monotone chain); collinear points
/// dropped. Returns 1 or 2 points for degenerate input.
std::vector<Complex> convex_hull(std::span<const Complex> points);

/// h(theta) = max_p Re(e^{-i theta} p).
double support(std::span<const Complex> points, double theta);
std::vector<double> support(std::span<const Complex> points, std::span<const double> angles);

/// Intersections of consecutive support lines Re(e^{-i theta_k} z) = h_k.
/// The polygon circumscribes the set whose support values are given.
std::vector<Complex> support_envelope(std::span<const double> angles, std::span<const double> values);

/// Distance from p to the region bounded by a convex CCW polygon (0 inside).
double distance_to_convex(Complex p, std::span<const Complex> hull);

/// Hausdorff distance between two convex regions given by CCW hull polygons.
double hausdorff(std::span<const Complex> lhs, std::span<const Complex> rhs);

/// Points c + r e^{it} sampled on a closed ellipse boundary.
std::vector<Complex> ellipse_polygon(Complex center, double semi_major, double semi_minor, double rotation,
                                     int n_points);

bool point_in_convex(Complex p, std::span<const Complex> hull, double slack);

}  // namespace semirange::geometry
