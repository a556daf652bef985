#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "semirange/types.hpp"

namespace semirange {

struct SearchOptions {
  int max_iter = 500;
  double opt_tol = 1e-8;
  double initial_step = 0.5;
  double min_step = 1e-7;
};

struct SearchResult {
  ComplexVector u;
  double value = 0.0;
  int sweeps = 0;
};

/// Derivative-free maximization of f over the unit sphere of C^r.
///
/// Each sweep visits the 2r real coordinate directions (e_k and i e_k) projected
/// onto the tangent space at u, and runs a three-point trigonometric line search
/// along the great circle cos(t) u + sin(t) d, followed by a parabolic step.
/// The step shrinks when a sweep gains less than opt_tol.
template <class Objective>
SearchResult maximize_on_sphere(const Objective& f, ComplexVector u, const SearchOptions& opts) {
  const Eigen::Index r = u.size();
  u.normalize();
  double best = f(u);
  double step = opts.initial_step;
  int sweep = 0;
  ComplexVector d(r), trial(r);

  auto along = [&](double t) {
    trial = std::cos(t) * u + std::sin(t) * d;
    return f(trial);
  };

  for (; sweep < opts.max_iter; ++sweep) {
    const double start = best;
    bool long_step = false;
    for (Eigen::Index k = 0; k < 2 * r; ++k) {
      d.setZero();
      d(k % r) = k < r ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
      d -= u * u.dot(d);  // complex projection removes both u and i*u
      const double dn = d.norm();
      if (dn < 1e-8) continue;
      d /= dn;

      const double fp = along(step);
      const double fm = along(-step);
      double t_best = 0.0, f_best = best;
      if (fp > f_best) t_best = step, f_best = fp;
      if (fm > f_best) t_best = -step, f_best = fm;
      const double curvature = 2.0 * best - fp - fm;
      if (curvature > 0) {
        double t = step * (fp - fm) / (2.0 * curvature);
        t = std::clamp(t, -4.0 * step, 4.0 * step);
        if (t != 0.0) {
          const double ft = along(t);
          if (ft > f_best) t_best = t, f_best = ft;
        }
      }
      if (t_best != 0.0) {
        u = std::cos(t_best) * u + std::sin(t_best) * d;
        u.normalize();
        best = f_best;
        if (std::abs(t_best) >= step) long_step = true;
      }
    }
    const double gain = best - start;
    if (gain <= opts.opt_tol * std::max(1.0, std::abs(best))) {
      if (step <= opts.min_step) break;
      step *= 0.25;
    } else if (long_step) {
      step = std::min(step * 2.0, std::numbers::pi / 2);
    }
  }
  return {std::move(u), best, sweep};
}

/// Standard complex Gaussian vector normalized to the unit sphere.
inline ComplexVector random_unit(int r, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  ComplexVector u(r);
  do {
    for (int i = 0; i < r; ++i) u(i) = Complex(normal(rng), normal(rng));
  } while (u.norm() == 0.0);
  return u / u.norm();
}

}  // namespace semirange
