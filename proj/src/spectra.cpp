#include "semirange/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "semirange/reduction.hpp"

namespace semirange {

std::vector<Complex> sorted_eigenvalues(const ComplexMatrix& m) {
  std::vector<Complex> out;
  if (m.size() == 0) return out;
  Eigen::ComplexEigenSolver<ComplexMatrix> es(m, false);
  out.assign(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(out.begin(), out.end(), [](Complex l, Complex r) {
    return l.real() != r.real() ? l.real() < r.real() : l.imag() < r.imag();
  });
  return out;
}

std::vector<Complex> a_point_spectrum(const PsdContext& ctx, const ComplexMatrix& t) {
  require_a_bounded(ctx, t);
  const ComplexMatrix ur = ctx.range_basis();
  return sorted_eigenvalues(ur.adjoint() * t * ur);
}

std::vector<Complex> a_spectrum(const PsdContext& ctx, const ComplexMatrix& t) {
  return sorted_eigenvalues(build_tilde(ctx, t).matrix());
}

SpectrumReport a_spectral_radius(const PsdContext& ctx, const ComplexMatrix& t, int n_max) {
  if (n_max < 1) throw Error(ErrorKind::InvalidArgument, "n_max must be >= 1");
  SpectrumReport rep;
  rep.full = a_spectrum(ctx, t);
  for (Complex l : rep.full) rep.radius_exact = std::max(rep.radius_exact, std::abs(l));
  ComplexMatrix power = ComplexMatrix::Identity(ctx.dim(), ctx.dim());
  for (int k = 1; k <= n_max; ++k) {
    power = power * t;
    const double norm = a_operator_norm(ctx, power);
    rep.radius_limit_estimates.emplace_back(k, std::pow(norm, 1.0 / k));
  }
  return rep;
}

SpectrumReport spectrum_report(const PsdContext& ctx, const ComplexMatrix& t, int n_max) {
  SpectrumReport rep = a_spectral_radius(ctx, t, n_max);
  rep.point = a_point_spectrum(ctx, t);
  rep.approx = rep.full;
  return rep;
}

std::vector<Complex> cluster(const std::vector<Complex>& values, double radius) {
  std::vector<Complex> reps;
  for (Complex v : values) {
    const bool seen = std::any_of(reps.begin(), reps.end(), [&](Complex r) { return std::abs(r - v) <= radius; });
    if (!seen) reps.push_back(v);
  }
  return reps;
}

bool same_set(const std::vector<Complex>& lhs, const std::vector<Complex>& rhs, double radius) {
  auto covered = [radius](const std::vector<Complex>& from, const std::vector<Complex>& to) {
    return std::all_of(from.begin(), from.end(), [&](Complex v) {
      return std::any_of(to.begin(), to.end(), [&](Complex w) { return std::abs(v - w) <= radius; });
    });
  };
  return covered(lhs, rhs) && covered(rhs, lhs);
}

}  // namespace semirange
