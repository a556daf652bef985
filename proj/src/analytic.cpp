#include "semirange/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "semirange/geometry.hpp"
#include "semirange/qrange.hpp"
#include "semirange/spectra.hpp"

namespace semirange {

namespace {

double q_arg(QValue q) { return q.modulus() > 0 ? std::arg(q.value()) : 0.0; }

std::string describe(const char* what, double lhs, const char* op, double rhs) {
  std::ostringstream os;
  os.precision(10);
  os << what << ": " << lhs << ' ' << op << ' ' << rhs;
  return os.str();
}

}  // namespace

EllipseSpec selfadjoint_ellipse(const PsdContext& ctx, const ComplexMatrix& t, QValue q) {
  if (!is_a_selfadjoint(ctx, t)) throw Error(ErrorKind::NotASelfAdjoint, "T is not A-self-adjoint");
  const auto spectrum = a_spectrum(ctx, t);
  if (spectrum.empty()) throw Error(ErrorKind::EmptyRange, "rank(A) = 0");
  double hi = spectrum.front().real(), lo = hi;
  for (const Complex l : spectrum) {
    hi = std::max(hi, l.real());
    lo = std::min(lo, l.real());
  }
  EllipseSpec e;
  e.focus1 = q.value() * hi;
  e.focus2 = q.value() * lo;
  e.center = 0.5 * (e.focus1 + e.focus2);
  e.semi_minor = 0.5 * q.complement() * (hi - lo);
  const double c = 0.5 * std::abs(e.focus1 - e.focus2);
  e.semi_major = std::sqrt(e.semi_minor * e.semi_minor + c * c);
  e.rotation = q_arg(q);
  e.lambda_max = hi;
  e.lambda_min = lo;
  return e;
}

std::vector<Complex> ellipse_region(const EllipseSpec& e, int n_points) {
  return geometry::convex_hull(geometry::ellipse_polygon(e.center, e.semi_major, e.semi_minor, e.rotation, n_points));
}

double square_zero_factor(QValue q) { return 0.5 * (1.0 + q.complement()); }

double prior_square_zero_factor(double q) {
  if (q < 0.0 || q >= 1.0) throw Error(ErrorKind::InvalidArgument, "q must lie in [0, 1)");
  return std::sqrt(1.0 - 0.75 * q * q + q * std::sqrt(1.0 - q * q));
}

Nilpotent2Record nilpotent2_check(const PsdContext& ctx, const ComplexMatrix& t, QValue q, const SampleConfig& cfg) {
  require_a_bounded(ctx, t);
  if (a_nilpotent_index(ctx, t, ctx.dim() + 1) != 2) {
    throw Error(ErrorKind::NotANilpotent2, "T is not A-nilpotent of index 2");
  }
  Nilpotent2Record rec;
  const RangeEstimate range = range_disk_union(ctx, t, q, cfg);
  rec.variation = support_variation(range);
  rec.is_disk = rec.variation <= ctx.tol().geo_tol;
  rec.radius = q_radius(ctx, t, q, cfg);
  const double norm = a_operator_norm(ctx, t);
  rec.bound = square_zero_factor(q) * norm;
  rec.bound_holds = rec.radius <= rec.bound + 10.0 * ctx.tol().opt_tol * std::max(1.0, norm);
  return rec;
}

ComplexMatrix square_zero_block(const ComplexMatrix& s) {
  require_square_finite(s, "S");
  const Eigen::Index n = s.rows();
  ComplexMatrix t = ComplexMatrix::Zero(2 * n, 2 * n);
  t.block(0, n, n, n) = s;
  return t;
}

ComplexMatrix index3_block(const ComplexMatrix& s1, const ComplexMatrix& s2) {
  require_square_finite(s1, "S1");
  require_square_finite(s2, "S2");
  if (s1.rows() != s2.rows()) throw Error(ErrorKind::DimensionMismatch, "S1 and S2 differ in size");
  const Eigen::Index n = s1.rows();
  ComplexMatrix t = ComplexMatrix::Zero(3 * n, 3 * n);
  t.block(0, n, n, n) = s1;
  t.block(n, 2 * n, n, n) = s2;
  return t;
}

double squarezero_exact_radius(const ComplexMatrix& s, double q) {
  require_square_finite(s, "S");
  if (!nearly_equal(s, s.adjoint(), 1e-12)) throw Error(ErrorKind::NotHermitian, "S is not Hermitian");
  if (!(q >= 0.0 && q <= 1.0)) throw Error(ErrorKind::InvalidArgument, "q must lie in [0, 1]");
  return square_zero_factor(QValue(q)) * spectral_norm(s);
}

double index3_bound(double norm_s1, double norm_s2, QValue q) {
  if (norm_s1 < 0 || norm_s2 < 0) throw Error(ErrorKind::InvalidArgument, "norms must be nonnegative");
  const double m = std::max(norm_s1, norm_s2);
  const double mod = q.modulus();
  if (mod <= std::numbers::sqrt2 / 2) return std::numbers::sqrt2 * m;
  return 0.5 * (std::numbers::sqrt2 + mod + q.complement()) * m;
}

BoundLedger bound_ledger(const PsdContext& ctx, const ComplexMatrix& t, QValue q, const SampleConfig& cfg,
                         std::optional<std::pair<double, double>> block_norms) {
  require_a_bounded(ctx, t);
  BoundLedger led;
  led.norm_a = a_operator_norm(ctx, t);
  led.slack = 10.0 * ctx.tol().opt_tol * std::max(1.0, led.norm_a);

  const RadiusResult wa = q_radius_detailed(ctx, t, QValue(1.0), cfg);
  led.w_a_estimate = wa.value;
  const std::vector<ComplexVector> seeds{wa.witness};
  led.measured = q.on_circle() && q.value() == Complex(1.0, 0.0) ? wa.value
                                                                  : q_radius_detailed(ctx, t, q, cfg, seeds).value;

  const double mod = q.modulus();
  led.lower_numerical_radius = mod * led.w_a_estimate;
  if (is_in_b_a(ctx, t)) {
    led.lower_half_norm = 0.5 * mod * led.norm_a;
    led.upper_norm = led.norm_a;
  }
  if (is_a_selfadjoint(ctx, t)) led.selfadjoint_lower = mod * led.norm_a;
  if (a_nilpotent_index(ctx, t, ctx.dim() + 1) == 2) {
    led.nilpotent2_upper = square_zero_factor(q) * led.norm_a;
    if (q.value().imag() == 0.0 && q.value().real() >= 0.0 && q.value().real() < 1.0) {
      led.prior_square_zero_upper = prior_square_zero_factor(q.value().real()) * led.norm_a;
    }
  }
  if (block_norms) led.index3_upper = index3_bound(block_norms->first, block_norms->second, q);

  auto lower = [&](const char* name, const std::optional<double>& v) {
    if (v && *v > led.measured + led.slack) led.violations.push_back(describe(name, *v, ">", led.measured));
  };
  auto upper = [&](const char* name, const std::optional<double>& v) {
    if (v && led.measured > *v + led.slack) led.violations.push_back(describe(name, led.measured, ">", *v));
  };
  lower("lower_numerical_radius", led.lower_numerical_radius);
  lower("lower_half_norm", led.lower_half_norm);
  lower("selfadjoint_lower", led.selfadjoint_lower);
  upper("upper_norm", led.upper_norm);
  upper("nilpotent2_upper", led.nilpotent2_upper);
  upper("prior_square_zero_upper", led.prior_square_zero_upper);
  upper("index3_upper", led.index3_upper);
  if (led.nilpotent2_upper && led.prior_square_zero_upper && *led.nilpotent2_upper > *led.prior_square_zero_upper + led.slack) {
    led.violations.push_back(describe("nilpotent2_upper vs prior_square_zero_upper", *led.nilpotent2_upper, ">",
                                      *led.prior_square_zero_upper));
  }
  return led;
}

std::vector<std::pair<int, double>> power_limit_check(const PsdContext& ctx, const ComplexMatrix& t, QValue q,
                                                      int n_max, const SampleConfig& cfg) {
  if (q.modulus() == 0.0) throw Error(ErrorKind::QZero, "the power limit needs q != 0");
  if (n_max < 1) throw Error(ErrorKind::InvalidArgument, "n_max must be positive");
  if (!is_in_b_a(ctx, t)) throw Error(ErrorKind::NotABounded, "T is not in B_A");
  std::vector<std::pair<int, double>> out;
  // w_{q,A} is homogeneous, so powers of T / ||T||_A keep the values bounded.
  const double s = a_operator_norm(ctx, t);
  if (s == 0.0) {
    for (int n = 1; n <= n_max; ++n) out.emplace_back(n, 0.0);
    return out;
  }
  const ComplexMatrix unit = t / s;
  ComplexMatrix power = unit;
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) power = power * unit;
    const double w = q_radius(ctx, power, q, cfg);
    out.emplace_back(n, s * std::pow(std::max(w, 0.0), 1.0 / n));
  }
  return out;
}

EquivalenceRecord unitary_equivalence_check(const PsdContext& ctx, const ComplexMatrix& t, QValue q,
                                            const ComplexMatrix& u, const SampleConfig& cfg) {
  require_a_bounded(ctx, t);
  const ComplexMatrix conjugated = u * t * sharp_adjoint(ctx, u);
  EquivalenceRecord rec;
  const double norm = a_operator_norm(ctx, t);
  rec.radius_budget = 10.0 * ctx.tol().opt_tol * std::max(1.0, norm);
  rec.hull_budget = ctx.tol().geo_tol * norm;
  rec.radius_diff = std::abs(q_radius(ctx, t, q, cfg) - q_radius(ctx, conjugated, q, cfg));
  rec.hull_hausdorff = hull_distance(range_disk_union(ctx, t, q, cfg), range_disk_union(ctx, conjugated, q, cfg));
  return rec;
}

EquivalenceRecord unitary_equivalence_check(const PsdContext& ctx, const ComplexMatrix& t, QValue q,
                                            std::uint64_t seed, const SampleConfig& cfg) {
  return unitary_equivalence_check(ctx, t, q, generate_a_unitary(ctx, seed), cfg);
}

}  // namespace semirange
