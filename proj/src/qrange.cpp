#include "semirange/qrange.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "semirange/geometry.hpp"
#include "semirange/kernels.hpp"
#include "semirange/reduction.hpp"
#include "semirange/spectra.hpp"

namespace semirange {

const char* to_string(RangeMethod m) {
  switch (m) {
    case RangeMethod::disk_union: return "disk_union";
    case RangeMethod::pair_sampling: return "pair_sampling";
    case RangeMethod::q_collapse: return "q_collapse";
    case RangeMethod::empty: return "empty";
  }
  return "unknown";
}

void SampleConfig::validate() const {
  if (n_x < 1 || n_angles < 3 || n_starts < 1 || max_iter < 1 || n_refine < 0 || n_pairs < 1) {
    throw Error(ErrorKind::InvalidArgument, "sample configuration counts must be positive");
  }
}

namespace {

void require_unit(const PsdContext& ctx, const ComplexVector& x) {
  if (x.size() != ctx.dim()) throw Error(ErrorKind::DimensionMismatch, "vector dimension does not match A");
  const double norm = a_norm(ctx, x);
  if (std::abs(norm - 1.0) > 1e3 * ctx.tol().eq_tol) {
    throw Error(ErrorKind::NotUnitANorm, "||x||_A = " + std::to_string(norm) + ", expected 1");
  }
}

SearchOptions search_options(const PsdContext& ctx, const SampleConfig& cfg) {
  SearchOptions o;
  o.max_iter = cfg.max_iter;
  o.opt_tol = ctx.tol().opt_tol;
  return o;
}

// u^* F u = <Tx, x>_A for x = B u.
ComplexMatrix form_matrix(const PsdContext& ctx, const ComplexMatrix& t) {
  return ctx.sphere_map().adjoint() * ctx.a() * t * ctx.sphere_map();
}

// Top eigenvector of Re(e^{-i phi} F): maximizer of Re(e^{-i phi} <Tx,x>_A).
ComplexVector hermitian_part_top(const ComplexMatrix& form, double phi) {
  const Complex rot = std::polar(1.0, -phi);
  const ComplexMatrix h = 0.5 * (rot * form + std::conj(rot) * form.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  return es.eigenvectors().col(h.rows() - 1);
}

double length_scale(const PsdContext& ctx, const ComplexMatrix& t) {
  return std::max(a_operator_norm(ctx, t), std::numeric_limits<double>::min());
}

void finish_estimate(RangeEstimate& est, const SampleConfig& cfg, bool hull_from_disks) {
  est.angles = geometry::angle_grid(cfg.n_angles);
  const auto scan = kernels::scan_support(cfg.exec, est.disks, est.angles);
  est.support = scan.value;
  est.boundary = geometry::support_envelope(est.angles, est.support);
  std::vector<Complex> extreme;
  if (hull_from_disks) {
    extreme.reserve(est.disks.size());
    for (const auto& d : est.disks) extreme.push_back(d.center);
  } else {
    extreme.reserve(est.angles.size());
    for (size_t k = 0; k < est.angles.size(); ++k) {
      const Disk& d = est.disks[static_cast<size_t>(scan.argmax[k])];
      extreme.push_back(d.center + std::polar(d.radius, est.angles[k]));
    }
  }
  est.hull = geometry::convex_hull(extreme);
  est.radius_est = 0.0;
  for (const auto& d : est.disks) est.radius_est = std::max(est.radius_est, std::abs(d.center) + d.radius);
}

}  // namespace

ComplexVector compose_pair(const PsdContext& ctx, const ComplexVector& x, const ComplexVector& z, QValue q) {
  require_unit(ctx, x);
  require_unit(ctx, z);
  const double tol = 1e3 * ctx.tol().eq_tol;
  if (std::abs(semi_inner(ctx, x, z)) > tol) {
    throw Error(ErrorKind::InvalidArgument, "x and z are not A-orthogonal");
  }
  return std::conj(q.value()) * x + q.complement() * z;
}

std::pair<ComplexVector, ComplexVector> complete_pair(const PsdContext& ctx, const ComplexVector& x, QValue q,
                                                      std::uint64_t seed) {
  if (ctx.rank() < 2) {
    throw Error(ErrorKind::RankTooSmall, "rank(A) < 2: no unit vector is A-orthogonal to x");
  }
  require_unit(ctx, x);
  const ComplexVector u = ctx.embed_map() * x;
  std::mt19937_64 rng(mix_seed(seed, 0xc0de, 0));
  ComplexVector w;
  do {
    w = random_unit(ctx.rank(), rng);
    w -= u * u.dot(w);
  } while (w.norm() < 1e-6);
  const ComplexVector z = ctx.sphere_map() * (w / w.norm());
  return {compose_pair(ctx, x, z, q), z};
}

double alpha(const PsdContext& ctx, const ComplexMatrix& t, const ComplexVector& x) {
  require_unit(ctx, x);
  const ComplexVector tx = t * x;
  return a_norm(ctx, tx - semi_inner(ctx, tx, x) * x);
}

RangeEstimate range_disk_union(const PsdContext& ctx, const ComplexMatrix& t, QValue q, const SampleConfig& cfg) {
  cfg.validate();
  require_a_bounded(ctx, t);
  const int r = ctx.rank();
  if (r == 0 || (r == 1 && !q.on_circle())) {
    throw Error(ErrorKind::EmptyRange, "W_{q,A}(T) is empty: rank(A) = " + std::to_string(r) + " and |q| < 1");
  }

  RangeEstimate est;
  est.scale = length_scale(ctx, t);
  const FormEvaluator eval(ctx, t);

  // Pair sampling on the two-dimensional range space; the hull then comes
  // straight from the sampled points.
  if (r == 2 && !q.on_circle()) {
    est.method = RangeMethod::pair_sampling;
    const int bins = std::min(cfg.n_angles, 256);
    const auto values = kernels::adaptive_pair_values(cfg.exec, eval, q, std::max(cfg.n_pairs, 5 * bins), bins,
                                                      cfg.seed);
    for (const Complex v : geometry::convex_hull(values)) est.disks.push_back({v, 0.0});
    finish_estimate(est, cfg, true);
    return est;
  }

  est.method = q.on_circle() ? RangeMethod::q_collapse : RangeMethod::disk_union;
  const auto coords = kernels::sphere_samples(cfg.exec, r, cfg.n_x, cfg.seed);
  est.disks = kernels::evaluate_disks(cfg.exec, eval, q, coords);

  if (cfg.n_refine > 0) {
    // Locally optimize the supporting disk in each refinement direction, from
    // the best random base vector and from the numerical-range maximizer.
    const auto refine_angles = geometry::angle_grid(cfg.n_refine);
    const auto scan = kernels::scan_support(cfg.exec, est.disks, refine_angles);
    const ComplexMatrix form = form_matrix(ctx, t);
    const double q_arg = std::abs(q.value()) > 0 ? std::arg(q.value()) : 0.0;
    std::vector<kernels::SearchTask> tasks;
    tasks.reserve(2 * refine_angles.size());
    for (size_t k = 0; k < refine_angles.size(); ++k) {
      tasks.push_back({refine_angles[k], coords[static_cast<size_t>(scan.argmax[k])]});
      tasks.push_back({refine_angles[k], hermitian_part_top(form, refine_angles[k] - q_arg)});
    }
    const auto results = kernels::run_searches(cfg.exec, eval, q, tasks, search_options(ctx, cfg));
    for (const auto& res : results) est.disks.push_back(kernels::disk_at(eval, q, res.u));
  }
  finish_estimate(est, cfg, false);
  return est;
}

RadiusResult q_radius_detailed(const PsdContext& ctx, const ComplexMatrix& t, QValue q, const SampleConfig& cfg,
                               std::span<const ComplexVector> extra_starts) {
  cfg.validate();
  require_a_bounded(ctx, t);
  const int r = ctx.rank();
  if (r < 2 && !(q.on_circle() && r >= 1)) {
    throw Error(ErrorKind::RankTooSmall, "w_{q,A} needs rank(A) >= 2 (or |q| = 1 with rank(A) >= 1)");
  }
  const FormEvaluator eval(ctx, t);
  const auto pool = kernels::sphere_samples(cfg.exec, r, cfg.n_x, cfg.seed);
  std::vector<double> pool_value(pool.size());
  for (size_t i = 0; i < pool.size(); ++i) pool_value[i] = kernels::radius_objective(eval, q, pool[i]);

  RadiusResult out;
  std::vector<size_t> order(pool.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](size_t l, size_t rr) { return pool_value[l] > pool_value[rr]; });
  out.sampled_lower = pool_value[order[0]];

  // Starts: the best half of the random pool, fresh random points, the
  // maximizers of the rotated Hermitian parts, and any caller-supplied vectors.
  std::vector<kernels::SearchTask> tasks;
  const int from_pool = std::min<int>((cfg.n_starts + 1) / 2, static_cast<int>(pool.size()));
  for (int i = 0; i < from_pool; ++i) tasks.push_back({std::nan(""), pool[order[static_cast<size_t>(i)]]});
  for (int i = from_pool; i < cfg.n_starts; ++i) {
    tasks.push_back({std::nan(""), kernels::sphere_sample(r, mix_seed(cfg.seed, kernels::kStartStream, 0),
                                                          static_cast<std::uint64_t>(i))});
  }
  const ComplexMatrix form = form_matrix(ctx, t);
  for (int j = 0; j < 8; ++j) tasks.push_back({std::nan(""), hermitian_part_top(form, std::numbers::pi * j / 4)});
  for (const auto& x : extra_starts) {
    ComplexVector u = ctx.embed_map() * x;
    if (u.norm() > 0) tasks.push_back({std::nan(""), u / u.norm()});
  }

  const auto results = kernels::run_searches(cfg.exec, eval, q, tasks, search_options(ctx, cfg));
  size_t best = 0;
  for (size_t i = 1; i < results.size(); ++i)
    if (results[i].value > results[best].value) best = i;
  if (results[best].value >= out.sampled_lower) {
    out.value = results[best].value;
    out.witness = eval.lift(results[best].u);
  } else {
    out.value = out.sampled_lower;
    out.witness = eval.lift(pool[order[0]]);
  }
  return out;
}

double q_radius(const PsdContext& ctx, const ComplexMatrix& t, QValue q, const SampleConfig& cfg) {
  return q_radius_detailed(ctx, t, q, cfg).value;
}

std::vector<PairSample> oracle_pair_samples(const PsdContext& ctx, const ComplexMatrix& t, QValue q, int n,
                                            std::uint64_t seed, Execution exec) {
  require_a_bounded(ctx, t);
  if (ctx.rank() < 2) throw Error(ErrorKind::RankTooSmall, "pair sampling needs rank(A) >= 2");
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "sample count must be positive");
  return kernels::pair_samples(exec, FormEvaluator(ctx, t), q, n, seed);
}

std::vector<Complex> adaptive_oracle_values(const PsdContext& ctx, const ComplexMatrix& t, QValue q, int n,
                                            std::uint64_t seed, Execution exec, int n_bins) {
  require_a_bounded(ctx, t);
  if (ctx.rank() < 2) throw Error(ErrorKind::RankTooSmall, "pair sampling needs rank(A) >= 2");
  if (n < 1 || n_bins < 1) throw Error(ErrorKind::InvalidArgument, "sample counts must be positive");
  return kernels::adaptive_pair_values(exec, FormEvaluator(ctx, t), q, n, n_bins, seed);
}

double hull_distance(const RangeEstimate& lhs, const RangeEstimate& rhs) {
  return geometry::hausdorff(lhs.hull, rhs.hull);
}

double support_variation(const RangeEstimate& range) {
  const auto [lo, hi] = std::minmax_element(range.support.begin(), range.support.end());
  const double top = std::max(std::abs(*lo), std::abs(*hi));
  return top > 0 ? (*hi - *lo) / top : 0.0;
}

VerificationReport verify_inclusions(const PsdContext& ctx, const ComplexMatrix& t, QValue q, const SampleConfig& cfg) {
  VerificationReport rep;
  const RangeEstimate range = range_disk_union(ctx, t, q, cfg);
  const double slack = ctx.tol().geo_tol * range.scale;

  double worst = 0.0;
  for (const Complex l : a_spectrum(ctx, t)) {
    worst = std::max(worst, geometry::distance_to_convex(q.value() * l, range.hull));
  }
  rep.add("spectral_inclusion", "q sigma_A(T) in W_{q,A}(T)", worst, slack, "max distance of q*eig(T~) to hull");

  if (ctx.rank() >= 3 || q.on_circle()) {
    const RangeEstimate wa = range_disk_union(ctx, t, QValue(1.0), cfg);
    double far = 0.0;
    for (const Complex v : wa.hull) far = std::max(far, geometry::distance_to_convex(q.value() * v, range.hull));
    rep.add("qWA_inclusion", "q W_A(T) in W_{q,A}(T)", far, slack, "max distance of q*hull(W_A) to hull");
  } else {
    rep.skip("qWA_inclusion", "q W_A(T) in W_{q,A}(T)", "needs rank(A) >= 3");
  }

  const TildeOperator tilde = build_tilde(ctx, t);
  const PsdContext plain = build_context(ComplexMatrix::Identity(tilde.rank(), tilde.rank()), ctx.tol());
  const RangeEstimate reduced = range_disk_union(plain, tilde.matrix(), q, cfg);
  rep.add("reduced_range_equality", "W_{q,A}(T) = W_q(T~)", hull_distance(range, reduced), slack,
          "Hausdorff distance between hulls");
  return rep;
}

}  // namespace semirange
