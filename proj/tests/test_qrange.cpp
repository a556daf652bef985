#include <doctest.h>

#include <cmath>
#include <numbers>

#include "semirange/geometry.hpp"
#include "semirange/qrange.hpp"
#include "semirange/reduction.hpp"
#include "support/instances.hpp"

using namespace semirange;
using testing_support::diag;

namespace {

ComplexMatrix jordan(int n) {
  ComplexMatrix t = ComplexMatrix::Zero(n, n);
  t(0, 1) = 1.0;
  return t;
}

SampleConfig quick(std::uint64_t seed = 1) {
  SampleConfig cfg;
  cfg.n_x = 1024;
  cfg.n_angles = 360;
  cfg.n_starts = 16;
  cfg.n_refine = 90;
  cfg.n_pairs = 10000;
  cfg.seed = seed;
  return cfg;
}

int error_kind(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return static_cast<int>(e.kind());
  }
  return -1;
}

}  // namespace

TEST_CASE("complete_pair examples") {
  const PsdContext id3 = build_context(ComplexMatrix::Identity(3, 3));
  const ComplexVector e1 = ComplexVector::Unit(3, 0);
  const auto [y0, z0] = complete_pair(id3, e1, QValue(0.0), 5);
  CHECK((y0 - z0).norm() < 1e-14);
  CHECK(std::abs(y0.dot(e1)) < 1e-14);

  const PsdContext a110 = build_context(diag({1, 1, 0}));
  const QValue q(0.6);
  const auto [y, z] = complete_pair(a110, e1, q, 3);
  CHECK(a_norm(a110, y) == doctest::Approx(1.0));
  CHECK(std::abs(semi_inner(a110, e1, y) - 0.6) < 1e-12);
  CHECK(std::abs(semi_inner(a110, e1, z)) < 1e-12);
  CHECK(a_norm(a110, z) == doctest::Approx(1.0));
  CHECK((y - compose_pair(a110, e1, z, q)).norm() < 1e-14);
  // With z = e2 the construction gives (0.6, 0.8, 0).
  const ComplexVector yz = compose_pair(a110, e1, ComplexVector::Unit(3, 1), q);
  CHECK((yz - Eigen::Vector3cd(0.6, 0.8, 0)).norm() < 1e-14);

  const PsdContext a100 = build_context(diag({1, 0, 0}));
  const ComplexVector x = Eigen::Vector3cd(Complex(0, 1), 1, 0);
  CHECK(error_kind([&] { complete_pair(a100, x, QValue(0.5), 1); }) == static_cast<int>(ErrorKind::RankTooSmall));
  CHECK(error_kind([&] { complete_pair(id3, 2.0 * e1, q, 1); }) == static_cast<int>(ErrorKind::NotUnitANorm));
}

TEST_CASE("alpha examples") {
  const PsdContext id2 = build_context(ComplexMatrix::Identity(2, 2));
  std::mt19937_64 rng(3);
  for (int k = 0; k < 5; ++k) {
    ComplexVector x = testing_support::gaussian(2, 1, rng);
    x.normalize();
    CHECK(alpha(id2, ComplexMatrix::Identity(2, 2), x) < 1e-15);
  }
  CHECK(alpha(id2, jordan(2), ComplexVector::Unit(2, 1)) == doctest::Approx(1.0));
  const ComplexVector d = Eigen::Vector2cd(1, 1) / std::sqrt(2.0);
  CHECK(alpha(id2, diag({1, -1}), d) == doctest::Approx(1.0));
  CHECK_THROWS_AS(alpha(id2, jordan(2), Eigen::Vector2cd(1, 1)), Error);
}

TEST_CASE("range of the identity is the point q") {
  const PsdContext ctx = build_context(testing_support::random_psd(4, 3, 2));
  const ComplexMatrix t = ComplexMatrix::Identity(4, 4);
  const RangeEstimate r = range_disk_union(ctx, t, QValue(0.5), quick());
  CHECK(r.method == RangeMethod::disk_union);
  for (const Disk& d : r.disks) {
    CHECK(std::abs(d.center - 0.5) < 1e-12);
    CHECK(d.radius < 1e-6);
  }
  for (const Complex z : r.hull) CHECK(std::abs(z - 0.5) < 1e-6);
  CHECK(r.radius_est == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("rank-2 range of diag(1,-1) is the expected ellipse") {
  const PsdContext id2 = build_context(ComplexMatrix::Identity(2, 2));
  const RangeEstimate r = range_disk_union(id2, diag({1, -1}), QValue(0.5), quick());
  CHECK(r.method == RangeMethod::pair_sampling);
  const double tol = 0.05;
  CHECK(geometry::support(r.hull, 0.0) == doctest::Approx(1.0).epsilon(tol));
  CHECK(geometry::support(r.hull, std::numbers::pi) == doctest::Approx(1.0).epsilon(tol));
  CHECK(geometry::support(r.hull, std::numbers::pi / 2) == doctest::Approx(std::sqrt(0.75)).epsilon(tol));
  // Inner estimate: never beyond the true ellipse.
  for (const Complex z : r.hull) {
    const double e = std::norm(z.real()) + std::norm(z.imag()) / 0.75;
    CHECK(e <= 1.0 + 1e-9);
  }
}

TEST_CASE("nilpotent range on a degenerate space is a centred disk") {
  const PsdContext a110 = build_context(diag({1, 1, 0}));
  const RangeEstimate r = range_disk_union(a110, jordan(3), QValue(0.6), quick());
  CHECK(support_variation(r) <= 0.05);
  CHECK(r.radius_est <= 0.9 + 1e-9);
  CHECK(r.radius_est >= 0.85);
}

TEST_CASE("range dispatch and errors") {
  const PsdContext a100 = build_context(diag({1, 0, 0}));
  const ComplexMatrix t = diag({2, 0, 0});
  CHECK(error_kind([&] { range_disk_union(a100, t, QValue(0.3), quick()); }) ==
        static_cast<int>(ErrorKind::EmptyRange));
  const RangeEstimate collapsed = range_disk_union(a100, t, QValue(0.0, 1.0), quick());
  CHECK(collapsed.method == RangeMethod::q_collapse);
  for (const Complex z : collapsed.hull) CHECK(std::abs(z - Complex(0, 2)) < 1e-12);

  ComplexMatrix bad = jordan(3);
  bad(2, 2) = 2.0;
  CHECK(error_kind([&] { range_disk_union(a100, bad, QValue(0.0, 1.0), quick()); }) ==
        static_cast<int>(ErrorKind::NotABounded));

  SampleConfig cfg = quick();
  cfg.n_x = 0;
  CHECK_THROWS_AS(range_disk_union(a100, t, QValue(1.0), cfg), Error);
}

TEST_CASE("unit-modulus q gives q times the A-numerical range") {
  const PsdContext ctx = build_context(testing_support::random_psd(4, 3, 8));
  const ComplexMatrix t = testing_support::random_bounded(ctx, 9);
  const QValue q(std::polar(1.0, 0.7));
  const RangeEstimate r = range_disk_union(ctx, t, q, quick());
  CHECK(r.method == RangeMethod::q_collapse);
  for (const Disk& d : r.disks) CHECK(d.radius == 0.0);
  // Every sampled center is q<Tx,x>_A, checked against an oracle pair sample at q=1.
  const auto oracle = oracle_pair_samples(ctx, t, QValue(1.0), 2000, 4);
  for (const auto& s : oracle) CHECK(geometry::distance_to_convex(q.value() * s.value, r.hull) <= 0.05 * r.scale);
}

TEST_CASE("q_radius examples") {
  const PsdContext id2 = build_context(ComplexMatrix::Identity(2, 2));
  CHECK(q_radius(id2, jordan(2), QValue(0.6), quick()) == doctest::Approx(0.9).epsilon(1e-6));
  CHECK(q_radius(id2, jordan(2), QValue(1.0), quick()) == doctest::Approx(0.5).epsilon(1e-6));
  const PsdContext id3 = build_context(ComplexMatrix::Identity(3, 3));
  CHECK(q_radius(id3, ComplexMatrix::Identity(3, 3), QValue(0.5), quick()) == doctest::Approx(0.5).epsilon(1e-9));

  const PsdContext a100 = build_context(diag({1, 0, 0}));
  CHECK(error_kind([&] { q_radius(a100, diag({1, 0, 0}), QValue(0.5), quick()); }) ==
        static_cast<int>(ErrorKind::RankTooSmall));
  CHECK(q_radius(a100, diag({3, 0, 0}), QValue(0.0, -1.0), quick()) == doctest::Approx(3.0));
}

TEST_CASE("q_radius lies between the sampled bound and the A-norm") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const PsdContext ctx = build_context(testing_support::random_psd(5, 3 + static_cast<int>(seed % 3), seed));
    const ComplexMatrix t = testing_support::random_bounded(ctx, seed + 40);
    const QValue q = testing_support::random_q(seed + 41);
    const RadiusResult res = q_radius_detailed(ctx, t, q, quick(seed));
    CAPTURE(seed);
    CHECK(res.value >= res.sampled_lower);
    CHECK(res.value <= a_operator_norm(ctx, t) + 1e-8);
    CHECK(a_norm(ctx, res.witness) == doctest::Approx(1.0).epsilon(1e-9));
    // The witness attains the value.
    const ComplexVector tx = t * res.witness;
    const double v = q.modulus() * std::abs(semi_inner(ctx, tx, res.witness)) + q.complement() * alpha(ctx, t, res.witness);
    CHECK(v == doctest::Approx(res.value).epsilon(1e-9));
    // No oracle element exceeds it.
    for (const auto& s : oracle_pair_samples(ctx, t, q, 2000, seed)) CHECK(std::abs(s.value) <= res.value + 1e-9);
  }
}

TEST_CASE("oracle samples") {
  const PsdContext id3 = build_context(ComplexMatrix::Identity(3, 3));
  for (const auto& s : oracle_pair_samples(id3, ComplexMatrix::Identity(3, 3), QValue(0.5), 100, 2))
    CHECK(std::abs(s.value - 0.5) < 1e-12);

  const PsdContext id2 = build_context(ComplexMatrix::Identity(2, 2));
  double top = 0;
  for (const auto& s : oracle_pair_samples(id2, jordan(2), QValue(0.6), 100000, 7)) top = std::max(top, std::abs(s.value));
  CHECK(top <= 0.9 + 1e-12);
  CHECK(top >= 0.89);

  const auto serial = oracle_pair_samples(id2, jordan(2), QValue(0.6), 500, 7, Execution::serial);
  const auto parallel = oracle_pair_samples(id2, jordan(2), QValue(0.6), 500, 7, Execution::parallel);
  for (size_t i = 0; i < serial.size(); ++i) CHECK(serial[i].value == parallel[i].value);
}

TEST_CASE("oracle values lie inside the inflated disk-union hull") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const PsdContext ctx = build_context(testing_support::random_psd(5, 3 + static_cast<int>(seed % 2), seed));
    const ComplexMatrix t = testing_support::random_bounded(ctx, seed + 60);
    const QValue q = testing_support::random_q(seed + 61);
    const RangeEstimate r = range_disk_union(ctx, t, q, quick(seed));
    CAPTURE(seed);
    double worst = 0;
    for (Complex v : adaptive_oracle_values(ctx, t, q, 5000, seed + 1))
      worst = std::max(worst, geometry::distance_to_convex(v, r.hull));
    CHECK(worst <= 0.05 * r.scale);
  }
}

TEST_CASE("larger samples grow the union") {
  const PsdContext ctx = build_context(testing_support::random_psd(5, 4, 21));
  const ComplexMatrix t = testing_support::random_bounded(ctx, 22);
  SampleConfig small = quick(3);
  small.n_refine = 0;
  small.n_x = 200;
  SampleConfig large = small;
  large.n_x = 2000;
  const RangeEstimate a = range_disk_union(ctx, t, QValue(0.4, 0.2), small);
  const RangeEstimate b = range_disk_union(ctx, t, QValue(0.4, 0.2), large);
  for (size_t k = 0; k < a.support.size(); ++k) CHECK(b.support[k] >= a.support[k]);
  // Hulls are built from grid extreme points, so containment holds up to the grid.
  for (const Complex z : a.hull) CHECK(geometry::distance_to_convex(z, b.hull) <= 1e-3 * b.scale);
}

TEST_CASE("q = 0 gives a centred disk") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const PsdContext ctx = build_context(testing_support::random_psd(4, 3, seed));
    const ComplexMatrix t = testing_support::random_bounded(ctx, seed);
    CHECK(support_variation(range_disk_union(ctx, t, QValue(0.0), quick(seed))) <= 0.05);
  }
}

TEST_CASE("rotating T rotates the range") {
  const PsdContext ctx = build_context(testing_support::random_psd(5, 4, 31));
  const ComplexMatrix t = testing_support::random_bounded(ctx, 32);
  const SampleConfig cfg = quick(5);
  const int shift = 45;
  const double phi = 2.0 * std::numbers::pi * shift / cfg.n_angles;
  const QValue q(0.5, -0.3);
  const RangeEstimate base = range_disk_union(ctx, t, q, cfg);
  const RangeEstimate rot = range_disk_union(ctx, std::polar(1.0, phi) * t, q, cfg);
  const int m = cfg.n_angles;
  for (int k = 0; k < m; ++k) CHECK(rot.support[(k + shift) % m] == doctest::Approx(base.support[k]).epsilon(1e-3));
}

TEST_CASE("verify_inclusions") {
  SUBCASE("identity A compares the range with itself") {
    const PsdContext id = build_context(ComplexMatrix::Identity(3, 3));
    std::mt19937_64 rng(4);
    const VerificationReport rep = verify_inclusions(id, testing_support::gaussian(3, 3, rng), QValue(0.5), quick());
    CHECK(rep.all_passed());
    for (const auto& c : rep.checks)
      if (c.name == "reduction_equality") CHECK(c.measured < 1e-9);
  }
  SUBCASE("scalar operators have a one-point range") {
    const PsdContext ctx = build_context(testing_support::random_psd(4, 3, 6));
    const Complex c(0.3, 0.4);
    const RangeEstimate r = range_disk_union(ctx, c * ComplexMatrix::Identity(4, 4), QValue(0.7), quick());
    for (const Complex z : r.hull) CHECK(std::abs(z - 0.7 * c) < 1e-6);
  }
  SUBCASE("random rank-3 instance") {
    const PsdContext ctx = build_context(testing_support::random_psd(4, 3, 12));
    const VerificationReport rep =
        verify_inclusions(ctx, testing_support::random_bounded(ctx, 13), QValue(0.5), quick());
    CHECK(rep.checks.size() >= 3);
    CHECK(rep.all_passed());
  }
}
