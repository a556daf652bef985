// Acceptance battery: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "semirange/analytic.hpp"
#include "semirange/cli/commands.hpp"
#include "semirange/geometry.hpp"
#include "semirange/qrange.hpp"
#include "semirange/reduction.hpp"
#include "semirange/spectra.hpp"
#include "support/instances.hpp"

using namespace semirange;
namespace ts = testing_support;

namespace {

struct Outcome {
  bool passed = false;
  std::string summary;
};

struct Criterion {
  int id;
  const char* name;
  double time_limit;  // seconds, 0 for none
  std::function<Outcome()> body;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

ComplexMatrix jordan2() {
  ComplexMatrix t = ComplexMatrix::Zero(2, 2);
  t(0, 1) = 1.0;
  return t;
}

/// Reduced matrix and its spectral data recomputed from A^{1/2} T (A^{1/2})^dagger.
struct ReducedOracle {
  ComplexMatrix m;
  std::vector<Complex> eig;
  double norm = 0.0;
};

ReducedOracle reduced_oracle(const PsdContext& ctx, const ComplexMatrix& t) {
  ReducedOracle o;
  o.m = ctx.range_basis().adjoint() * ts::independent_tilde_full(ctx.a(), t) * ctx.range_basis();
  Eigen::ComplexEigenSolver<ComplexMatrix> es(o.m);
  o.eig.assign(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  o.norm = Eigen::JacobiSVD<ComplexMatrix>(o.m).singularValues()(0);
  return o;
}

/// Random context with n in [3, n_max] and rank in [3, n].
PsdContext random_context(std::uint64_t seed, int n_max) {
  std::mt19937_64 rng(seed * 7919);
  const int n = std::uniform_int_distribution<int>(3, n_max)(rng);
  const int r = std::uniform_int_distribution<int>(3, n)(rng);
  return build_context(ts::random_psd(n, r, seed));
}

Outcome square_zero_equality() {
  const PsdContext id = build_context(ComplexMatrix::Identity(2, 2));
  double worst = 0;
  for (double q : {0.0, 0.3, 0.6, 0.9, 1.0}) {
    const double w = q_radius(id, jordan2(), QValue(q), SampleConfig{});
    worst = std::max(worst, std::abs(w - (1 + std::sqrt(1 - q * q)) / 2));
  }
  return {worst <= 1e-3, fmt("max |w_q - (1+sqrt(1-q^2))/2| = %.3g (tol 1e-3)", worst)};
}

Outcome elliptic_disk() {
  double worst_ratio = 0;
  bool ok = true;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const PsdContext ctx = random_context(1000 + seed, 6);
    const ComplexMatrix t = ts::random_selfadjoint(ctx, 2000 + seed);
    const QValue q = ts::random_q(3000 + seed);
    SampleConfig cfg;
    cfg.seed = seed;
    // Ellipse assembled from the oracle's extreme eigenvalues.
    const ReducedOracle o = reduced_oracle(ctx, t);
    double l1 = -1e300, lm = 1e300;
    for (Complex l : o.eig) l1 = std::max(l1, l.real()), lm = std::min(lm, l.real());
    const double b = q.complement() * (l1 - lm) / 2;
    const double c = q.modulus() * (l1 - lm) / 2;
    const auto region = geometry::convex_hull(geometry::ellipse_polygon(
        q.value() * (l1 + lm) / 2.0, std::hypot(b, c), b, std::arg(q.value()), 2048));
    const double d = geometry::hausdorff(range_disk_union(ctx, t, q, cfg).hull, region);
    const double tol = 0.05 * (std::abs(l1) + std::abs(lm) + 1);
    const double lib = geometry::hausdorff(ellipse_region(selfadjoint_ellipse(ctx, t, q)), region);
    ok = ok && d <= tol && lib <= 1e-6 * (1 + std::abs(l1) + std::abs(lm));
    worst_ratio = std::max(worst_ratio, d / tol);
  }
  return {ok, fmt("20 instances, max Hausdorff/tol = %.3g", worst_ratio)};
}

struct RandomInstance {
  PsdContext ctx;
  ComplexMatrix t;
  QValue q;
};

std::vector<RandomInstance> general_instances() {
  std::vector<RandomInstance> v;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    PsdContext ctx = random_context(4000 + seed, 5);
    ComplexMatrix t = ts::random_bounded(ctx, 5000 + seed);
    v.push_back({std::move(ctx), std::move(t), ts::random_q(6000 + seed)});
  }
  return v;
}

/// Elements <Tx, y>_A of W_{q,A}(T) drawn straight from the definition: x, z
/// are A-orthonormalized in H and y = conj(q) x + sqrt(1-|q|^2) e^{i phi} z.
/// A fifth of the budget is uniform; the rest hill-climbs toward the
/// supporting points of `n_dirs` directions, keeping every visited value.
class DefinitionOracle {
 public:
  DefinitionOracle(const PsdContext& ctx, const ComplexMatrix& t, QValue q, std::uint64_t seed)
      : a_(ctx.a()), t_(t), q_(q), rng_(seed) {}

  std::vector<Complex> values(int n, int n_dirs) {
    std::vector<Complex> out;
    out.reserve(n);
    std::vector<State> pool;
    for (int i = 0; i < n / 5; ++i) {
      pool.push_back(random_state());
      out.push_back(pool.back().value);
    }
    const int steps = (n - n / 5) / n_dirs;
    State prev = pool.front();
    for (int d = 0; d < n_dirs; ++d) {
      const Complex dir = std::polar(1.0, 2 * std::numbers::pi * d / n_dirs);
      const auto score = [&](const State& s) { return (std::conj(dir) * s.value).real(); };
      State best = *std::max_element(pool.begin(), pool.end(),
                                     [&](const State& l, const State& r) { return score(l) < score(r); });
      if (d > 0 && score(prev) > score(best)) best = prev;
      double step = 0.3;
      for (int k = 0; k < steps; ++k) {
        State trial = perturb(best, step);
        out.push_back(trial.value);
        if (score(trial) > score(best)) {
          best = std::move(trial);
          step = std::min(step * 1.5, 1.0);
        } else {
          step = std::max(step * 0.9, 1e-9);
        }
      }
      prev = best;
    }
    return out;
  }

 private:
  struct State {
    ComplexVector x, z;
    double phi;
    Complex value;
  };

  Complex inner(const ComplexVector& u, const ComplexVector& v) const { return v.dot(a_ * u); }

  State make(ComplexVector x, ComplexVector z, double phi) const {
    x /= std::sqrt(inner(x, x).real());
    z -= inner(z, x) * x;
    z /= std::sqrt(inner(z, z).real());
    const ComplexVector y = std::conj(q_.value()) * x + q_.complement() * std::polar(1.0, phi) * z;
    return {x, z, phi, inner(t_ * x, y)};
  }

  State random_state() {
    std::uniform_real_distribution<double> uni(0, 2 * std::numbers::pi);
    const int n = static_cast<int>(a_.rows());
    return make(ts::gaussian(n, 1, rng_), ts::gaussian(n, 1, rng_), uni(rng_));
  }

  State perturb(const State& s, double step) {
    std::normal_distribution<double> normal;
    const int n = static_cast<int>(a_.rows());
    return make(s.x + step * ts::gaussian(n, 1, rng_), s.z + step * ts::gaussian(n, 1, rng_),
                s.phi + step * normal(rng_));
  }

  ComplexMatrix a_, t_;
  QValue q_;
  std::mt19937_64 rng_;
};

double directed(const std::vector<Complex>& from, const std::vector<Complex>& to) {
  double d = 0;
  for (Complex z : from) d = std::max(d, geometry::distance_to_convex(z, to));
  return d;
}

Outcome disk_union_vs_oracle() {
  double worst = 0, worst_out = 0, worst_uniform = 0, worst_library = 0;
  std::uint64_t seed = 0;
  for (const auto& inst : general_instances()) {
    ++seed;
    SampleConfig cfg;
    cfg.seed = seed;
    const RangeEstimate r = range_disk_union(inst.ctx, inst.t, inst.q, cfg);
    const double scale = a_operator_norm(inst.ctx, inst.t);
    const auto oracle =
        geometry::convex_hull(DefinitionOracle(inst.ctx, inst.t, inst.q, 7000 + seed).values(100000, 128));
    worst = std::max(worst, geometry::hausdorff(oracle, r.hull) / scale);
    worst_out = std::max(worst_out, directed(oracle, r.hull) / scale);

    std::vector<Complex> uniform;
    for (const auto& s : oracle_pair_samples(inst.ctx, inst.t, inst.q, 100000, 8000 + seed)) uniform.push_back(s.value);
    worst_uniform = std::max(worst_uniform, geometry::hausdorff(geometry::convex_hull(uniform), r.hull) / scale);
    const auto library = geometry::convex_hull(adaptive_oracle_values(inst.ctx, inst.t, inst.q, 100000, 9000 + seed));
    worst_library = std::max(worst_library, geometry::hausdorff(library, r.hull) / scale);
  }
  return {worst <= 0.05,
          fmt("20 instances, 1e5 samples each: max Hausdorff/||T||_A = %.3g (tol 0.05), oracle outside hull by "
              "%.3g; for reference, uniform samples %.3g, library adaptive sampler %.3g",
              worst, worst_out, worst_uniform, worst_library)};
}

Outcome reduction_equality() {
  double worst = 0, worst_norm = 0;
  std::uint64_t seed = 0;
  for (const auto& inst : general_instances()) {
    ++seed;
    SampleConfig cfg;
    cfg.seed = seed;
    const ReducedOracle o = reduced_oracle(inst.ctx, inst.t);
    const PsdContext id = build_context(ComplexMatrix::Identity(o.m.rows(), o.m.rows()));
    const RangeEstimate lhs = range_disk_union(inst.ctx, inst.t, inst.q, cfg);
    const RangeEstimate rhs = range_disk_union(id, o.m, inst.q, cfg);
    const double norm_a = a_operator_norm(inst.ctx, inst.t);
    worst = std::max(worst, hull_distance(lhs, rhs) / norm_a);
    worst_norm = std::max(worst_norm, std::abs(norm_a - o.norm) / o.norm);
  }
  return {worst <= 0.05 && worst_norm <= 1e-8,
          fmt("max Hausdorff/||T||_A = %.3g (tol 0.05); max rel |  ||T||_A - ||T~|| | = %.3g (tol 1e-8)", worst,
              worst_norm)};
}

Outcome bound_chain() {
  int violations = 0, selfadjoint = 0;
  double min_slack = 1e300;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const PsdContext ctx = random_context(9000 + seed, 5);
    const bool sa = seed % 4 == 0;
    const ComplexMatrix t = sa ? ts::random_selfadjoint(ctx, 10000 + seed) : ts::random_bounded(ctx, 10000 + seed);
    const QValue q = ts::random_q(11000 + seed);
    SampleConfig cfg;
    cfg.seed = seed;
    const double norm = a_operator_norm(ctx, t);
    const double w = q_radius(ctx, t, q, cfg);
    const double wa = q_radius(ctx, t, QValue(1.0), cfg);
    std::vector<double> slacks{w - q.modulus() / 2 * norm + 1e-6, norm + 1e-6 - w, w + 1e-6 - q.modulus() * wa};
    if (sa) {
      ++selfadjoint;
      slacks.push_back(w + 1e-6 - q.modulus() * norm);
    }
    for (double s : slacks) {
      min_slack = std::min(min_slack, s);
      if (s < 0) ++violations;
    }
  }
  return {violations == 0,
          fmt("100 instances (%d A-self-adjoint), %d violations, min slack %.3g", selfadjoint, violations, min_slack)};
}

Outcome nilpotent_disk() {
  double worst_var = 0, worst_excess = -1e300;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const PsdContext ctx = random_context(12000 + seed, 5);
    const ComplexMatrix t = ts::random_nilpotent2(ctx, 13000 + seed);
    const QValue q = ts::random_q(14000 + seed);
    SampleConfig cfg;
    cfg.seed = seed;
    const RangeEstimate r = range_disk_union(ctx, t, q, cfg);
    const double w = q_radius(ctx, t, q, cfg);
    const double bound = (1 + q.complement()) / 2 * a_operator_norm(ctx, t);
    worst_var = std::max(worst_var, support_variation(r));
    worst_excess = std::max(worst_excess, w - bound);
  }
  return {worst_var <= 0.05 && worst_excess <= 1e-6,
          fmt("max support variation %.3g (tol 0.05); max w_q - bound = %.3g (tol 1e-6)", worst_var, worst_excess)};
}

Outcome refinement_inequality() {
  int violations = 0;
  double min_gap = 1e300;
  for (int k = 0; k < 1000; ++k) {
    const double q = k / 1000.0;
    const double gap = std::sqrt(1 - 0.75 * q * q + q * std::sqrt(1 - q * q)) - (1 + std::sqrt(1 - q * q)) / 2;
    min_gap = std::min(min_gap, gap);
    if (gap < 0 || square_zero_factor(QValue(q)) > prior_square_zero_factor(q)) ++violations;
  }
  return {violations == 0, fmt("1000 grid points, %d violations, min gap %.3g", violations, min_gap)};
}

Outcome index3() {
  const double knee = 1 / std::sqrt(2.0);
  double worst = -1e300, worst_q1 = 0, worst_ratio = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    std::mt19937_64 rng(15000 + seed);
    const int k = 1 + static_cast<int>(seed % 2);
    const ComplexMatrix s1 = ts::gaussian(k, k, rng), s2 = ts::gaussian(k, k, rng);
    const ComplexMatrix b = index3_block(s1, s2);
    const PsdContext id = build_context(ComplexMatrix::Identity(b.rows(), b.rows()));
    const double n1 = spectral_norm(s1), n2 = spectral_norm(s2);
    SampleConfig cfg;
    cfg.seed = seed;
    for (double q : {0.0, 0.5, knee, 0.9, 1.0}) {
      const double w = q_radius(id, b, QValue(q), cfg);
      const double bound = index3_bound(n1, n2, QValue(q));
      worst = std::max(worst, w - bound);
      worst_ratio = std::max(worst_ratio, w / bound);
    }
    worst_q1 = std::max(worst_q1, std::abs(index3_bound(n1, n2, QValue(1.0)) - (1 + std::sqrt(2.0)) / 2 * std::max(n1, n2)));
  }
  return {worst <= 1e-6 && worst_q1 <= 1e-12,
          fmt("max w_q - bound = %.3g (tol 1e-6), max w_q/bound = %.4f; q=1 formula error %.3g (tol 1e-12)", worst,
              worst_ratio, worst_q1)};
}

Outcome spectral_inclusions() {
  double worst = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const PsdContext ctx = random_context(16000 + seed, 5);
    const ComplexMatrix t = ts::random_bounded(ctx, 17000 + seed);
    const QValue q = ts::random_q(18000 + seed);
    SampleConfig cfg;
    cfg.seed = seed;
    const RangeEstimate r = range_disk_union(ctx, t, q, cfg);
    const ReducedOracle o = reduced_oracle(ctx, t);
    for (Complex l : o.eig) worst = std::max(worst, geometry::distance_to_convex(q.value() * l, r.hull) / o.norm);
  }
  double worst_power = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const PsdContext ctx = random_context(19000 + seed, 5);
    const ComplexMatrix t = ts::random_diagonalizable(ctx, 20000 + seed);
    SampleConfig cfg;
    cfg.seed = seed;
    const ReducedOracle o = reduced_oracle(ctx, t);
    double r_a = 0;
    for (Complex l : o.eig) r_a = std::max(r_a, std::abs(l));
    const auto seq = power_limit_check(ctx, t, QValue(0.8), 20, cfg);
    worst_power = std::max(worst_power, std::abs(seq.back().second - r_a) / (1 + r_a));
  }
  return {worst <= 0.05 && worst_power <= 0.05,
          fmt("50 instances, max dist(q eig, hull)/||T||_A = %.3g (tol 0.05); 20 power limits, max "
              "|w^(1/20) - r_A|/(1+r_A) = %.3g (tol 0.05)",
              worst, worst_power)};
}

Outcome invariance() {
  struct Class {
    const char* name;
    std::function<ComplexMatrix(const PsdContext&, std::uint64_t)> make;
  };
  const std::vector<Class> classes{{"general", ts::random_bounded},
                                   {"self-adjoint", ts::random_selfadjoint},
                                   {"nilpotent", ts::random_nilpotent2},
                                   {"diagonalizable", ts::random_diagonalizable}};
  double worst_r = 0, worst_h = 0;
  std::uint64_t k = 0;
  for (const Class& c : classes) {
    ++k;
    const PsdContext ctx = random_context(21000 + k, 5);
    const ComplexMatrix t = c.make(ctx, 22000 + k);
    const QValue q = ts::random_q(23000 + k);
    SampleConfig cfg;
    cfg.seed = k;
    const double norm = a_operator_norm(ctx, t);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const EquivalenceRecord rec = unitary_equivalence_check(ctx, t, q, 24000 + 100 * k + seed, cfg);
      worst_r = std::max(worst_r, rec.radius_diff);
      worst_h = std::max(worst_h, rec.hull_hausdorff / norm);
    }
  }
  return {worst_r <= 1e-4 && worst_h <= 0.05,
          fmt("4 classes x 20 U, max radius diff %.3g (tol 1e-4), max Hausdorff/||T||_A %.3g (tol 0.05)", worst_r,
              worst_h)};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "semirange_acceptance";
  fs::create_directories(dir);
  const std::string file = std::string(SEMIRANGE_FIXTURES) + "/selfadjoint_rank3.json";
  std::vector<std::string> prefixes;
  const int saved = omp_get_max_threads();
  for (int threads : {1, 1, 4}) {
    omp_set_num_threads(threads);
    const std::string prefix = (dir / ("run" + std::to_string(prefixes.size()))).string();
    const char* argv[] = {"semirange", "range", file.c_str(), "--seed", "42", "--out", prefix.c_str()};
    std::ostringstream out, err;
    if (cli::run(7, argv, out, err) != 0) return {false, "range command failed: " + err.str()};
    prefixes.push_back(prefix);
  }
  omp_set_num_threads(saved);
  bool same = true, threads_same = true;
  for (const char* ext : {".csv", ".svg"}) {
    same = same && slurp(prefixes[0] + ext) == slurp(prefixes[1] + ext);
    threads_same = threads_same && slurp(prefixes[0] + ext) == slurp(prefixes[2] + ext);
  }
  return {same, fmt("identical-seed runs byte-identical: %s; also identical with 4 threads: %s", same ? "yes" : "no",
                    threads_same ? "yes" : "no")};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "square-zero equality", 5, square_zero_equality},
      {2, "elliptic disk for A-self-adjoint T", 60, elliptic_disk},
      {3, "disk union vs pair-sample oracle", 120, disk_union_vs_oracle},
      {4, "reduction equality and norm", 0, reduction_equality},
      {5, "bound chain", 0, bound_chain},
      {6, "nilpotent index-2 disk", 0, nilpotent_disk},
      {7, "refinement inequality", 0, refinement_inequality},
      {8, "index-3 bound", 0, index3},
      {9, "spectral inclusions and power limit", 0, spectral_inclusions},
      {10, "A-unitary invariance", 0, invariance},
      {11, "range output determinism", 0, determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0 && secs > c.time_limit) {
      o.passed = false;
      o.summary += fmt("; exceeded time limit %.0f s", c.time_limit);
    }
    std::printf("%s  criterion %2d  %-38s  %s  [%.2f s]\n", o.passed ? "PASS" : "FAIL", c.id, c.name,
                o.summary.c_str(), secs);
    std::fflush(stdout);
    if (!o.passed) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
