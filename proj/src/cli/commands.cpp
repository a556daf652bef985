#include "semirange/cli/commands.hpp"

#include <omp.h>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semirange/analytic.hpp"
#include "semirange/cli/matrix_file.hpp"
#include "semirange/cli/render.hpp"
#include "semirange/geometry.hpp"
#include "semirange/qrange.hpp"
#include "semirange/reduction.hpp"
#include "semirange/report.hpp"
#include "semirange/spectra.hpp"

namespace semirange::cli {

namespace {

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string num(Complex z) { return num(z.real()) + (z.imag() < 0 ? "" : "+") + num(z.imag()) + "i"; }

std::string list(const std::vector<Complex>& values) {
  std::string s = "[";
  for (size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + num(values[i]);
  return s + "]";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidArgument: return kParseError;
    case ErrorKind::NotHermitian:
    case ErrorKind::NegativeEigenvalue:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::NotABounded: return kInvalidA;
    case ErrorKind::EmptyRange:
    case ErrorKind::RankTooSmall: return kEmptyRange;
    default: return 1;
  }
}

void apply_thread_cap(std::ostream& err) {
  const char* env = std::getenv("SEMIRANGE_THREADS");
  if (!env || !*env) return;
  int n = 0;
  const char* end = env + std::char_traits<char>::length(env);
  const auto [ptr, ec] = std::from_chars(env, end, n);
  if (ec != std::errc() || ptr != end || n < 1) {
    err << "warning: ignoring SEMIRANGE_THREADS='" << env << "' (expected a positive integer)\n";
    return;
  }
  omp_set_num_threads(n);
}

struct Inputs {
  MatrixFile file;
  PsdContext ctx;
  QValue q;
};

Inputs load(const std::string& path, const std::string& q_flag, QValue fallback) {
  MatrixFile file = load_matrix_file(path);
  PsdContext ctx = build_context(file.a);
  QValue q = !q_flag.empty() ? parse_q(q_flag) : file.q.value_or(fallback);
  return {std::move(file), std::move(ctx), q};
}

// ---------------------------------------------------------------- classify

int cmd_classify(const std::string& path, std::ostream& out) {
  const MatrixFile file = load_matrix_file(path);
  const PsdContext ctx = build_context(file.a);
  const auto rep = classify(ctx, file.t, ctx.dim() + 1);
  auto flag = [&](const char* name, bool v) { out << name << ": " << (v ? "true" : "false") << "\n"; };
  auto index = [&](const char* name, const std::optional<int>& v) {
    out << name << ": " << (v ? std::to_string(*v) : std::string("none")) << "\n";
  };
  out << "dim: " << ctx.dim() << "\n";
  out << "rank_A: " << ctx.rank() << "\n";
  out << "eigenvalues_A: [";
  for (Eigen::Index i = 0; i < ctx.eigenvalues().size(); ++i) out << (i ? ", " : "") << num(ctx.eigenvalues()(i));
  out << "]\n";
  flag("a_bounded", rep.is_a_bounded);
  flag("in_B_A", rep.is_in_b_a);
  flag("a_selfadjoint", rep.is_a_selfadjoint);
  flag("a_positive", rep.is_a_positive);
  flag("a_normal", rep.is_a_normal);
  flag("a_unitary", rep.is_a_unitary);
  index("a_nilpotent_index", rep.a_nilpotent_index);
  index("nilpotent_index", rep.nilpotent_index);
  if (rep.is_a_bounded) {
    out << "norm_A: " << num(a_operator_norm(ctx, file.t)) << "\n";
    out << "a_spectrum: " << list(a_spectrum(ctx, file.t)) << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- range

struct RangeFlags {
  std::string q;
  int samples = 2048;
  int angles = 720;
  std::uint64_t seed = 0;
  std::string prefix = "range";
};

int cmd_range(const std::string& path, const RangeFlags& flags, std::ostream& out, std::ostream& err) {
  const Inputs in = load(path, flags.q, QValue(0.0));
  SampleConfig cfg;
  cfg.n_x = flags.samples;
  cfg.n_pairs = 10 * flags.samples;
  cfg.n_angles = flags.angles;
  cfg.seed = flags.seed;
  RangeEstimate range;
  try {
    range = range_disk_union(in.ctx, in.file.t, in.q, cfg);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::EmptyRange) throw;
    err << "error: " << e.what() << "; with rank(A) = 1 every unit pair satisfies |<x,y>_A| = 1, so no pair has "
        << "<x,y>_A = q\n";
    return kEmptyRange;
  }
  std::vector<Complex> markers;
  for (const Complex l : a_spectrum(in.ctx, in.file.t)) markers.push_back(in.q.value() * l);

  const std::string csv = render_csv(range);
  const std::string svg = render_svg(range, markers);
  write_file_atomic(flags.prefix + ".csv", csv);
  write_file_atomic(flags.prefix + ".svg", svg);
  out << "method: " << to_string(range.method) << "\n";
  out << "q: " << num(in.q.value()) << "\n";
  out << "radius_est: " << num(range.radius_est) << "\n";
  out << "hull_vertices: " << range.hull.size() << "\n";
  out << "wrote: " << flags.prefix << ".csv " << flags.prefix << ".svg\n";
  return kOk;
}

// ---------------------------------------------------------------- verify

struct Suite {
  const PsdContext& ctx;
  const ComplexMatrix& t;
  QValue q;
  SampleConfig cfg;
  VerificationReport rep;

  double norm() const { return a_operator_norm(ctx, t); }
  double opt_slack(double scale) const { return 10.0 * ctx.tol().opt_tol * std::max(1.0, scale); }

  // Runs `body`; a rank or emptiness error marks the listed checks SKIP.
  void guarded(std::initializer_list<std::pair<const char*, const char*>> names, const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::EmptyRange && e.kind() != ErrorKind::RankTooSmall) throw;
      for (const auto& [name, anchor] : names) rep.skip(name, anchor, e.what());
    }
  }
};

void suite_spectral(Suite& s) {
  s.guarded({{"spectral_inclusion", "q sigma_A(T) in W_{q,A}(T)"},
             {"qWA_inclusion", "q W_A(T) in W_{q,A}(T)"},
             {"reduced_range_equality", "W_{q,A}(T) = W_q(T~)"}},
            [&] { s.rep.append(verify_inclusions(s.ctx, s.t, s.q, s.cfg)); });

  const auto point = a_point_spectrum(s.ctx, s.t);
  const auto full = a_spectrum(s.ctx, s.t);
  double gap = 0.0;
  auto far = [](const std::vector<Complex>& from, const std::vector<Complex>& to) {
    double worst = 0.0;
    for (const Complex a : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const Complex b : to) best = std::min(best, std::abs(a - b));
      worst = std::max(worst, best);
    }
    return worst;
  };
  gap = std::max(far(point, full), far(full, point));
  const double tilde_norm = std::max(1.0, s.norm());
  const double root_eps = 10.0 * std::pow(std::numeric_limits<double>::epsilon(), 1.0 / std::max(1, s.ctx.rank()));
  s.rep.add("point_spectrum", "sigma_A_p(T) = sigma_A(T) = sigma(T~)", gap,
            std::min(root_eps, s.ctx.tol().geo_tol) * tilde_norm, "point " + list(point) + " vs full " + list(full));

  const int n_max = 32;
  const SpectrumReport radius = a_spectral_radius(s.ctx, s.t, n_max);
  double below = 0.0;
  for (const auto& [n, est] : radius.radius_limit_estimates) below = std::max(below, radius.radius_exact - est);
  s.rep.add("spectral_radius_upper", "r_A(T) <= ||T^n||_A^{1/n}", below,
            1e3 * s.ctx.tol().eq_tol * std::max(1.0, radius.radius_exact),
            "r_A=" + num(radius.radius_exact) + ", ||T^" + std::to_string(n_max) + "||_A^{1/" + std::to_string(n_max) +
                "}=" + num(radius.radius_limit_estimates.back().second));

  const char* power_anchor = "lim w_{q,A}(T^n)^{1/n} = r_A(T)";
  const TildeOperator tilde = build_tilde(s.ctx, s.t);
  Eigen::ComplexEigenSolver<ComplexMatrix> es(tilde.matrix());
  const Eigen::JacobiSVD<ComplexMatrix> sv(es.eigenvectors());
  const double cond = sv.singularValues()(0) / std::max(sv.singularValues().tail(1)(0), 1e-300);
  if (s.q.modulus() == 0.0) {
    s.rep.skip("power_limit", power_anchor, "q = 0");
  } else if (!is_in_b_a(s.ctx, s.t)) {
    s.rep.skip("power_limit", power_anchor, "T not in B_A");
  } else if (!(cond < 1e6)) {
    s.rep.skip("power_limit", power_anchor, "T~ is not (well-conditioned) diagonalizable");
  } else {
    s.guarded({{"power_limit", power_anchor}}, [&] {
      // |q|^{1/n} biases the estimate low, so n grows until that bias is small.
      const double target = 1.0 - 0.5 * s.ctx.tol().geo_tol;
      const int n = std::clamp(static_cast<int>(std::ceil(std::log(s.q.modulus()) / std::log(target))), 20, 200);
      const auto seq = power_limit_check(s.ctx, s.t, s.q, n, s.cfg);
      const double est = seq.back().second;
      s.rep.add("power_limit", power_anchor, std::abs(est - radius.radius_exact),
                s.ctx.tol().geo_tol * (1.0 + radius.radius_exact),
                "n=" + std::to_string(n) + " estimate=" + num(est) + " r_A=" + num(radius.radius_exact));
    });
  }

  const char* ellipse_anchor = "A-self-adjoint T: W_{q,A}(T) is the elliptic disk with foci q lambda_1, q lambda_m";
  if (!is_a_selfadjoint(s.ctx, s.t)) {
    s.rep.skip("selfadjoint_ellipse", ellipse_anchor, "T is not A-self-adjoint");
  } else {
    s.guarded({{"selfadjoint_ellipse", ellipse_anchor}}, [&] {
      const EllipseSpec e = selfadjoint_ellipse(s.ctx, s.t, s.q);
      const RangeEstimate range = range_disk_union(s.ctx, s.t, s.q, s.cfg);
      const double scale = 1.0 + std::abs(e.lambda_max) + std::abs(e.lambda_min);
      s.rep.add("selfadjoint_ellipse", ellipse_anchor, geometry::hausdorff(range.hull, ellipse_region(e)),
                s.ctx.tol().geo_tol * scale,
                "a=" + num(e.semi_major) + " b=" + num(e.semi_minor) + " center=" + num(e.center));
    });
  }
}

void add_bound(Suite& s, const BoundLedger& led, const char* name, const char* anchor, const std::optional<double>& v,
               bool is_lower, const char* reason) {
  if (!v) {
    s.rep.skip(name, anchor, reason);
    return;
  }
  const double excess = is_lower ? *v - led.measured : led.measured - *v;
  s.rep.add(name, anchor, std::max(0.0, excess), led.slack,
            is_lower ? num(*v) + " <= w=" + num(led.measured) : "w=" + num(led.measured) + " <= " + num(*v));
}

void suite_bounds(Suite& s) {
  s.guarded({{"bound_ledger", "(|q|/2)||T||_A <= w_{q,A}(T) <= ||T||_A"}}, [&] {
    const BoundLedger led = bound_ledger(s.ctx, s.t, s.q, s.cfg);
    add_bound(s, led, "lower_half_norm", "(|q|/2)||T||_A <= w_{q,A}(T)", led.lower_half_norm, true, "T not in B_A");
    add_bound(s, led, "upper_norm", "w_{q,A}(T) <= ||T||_A", led.upper_norm, false, "T not in B_A");
    add_bound(s, led, "lower_numerical_radius", "|q| w_A(T) <= w_{q,A}(T)", led.lower_numerical_radius, true, "");
    add_bound(s, led, "selfadjoint_lower", "A-self-adjoint T: |q| ||T||_A <= w_{q,A}(T)", led.selfadjoint_lower, true,
              "T is not A-self-adjoint");
    add_bound(s, led, "nilpotent2_upper", "A-nilpotent index 2: w_{q,A}(T) <= (1+sqrt(1-|q|^2))/2 ||T||_A",
              led.nilpotent2_upper, false, "T is not A-nilpotent of index 2");
    add_bound(s, led, "prior_square_zero_upper",
              "A-nilpotent index 2, real q in [0,1): w_{q,A}(T) <= (1-3q^2/4+q sqrt(1-q^2))^{1/2} ||T||_A",
              led.prior_square_zero_upper, false, "needs A-nilpotent index 2 and real q in [0,1)");
    if (led.lower_half_norm && led.upper_norm) {
      s.rep.add("bound_chain", "(|q|/2)||T||_A <= w_{q,A}(T) <= ||T||_A", led.holds() ? 0.0 : 1.0, 0.0,
                num(*led.lower_half_norm) + " <= " + num(led.measured) + " <= " + num(*led.upper_norm));
    }
  });

  double worst = -std::numeric_limits<double>::infinity();
  int cases = 0;
  for (int k = 0; k < 1000; ++k, ++cases) {
    const double q = k * 1e-3;
    worst = std::max(worst, square_zero_factor(QValue(q)) - prior_square_zero_factor(q));
  }
  s.rep.add("refinement_inequality", "(1+sqrt(1-q^2))/2 <= (1-3q^2/4+q sqrt(1-q^2))^{1/2} on [0,1)",
            std::max(0.0, worst), 1e-15, std::to_string(cases) + " grid points");

  // Block operators assembled from T~: the square-zero equality on its
  // Hermitian part and the index-3 bound with both blocks equal to T~.
  const TildeOperator tilde = build_tilde(s.ctx, s.t);
  const int r = tilde.rank();
  const double qr = s.q.modulus();
  const char* sqz_anchor = "T=[[0,S],[0,0]], S Hermitian: w_q(T) = (1+sqrt(1-q^2))/2 ||S||";
  const char* idx3_anchor = "w_q([[0,S1,0],[0,0,S2],[0,0,0]]) <= index-3 bound in max(||S1||,||S2||)";
  if (r == 0) {
    s.rep.skip("square_zero_equality", sqz_anchor, "rank(A) = 0");
    s.rep.skip("index3_bound", idx3_anchor, "rank(A) = 0");
    return;
  }
  const ComplexMatrix herm = 0.5 * (tilde.matrix() + tilde.matrix().adjoint());
  const ComplexMatrix block2 = square_zero_block(herm);
  const PsdContext id2 = build_context(ComplexMatrix::Identity(2 * r, 2 * r), s.ctx.tol());
  const double exact = squarezero_exact_radius(herm, qr);
  const double measured2 = q_radius(id2, block2, QValue(qr), s.cfg);
  s.rep.add("square_zero_equality", sqz_anchor, std::abs(measured2 - exact), s.opt_slack(spectral_norm(herm)),
            "q=" + num(qr) + " measured=" + num(measured2) + " formula=" + num(exact));

  const ComplexMatrix block3 = index3_block(tilde.matrix(), tilde.matrix());
  const PsdContext id3 = build_context(ComplexMatrix::Identity(3 * r, 3 * r), s.ctx.tol());
  const double m = spectral_norm(tilde.matrix());
  const double bound = index3_bound(m, m, s.q);
  const double measured3 = q_radius(id3, block3, s.q, s.cfg);
  s.rep.add("index3_bound", idx3_anchor, std::max(0.0, measured3 - bound), s.opt_slack(m),
            "measured=" + num(measured3) + " bound=" + num(bound) +
                (bound > 0 ? " ratio=" + num(measured3 / bound) : std::string()));
}

void suite_nilpotent(Suite& s) {
  const char* disk_anchor = "A-nilpotent index 2: W_{q,A}(T) is a disk centered at 0";
  const char* bound_anchor = "A-nilpotent index 2: w_{q,A}(T) <= (1+sqrt(1-|q|^2))/2 ||T||_A";
  const char* wa_anchor = "A-nilpotent index 2: w_A(T) = ||T||_A / 2";
  if (a_nilpotent_index(s.ctx, s.t, s.ctx.dim() + 1) != 2) {
    for (const auto& [name, anchor] : {std::pair{"nilpotent_disk", disk_anchor}, std::pair{"nilpotent_bound", bound_anchor},
                                       std::pair{"nilpotent_numerical_radius", wa_anchor}}) {
      s.rep.skip(name, anchor, "T is not A-nilpotent of index 2");
    }
    return;
  }
  s.guarded({{"nilpotent_disk", disk_anchor}, {"nilpotent_bound", bound_anchor}}, [&] {
    const Nilpotent2Record rec = nilpotent2_check(s.ctx, s.t, s.q, s.cfg);
    s.rep.add("nilpotent_disk", disk_anchor, rec.variation, s.ctx.tol().geo_tol,
              std::string("is_disk=") + (rec.is_disk ? "true" : "false") + " support variation");
    s.rep.add("nilpotent_bound", bound_anchor, std::max(0.0, rec.radius - rec.bound), s.opt_slack(rec.bound),
              "radius=" + num(rec.radius) + " bound=" + num(rec.bound));
  });
  const double norm = s.norm();
  const double wa = q_radius(s.ctx, s.t, QValue(1.0), s.cfg);
  s.rep.add("nilpotent_numerical_radius", wa_anchor, std::abs(wa - 0.5 * norm), s.opt_slack(norm),
            "w_A=" + num(wa) + " ||T||_A/2=" + num(0.5 * norm));
}

void suite_reduction(Suite& s) {
  const double norm = s.norm();
  const double scale = std::sqrt(s.ctx.a_norm_scale()) * std::max(1.0, spectral_norm(s.t));
  s.rep.add("intertwining", "Z_A T = T~ Z_A", tilde_consistency_check(s.ctx, s.t, 16, s.cfg.seed),
            1e3 * s.ctx.tol().eq_tol * std::max(1.0, scale), "max residual over 16 vectors");
  const double rayleigh = a_operator_norm_rayleigh(s.ctx, s.t);
  s.rep.add("norm_equality", "||T||_A = ||T~||", std::abs(norm - rayleigh), 1e-8 * std::max(1.0, norm),
            "||T~||=" + num(norm) + " Rayleigh=" + num(rayleigh));

  s.guarded({{"unitary_radius", "w_{q,A}(U T U^#) = w_{q,A}(T) for A-unitary U"},
             {"unitary_range", "W_{q,A}(U T U^#) = W_{q,A}(T) for A-unitary U"}},
            [&] {
              const EquivalenceRecord rec = unitary_equivalence_check(s.ctx, s.t, s.q, s.cfg.seed + 1, s.cfg);
              s.rep.add("unitary_radius", "w_{q,A}(U T U^#) = w_{q,A}(T) for A-unitary U", rec.radius_diff,
                        rec.radius_budget, "seeded A-unitary U");
              s.rep.add("unitary_range", "W_{q,A}(U T U^#) = W_{q,A}(T) for A-unitary U", rec.hull_hausdorff,
                        std::max(rec.hull_budget, 1e-12), "Hausdorff distance between hulls");
            });
}

int cmd_verify(const std::string& path, const std::string& q_flag, const std::string& suite_name, std::uint64_t seed,
               std::ostream& out, std::ostream& err) {
  static const std::vector<std::pair<std::string, void (*)(Suite&)>> suites{
      {"spectral", suite_spectral}, {"bounds", suite_bounds}, {"nilpotent", suite_nilpotent},
      {"reduction", suite_reduction}};
  bool known = suite_name == "all";
  for (const auto& entry : suites) known = known || entry.first == suite_name;
  if (!known) {
    err << "error: unknown suite '" << suite_name << "' (expected all|spectral|bounds|nilpotent|reduction)\n";
    return kParseError;
  }
  const Inputs in = load(path, q_flag, QValue(0.5));
  require_a_bounded(in.ctx, in.file.t);
  Suite s{in.ctx, in.file.t, in.q, SampleConfig{}, {}};
  s.cfg.seed = seed;
  for (const auto& [name, fn] : suites) {
    if (suite_name == "all" || suite_name == name) fn(s);
  }
  out << "q: " << num(in.q.value()) << "\n";
  write_report(out, s.rep);
  const bool ok = s.rep.all_passed();
  out << (ok ? "all applicable checks passed" : "some checks failed") << "\n";
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"A-q-numerical ranges, radii and A-spectra of matrices over a semi-inner product"};
  app.name("semirange");
  app.require_subcommand(1);

  std::string file;
  auto* classify_cmd = app.add_subcommand("classify", "classify T relative to the semi-inner product of A");
  classify_cmd->add_option("file", file, "matrix file")->required();

  RangeFlags range_flags;
  auto* range_cmd = app.add_subcommand("range", "compute W_{q,A}(T) and write PREFIX.csv and PREFIX.svg");
  range_cmd->add_option("file", file, "matrix file")->required();
  range_cmd->add_option("--q", range_flags.q, "q as re,im (default: the file's q, else 0)");
  range_cmd->add_option("--samples", range_flags.samples, "random base vectors")->check(CLI::PositiveNumber);
  range_cmd->add_option("--angles", range_flags.angles, "support grid size")->check(CLI::Range(3, 1 << 20));
  range_cmd->add_option("--seed", range_flags.seed, "random seed");
  range_cmd->add_option("--out", range_flags.prefix, "output prefix");

  std::string suite = "all", verify_q;
  std::uint64_t verify_seed = 0;
  auto* verify_cmd = app.add_subcommand("verify", "run verification checks");
  verify_cmd->add_option("file", file, "matrix file")->required();
  verify_cmd->add_option("--suite", suite, "all|spectral|bounds|nilpotent|reduction");
  verify_cmd->add_option("--q", verify_q, "q as re,im (default: the file's q, else 0.5)");
  verify_cmd->add_option("--seed", verify_seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  apply_thread_cap(err);
  try {
    if (*classify_cmd) return cmd_classify(file, out);
    if (*range_cmd) return cmd_range(file, range_flags, out, err);
    return cmd_verify(file, verify_q, suite, verify_seed, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace semirange::cli
