#include <cmath>
#include <numbers>

#include "pair_chain.hpp"

namespace semirange::kernels {

namespace detail {

namespace {

ComplexVector orthogonal_unit(const ComplexVector& u, ComplexVector w) {
  w -= u * u.dot(w);
  const double n = w.norm();
  return n > 0 ? ComplexVector(w / n) : w;
}

}  // namespace

PairCoords random_pair(int r, std::mt19937_64& rng) {
  PairCoords p;
  p.u = random_unit(r, rng);
  do {
    p.w = orthogonal_unit(p.u, random_unit(r, rng));
  } while (p.w.norm() == 0.0);
  p.phase = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
  return p;
}

Complex pair_value(const FormEvaluator& eval, QValue q, const PairCoords& p) {
  const auto f = eval.forms(p.u);
  return q.value() * f.txx + q.complement() * std::polar(1.0, p.phase) * eval.cross(p.u, p.w);
}

std::vector<Complex> climb(const FormEvaluator& eval, QValue q, double theta, PairCoords current,
                           double score, int n_steps, std::uint64_t seed, std::uint64_t bin) {
  std::mt19937_64 rng(mix_seed(seed, kAdaptiveStream, bin));
  std::normal_distribution<double> normal;
  const int r = static_cast<int>(current.u.size());
  const Complex rot = std::polar(1.0, -theta);
  const double decay = n_steps > 6 ? n_steps / 6.0 : 1.0;
  std::vector<Complex> out;
  out.reserve(static_cast<size_t>(n_steps));
  ComplexVector gu(r), gw(r);
  for (int it = 0; it < n_steps; ++it) {
    const double step = 0.5 * std::pow(0.5, it / decay);
    for (int i = 0; i < r; ++i) {
      gu(i) = Complex(normal(rng), normal(rng));
      gw(i) = Complex(normal(rng), normal(rng));
    }
    PairCoords next;
    next.u = (current.u + step * gu).normalized();
    next.w = orthogonal_unit(next.u, current.w + step * gw);
    next.phase = current.phase + step * normal(rng);
    if (next.w.norm() == 0.0) continue;
    const Complex v = pair_value(eval, q, next);
    out.push_back(v);
    const double s = (rot * v).real();
    if (s > score) {
      score = s;
      current = std::move(next);
    }
  }
  return out;
}

}  // namespace detail

ComplexVector sphere_sample(int r, std::uint64_t seed, std::uint64_t index) {
  std::mt19937_64 rng(mix_seed(seed, kSphereStream, index));
  return random_unit(r, rng);
}

PairSample pair_sample(const FormEvaluator& eval, QValue q, std::uint64_t seed, std::uint64_t index) {
  std::mt19937_64 rng(mix_seed(seed, kOracleStream, index));
  const detail::PairCoords p = detail::random_pair(eval.coord_dim(), rng);
  return {eval.lift(p.u), eval.lift(p.w), p.phase, detail::pair_value(eval, q, p)};
}

std::vector<ComplexVector> sphere_samples(Execution exec, int r, int n, std::uint64_t seed) {
  return exec == Execution::serial ? serial::sphere_samples(r, n, seed) : parallel::sphere_samples(r, n, seed);
}

std::vector<Disk> evaluate_disks(Execution exec, const FormEvaluator& eval, QValue q,
                                 std::span<const ComplexVector> coords) {
  return exec == Execution::serial ? serial::evaluate_disks(eval, q, coords)
                                   : parallel::evaluate_disks(eval, q, coords);
}

SupportScan scan_support(Execution exec, std::span<const Disk> disks, std::span<const double> angles) {
  return exec == Execution::serial ? serial::scan_support(disks, angles) : parallel::scan_support(disks, angles);
}

std::vector<SearchResult> run_searches(Execution exec, const FormEvaluator& eval, QValue q,
                                       std::span<const SearchTask> tasks, const SearchOptions& opts) {
  return exec == Execution::serial ? serial::run_searches(eval, q, tasks, opts)
                                   : parallel::run_searches(eval, q, tasks, opts);
}

std::vector<PairSample> pair_samples(Execution exec, const FormEvaluator& eval, QValue q, int n, std::uint64_t seed) {
  return exec == Execution::serial ? serial::pair_samples(eval, q, n, seed)
                                   : parallel::pair_samples(eval, q, n, seed);
}

std::vector<Complex> adaptive_pair_values(Execution exec, const FormEvaluator& eval, QValue q, int n, int n_bins,
                                          std::uint64_t seed) {
  return exec == Execution::serial ? serial::adaptive_pair_values(eval, q, n, n_bins, seed)
                                   : parallel::adaptive_pair_values(eval, q, n, n_bins, seed);
}

}  // namespace semirange::kernels
