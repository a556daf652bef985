#pragma once

// Data-parallel kernels of the range engine.
//
// Every kernel has a plain-loop reference in `serial` and an OpenMP version in
// `parallel`. Work items draw randomness from generators seeded by
// (seed, stream, item index) and reductions break ties toward the lowest
// index, so both versions return bit-identical results.

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "semirange/form_evaluator.hpp"
#include "semirange/range_types.hpp"
#include "semirange/sphere_search.hpp"

namespace semirange::kernels {

inline constexpr std::uint64_t kSphereStream = 1;
inline constexpr std::uint64_t kOracleStream = 2;
inline constexpr std::uint64_t kAdaptiveStream = 3;
inline constexpr std::uint64_t kStartStream = 4;

/// Maximizer of h(theta) over a disk family: value and the first disk attaining it.
struct SupportScan {
  std::vector<double> value;
  std::vector<int> argmax;
};

/// One local search: maximize the support objective at `theta` (or the radius
/// objective when `theta` is NaN) from `start`.
struct SearchTask {
  double theta = std::nan("");
  ComplexVector start;
};

inline Disk disk_at(const FormEvaluator& eval, QValue q, const ComplexVector& u) {
  const auto f = eval.forms(u);
  return {q.value() * f.txx, q.complement() * FormEvaluator::alpha(f)};
}

/// Re(e^{-i theta} q <Tx,x>_A) + sqrt(1-|q|^2) alpha(x): support of G(x) at theta.
inline double support_objective(const FormEvaluator& eval, QValue q, double theta, const ComplexVector& u) {
  const auto f = eval.forms(u);
  return (std::polar(1.0, -theta) * q.value() * f.txx).real() + q.complement() * FormEvaluator::alpha(f);
}

/// |q| |<Tx,x>_A| + sqrt(1-|q|^2) alpha(x): the sup over z in closed form.
inline double radius_objective(const FormEvaluator& eval, QValue q, const ComplexVector& u) {
  const auto f = eval.forms(u);
  return q.modulus() * std::abs(f.txx) + q.complement() * FormEvaluator::alpha(f);
}

inline SearchResult run_task(const FormEvaluator& eval, QValue q, const SearchTask& task, const SearchOptions& opts) {
  if (std::isnan(task.theta)) {
    return maximize_on_sphere([&](const ComplexVector& u) { return radius_objective(eval, q, u); }, task.start, opts);
  }
  const double theta = task.theta;
  return maximize_on_sphere([&](const ComplexVector& u) { return support_objective(eval, q, theta, u); }, task.start,
                            opts);
}

/// Sample i of the uniform unit sphere in C^r for a given seed.
ComplexVector sphere_sample(int r, std::uint64_t seed, std::uint64_t index);

/// (x, z, phase) drawn independently: x uniform on the unit A-sphere, z uniform
/// on the unit sphere of the A-orthogonal complement of x, phase uniform.
PairSample pair_sample(const FormEvaluator& eval, QValue q, std::uint64_t seed, std::uint64_t index);

namespace serial {
std::vector<ComplexVector> sphere_samples(int r, int n, std::uint64_t seed);
std::vector<Disk> evaluate_disks(const FormEvaluator& eval, QValue q, std::span<const ComplexVector> coords);
SupportScan scan_support(std::span<const Disk> disks, std::span<const double> angles);
std::vector<SearchResult> run_searches(const FormEvaluator& eval, QValue q, std::span<const SearchTask> tasks,
                                       const SearchOptions& opts);
std::vector<PairSample> pair_samples(const FormEvaluator& eval, QValue q, int n, std::uint64_t seed);
std::vector<Complex> adaptive_pair_values(const FormEvaluator& eval, QValue q, int n, int n_bins, std::uint64_t seed);
}  // namespace serial

namespace parallel {
std::vector<ComplexVector> sphere_samples(int r, int n, std::uint64_t seed);
std::vector<Disk> evaluate_disks(const FormEvaluator& eval, QValue q, std::span<const ComplexVector> coords);
SupportScan scan_support(std::span<const Disk> disks, std::span<const double> angles);
std::vector<SearchResult> run_searches(const FormEvaluator& eval, QValue q, std::span<const SearchTask> tasks,
                                       const SearchOptions& opts);
std::vector<PairSample> pair_samples(const FormEvaluator& eval, QValue q, int n, std::uint64_t seed);
std::vector<Complex> adaptive_pair_values(const FormEvaluator& eval, QValue q, int n, int n_bins, std::uint64_t seed);
}  // namespace parallel

// Dispatch on the execution policy.
std::vector<ComplexVector> sphere_samples(Execution exec, int r, int n, std::uint64_t seed);
std::vector<Disk> evaluate_disks(Execution exec, const FormEvaluator& eval, QValue q,
                                 std::span<const ComplexVector> coords);
SupportScan scan_support(Execution exec, std::span<const Disk> disks, std::span<const double> angles);
std::vector<SearchResult> run_searches(Execution exec, const FormEvaluator& eval, QValue q,
                                       std::span<const SearchTask> tasks, const SearchOptions& opts);
std::vector<PairSample> pair_samples(Execution exec, const FormEvaluator& eval, QValue q, int n, std::uint64_t seed);
std::vector<Complex> adaptive_pair_values(Execution exec, const FormEvaluator& eval, QValue q, int n, int n_bins,
                                          std::uint64_t seed);

}  // namespace semirange::kernels
