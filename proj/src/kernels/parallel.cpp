// OpenMP implementations. Each loop writes into preallocated slots so the
// result does not depend on the schedule.

#include <limits>

#include <omp.h>

#include "pair_chain.hpp"
#include "semirange/geometry.hpp"

namespace semirange::kernels::parallel {

std::vector<ComplexVector> sphere_samples(int r, int n, std::uint64_t seed) {
  std::vector<ComplexVector> out(static_cast<size_t>(n));
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) out[i] = sphere_sample(r, seed, static_cast<std::uint64_t>(i));
  return out;
}

std::vector<Disk> evaluate_disks(const FormEvaluator& eval, QValue q, std::span<const ComplexVector> coords) {
  const int n = static_cast<int>(coords.size());
  std::vector<Disk> out(coords.size());
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) out[i] = disk_at(eval, q, coords[i]);
  return out;
}

SupportScan scan_support(std::span<const Disk> disks, std::span<const double> angles) {
  const int m = static_cast<int>(angles.size());
  SupportScan scan{std::vector<double>(m, -std::numeric_limits<double>::infinity()), std::vector<int>(m, -1)};
  const int nd = static_cast<int>(disks.size());
  // Angle-major order: each thread owns a slice of the grid.
#pragma omp parallel for schedule(static)
  for (int k = 0; k < m; ++k) {
    const Complex rot = std::polar(1.0, -angles[k]);
    double best = -std::numeric_limits<double>::infinity();
    int arg = -1;
    for (int j = 0; j < nd; ++j) {
      const double v = (rot * disks[j].center).real() + disks[j].radius;
      if (v > best) {
        best = v;
        arg = j;
      }
    }
    scan.value[k] = best;
    scan.argmax[k] = arg;
  }
  return scan;
}

std::vector<SearchResult> run_searches(const FormEvaluator& eval, QValue q, std::span<const SearchTask> tasks,
                                       const SearchOptions& opts) {
  const int n = static_cast<int>(tasks.size());
  std::vector<SearchResult> out(tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < n; ++i) out[i] = run_task(eval, q, tasks[i], opts);
  return out;
}

std::vector<PairSample> pair_samples(const FormEvaluator& eval, QValue q, int n, std::uint64_t seed) {
  std::vector<PairSample> out(static_cast<size_t>(n));
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) out[i] = pair_sample(eval, q, seed, static_cast<std::uint64_t>(i));
  return out;
}

std::vector<Complex> adaptive_pair_values(const FormEvaluator& eval, QValue q, int n, int n_bins, std::uint64_t seed) {
  const int r = eval.coord_dim();
  const int n0 = std::max(n_bins, n / 5);
  std::vector<detail::PairCoords> pool(static_cast<size_t>(n0));
  std::vector<Complex> head(static_cast<size_t>(n0));
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n0; ++i) {
    std::mt19937_64 rng(mix_seed(seed, kOracleStream, static_cast<std::uint64_t>(i)));
    pool[i] = detail::random_pair(r, rng);
    head[i] = detail::pair_value(eval, q, pool[i]);
  }
  const auto angles = geometry::angle_grid(n_bins);
  const int steps = std::max(0, (n - n0) / n_bins);
  std::vector<std::vector<Complex>> chains(static_cast<size_t>(n_bins));
#pragma omp parallel for schedule(dynamic, 1)
  for (int k = 0; k < n_bins; ++k) {
    const Complex rot = std::polar(1.0, -angles[k]);
    int best = 0;
    for (int i = 1; i < n0; ++i)
      if ((rot * head[i]).real() > (rot * head[best]).real()) best = i;
    chains[k] = detail::climb(eval, q, angles[k], pool[best], (rot * head[best]).real(), steps, seed,
                              static_cast<std::uint64_t>(k));
  }
  std::vector<Complex> values = std::move(head);
  for (auto& c : chains) values.insert(values.end(), c.begin(), c.end());
  return values;
}

}  // namespace semirange::kernels::parallel
