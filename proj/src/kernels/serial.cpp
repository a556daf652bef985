// Reference implementations: plain loops, no threading.

#include <limits>

#include "pair_chain.hpp"
#include "semirange/geometry.hpp"

namespace semirange::kernels::serial {

std::vector<ComplexVector> sphere_samples(int r, int n, std::uint64_t seed) {
  std::vector<ComplexVector> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(sphere_sample(r, seed, static_cast<std::uint64_t>(i)));
  return out;
}

std::vector<Disk> evaluate_disks(const FormEvaluator& eval, QValue q, std::span<const ComplexVector> coords) {
  std::vector<Disk> out;
  out.reserve(coords.size());
  for (const auto& u : coords) out.push_back(disk_at(eval, q, u));
  return out;
}

SupportScan scan_support(std::span<const Disk> disks, std::span<const double> angles) {
  const size_t m = angles.size();
  SupportScan scan{std::vector<double>(m, -std::numeric_limits<double>::infinity()), std::vector<int>(m, -1)};
  std::vector<Complex> rot(m);
  for (size_t k = 0; k < m; ++k) rot[k] = std::polar(1.0, -angles[k]);
  // Disk-major order; strict comparison keeps the first maximizer.
  for (size_t j = 0; j < disks.size(); ++j) {
    for (size_t k = 0; k < m; ++k) {
      const double v = (rot[k] * disks[j].center).real() + disks[j].radius;
      if (v > scan.value[k]) {
        scan.value[k] = v;
        scan.argmax[k] = static_cast<int>(j);
      }
    }
  }
  return scan;
}

std::vector<SearchResult> run_searches(const FormEvaluator& eval, QValue q, std::span<const SearchTask> tasks,
                                       const SearchOptions& opts) {
  std::vector<SearchResult> out;
  out.reserve(tasks.size());
  for (const auto& task : tasks) out.push_back(run_task(eval, q, task, opts));
  return out;
}

std::vector<PairSample> pair_samples(const FormEvaluator& eval, QValue q, int n, std::uint64_t seed) {
  std::vector<PairSample> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(pair_sample(eval, q, seed, static_cast<std::uint64_t>(i)));
  return out;
}

std::vector<Complex> adaptive_pair_values(const FormEvaluator& eval, QValue q, int n, int n_bins, std::uint64_t seed) {
  const int r = eval.coord_dim();
  const int n0 = std::max(n_bins, n / 5);
  std::vector<detail::PairCoords> pool;
  std::vector<Complex> values;
  pool.reserve(static_cast<size_t>(n0));
  values.reserve(static_cast<size_t>(std::max(n, n0)));
  for (int i = 0; i < n0; ++i) {
    std::mt19937_64 rng(mix_seed(seed, kOracleStream, static_cast<std::uint64_t>(i)));
    pool.push_back(detail::random_pair(r, rng));
    values.push_back(detail::pair_value(eval, q, pool.back()));
  }
  const auto angles = geometry::angle_grid(n_bins);
  const int steps = std::max(0, (n - n0) / n_bins);
  for (int k = 0; k < n_bins; ++k) {
    const Complex rot = std::polar(1.0, -angles[k]);
    int best = 0;
    for (int i = 1; i < n0; ++i)
      if ((rot * values[i]).real() > (rot * values[best]).real()) best = i;
    auto chain = detail::climb(eval, q, angles[k], pool[best], (rot * values[best]).real(), steps, seed,
                               static_cast<std::uint64_t>(k));
    values.insert(values.end(), chain.begin(), chain.end());
  }
  return values;
}

}  // namespace semirange::kernels::serial
