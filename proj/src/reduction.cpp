#include "semirange/reduction.hpp"

#include <algorithm>
#include <random>

namespace semirange {

TildeOperator build_tilde(const PsdContext& ctx, const ComplexMatrix& t) {
  require_a_bounded(ctx, t);
  // Lambda_r^{1/2} (U_r^* T U_r) Lambda_r^{-1/2}
  return TildeOperator(ctx, ctx.embed_map() * t * ctx.sphere_map());
}

double tilde_consistency_check(const PsdContext& ctx, const ComplexMatrix& t, int n_samples, std::uint64_t seed) {
  if (n_samples < 1) throw Error(ErrorKind::InvalidArgument, "n_samples must be >= 1");
  const TildeOperator tilde = build_tilde(ctx, t);
  const int n = ctx.dim();
  double worst = 0.0;
  for (int s = 0; s < n_samples; ++s) {
    std::mt19937_64 rng(mix_seed(seed, 0x7117, static_cast<std::uint64_t>(s)));
    std::normal_distribution<double> normal;
    ComplexVector x(n);
    for (int i = 0; i < n; ++i) x(i) = Complex(normal(rng), normal(rng));
    const double residual = (tilde.embed(t * x) - tilde.matrix() * tilde.embed(x)).norm() / x.norm();
    worst = std::max(worst, residual);
  }
  return worst;
}

}  // namespace semirange
