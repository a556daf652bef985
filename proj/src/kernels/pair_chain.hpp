#pragma once

// Shared per-item work for the pair samplers; included by both kernel sets.

#include <cstdint>
#include <random>
#include <vector>

#include "semirange/kernels.hpp"

namespace semirange::kernels::detail {

struct PairCoords {
  ComplexVector u;  // coordinates of x
  ComplexVector w;  // coordinates of z, orthogonal to u
  double phase = 0.0;
};

PairCoords random_pair(int r, std::mt19937_64& rng);
Complex pair_value(const FormEvaluator& eval, QValue q, const PairCoords& p);

/// Hill-climbing chain on Re(e^{-i theta} value) from `start`: returns every
/// proposed value (accepted or not), `n_steps` in total.
std::vector<Complex> climb(const FormEvaluator& eval, QValue q, double theta, PairCoords start,
                           double start_score, int n_steps, std::uint64_t seed, std::uint64_t bin);

}  // namespace semirange::kernels::detail
