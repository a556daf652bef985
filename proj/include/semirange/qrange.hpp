#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "semirange/range_types.hpp"
#include "semirange/report.hpp"
#include "semirange/semicore.hpp"

namespace semirange {

/// y = conj(q) x + sqrt(1-|q|^2) z for a given A-orthonormal pair (x, z).
ComplexVector compose_pair(const PsdContext& ctx, const ComplexVector& x, const ComplexVector& z, QValue q);

/// Completes a unit-A-norm x to (y, z) with <x,z>_A = 0, ||z||_A = 1 and
/// <x,y>_A = q; z is a pseudo-random direction of the A-orthogonal complement.
/// Throws RankTooSmall when rank(A) < 2.
std::pair<ComplexVector, ComplexVector> complete_pair(const PsdContext& ctx, const ComplexVector& x, QValue q,
                                                      std::uint64_t seed);

/// (||Tx||_A^2 - |<Tx,x>_A|^2)^{1/2} for ||x||_A = 1.
double alpha(const PsdContext& ctx, const ComplexMatrix& t, const ComplexVector& x);

/// W_{q,A}(T) as a union of disks, with support function, envelope and hull.
///
/// Dispatch: |q| = 1 collapses to q W_A(T) (zero-radius disks); rank 2 falls
/// back to direct pair sampling; rank >= 3 uses the disk-union formula on
/// `n_x` random base vectors plus `n_refine` locally optimized supporting
/// disks. Throws EmptyRange for rank(A) <= 1 with |q| < 1.
RangeEstimate range_disk_union(const PsdContext& ctx, const ComplexMatrix& t, QValue q, const SampleConfig& cfg);

struct RadiusResult {
  double value = 0.0;
  double sampled_lower = 0.0;  // best value among the random base vectors
  ComplexVector witness;       // unit-A-norm x attaining `value`
};

/// w_{q,A}(T) = sup over the unit A-sphere of |q||<Tx,x>_A| + sqrt(1-|q|^2) alpha(x).
/// `extra_starts` are H-vectors added to the optimizer's start set.
RadiusResult q_radius_detailed(const PsdContext& ctx, const ComplexMatrix& t, QValue q, const SampleConfig& cfg,
                               std::span<const ComplexVector> extra_starts = {});
double q_radius(const PsdContext& ctx, const ComplexMatrix& t, QValue q, const SampleConfig& cfg);

/// Independent uniform (x, z, phase) samples of W_{q,A}(T).
std::vector<PairSample> oracle_pair_samples(const PsdContext& ctx, const ComplexMatrix& t, QValue q, int n,
                                            std::uint64_t seed, Execution exec = Execution::parallel);

/// `n` values of W_{q,A}(T) from the same parameterization, where four fifths
/// of the budget hill-climb toward the supporting points of `n_bins`
/// directions. Every value is an element of the range.
std::vector<Complex> adaptive_oracle_values(const PsdContext& ctx, const ComplexMatrix& t, QValue q, int n,
                                            std::uint64_t seed, Execution exec = Execution::parallel,
                                            int n_bins = 128);

/// Hausdorff distance between the hulls of two estimates.
double hull_distance(const RangeEstimate& lhs, const RangeEstimate& rhs);

/// Relative spread (max h - min h) / max |h| of the support function.
double support_variation(const RangeEstimate& range);

/// Spectral inclusion, q W_A inclusion and the reduced-operator equality.
VerificationReport verify_inclusions(const PsdContext& ctx, const ComplexMatrix& t, QValue q, const SampleConfig& cfg);

}  // namespace semirange
