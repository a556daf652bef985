#pragma once

#include <cstdint>

#include "semirange/semicore.hpp"

namespace semirange {

/// The operator T~ on the Hilbert space R(A^{1/2}), written in the orthonormal
/// coordinates given by the retained eigenvectors of A (descending eigenvalue).
///
/// Coordinates of Z_A x = Ax are `embed(x) = Lambda^{1/2} U_r^* x`, and the
/// intertwining relation reads `embed(T x) = matrix() * embed(x)`.
class TildeOperator {
 public:
  TildeOperator(const PsdContext& ctx, ComplexMatrix matrix) : ctx_(&ctx), matrix_(std::move(matrix)) {}

  int rank() const { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }
  ComplexVector embed(const ComplexVector& x) const { return ctx_->embed_map() * x; }
  const PsdContext& context() const { return *ctx_; }

 private:
  const PsdContext* ctx_;
  ComplexMatrix matrix_;
};

/// Requires T in B_{A^{1/2}}; throws NotABounded otherwise. The context must
/// outlive the returned operator.
TildeOperator build_tilde(const PsdContext& ctx, const ComplexMatrix& t);

/// Largest intertwining residual ||embed(Tx) - T~ embed(x)|| / ||x|| over
/// `n_samples` Gaussian vectors.
double tilde_consistency_check(const PsdContext& ctx, const ComplexMatrix& t, int n_samples, std::uint64_t seed);

}  // namespace semirange
