#pragma once

#include <cstdint>
#include <optional>

#include "semirange/errors.hpp"
#include "semirange/types.hpp"

namespace semirange {

/// The semi-Hilbertian geometry induced by a positive semidefinite A.
///
/// Built once from A and immutable afterwards. The spectral factorization is
/// stored with eigenvalues in descending order; eigenvalues at or below
/// `rank_tol * lambda_1` are discarded and treated as exactly zero, so `a()`
/// returns the clamped reconstruction rather than the raw input.
class PsdContext {
 public:
  int dim() const { return static_cast<int>(a_.rows()); }
  int rank() const { return rank_; }
  const ToleranceConfig& tol() const { return tol_; }

  const ComplexMatrix& a() const { return a_; }
  const ComplexMatrix& a_half() const { return a_half_; }
  const ComplexMatrix& a_pinv() const { return a_pinv_; }
  const ComplexMatrix& a_half_pinv() const { return a_half_pinv_; }
  const ComplexMatrix& projector() const { return projector_; }

  /// All eigenvalues, descending, with the discarded tail set to zero.
  const RealVector& eigenvalues() const { return eigenvalues_; }
  /// Unitary eigenvector basis, columns ordered like `eigenvalues()`.
  const ComplexMatrix& eigenvectors() const { return eigenvectors_; }
  /// Retained eigenvectors (n x r), an orthonormal basis of R(A).
  ComplexMatrix range_basis() const { return eigenvectors_.leftCols(rank_); }
  /// Discarded eigenvectors (n x (n-r)), an orthonormal basis of N(A).
  ComplexMatrix null_basis() const { return eigenvectors_.rightCols(dim() - rank_); }
  /// Maps unit coordinates u in C^r to representatives x with ||x||_A = ||u||.
  const ComplexMatrix& sphere_map() const { return sphere_map_; }
  /// Maps x to the r coordinates of Z_A x = Ax; preserves the semi-inner product.
  const ComplexMatrix& embed_map() const { return embed_map_; }

  double a_norm_scale() const { return eigenvalues_.size() ? eigenvalues_(0) : 0.0; }

  friend PsdContext build_context(const ComplexMatrix& a, const ToleranceConfig& tol);

 private:
  PsdContext() = default;

  ToleranceConfig tol_;
  int rank_ = 0;
  RealVector eigenvalues_;
  ComplexMatrix eigenvectors_;
  ComplexMatrix a_, a_half_, a_pinv_, a_half_pinv_, projector_;
  ComplexMatrix sphere_map_, embed_map_;
};

PsdContext build_context(const ComplexMatrix& a, const ToleranceConfig& tol = {});

/// <x, y>_A = <Ax, y>, conjugate-linear in y.
Complex semi_inner(const PsdContext& ctx, const ComplexVector& x, const ComplexVector& y);
double a_norm(const PsdContext& ctx, const ComplexVector& x);

/// T^# = A^dagger T^* A.
ComplexMatrix sharp_adjoint(const PsdContext& ctx, const ComplexMatrix& t);

/// T(N(A)) contained in N(A), tested on the null basis.
bool is_a_bounded(const PsdContext& ctx, const ComplexMatrix& t);
/// R(T^* A) contained in R(A).
bool is_in_b_a(const PsdContext& ctx, const ComplexMatrix& t);
/// Throws NotABounded when `is_a_bounded` fails.
void require_a_bounded(const PsdContext& ctx, const ComplexMatrix& t);

/// ||T||_A as the largest singular value of the reduced operator.
double a_operator_norm(const PsdContext& ctx, const ComplexMatrix& t);
/// ||T||_A from the generalized Rayleigh quotient sup ||Tx||_A^2 / ||x||_A^2,
/// evaluated with H-space products only. Second route for cross-checks.
double a_operator_norm_rayleigh(const PsdContext& ctx, const ComplexMatrix& t);

struct ClassificationReport {
  bool is_a_bounded = false;
  bool is_in_b_a = false;
  bool is_a_selfadjoint = false;
  bool is_a_positive = false;
  bool is_a_normal = false;
  bool is_a_unitary = false;
  std::optional<int> a_nilpotent_index;
  std::optional<int> nilpotent_index;
};

ClassificationReport classify(const PsdContext& ctx, const ComplexMatrix& t, int max_index);

/// Least k <= max_index with ||A T^k|| <= eq_tol ||A|| ||T||^k.
std::optional<int> a_nilpotent_index(const PsdContext& ctx, const ComplexMatrix& t, int max_index);
std::optional<int> nilpotent_index(const ComplexMatrix& t, double eq_tol, int max_index);
bool is_a_selfadjoint(const PsdContext& ctx, const ComplexMatrix& t);

/// A-unitary built from a Haar unitary on the coordinates of R(A^{1/2}),
/// acting as the identity on N(A). Deterministic per seed.
ComplexMatrix generate_a_unitary(const PsdContext& ctx, std::uint64_t seed);

/// Haar-distributed unitary of size n.
ComplexMatrix haar_unitary(int n, std::uint64_t seed);

}  // namespace semirange
