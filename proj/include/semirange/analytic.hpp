#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semirange/range_types.hpp"
#include "semirange/semicore.hpp"

namespace semirange {

/// Closed elliptic disk with foci `focus1`, `focus2`; major axis along
/// `rotation`. Degenerates to a segment (b = 0) or a point (a = 0).
struct EllipseSpec {
  Complex focus1, focus2, center;
  double semi_major = 0.0;
  double semi_minor = 0.0;
  double rotation = 0.0;
  double lambda_max = 0.0;  // lambda_1
  double lambda_min = 0.0;  // lambda_m
};

/// W_{q,A}(T) for A-self-adjoint T: foci q lambda_1, q lambda_m and minor axis
/// sqrt(1-|q|^2)(lambda_1 - lambda_m), lambda the extreme A-eigenvalues.
EllipseSpec selfadjoint_ellipse(const PsdContext& ctx, const ComplexMatrix& t, QValue q);
std::vector<Complex> ellipse_region(const EllipseSpec& e, int n_points = 2048);

/// (1 + sqrt(1-|q|^2)) / 2
double square_zero_factor(QValue q);
/// (1 - 3q^2/4 + q sqrt(1-q^2))^{1/2}, real q in [0, 1).
double prior_square_zero_factor(double q);

struct Nilpotent2Record {
  bool is_disk = false;
  double variation = 0.0;  // relative spread of the support function
  double radius = 0.0;     // w_{q,A}(T)
  double bound = 0.0;      // (1+sqrt(1-|q|^2))/2 ||T||_A
  bool bound_holds = false;
};

/// Requires A-nilpotency of index 2 (NotANilpotent2) and T in B_{A^{1/2}}.
Nilpotent2Record nilpotent2_check(const PsdContext& ctx, const ComplexMatrix& t, QValue q, const SampleConfig& cfg);

/// [[0, S], [0, 0]] and [[0, S1, 0], [0, 0, S2], [0, 0, 0]] with square blocks.
ComplexMatrix square_zero_block(const ComplexMatrix& s);
ComplexMatrix index3_block(const ComplexMatrix& s1, const ComplexMatrix& s2);

/// Exact q-numerical radius of [[0, S], [0, 0]] for Hermitian S and q in [0, 1].
double squarezero_exact_radius(const ComplexMatrix& s, double q);

/// Upper bound on w_q of the index-3 block operator from the block norms.
double index3_bound(double norm_s1, double norm_s2, QValue q);

struct BoundLedger {
  double measured = 0.0;      // w_{q,A}(T)
  double norm_a = 0.0;        // ||T||_A
  double w_a_estimate = 0.0;  // w_A(T)
  std::optional<double> lower_numerical_radius;   // |q| w_A
  std::optional<double> lower_half_norm;          // |q|/2 ||T||_A
  std::optional<double> upper_norm;               // ||T||_A
  std::optional<double> selfadjoint_lower;        // |q| ||T||_A
  std::optional<double> nilpotent2_upper;         // (1+sqrt(1-|q|^2))/2 ||T||_A
  std::optional<double> prior_square_zero_upper;  // (1-3q^2/4+q sqrt(1-q^2))^{1/2} ||T||_A
  std::optional<double> index3_upper;
  double slack = 0.0;
  std::vector<std::string> violations;

  bool holds() const { return violations.empty(); }
};

/// Populates every bound that applies to (T, q) and records violations.
/// `block_norms` enables the index-3 bound for block operators.
BoundLedger bound_ledger(const PsdContext& ctx, const ComplexMatrix& t, QValue q, const SampleConfig& cfg,
                         std::optional<std::pair<double, double>> block_norms = std::nullopt);

/// (n, w_{q,A}(T^n)^{1/n}) for n = 1..n_max. Requires q != 0 and T in B_A.
std::vector<std::pair<int, double>> power_limit_check(const PsdContext& ctx, const ComplexMatrix& t, QValue q,
                                                      int n_max, const SampleConfig& cfg);

struct EquivalenceRecord {
  double radius_diff = 0.0;
  double hull_hausdorff = 0.0;
  double radius_budget = 0.0;
  double hull_budget = 0.0;
};

/// Compares T with U T U^# for the A-unitary U = generate_a_unitary(seed).
EquivalenceRecord unitary_equivalence_check(const PsdContext& ctx, const ComplexMatrix& t, QValue q,
                                            std::uint64_t seed, const SampleConfig& cfg);
/// Same comparison for a caller-supplied A-unitary.
EquivalenceRecord unitary_equivalence_check(const PsdContext& ctx, const ComplexMatrix& t, QValue q,
                                            const ComplexMatrix& u, const SampleConfig& cfg);

}  // namespace semirange
