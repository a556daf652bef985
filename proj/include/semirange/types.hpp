#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace semirange {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Tolerances shared by every predicate in the library. All comparisons are
/// relative to the operand scale; see `nearly_equal`.
struct ToleranceConfig {
  double rank_tol = 1e-10;  // eigenvalue cutoff relative to the largest one
  double eq_tol = 1e-9;     // matrix / scalar equality
  double opt_tol = 1e-8;    // optimizer stopping threshold
  double geo_tol = 5e-2;    // set comparisons, relative to the set scale

  void validate() const;
};

/// A complex parameter inside the closed unit disk.
class QValue {
 public:
  QValue() = default;
  explicit QValue(Complex q);
  QValue(double re, double im = 0.0) : QValue(Complex(re, im)) {}

  Complex value() const { return q_; }
  double modulus() const { return std::abs(q_); }
  /// sqrt(1 - |q|^2), clamped at zero.
  double complement() const;
  bool on_circle(double tol = 1e-12) const { return modulus() >= 1.0 - tol; }
  bool is_real_nonnegative() const { return q_.imag() == 0.0 && q_.real() >= 0.0; }

 private:
  Complex q_{0.0, 0.0};
};

/// Spectral norm (largest singular value).
double spectral_norm(const ComplexMatrix& m);

/// `||x - y|| <= tol * max(1, ||x||, ||y||)` in the spectral norm.
bool nearly_equal(const ComplexMatrix& x, const ComplexMatrix& y, double tol);

/// Entry-wise finiteness and squareness.
void require_square_finite(const ComplexMatrix& m, const char* what);

/// Seed derivation for per-item generators; keeps parallel loops order-free.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

}  // namespace semirange
