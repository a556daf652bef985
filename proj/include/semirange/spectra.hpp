#pragma once

#include <utility>
#include <vector>

#include "semirange/semicore.hpp"

namespace semirange {

struct SpectrumReport {
  std::vector<Complex> point;   // A-point spectrum
  std::vector<Complex> full;    // A-spectrum
  std::vector<Complex> approx;  // A-approximate point spectrum
  double radius_exact = 0.0;
  std::vector<std::pair<int, double>> radius_limit_estimates;  // (n, ||T^n||_A^{1/n})
};

/// Eigenvalues of the compression P T restricted to R(A), in R(A) coordinates.
std::vector<Complex> a_point_spectrum(const PsdContext& ctx, const ComplexMatrix& t);

/// Eigenvalues of T~. In finite dimension this is also the point and the
/// approximate point spectrum.
std::vector<Complex> a_spectrum(const PsdContext& ctx, const ComplexMatrix& t);

/// radius_exact and the Gelfand-type estimates for n = 1..n_max.
SpectrumReport a_spectral_radius(const PsdContext& ctx, const ComplexMatrix& t, int n_max);

/// All three spectra plus the radius data.
SpectrumReport spectrum_report(const PsdContext& ctx, const ComplexMatrix& t, int n_max);

/// Eigenvalues sorted by (real, imag) so output order is reproducible.
std::vector<Complex> sorted_eigenvalues(const ComplexMatrix& m);

/// Collapse a multiset into representatives at least `radius` apart.
std::vector<Complex> cluster(const std::vector<Complex>& values, double radius);

/// Set-level equality: every element of each side is within `radius` of the other side.
bool same_set(const std::vector<Complex>& lhs, const std::vector<Complex>& rhs, double radius);

}  // namespace semirange
