#include "semirange/types.hpp"

#include <cmath>
#include <string>

#include "semirange/errors.hpp"

namespace semirange {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NegativeEigenvalue: return "NegativeEigenvalue";
    case ErrorKind::NotABounded: return "NotABounded";
    case ErrorKind::RankTooSmall: return "RankTooSmall";
    case ErrorKind::NotUnitANorm: return "NotUnitANorm";
    case ErrorKind::EmptyRange: return "EmptyRange";
    case ErrorKind::NotASelfAdjoint: return "NotASelfAdjoint";
    case ErrorKind::NotANilpotent2: return "NotANilpotent2";
    case ErrorKind::QZero: return "QZero";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

void ToleranceConfig::validate() const {
  if (!(rank_tol > 0 && eq_tol > 0 && opt_tol > 0 && geo_tol > 0)) {
    throw Error(ErrorKind::InvalidArgument, "tolerances must be strictly positive");
  }
}

QValue::QValue(Complex q) : q_(q) {
  if (!std::isfinite(q.real()) || !std::isfinite(q.imag())) {
    throw Error(ErrorKind::InvalidArgument, "q must be finite");
  }
  const double m = std::abs(q);
  if (m > 1.0 + 1e-12) {
    throw Error(ErrorKind::InvalidArgument, "|q| must not exceed 1, got " + std::to_string(m));
  }
  if (m > 1.0) q_ = q / m;
}

double QValue::complement() const {
  const double m = modulus();
  return std::sqrt(std::max(0.0, 1.0 - m * m));
}

double spectral_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

bool nearly_equal(const ComplexMatrix& x, const ComplexMatrix& y, double tol) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
  const double scale = std::max({1.0, spectral_norm(x), spectral_norm(y)});
  return spectral_norm(x - y) <= tol * scale;
}

void require_square_finite(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " must be a non-empty square matrix");
  }
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const Complex v = m(i, j);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw Error(ErrorKind::InvalidArgument, std::string(what) + " has a non-finite entry");
      }
    }
  }
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  // splitmix64 finalizer over a combined key
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1) + 0xbf58476d1ce4e5b9ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace semirange
