#include "semirange/semicore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

namespace semirange {

namespace {

bool is_diagonal(const ComplexMatrix& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j && a(i, j) != Complex(0.0, 0.0)) return false;
  return true;
}

// Rotate each eigenvector so its largest-magnitude entry is real positive.
void canonicalize_phases(ComplexMatrix& v) {
  for (Eigen::Index j = 0; j < v.cols(); ++j) {
    Eigen::Index best = 0;
    v.col(j).cwiseAbs().maxCoeff(&best);
    const Complex pivot = v(best, j);
    if (std::abs(pivot) > 0) v.col(j) *= std::conj(pivot) / std::abs(pivot);
  }
}

void require_vector(const PsdContext& ctx, const ComplexVector& x) {
  if (x.size() != ctx.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "vector of size " + std::to_string(x.size()) + " against dimension " + std::to_string(ctx.dim()));
  }
}

void require_matrix(const PsdContext& ctx, const ComplexMatrix& t) {
  if (t.rows() != ctx.dim() || t.cols() != ctx.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "operator dimension does not match A");
  }
}

ComplexMatrix reduced(const PsdContext& ctx, const ComplexMatrix& t) {
  return ctx.embed_map() * t * ctx.sphere_map();
}

}  // namespace

PsdContext build_context(const ComplexMatrix& a, const ToleranceConfig& tol) {
  tol.validate();
  require_square_finite(a, "A");
  const Eigen::Index n = a.rows();
  const double scale = std::max(1.0, spectral_norm(a));
  if (spectral_norm(a - a.adjoint()) > tol.eq_tol * scale) {
    throw Error(ErrorKind::NotHermitian, "A is not Hermitian within tolerance");
  }

  RealVector raw(n);
  ComplexMatrix vecs(n, n);
  if (is_diagonal(a)) {
    for (Eigen::Index i = 0; i < n; ++i) raw(i) = a(i, i).real();
    vecs.setIdentity();
  } else {
    const ComplexMatrix herm = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(herm);
    raw = es.eigenvalues();
    vecs = es.eigenvectors();
    canonicalize_phases(vecs);
  }

  // Descending order; equal eigenvalues keep their original column order.
  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index l, Eigen::Index r) { return raw(l) > raw(r); });

  PsdContext ctx;
  ctx.tol_ = tol;
  ctx.eigenvalues_.resize(n);
  ctx.eigenvectors_.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    ctx.eigenvalues_(k) = raw(order[k]);
    ctx.eigenvectors_.col(k) = vecs.col(order[k]);
  }

  const double top = std::max(0.0, ctx.eigenvalues_(0));
  const double cutoff = tol.rank_tol * top;
  if (ctx.eigenvalues_(n - 1) < -cutoff) {
    throw Error(ErrorKind::NegativeEigenvalue,
                "A has eigenvalue " + std::to_string(ctx.eigenvalues_(n - 1)) + " below the positivity cutoff");
  }
  int rank = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (top > 0 && ctx.eigenvalues_(k) > cutoff) {
      ++rank;
    } else {
      ctx.eigenvalues_(k) = 0.0;
    }
  }
  ctx.rank_ = rank;

  const ComplexMatrix ur = ctx.eigenvectors_.leftCols(rank);
  const RealVector lam = ctx.eigenvalues_.head(rank);
  const RealVector sqrt_lam = lam.cwiseSqrt();
  const RealVector inv_lam = lam.cwiseInverse();
  const RealVector inv_sqrt = sqrt_lam.cwiseInverse();

  ctx.a_ = ur * lam.asDiagonal() * ur.adjoint();
  ctx.a_half_ = ur * sqrt_lam.asDiagonal() * ur.adjoint();
  ctx.a_pinv_ = ur * inv_lam.asDiagonal() * ur.adjoint();
  ctx.a_half_pinv_ = ur * inv_sqrt.asDiagonal() * ur.adjoint();
  ctx.projector_ = ur * ur.adjoint();
  ctx.sphere_map_ = ur * inv_sqrt.asDiagonal();
  ctx.embed_map_ = sqrt_lam.asDiagonal() * ur.adjoint();
  if (rank == 0) {
    ctx.a_.setZero(n, n);
    ctx.a_half_.setZero(n, n);
    ctx.a_pinv_.setZero(n, n);
    ctx.a_half_pinv_.setZero(n, n);
    ctx.projector_.setZero(n, n);
    ctx.sphere_map_.resize(n, 0);
    ctx.embed_map_.resize(0, n);
  }
  return ctx;
}

Complex semi_inner(const PsdContext& ctx, const ComplexVector& x, const ComplexVector& y) {
  require_vector(ctx, x);
  require_vector(ctx, y);
  // Eigen's dot conjugates its left operand: y.dot(Ax) = y^* A x = <Ax, y>.
  return y.dot(ctx.a() * x);
}

double a_norm(const PsdContext& ctx, const ComplexVector& x) {
  return std::sqrt(std::max(0.0, semi_inner(ctx, x, x).real()));
}

ComplexMatrix sharp_adjoint(const PsdContext& ctx, const ComplexMatrix& t) {
  require_matrix(ctx, t);
  return ctx.a_pinv() * t.adjoint() * ctx.a();
}

bool is_a_bounded(const PsdContext& ctx, const ComplexMatrix& t) {
  require_matrix(ctx, t);
  if (ctx.rank() == ctx.dim()) return true;
  const double bound = ctx.tol().eq_tol * std::max(1.0, spectral_norm(ctx.a()) * spectral_norm(t));
  const ComplexMatrix image = ctx.a() * t * ctx.null_basis();
  for (Eigen::Index j = 0; j < image.cols(); ++j) {
    if (image.col(j).norm() > bound) return false;
  }
  return true;
}

bool is_in_b_a(const PsdContext& ctx, const ComplexMatrix& t) {
  require_matrix(ctx, t);
  const ComplexMatrix ident = ComplexMatrix::Identity(ctx.dim(), ctx.dim());
  const ComplexMatrix residual = (ident - ctx.projector()) * t.adjoint() * ctx.a();
  const double bound = ctx.tol().eq_tol * std::max(1.0, spectral_norm(ctx.a()) * spectral_norm(t));
  return spectral_norm(residual) <= bound;
}

void require_a_bounded(const PsdContext& ctx, const ComplexMatrix& t) {
  if (!is_a_bounded(ctx, t)) {
    throw Error(ErrorKind::NotABounded, "T maps a null vector of A outside N(A)");
  }
}

double a_operator_norm(const PsdContext& ctx, const ComplexMatrix& t) {
  require_a_bounded(ctx, t);
  if (ctx.rank() == 0) return 0.0;
  return spectral_norm(reduced(ctx, t));
}

double a_operator_norm_rayleigh(const PsdContext& ctx, const ComplexMatrix& t) {
  require_a_bounded(ctx, t);
  if (ctx.rank() == 0) return 0.0;
  const ComplexMatrix& b = ctx.sphere_map();
  const ComplexMatrix gram = b.adjoint() * t.adjoint() * ctx.a() * t * b;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (gram + gram.adjoint()), Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

bool is_a_selfadjoint(const PsdContext& ctx, const ComplexMatrix& t) {
  require_matrix(ctx, t);
  return nearly_equal(ctx.a() * t, t.adjoint() * ctx.a(), ctx.tol().eq_tol);
}

std::optional<int> a_nilpotent_index(const PsdContext& ctx, const ComplexMatrix& t, int max_index) {
  require_matrix(ctx, t);
  if (max_index < 1) throw Error(ErrorKind::InvalidArgument, "max_index must be >= 1");
  const double a_norm_value = spectral_norm(ctx.a());
  const double t_norm = spectral_norm(t);
  ComplexMatrix power = ComplexMatrix::Identity(ctx.dim(), ctx.dim());
  for (int k = 1; k <= max_index; ++k) {
    power = power * t;
    const double residual = spectral_norm(ctx.a() * power);
    if (residual <= ctx.tol().eq_tol * a_norm_value * std::pow(t_norm, k)) return k;
  }
  return std::nullopt;
}

std::optional<int> nilpotent_index(const ComplexMatrix& t, double eq_tol, int max_index) {
  if (max_index < 1) throw Error(ErrorKind::InvalidArgument, "max_index must be >= 1");
  const double t_norm = spectral_norm(t);
  ComplexMatrix power = ComplexMatrix::Identity(t.rows(), t.cols());
  for (int k = 1; k <= max_index; ++k) {
    power = power * t;
    if (spectral_norm(power) <= eq_tol * std::pow(t_norm, k)) return k;
  }
  return std::nullopt;
}

ClassificationReport classify(const PsdContext& ctx, const ComplexMatrix& t, int max_index) {
  require_matrix(ctx, t);
  const double eq = ctx.tol().eq_tol;
  ClassificationReport rep;
  rep.is_a_bounded = is_a_bounded(ctx, t);
  rep.is_in_b_a = is_in_b_a(ctx, t);

  const ComplexMatrix at = ctx.a() * t;
  rep.is_a_selfadjoint = nearly_equal(at, t.adjoint() * ctx.a(), eq);
  if (rep.is_a_selfadjoint) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (at + at.adjoint()), Eigen::EigenvaluesOnly);
    rep.is_a_positive = es.eigenvalues().minCoeff() >= -eq * std::max(1.0, spectral_norm(at));
  }
  if (rep.is_in_b_a) {
    const ComplexMatrix sharp = sharp_adjoint(ctx, t);
    rep.is_a_normal = nearly_equal(t * sharp, sharp * t, eq);
    rep.is_a_unitary = nearly_equal(t.adjoint() * ctx.a() * t, ctx.a(), eq) &&
                       nearly_equal(sharp.adjoint() * ctx.a() * sharp, ctx.a(), eq);
  }
  rep.a_nilpotent_index = a_nilpotent_index(ctx, t, max_index);
  rep.nilpotent_index = nilpotent_index(t, eq, max_index);
  return rep;
}

ComplexMatrix haar_unitary(int n, std::uint64_t seed) {
  std::mt19937_64 rng(mix_seed(seed, 0x5a5a, 0));
  std::normal_distribution<double> normal;
  ComplexMatrix g(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) g(i, j) = Complex(normal(rng), normal(rng));
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the column phases so the distribution is Haar rather than QR-biased.
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

ComplexMatrix generate_a_unitary(const PsdContext& ctx, std::uint64_t seed) {
  if (ctx.rank() < 1) throw Error(ErrorKind::RankTooSmall, "A-unitary generation needs rank(A) >= 1");
  const int n = ctx.dim();
  const ComplexMatrix v = haar_unitary(ctx.rank(), seed);
  const ComplexMatrix ident = ComplexMatrix::Identity(n, n);
  return ctx.sphere_map() * v * ctx.embed_map() + (ident - ctx.projector());
}

}  // namespace semirange
