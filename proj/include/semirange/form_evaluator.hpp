#pragma once

#include <cmath>

#include "semirange/semicore.hpp"

namespace semirange {

/// Evaluates the A-forms of T at x = B u, where u runs over the unit sphere of
/// C^r and B maps it onto unit-A-norm representatives. Products are taken in
/// H with A and T themselves.
class FormEvaluator {
 public:
  FormEvaluator(const PsdContext& ctx, const ComplexMatrix& t)
      : lift_(ctx.sphere_map()),
        t_lift_(t * ctx.sphere_map()),
        a_lift_(ctx.a() * ctx.sphere_map()),
        at_lift_(ctx.a() * t * ctx.sphere_map()) {}

  struct Forms {
    Complex txx;      // <Tx, x>_A
    double residual2;  // ||Tx - <Tx,x>_A x||_A^2 = ||Tx||_A^2 - |<Tx,x>_A|^2
  };

  int coord_dim() const { return static_cast<int>(lift_.cols()); }
  ComplexVector lift(const ComplexVector& u) const { return lift_ * u; }

  Forms forms(const ComplexVector& u) const {
    const ComplexVector x = lift_ * u;
    const ComplexVector tx = t_lift_ * u;
    const ComplexVector atx = at_lift_ * u;
    const Complex c = x.dot(atx);
    return {c, (tx - c * x).dot(atx - c * (a_lift_ * u)).real()};
  }

  /// <Tx, z>_A for x = B u, z = B v.
  Complex cross(const ComplexVector& u, const ComplexVector& v) const { return (lift_ * v).dot(at_lift_ * u); }

  static double alpha(const Forms& f) { return std::sqrt(std::max(0.0, f.residual2)); }

 private:
  ComplexMatrix lift_, t_lift_, a_lift_, at_lift_;
};

}  // namespace semirange
