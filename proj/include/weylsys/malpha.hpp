#pragma once

#include "weylsys/numerics.hpp"

namespace weylsys {

/// Boundary-condition angle for theta_alpha(ell) = cos(alpha), theta_alpha'(ell) = sin(alpha).
/// m_alpha is pi-periodic in alpha, so alpha is stored reduced to (-pi/2, pi/2].
class AlphaParam {
 public:
  static AlphaParam from_alpha(double alpha);
  /// tan_alpha may be +-infinity (alpha = pi/2).
  static AlphaParam from_tan(double tan_alpha);

  double alpha() const noexcept { return alpha_; }
  /// +infinity at alpha = pi/2.
  double tan_alpha() const noexcept { return tan_; }
  bool is_right_angle() const noexcept { return tan_ == kInfinity; }

 private:
  AlphaParam(double alpha, double tan_alpha) : alpha_(alpha), tan_(tan_alpha) {}
  double alpha_;
  double tan_;
};

/// m_alpha = (sin a + m cos a)/(cos a - m sin a). Throws PoleHit when the
/// normalized denominator is below pole_tol.
Complex m_alpha(Complex m_inf, const AlphaParam& a, double pole_tol = 1e-11);

/// -m_alpha = (tan a + m)/(tan a * m - 1), switched to the cot form for |tan a| > 1.
Complex neg_m_alpha(Complex m_inf, const AlphaParam& a, double pole_tol = 1e-11);

}  // namespace weylsys
