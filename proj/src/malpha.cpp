#include "weylsys/malpha.hpp"

#include <cmath>
#include <numbers>

namespace weylsys {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;
// Angles this close to pi/2 are treated as exactly pi/2 (tan = infinity).
constexpr double kRightAngleTol = 1e-14;

Complex checked_ratio(Complex num, Complex den, double pole_tol) {
  if (std::abs(den) < pole_tol) throw Error(ErrorKind::PoleHit, "evaluation point is a pole of m_alpha");
  return num / den;
}

}  // namespace

AlphaParam AlphaParam::from_alpha(double alpha) {
  if (!std::isfinite(alpha)) throw Error(ErrorKind::InvalidArgument, "alpha must be finite");
  double a = std::remainder(alpha, std::numbers::pi);  // [-pi/2, pi/2]
  if (std::abs(a - kHalfPi) <= kRightAngleTol || std::abs(a + kHalfPi) <= kRightAngleTol) {
    return AlphaParam(kHalfPi, kInfinity);
  }
  if (std::abs(a) <= 1e-300) a = 0.0;
  return AlphaParam(a, std::tan(a));
}

AlphaParam AlphaParam::from_tan(double tan_alpha) {
  if (std::isnan(tan_alpha)) throw Error(ErrorKind::InvalidArgument, "tan(alpha) is NaN");
  if (is_infinite(tan_alpha)) return AlphaParam(kHalfPi, kInfinity);
  return AlphaParam(std::atan(tan_alpha), tan_alpha);
}

Complex m_alpha(Complex m_inf, const AlphaParam& a, double pole_tol) {
  const double t = a.tan_alpha();
  if (t == kInfinity) return checked_ratio(-1.0, m_inf, pole_tol);
  if (t == 0.0) return m_inf;
  if (std::abs(t) <= 1.0) return checked_ratio(t + m_inf, 1.0 - t * m_inf, pole_tol);
  const double c = 1.0 / t;
  return checked_ratio(1.0 + c * m_inf, c - m_inf, pole_tol);
}

Complex neg_m_alpha(Complex m_inf, const AlphaParam& a, double pole_tol) {
  const double t = a.tan_alpha();
  if (t == kInfinity) return checked_ratio(1.0, m_inf, pole_tol);
  if (t == 0.0) return -m_inf;
  if (std::abs(t) <= 1.0) return checked_ratio(t + m_inf, t * m_inf - 1.0, pole_tol);
  const double c = 1.0 / t;
  return checked_ratio(1.0 + c * m_inf, m_inf - c, pole_tol);
}

}  // namespace weylsys
