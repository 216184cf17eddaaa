#pragma once

// Independent reference routes used only by the tests.

#include <cmath>
#include <complex>
#include <numbers>

namespace oracle {

using Complex = std::complex<double>;

// Square root with Im >= 0 computed from the polar angle in [0, 2 pi).
inline Complex upper_root(Complex z) {
  double arg = std::atan2(z.imag(), z.real());
  if (arg < 0.0) arg += 2.0 * std::numbers::pi;
  return std::polar(std::sqrt(std::abs(z)), 0.5 * arg);
}

// Free half-line: decaying solution e^{ikx}, m = -u'/u at the endpoint.
inline Complex free_m(Complex z) { return -Complex{0.0, 1.0} * upper_root(z); }

// Bessel nu = 3/2 on [1, inf): decaying solution u = e^{ikx}(1 + i/(kx)) (spherical Hankel, l = 1),
// m = -u'(1)/u(1) = -(ik - i/(k + i)).
inline Complex bessel32_m(Complex z) {
  const Complex i{0.0, 1.0};
  const Complex k = upper_root(z);
  return -(i * k - i / (k + i));
}

// Boundary value of Im(-m(t + i0))/pi for Bessel nu = 3/2: t^{3/2}/(pi (1 + t)).
inline double bessel32_density(double t) { return std::pow(t, 1.5) / (std::numbers::pi * (1.0 + t)); }

}  // namespace oracle
