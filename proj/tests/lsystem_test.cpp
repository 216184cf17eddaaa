#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "weylsys/lsystem.hpp"

using namespace weylsys;
using std::numbers::pi;

namespace {

const Complex kI{0.0, 1.0};

std::vector<Complex> upper_points() {
  std::vector<Complex> z;
  for (int k = 0; k < 20; ++k) z.push_back(std::polar(0.05 * std::pow(1.6, k), pi * (0.08 + 0.84 * k / 19.0)));
  return z;
}

}  // namespace

TEST_CASE("impedance examples") {
  const Complex m{1.2, -0.5};
  CHECK(std::abs(impedance_from_m(0.0, kI, m) + m) <= 1e-15);
  CHECK(std::abs(impedance_from_m(kInfinity, kI, m) - 1.0 / m) <= 1e-15);
  CHECK(std::abs(impedance_from_m(1.0, kI, 2.0 * kI) - Complex{0.6, -0.8}) <= 1e-15);
}

TEST_CASE("transfer examples") {
  const MFunction mf(bessel_potential(1.5), MMode::closed_form);
  const Complex z = kI;
  const Complex m = mf.eval(z).value;
  // mu = 0, h = i reproduces the closed-form transfer function of the example.
  const Complex k = principal_sqrt_upper(z);
  const Complex expected = ((kI - 1.0) * k + kI * z - 1.0 - kI) / ((1.0 + kI) * k - kI * z - 1.0 + kI);
  const LSystemParams sys(0.0, kI, mf);
  CHECK(std::abs(transfer(sys, z) - expected) <= 1e-14);
  CHECK(std::abs(transfer(sys, z) - Complex{-0.41421356237309505, 1.4142135623730951}) <= 1e-14);
  CHECK(std::abs(transfer_from_m(0.0, kI, m) + (m - kI) / (m + kI)) <= 1e-14);
  CHECK(transfer_from_m(1.0, kI, kI) == Complex{0.0, 0.0});
  CHECK(std::abs(transfer_from_m(kInfinity, kI, m) - (m - kI) / (m + kI)) <= 1e-15);
}

TEST_CASE("LSystemParams validation") {
  const MFunction mf(free_potential(0.0), MMode::closed_form);
  CHECK_THROWS_AS(LSystemParams(0.0, Complex{1.0, 0.0}, mf), Error);
  CHECK_THROWS_AS(LSystemParams(0.0, Complex{1.0, -1.0}, mf), Error);
  CHECK(LSystemParams(-kInfinity, kI, mf).mu_is_infinite());
}

TEST_CASE("quasi-kernel xi") {
  CHECK(quasi_kernel_xi(1.0, kI).xi == -1.0);
  CHECK(quasi_kernel_xi(0.0, kI).is_dirichlet());
  CHECK(quasi_kernel_xi(kInfinity, kI).xi == 0.0);
  CHECK(quasi_kernel_xi(kInfinity, Complex{2.0, 1.0}).xi == 2.0);
  CHECK(quasi_kernel_xi(3.0, Complex{1.0, 2.0}).xi == doctest::Approx((3.0 - 5.0) / 2.0));
}

TEST_CASE("realize") {
  const MFunction mf(bessel_potential(1.5), MMode::closed_form);
  const LSystemParams a = realize(RealizationTarget::neg_m_infinity, mf);
  CHECK(a.mu() == 0.0);
  CHECK(a.h() == kI);
  const LSystemParams b = realize(RealizationTarget::neg_m_alpha, mf, AlphaParam::from_tan(1.0));
  CHECK(b.mu() == 1.0);
  const LSystemParams c = realize(RealizationTarget::neg_m_alpha, mf, AlphaParam::from_alpha(pi / 2));
  CHECK(c.mu_is_infinite());
  CHECK(realize(RealizationTarget::recip_m_infinity, mf).mu_is_infinite());
  CHECK_THROWS_AS(realize(RealizationTarget::neg_m_alpha, mf), Error);
}

TEST_CASE("realization and phase-factor identities over alpha x z grids") {
  for (const MFunction& mf : {MFunction(bessel_potential(1.5), MMode::closed_form),
                              MFunction(free_potential(0.0), MMode::closed_form)}) {
    for (int j = 0; j < 32; ++j) {
      const double alpha = -pi / 2 + (j + 0.5) * pi / 32;
      const AlphaParam a = AlphaParam::from_alpha(alpha);
      const LSystemParams sys = realize(RealizationTarget::neg_m_alpha, mf, a);
      for (Complex z : upper_points()) {
        const Complex m = mf.eval(z).value;
        const double tol = 1e-12 * (1.0 + std::abs(m));
        CHECK(std::abs(impedance(sys, z) - neg_m_alpha(m, a)) <= tol);
        const Complex phase = -std::exp(Complex{0.0, 2.0 * alpha}) * (m - kI) / (m + kI);
        CHECK(std::abs(transfer(sys, z) - phase) <= tol);
        CHECK(vw_consistency(sys, z) <= 1e-12);
      }
    }
  }
}

TEST_CASE("V-W consistency for the named systems") {
  const MFunction mf(bessel_potential(1.5), MMode::riccati_engine);
  CHECK(vw_consistency(LSystemParams(0.0, kI, mf), kI) <= 1e-12);
  CHECK(vw_consistency(LSystemParams(0.0, kI, mf), 2.0 * kI) <= 1e-12);
  CHECK(vw_consistency(LSystemParams(kInfinity, kI, mf), Complex{-1.0, 1.0}) <= 1e-12);
  CHECK(vw_consistency(LSystemParams(2.0, Complex{0.5, 3.0}, mf), Complex{3.0, 0.5}) <= 1e-12);
}

TEST_CASE("transfer modulus in the two half planes") {
  // W = (1 - iV)/(1 + iV) with V Herglotz: |W| >= 1 above the axis, |W| <= 1 below.
  const MFunction mf(bessel_potential(1.5), MMode::closed_form);
  const LSystemParams sys(0.0, kI, mf);
  for (Complex z : upper_points()) {
    CHECK(std::abs(transfer(sys, z)) >= 1.0 - 1e-12);
    CHECK(std::abs(transfer(sys, std::conj(z))) <= 1.0 + 1e-12);
  }
}
