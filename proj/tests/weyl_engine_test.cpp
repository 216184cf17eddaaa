#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "weylsys/weyl_engine.hpp"

using namespace weylsys;

namespace {

std::vector<Complex> engine_grid() {
  std::vector<Complex> g;
  for (int a = -5; a <= 5; ++a)
    for (double b : {0.1, 1.0, 10.0}) g.emplace_back(a, b);
  for (int k = 0; k < 20; ++k) g.emplace_back(-10.0 + (10.0 - 0.01) * k / 19.0, 0.0);
  return g;
}

}  // namespace

TEST_CASE("engine matches the Bessel and free oracles") {
  const MFunction bessel(bessel_potential(1.5), MMode::riccati_engine);
  const MFunction free(free_potential(0.0), MMode::riccati_engine);

  const MValue v = bessel.eval({0.0, 1.0});
  CHECK(std::abs(v.value - Complex{1.2071067811865475, -0.5}) <= 1e-6);
  CHECK(v.err_estimate <= 1e-6);

  CHECK(std::abs(free.eval({0.0, 2.0}).value - Complex{1.0, -1.0}) <= 1e-6);

  for (Complex z : engine_grid()) {
    CAPTURE(z);
    CHECK(std::abs(bessel.eval(z).value - oracle::bessel32_m(z)) <= 1e-6);
    CHECK(std::abs(free.eval(z).value - oracle::free_m(z)) <= 1e-6);
  }
}

TEST_CASE("closed-form mode returns the attached formula") {
  const MFunction mf(bessel_potential(1.5), MMode::closed_form);
  const MValue v = mf.eval({0.0, 1.0});
  CHECK(v.err_estimate == 0.0);
  CHECK(std::abs(v.value - oracle::bessel32_m({0.0, 1.0})) <= 1e-14);
  CHECK_THROWS_AS(MFunction(bessel_potential(2.0), MMode::closed_form), Error);
  CHECK(make_m_function(bessel_potential(2.0)).mode() == MMode::riccati_engine);
  CHECK(make_m_function(free_potential(0.0)).mode() == MMode::closed_form);
}

TEST_CASE("spectrum is excluded") {
  for (MMode mode : {MMode::riccati_engine, MMode::closed_form}) {
    const MFunction mf(bessel_potential(1.5), mode);
    for (Complex z : {Complex{4.0, 0.0}, Complex{0.0, 0.0}}) {
      try {
        mf.eval(z);
        FAIL("expected OnSpectrum");
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OnSpectrum);
      }
    }
  }
}

TEST_CASE("-m is Herglotz and the engine never blows up off the axis") {
  const MFunction bessel(bessel_potential(1.5), MMode::riccati_engine);
  const MFunction table(table_potential(0.0, {{0.0, 3.0}, {2.0, 0.0}, {5.0, 1.0}, {8.0, 0.0}}), MMode::riccati_engine);
  for (const MFunction* mf : {&bessel, &table}) {
    for (Complex z : engine_grid()) {
      if (z.imag() == 0.0) continue;
      const MValue v = mf->eval(z);
      CHECK(-v.value.imag() >= -1e-10);
      const MValue lower = mf->eval(std::conj(z));
      CHECK(std::abs(lower.value - std::conj(v.value)) <= 1e-8);
    }
  }
}

TEST_CASE("doubling x_max stays within the reported error") {
  const Potential pots[] = {bessel_potential(1.5), bessel_potential(2.5), free_potential(0.0)};
  for (const Potential& p : pots) {
    const MFunction base(p, MMode::riccati_engine);
    const MFunction doubled(p, MMode::riccati_engine, 2.0 * base.x_max());
    for (Complex z : engine_grid()) {
      CAPTURE(z);
      CAPTURE(p.label());
      const MValue a = base.eval(z);
      CHECK(std::abs(doubled.eval(z).value - a.value) <= a.err_estimate);
    }
  }
}

TEST_CASE("a tiny truncation radius is visibly inaccurate") {
  const MFunction small(bessel_potential(1.5), MMode::riccati_engine, 5.0);
  const Complex z{-0.01, 0.0};
  CHECK(std::abs(small.eval(z).value - oracle::bessel32_m(z)) > 1e-6);
}

TEST_CASE("m(-0) by extrapolation") {
  const MinusZero b = m_minus_zero(MFunction(bessel_potential(1.5), MMode::riccati_engine));
  CHECK(std::abs(b.value - 1.0) <= 1e-4);
  const MinusZero f = m_minus_zero(MFunction(free_potential(0.0), MMode::riccati_engine));
  CHECK(std::abs(f.value) <= 1e-4);
  CHECK(m_minus_zero(MFunction(bessel_potential(1.5), MMode::closed_form)).value == 1.0);

  // m(z) = -1/sqrt(-z) + ... has no finite value at -0: closed form -i sqrt(z) - 1/(i sqrt(z))
  // is Herglotz-compatible and blows up like eps^{-1/2}.
  const Potential singular(0.0, [](double) { return 0.0; }, "singular", [](Complex z) {
    const Complex k = Complex{0.0, 1.0} * principal_sqrt_upper(z);
    return -k + 1.0 / (-k);
  });
  const MinusZero s = m_minus_zero(MFunction(singular, MMode::closed_form));
  CHECK(s.value == kInfinity);
}

TEST_CASE("RiccatiBlowup surfaces for a potential that is not non-negative") {
  // A deep well has a negative eigenvalue near -E; the decaying solution vanishes at ell
  // for some z < 0 and the log-derivative blows up there.
  const Potential well = table_potential(0.0, {{0.0, -50.0}, {3.0, -50.0}, {3.01, 0.0}});
  const MFunction mf(well, MMode::riccati_engine);
  bool blew_up = false;
  for (double x = -49.5; x < -0.5 && !blew_up; x += 0.25) {
    try {
      const MValue v = mf.eval({x, 0.0});
      if (!std::isfinite(v.value.real())) blew_up = true;
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::RiccatiBlowup);
      blew_up = true;
    }
  }
  CHECK(blew_up);
}
