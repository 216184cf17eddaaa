#include "weylsys/lsystem.hpp"

#include <cmath>

namespace weylsys {

namespace {

constexpr Complex kI{0.0, 1.0};

Complex checked_ratio(Complex num, Complex den, double pole_tol) {
  if (std::abs(den) < pole_tol) throw Error(ErrorKind::PoleHit, "evaluation point is a pole");
  return num / den;
}

}  // namespace

LSystemParams::LSystemParams(double mu, Complex h, MFunction mf)
    : mu_(is_infinite(mu) ? kInfinity : mu), h_(h), mf_(std::move(mf)) {
  if (std::isnan(mu)) throw Error(ErrorKind::InvalidArgument, "mu is NaN");
  if (!(h.imag() > 0.0) || !std::isfinite(h.real()) || !std::isfinite(h.imag())) {
    throw Error(ErrorKind::InvalidArgument, "boundary value h must be finite with Im h > 0");
  }
}

Complex impedance_from_m(double mu, Complex h, Complex m, double pole_tol) {
  const double re = h.real(), im = h.imag();
  if (is_infinite(mu)) return checked_ratio(im, m + re, pole_tol);
  return checked_ratio((m + mu) * im, (mu - re) * m + mu * re - std::norm(h), pole_tol);
}

Complex transfer_from_m(double mu, Complex h, Complex m, double pole_tol) {
  const Complex hb = std::conj(h);
  const Complex ratio = checked_ratio(m + hb, m + h, pole_tol);
  if (is_infinite(mu)) return ratio;
  return (mu - h) / (mu - hb) * ratio;
}

Complex impedance(const LSystemParams& sys, Complex z) {
  const MValue m = sys.m_function().eval(z);
  return impedance_from_m(sys.mu(), sys.h(), m.value, sys.m_function().tol().abs_tol);
}

Complex transfer(const LSystemParams& sys, Complex z) {
  const MValue m = sys.m_function().eval(z);
  return transfer_from_m(sys.mu(), sys.h(), m.value, sys.m_function().tol().abs_tol);
}

double vw_residual(Complex v, Complex w) {
  const Complex v_from_w = kI * (w - 1.0) / (w + 1.0);
  const Complex w_from_v = (1.0 - kI * v) / (1.0 + kI * v);
  return std::abs(v - v_from_w) + std::abs(w - w_from_v);
}

double vw_consistency(const LSystemParams& sys, Complex z) {
  const MValue m = sys.m_function().eval(z);
  const double tol = sys.m_function().tol().abs_tol;
  return vw_residual(impedance_from_m(sys.mu(), sys.h(), m.value, tol),
                     transfer_from_m(sys.mu(), sys.h(), m.value, tol));
}

QuasiKernelBC quasi_kernel_xi(double mu, Complex h) {
  const double re = h.real();
  if (is_infinite(mu)) return {re};
  if (mu == re) return {kInfinity};
  return {(mu * re - std::norm(h)) / (mu - re)};
}

LSystemParams realize(RealizationTarget target, const MFunction& mf, std::optional<AlphaParam> alpha) {
  switch (target) {
    case RealizationTarget::neg_m_infinity:
      return LSystemParams(0.0, kI, mf);
    case RealizationTarget::recip_m_infinity:
      return LSystemParams(kInfinity, kI, mf);
    case RealizationTarget::neg_m_alpha:
      if (!alpha) throw Error(ErrorKind::InvalidArgument, "neg_m_alpha target needs an angle");
      return LSystemParams(alpha->tan_alpha(), kI, mf);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown realization target");
}

}  // namespace weylsys
