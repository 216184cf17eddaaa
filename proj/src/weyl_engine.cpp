#include "weylsys/weyl_engine.hpp"

#include <algorithm>
#include <cmath>

namespace weylsys {

namespace {

bool on_spectrum(Complex z) { return z.imag() == 0.0 && z.real() >= 0.0; }

}  // namespace

MFunction::MFunction(Potential potential, MMode mode, double x_max, ToleranceConfig tol)
    : potential_(std::move(potential)), mode_(mode), x_max_(x_max), tol_(std::move(tol)) {
  tol_.validate();
  if (x_max_ <= 0.0) x_max_ = 60.0 * std::max(1.0, potential_.ell());
  if (!(x_max_ > potential_.ell())) {
    throw Error(ErrorKind::InvalidArgument, "x_max must exceed the left endpoint");
  }
  if (mode_ == MMode::closed_form && !potential_.has_closed_form()) {
    throw Error(ErrorKind::InvalidArgument,
                "potential '" + potential_.label() + "' has no closed-form m-function");
  }
}

Complex MFunction::eval_truncated(Complex z, double x_max) const {
  const double ell = potential_.ell();
  const Potential& pot = potential_;
  // w = psi'/psi of the decaying solution; m = -w(ell) under psi(ell) = -1.
  OdeRhs rhs = [&pot, z](double x, std::span<const Complex> w, std::span<Complex> dw) {
    dw[0] = pot.q(x) - z - w[0] * w[0];
  };
  const Complex seed = Complex{0.0, 1.0} * principal_sqrt_upper(z - pot.q(x_max));
  try {
    const OdeState w = integrate_complex_ode(rhs, x_max, ell, OdeState{seed}, tol_);
    return -w[0];
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::StepUnderflow || e.kind() == ErrorKind::NonFinite) {
      throw Error(ErrorKind::RiccatiBlowup, std::string("Riccati integration failed: ") + e.what());
    }
    throw;
  }
}

MValue MFunction::eval(Complex z) const {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw Error(ErrorKind::InvalidArgument, "spectral parameter must be finite");
  }
  if (on_spectrum(z)) throw Error(ErrorKind::OnSpectrum, "z lies on [0, +inf)");
  if (mode_ == MMode::closed_form) return {potential_.closed_form_m(z), 0.0};

  const double ell = potential_.ell();
  const Complex full = eval_truncated(z, x_max_);
  const double half_radius = 0.5 * x_max_ > ell ? 0.5 * x_max_ : ell + 0.5 * (x_max_ - ell);
  const Complex half = eval_truncated(z, half_radius);
  const double floor = 10.0 * (tol_.abs_tol + tol_.rel_tol * std::abs(full));
  return {full, std::abs(full - half) + floor};
}

MFunction make_m_function(Potential potential, double x_max, ToleranceConfig tol) {
  const MMode mode = potential.has_closed_form() ? MMode::closed_form : MMode::riccati_engine;
  return MFunction(std::move(potential), mode, x_max, std::move(tol));
}

MinusZero m_minus_zero(const MFunction& mf) {
  if (mf.mode() == MMode::closed_form && mf.potential().closed_form_m_minus_zero()) {
    return {*mf.potential().closed_form_m_minus_zero(), 0.0};
  }
  const auto& schedule = mf.tol().limit_eps_schedule;
  std::vector<LimitSample> samples;
  samples.reserve(schedule.size());
  double eval_err = 0.0;
  for (double eps : schedule) {
    const MValue v = mf.eval(Complex{-eps, 0.0});
    samples.push_back({std::sqrt(eps), Complex{v.value.real(), 0.0}});
    eval_err = std::max(eval_err, v.err_estimate);
  }
  try {
    const LimitEstimate lim = extrapolate_limit(samples, mf.tol().divergence_bound);
    return {lim.value.real(), lim.err_estimate + eval_err};
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Divergent) return {kInfinity, 0.0};
    throw;
  }
}

}  // namespace weylsys
