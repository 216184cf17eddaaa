#pragma once

#include "weylsys/numerics.hpp"
#include "weylsys/potentials.hpp"

namespace weylsys {

enum class MMode { closed_form, riccati_engine };

struct MValue {
  Complex value;
  double err_estimate = 0.0;
};

/// Extended-real limit m(-0) with its extrapolation error; value may be +infinity.
struct MinusZero {
  double value;
  double err_estimate = 0.0;
};

/// Weyl-Titchmarsh function m_inf of a potential, normalized so that
/// psi = theta + m phi is square integrable with psi(ell) = -1, psi'(ell) = m.
class MFunction {
 public:
  /// x_max <= 0 selects the default truncation radius 60 * max(1, ell).
  MFunction(Potential potential, MMode mode, double x_max = 0.0, ToleranceConfig tol = {});

  const Potential& potential() const noexcept { return potential_; }
  MMode mode() const noexcept { return mode_; }
  double x_max() const noexcept { return x_max_; }
  const ToleranceConfig& tol() const noexcept { return tol_; }

  /// Throws OnSpectrum for z in [0, inf) and RiccatiBlowup if the Riccati solution breaks down.
  MValue eval(Complex z) const;

  /// Riccati value at a given truncation radius, without the sensitivity estimate.
  Complex eval_truncated(Complex z, double x_max) const;

 private:
  Potential potential_;
  MMode mode_;
  double x_max_;
  ToleranceConfig tol_;
};

/// Picks the closed form when the potential carries one, the Riccati engine otherwise.
MFunction make_m_function(Potential potential, double x_max = 0.0, ToleranceConfig tol = {});

inline MValue eval_m_infinity(const MFunction& mf, Complex z) { return mf.eval(z); }

/// m(-0) by extrapolation of m(-eps) in sqrt(eps) over the eps schedule; +infinity when divergent.
/// In closed-form mode an attached exact value is returned directly.
MinusZero m_minus_zero(const MFunction& mf);

}  // namespace weylsys
