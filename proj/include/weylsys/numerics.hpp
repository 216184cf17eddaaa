#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "weylsys/errors.hpp"

namespace weylsys {

using Complex = std::complex<double>;

/// Extended reals are plain doubles; +infinity is the point at infinity.
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

inline bool is_infinite(double x) noexcept { return x == kInfinity || x == -kInfinity; }

struct ToleranceConfig {
  double abs_tol = 1e-11;
  double rel_tol = 1e-11;
  double psd_slack = 1e-8;
  /// Decreasing offsets used for one-sided limits z -> -0 and z -> t + i0.
  std::vector<double> limit_eps_schedule{1e-2, 1e-3, 1e-4, 1e-5};
  /// Increasing radii R used for limits along the negative axis x = -R -> -infinity.
  std::vector<double> infinity_schedule{1e2, 1e3, 1e4, 1e5};
  /// Magnitude beyond which an extrapolated limit is reported as divergent.
  double divergence_bound = 1e8;

  /// Throws InvalidArgument when a field breaks its invariant.
  void validate() const;
};

/// Square root with the cut on [0, +inf): Im w >= 0, so z -> i*sqrt(z) is Herglotz.
Complex principal_sqrt_upper(Complex z) noexcept;

using OdeState = std::vector<Complex>;
using OdeRhs = std::function<void(double x, std::span<const Complex> y, std::span<Complex> dydx)>;

struct OdeStats {
  int accepted = 0;
  int rejected = 0;
};

/// Dormand-Prince 5(4) with PI step control. Integrates from x_from to x_to
/// (either direction). Throws StepUnderflow or NonFinite.
OdeState integrate_complex_ode(const OdeRhs& f, double x_from, double x_to, OdeState state0,
                               const ToleranceConfig& tol, OdeStats* stats = nullptr);

struct LimitSample {
  double abscissa;  // the small parameter, e.g. eps or sqrt(eps)
  Complex value;
};

struct LimitEstimate {
  Complex value;
  double err_estimate;
};

/// Polynomial (Neville) extrapolation of the samples to abscissa 0.
/// Throws Divergent when the samples blow up as the abscissa shrinks or the
/// extrapolant exceeds divergence_bound.
LimitEstimate extrapolate_limit(std::span<const LimitSample> samples,
                                double divergence_bound = 1e8);

}  // namespace weylsys
