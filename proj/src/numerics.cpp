#include "weylsys/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace weylsys {

void ToleranceConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "abs_tol and rel_tol must be positive");
  }
  if (!(psd_slack >= 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "psd_slack must be non-negative");
  }
  if (!(divergence_bound > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "divergence_bound must be positive");
  }
  for (std::size_t i = 0; i < limit_eps_schedule.size(); ++i) {
    if (!(limit_eps_schedule[i] > 0.0) ||
        (i > 0 && !(limit_eps_schedule[i] < limit_eps_schedule[i - 1]))) {
      throw Error(ErrorKind::InvalidArgument, "eps schedule must be positive and strictly decreasing");
    }
  }
  for (std::size_t i = 0; i < infinity_schedule.size(); ++i) {
    if (!(infinity_schedule[i] > 0.0) ||
        (i > 0 && !(infinity_schedule[i] > infinity_schedule[i - 1]))) {
      throw Error(ErrorKind::InvalidArgument, "infinity schedule must be positive and strictly increasing");
    }
  }
}

Complex principal_sqrt_upper(Complex z) noexcept {
  // std::sqrt has its cut on (-inf, 0] with Re w >= 0; rotate into the upper half plane.
  Complex w = std::sqrt(z);
  if (w.imag() < 0.0 || (w.imag() == 0.0 && w.real() < 0.0)) w = -w;
  return w;
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// Difference between the 5th and embedded 4th order weights.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

bool all_finite(std::span<const Complex> y) {
  return std::all_of(y.begin(), y.end(),
                     [](Complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); });
}

}  // namespace

OdeState integrate_complex_ode(const OdeRhs& f, double x_from, double x_to, OdeState y,
                               const ToleranceConfig& tol, OdeStats* stats) {
  const std::size_t n = y.size();
  if (x_from == x_to || n == 0) return y;
  if (!all_finite(y)) throw Error(ErrorKind::NonFinite, "initial state is not finite");

  const double dir = x_to > x_from ? 1.0 : -1.0;
  const double span = std::abs(x_to - x_from);
  constexpr double kSafety = 0.9, kFacMin = 0.2, kFacMax = 10.0;
  constexpr double kBeta = 0.04, kExpo = 0.2 - kBeta * 0.75;
  constexpr long kMaxSteps = 50'000'000;

  std::array<OdeState, 7> k;
  for (auto& ki : k) ki.assign(n, Complex{});
  OdeState stage(n), y_new(n);

  auto scale = [&](std::size_t i, const OdeState& a, const OdeState& b) {
    return tol.abs_tol + tol.rel_tol * std::max(std::abs(a[i]), std::abs(b[i]));
  };

  double x = x_from;
  f(x, y, k[0]);
  if (!all_finite(k[0])) throw Error(ErrorKind::NonFinite, "right-hand side not finite at start");

  // Initial step from the ratio of state and derivative scales.
  double d0 = 0.0, d1 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double sc = tol.abs_tol + tol.rel_tol * std::abs(y[i]);
    d0 += std::norm(y[i]) / (sc * sc);
    d1 += std::norm(k[0][i]) / (sc * sc);
  }
  d0 = std::sqrt(d0 / n);
  d1 = std::sqrt(d1 / n);
  double h = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
  h = std::min({h, span, 0.1 * std::max(1.0, span)});
  h = std::max(h, 1e-10 * std::max(1.0, span));

  double err_old = 1e-4;
  bool last_rejected = false;
  long steps = 0;
  OdeStats local;

  while (dir * (x_to - x) > 0.0) {
    if (++steps > kMaxSteps) throw Error(ErrorKind::StepUnderflow, "step budget exhausted");
    const double min_step = 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x));
    if (h < min_step) throw Error(ErrorKind::StepUnderflow, "step size underflow near x = " + std::to_string(x));
    bool final_step = false;
    if (h >= std::abs(x_to - x)) {
      h = std::abs(x_to - x);
      final_step = true;
    }
    const double hs = dir * h;

    for (std::size_t i = 0; i < n; ++i) stage[i] = y[i] + hs * (a21 * k[0][i]);
    f(x + c2 * hs, stage, k[1]);
    for (std::size_t i = 0; i < n; ++i) stage[i] = y[i] + hs * (a31 * k[0][i] + a32 * k[1][i]);
    f(x + c3 * hs, stage, k[2]);
    for (std::size_t i = 0; i < n; ++i)
      stage[i] = y[i] + hs * (a41 * k[0][i] + a42 * k[1][i] + a43 * k[2][i]);
    f(x + c4 * hs, stage, k[3]);
    for (std::size_t i = 0; i < n; ++i)
      stage[i] = y[i] + hs * (a51 * k[0][i] + a52 * k[1][i] + a53 * k[2][i] + a54 * k[3][i]);
    f(x + c5 * hs, stage, k[4]);
    for (std::size_t i = 0; i < n; ++i)
      stage[i] = y[i] + hs * (a61 * k[0][i] + a62 * k[1][i] + a63 * k[2][i] + a64 * k[3][i] +
                              a65 * k[4][i]);
    f(x + hs, stage, k[5]);
    for (std::size_t i = 0; i < n; ++i)
      y_new[i] = y[i] + hs * (b1 * k[0][i] + b3 * k[2][i] + b4 * k[3][i] + b5 * k[4][i] +
                              b6 * k[5][i]);
    f(x + hs, y_new, k[6]);

    double err = 0.0;
    bool finite = all_finite(y_new) && all_finite(k[6]);
    if (finite) {
      for (std::size_t i = 0; i < n; ++i) {
        const Complex e = hs * (e1 * k[0][i] + e3 * k[2][i] + e4 * k[3][i] + e5 * k[4][i] +
                                e6 * k[5][i] + e7 * k[6][i]);
        const double r = std::abs(e) / scale(i, y, y_new);
        err += r * r;
      }
      err = std::sqrt(err / n);
      finite = std::isfinite(err);
    }
    if (!finite) {
      // Overflow inside the trial step: shrink hard and retry; underflow check above ends it.
      h *= kFacMin;
      last_rejected = true;
      ++local.rejected;
      continue;
    }

    if (err <= 1.0) {
      x = final_step ? x_to : x + hs;
      y.swap(y_new);
      k[0].swap(k[6]);
      ++local.accepted;
      double fac = std::pow(err, kExpo) / std::pow(err_old, kBeta) / kSafety;
      fac = std::clamp(fac, 1.0 / kFacMax, 1.0 / kFacMin);
      double h_next = h / fac;
      if (last_rejected) h_next = std::min(h_next, h);
      err_old = std::max(err, 1e-4);
      last_rejected = false;
      h = h_next;
    } else {
      const double fac = std::min(1.0 / kFacMin, std::pow(err, kExpo) / kSafety);
      h /= fac;
      last_rejected = true;
      ++local.rejected;
    }
  }
  if (!all_finite(y)) throw Error(ErrorKind::NonFinite, "state left the finite range");
  if (stats) *stats = local;
  return y;
}

LimitEstimate extrapolate_limit(std::span<const LimitSample> samples, double divergence_bound) {
  const std::size_t n = samples.size();
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "extrapolation needs at least 3 samples");

  std::vector<LimitSample> s(samples.begin(), samples.end());
  std::sort(s.begin(), s.end(), [](const LimitSample& a, const LimitSample& b) {
    return std::abs(a.abscissa) > std::abs(b.abscissa);
  });
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(s[i].value.real()) || !std::isfinite(s[i].value.imag())) {
      throw Error(ErrorKind::Divergent, "non-finite sample");
    }
    if (i > 0 && s[i].abscissa == s[i - 1].abscissa) {
      throw Error(ErrorKind::InvalidArgument, "duplicate abscissa in limit samples");
    }
  }

  // Blow-up test: magnitudes strictly increase toward 0 and increments never shrink.
  bool growing = true;
  for (std::size_t i = 1; i < n && growing; ++i) {
    if (!(std::abs(s[i].value) > std::abs(s[i - 1].value))) growing = false;
    if (i >= 2 && std::abs(s[i].value - s[i - 1].value) <
                      (1.0 - 1e-9) * std::abs(s[i - 1].value - s[i - 2].value)) {
      growing = false;
    }
  }
  if (growing) throw Error(ErrorKind::Divergent, "samples grow without bound as the parameter shrinks");

  std::vector<Complex> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = s[i].value;
  Complex second{};
  for (std::size_t m = 1; m < n; ++m) {
    if (m == n - 1) second = p[1];
    for (std::size_t i = 0; i + m < n; ++i) {
      const double xi = s[i].abscissa, xj = s[i + m].abscissa;
      p[i] = (xi * p[i + 1] - xj * p[i]) / (xi - xj);
    }
  }
  const Complex value = p[0];
  if (!(std::abs(value) <= divergence_bound)) {
    throw Error(ErrorKind::Divergent, "extrapolated limit exceeds divergence bound");
  }
  return {value, std::abs(value - second)};
}

}  // namespace weylsys
