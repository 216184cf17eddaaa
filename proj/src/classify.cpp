#include "weylsys/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace weylsys {

namespace {

struct Cmp {
  double tol;
  bool eq(double a, double b) const {
    if (a == b) return true;
    if (is_infinite(a) || is_infinite(b)) return false;
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
  }
  bool le(double a, double b) const { return a <= b || eq(a, b); }
  bool lt(double a, double b) const { return a < b && !eq(a, b); }
};

}  // namespace

std::string_view to_string(StarExtClass c) noexcept {
  switch (c) {
    case StarExtClass::accretive: return "accretive";
    case StarExtClass::accumulative: return "accumulative";
    case StarExtClass::extremal_accretive_boundary: return "extremal_accretive_boundary";
    case StarExtClass::neither: return "neither";
  }
  return "neither";
}

std::string_view to_string(LSystemClass c) noexcept {
  switch (c) {
    case LSystemClass::accretive: return "accretive";
    case LSystemClass::accumulative: return "accumulative";
    case LSystemClass::accumulative_sectorial: return "accumulative_sectorial";
    case LSystemClass::accumulative_extremal: return "accumulative_extremal";
    case LSystemClass::neither: return "neither";
  }
  return "neither";
}

double angle_from_tan(double t) { return t == kInfinity ? std::numbers::pi / 2 : std::atan(t); }

std::optional<double> ThVerdict::exact_angle() const {
  if (!exact_tan) return std::nullopt;
  return angle_from_tan(*exact_tan);
}

double AngleSet::beta1() const { return angle_from_tan(tan_beta1); }
double AngleSet::beta2() const { return angle_from_tan(tan_beta2); }
std::optional<double> AngleSet::beta_class() const {
  if (!tan_beta_class) return std::nullopt;
  return angle_from_tan(*tan_beta_class);
}
std::optional<double> AngleSet::beta_universal() const {
  if (!tan_beta_universal) return std::nullopt;
  return angle_from_tan(*tan_beta_universal);
}

ThVerdict classify_th(Complex h, double m0, ClassifyOptions opt) {
  if (!(h.imag() >= 0.0)) throw Error(ErrorKind::InvalidArgument, "classify_th requires Im h >= 0");
  if (std::isnan(m0) || m0 == -kInfinity) throw Error(ErrorKind::InvalidArgument, "m(-0) must be > -inf");
  const Cmp cmp{opt.boundary_tol};
  const double re = h.real(), im = h.imag();
  ThVerdict v;
  v.accretive = cmp.le(-m0, re);
  if (im == 0.0) {
    v.krein_von_neumann = !is_infinite(m0) && cmp.eq(re, -m0);
    return v;
  }
  v.extremal = !is_infinite(m0) && cmp.eq(re, -m0);
  v.sectorial = cmp.lt(-m0, re);
  if (v.sectorial) v.exact_tan = is_infinite(m0) ? 0.0 : im / (re + m0);
  return v;
}

StarExtClass classify_star_extension(double mu, Complex h, double m0, ClassifyOptions opt) {
  const ThVerdict th = classify_th(h, m0, opt);
  if (!th.accretive) throw Error(ErrorKind::InvalidBase, "T_h is not accretive (Re h < -m(-0))");
  const Cmp cmp{opt.boundary_tol};
  const double re = h.real(), im = h.imag();
  const double denom = m0 + re;
  const double threshold = denom == 0.0 ? (im == 0.0 ? re : kInfinity) : im * im / denom + re;
  const double m = is_infinite(mu) ? kInfinity : mu;

  if (cmp.eq(m, threshold)) return StarExtClass::extremal_accretive_boundary;
  if (m > threshold) return StarExtClass::accretive;
  if (cmp.le(-m0, m) && cmp.le(m, re)) return StarExtClass::accumulative;
  return StarExtClass::neither;
}

LSystemClass classify_lsystem_alpha(const AlphaParam& a, double m0, ClassifyOptions opt) {
  if (std::isnan(m0) || m0 < 0.0) throw Error(ErrorKind::InvalidArgument, "classification needs m(-0) >= 0");
  const Cmp cmp{opt.boundary_tol};
  const double t = a.tan_alpha();
  if (t == kInfinity) return LSystemClass::accretive;
  if (cmp.le(-m0, t) && cmp.le(t, 0.0)) {
    return cmp.eq(t, 0.0) ? LSystemClass::accumulative_extremal : LSystemClass::accumulative_sectorial;
  }
  if (m0 > 0.0 && cmp.le(1.0 / m0, t)) return LSystemClass::accretive;
  return LSystemClass::neither;
}

AngleSet class_angles(const AlphaParam& a, double m0, ClassifyOptions opt) {
  if (std::isnan(m0) || m0 < 0.0 || is_infinite(m0)) {
    throw Error(ErrorKind::InvalidArgument, "class angles need a finite m(-0) >= 0");
  }
  const Cmp cmp{opt.boundary_tol};
  const double t = a.tan_alpha();
  if (t == kInfinity || !cmp.le(-m0, t) || !cmp.le(t, 0.0)) {
    throw Error(ErrorKind::OutOfRange, "tan(alpha) outside the accumulative range [-m(-0), 0]");
  }
  AngleSet s;
  s.tan_beta1 = cmp.eq(t, -m0) ? 0.0 : std::max(0.0, (t + m0) / (1.0 - t * m0));
  if (cmp.eq(t, 0.0)) {
    s.tan_beta2 = kInfinity;
    return s;
  }
  s.tan_beta2 = -1.0 / t;
  const double b1 = s.tan_beta1, b2 = s.tan_beta2;
  s.tan_beta_class = b2 + 2.0 * std::sqrt(b1 * std::max(0.0, b2 - b1));
  s.tan_beta_universal = b1 + 2.0 * std::sqrt(b1 * b2);
  return s;
}

double krein_vonneumann_h(double m0) {
  if (!std::isfinite(m0)) throw Error(ErrorKind::InvalidArgument, "Krein-von Neumann h needs finite m(-0)");
  return -m0;
}

}  // namespace weylsys
