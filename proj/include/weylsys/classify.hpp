#pragma once

#include <optional>
#include <string_view>

#include "weylsys/malpha.hpp"
#include "weylsys/numerics.hpp"

namespace weylsys {

/// Relative tolerance for deciding that a parameter sits exactly on a class boundary.
struct ClassifyOptions {
  double boundary_tol = 1e-9;
};

enum class StarExtClass { accretive, accumulative, extremal_accretive_boundary, neither };
enum class LSystemClass { accretive, accumulative, accumulative_sectorial, accumulative_extremal, neither };

std::string_view to_string(StarExtClass c) noexcept;
std::string_view to_string(LSystemClass c) noexcept;

/// Properties of the main operator T_h: -y'' + q y with y'(ell) = h y(ell).
struct ThVerdict {
  bool accretive = false;
  bool sectorial = false;
  /// Accretive but sectorial for no angle below pi/2 (Re h = -m(-0), Im h != 0).
  bool extremal = false;
  /// Real h with T_h equal to the Krein-von Neumann extension.
  bool krein_von_neumann = false;
  /// tan of the exact sectoriality angle; present iff sectorial.
  std::optional<double> exact_tan;
  std::optional<double> exact_angle() const;
};

/// Aggregate verdict; each classifier fills its own part.
struct ClassVerdict {
  std::optional<ThVerdict> operator_th;
  std::optional<StarExtClass> star_ext_class;
  std::optional<LSystemClass> lsystem_class;
};

/// Angles of the accumulative sectorial L-system Theta_{tan a, i}, stored as tangents.
/// An infinite tangent stands for pi/2.
struct AngleSet {
  double tan_beta1 = 0.0;
  double tan_beta2 = kInfinity;
  std::optional<double> tan_beta_class;      // tan b2 + 2 sqrt(tan b1 (tan b2 - tan b1))
  std::optional<double> tan_beta_universal;  // tan b1 + 2 sqrt(tan b1 tan b2)

  double beta1() const;
  double beta2() const;
  std::optional<double> beta_class() const;
  std::optional<double> beta_universal() const;
  /// Exact sectoriality angle beta2 - beta1 of the shared main operator T_i.
  double th_exact_angle() const { return beta2() - beta1(); }
};

/// Radians from a tangent in [0, inf]; infinity maps to pi/2.
double angle_from_tan(double t);

/// m0 = m(-0) may be +infinity.
ThVerdict classify_th(Complex h, double m0, ClassifyOptions opt = {});

/// Class of the (*)-extension A_{mu,h}. Throws InvalidBase when T_h is not accretive.
StarExtClass classify_star_extension(double mu, Complex h, double m0, ClassifyOptions opt = {});

/// Class of Theta_{tan a, i} realizing -m_alpha; requires m0 >= 0.
LSystemClass classify_lsystem_alpha(const AlphaParam& a, double m0, ClassifyOptions opt = {});

/// Requires -m0 <= tan a <= 0 (tan a = 0 gives beta2 = pi/2 and no class angles);
/// throws OutOfRange otherwise.
AngleSet class_angles(const AlphaParam& a, double m0, ClassifyOptions opt = {});

/// Real h for which T_h is the Krein-von Neumann extension: -m0.
double krein_vonneumann_h(double m0);

}  // namespace weylsys
