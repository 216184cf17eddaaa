#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "weylsys/numerics.hpp"

namespace weylsys {

enum class DomainTag { ext_nonneg_axis, upper_half_plane };

/// A scalar function sampled by the class tests. ext_nonneg_axis means holomorphic on C \ [0, inf).
struct SampledFunction {
  std::function<Complex(Complex)> eval;
  DomainTag domain = DomainTag::ext_nonneg_axis;
};

struct CheckResult {
  bool pass = false;
  double min_value = 0.0;
  Complex argmin{};
};

/// n_radii x n_angles points r e^{i theta}, r log-spaced in [r_min, r_max], theta in [0.05 pi, 0.95 pi].
std::vector<Complex> polar_grid(double r_min, double r_max, int n_radii, int n_angles);

/// The 100-point upper-half-plane grid used by default (r in [1e-2, 1e2]).
std::vector<Complex> default_test_grid();

/// min Im f(z) >= -slack.
CheckResult herglotz_check(const SampledFunction& f, const std::vector<Complex>& grid, double slack = 1e-8);
/// min Im[z f(z)] / Im z >= -slack.
CheckResult stieltjes_check(const SampledFunction& f, const std::vector<Complex>& grid, double slack = 1e-8);
/// min Im[f(z)/z] / Im z >= -slack.
CheckResult inverse_stieltjes_check(const SampledFunction& f, const std::vector<Complex>& grid,
                                    double slack = 1e-8);

/// Eigenvalues (ascending) of a real symmetric n x n row-major matrix by cyclic Jacobi.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n, double tol = 1e-15,
                                       int max_sweeps = 100);

/// Smallest eigenvalue of a Hermitian row-major matrix (Hermitian part taken first).
double hermitian_min_eigenvalue(const std::vector<Complex>& m, std::size_t n);

struct PsdResult {
  bool pass = false;
  double min_eig = 0.0;
};

/// Hermitian kernel K_beta on the given points (at most 16, distinct, Im z > 0).
/// Throws DegeneratePoints or InvalidArgument.
std::vector<Complex> sectorial_kernel(const SampledFunction& f, double beta, const std::vector<Complex>& z_points);

/// PSD test of K_beta; pass iff min eigenvalue >= -slack.
PsdResult sectorial_kernel_psd(const SampledFunction& f, double beta, const std::vector<Complex>& z_points,
                               double slack = 1e-8);

/// Seeded random point sets with f pre-evaluated, so the same trials can be
/// tested at several angles.
class KernelTrials {
 public:
  struct Options {
    int points = 8;
    int trials = 100;
    std::uint64_t seed = 0;
    double r_min = 1e-2;
    double r_max = 1e2;
  };

  KernelTrials(const SampledFunction& f, Options opt);

  /// Minimum over trials of the smallest eigenvalue of K_beta.
  double min_eigenvalue(double beta) const;
  PsdResult psd(double beta, double slack = 1e-8) const;
  const std::vector<std::vector<Complex>>& point_sets() const noexcept { return points_; }

 private:
  std::vector<std::vector<Complex>> points_;
  std::vector<std::vector<Complex>> v_upper_;  // V(z_k)
  std::vector<std::vector<Complex>> v_lower_;  // V(conj z_k)
};

struct MeasureTable {
  std::vector<double> t_grid;
  std::vector<double> density;     // dG/dt
  std::vector<double> cumulative;  // G(t) - G(t_grid[0])
  double gamma = 0.0;
  double gamma_err = 0.0;
};

/// Stieltjes inversion: density(t) = lim Im f(t + i eps)/pi, gamma = f(-0).
/// The eps schedule is scaled by min(1, t) at each node. Throws NotInverseStieltjes
/// when f fails the inverse Stieltjes check on the default grid.
MeasureTable extract_measure(const SampledFunction& f, const std::vector<double>& t_grid,
                             const ToleranceConfig& tol = {});

/// Trapezoid estimate of the integral of density(t)/t over [t_min, t_max].
double integral_dG_over_t(const MeasureTable& mt, double t_min, double t_max);

/// True iff G(t_max) - G(t_max/10) > growth_threshold * G(t_max/10).
bool class_s01r_check(const MeasureTable& mt, double growth_threshold = 0.5);

/// gamma + integral over the table of (1/(t - z) - 1/t) dG(t).
Complex resynthesize_from_measure(const MeasureTable& mt, Complex z);

struct ClassLimits {
  double at_zero = 0.0;        // lim_{x -> 0-} f(x); +-infinity when divergent
  double at_minus_inf = 0.0;   // lim_{x -> -inf} f(x); +-infinity when divergent
  double err_zero = 0.0;
  double err_minus_inf = 0.0;
};

/// Limits along the negative axis: x = -eps extrapolated in sqrt(eps), x = -R in 1/sqrt(R).
ClassLimits class_limits(const SampledFunction& f, const ToleranceConfig& tol = {});

}  // namespace weylsys
