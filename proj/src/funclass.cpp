#include "weylsys/funclass.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "weylsys/parallel.hpp"

namespace weylsys {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMaxKernelPoints = 16;

template <typename Score>
CheckResult min_over_grid(const SampledFunction& f, const std::vector<Complex>& grid, double slack,
                          Score score) {
  for (Complex z : grid) {
    if (!(z.imag() > 0.0)) throw Error(ErrorKind::InvalidArgument, "grid points must lie in the upper half plane");
  }
  const std::vector<double> scores = parallel_map(grid, [&](Complex z) { return score(z, f.eval(z)); });
  CheckResult r;
  r.min_value = kInfinity;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (scores[i] < r.min_value) {
      r.min_value = scores[i];
      r.argmin = grid[i];
    }
  }
  r.pass = grid.empty() || r.min_value >= -slack;
  return r;
}

double cot(double beta) {
  if (std::abs(beta - kPi / 2) <= 1e-15) return 0.0;
  return std::cos(beta) / std::sin(beta);
}

std::vector<Complex> build_kernel(const std::vector<Complex>& z, const std::vector<Complex>& v_up,
                                  const std::vector<Complex>& v_low, double beta) {
  const std::size_t n = z.size();
  const double c = cot(beta);
  std::vector<Complex> a(n), b(n);
  for (std::size_t k = 0; k < n; ++k) {
    a[k] = v_up[k] / z[k];
    b[k] = v_low[k] / std::conj(z[k]);
  }
  std::vector<Complex> kern(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      kern[k * n + l] = (a[k] - b[l]) / (z[k] - std::conj(z[l])) - c * b[l] * a[k];
    }
  }
  return kern;
}

void validate_points(const std::vector<Complex>& z) {
  if (z.empty() || z.size() > kMaxKernelPoints) {
    throw Error(ErrorKind::InvalidArgument, "kernel test needs between 1 and 16 points");
  }
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (!(z[k].imag() > 0.0)) throw Error(ErrorKind::InvalidArgument, "kernel points must satisfy Im z > 0");
    for (std::size_t l = 0; l < k; ++l) {
      if (std::abs(z[k] - z[l]) <= 1e-14 * std::max(1.0, std::abs(z[k]))) {
        throw Error(ErrorKind::DegeneratePoints, "kernel points must be distinct");
      }
    }
  }
}

// Linear interpolation of ys over the increasing grid xs, clamped to the ends.
double interp(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
  if (x <= xs.front()) return ys.front();
  if (x >= xs.back()) return ys.back();
  const auto hi = std::upper_bound(xs.begin(), xs.end(), x);
  const std::size_t j = static_cast<std::size_t>(hi - xs.begin());
  const double w = (x - xs[j - 1]) / (xs[j] - xs[j - 1]);
  return (1.0 - w) * ys[j - 1] + w * ys[j];
}

}  // namespace

std::vector<Complex> polar_grid(double r_min, double r_max, int n_radii, int n_angles) {
  if (!(r_min > 0.0) || !(r_max >= r_min) || n_radii < 1 || n_angles < 1) {
    throw Error(ErrorKind::InvalidArgument, "bad polar grid parameters");
  }
  std::vector<Complex> grid;
  grid.reserve(static_cast<std::size_t>(n_radii) * n_angles);
  const double lr0 = std::log(r_min), lr1 = std::log(r_max);
  for (int i = 0; i < n_radii; ++i) {
    const double r = std::exp(n_radii == 1 ? lr0 : lr0 + (lr1 - lr0) * i / (n_radii - 1));
    for (int j = 0; j < n_angles; ++j) {
      const double th = kPi * (n_angles == 1 ? 0.5 : 0.05 + 0.9 * j / (n_angles - 1));
      grid.push_back(std::polar(r, th));
    }
  }
  return grid;
}

std::vector<Complex> default_test_grid() { return polar_grid(1e-2, 1e2, 10, 10); }

CheckResult herglotz_check(const SampledFunction& f, const std::vector<Complex>& grid, double slack) {
  return min_over_grid(f, grid, slack, [](Complex, Complex v) { return v.imag(); });
}

CheckResult stieltjes_check(const SampledFunction& f, const std::vector<Complex>& grid, double slack) {
  return min_over_grid(f, grid, slack, [](Complex z, Complex v) { return (z * v).imag() / z.imag(); });
}

CheckResult inverse_stieltjes_check(const SampledFunction& f, const std::vector<Complex>& grid, double slack) {
  return min_over_grid(f, grid, slack, [](Complex z, Complex v) { return (v / z).imag() / z.imag(); });
}

std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n, double tol, int max_sweeps) {
  if (a.size() != n * n) throw Error(ErrorKind::InvalidArgument, "matrix size mismatch");
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  double total = 0.0;
  for (double x : a) total += x * x;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
    if (off <= tol * tol * total || off == 0.0) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

double hermitian_min_eigenvalue(const std::vector<Complex>& m, std::size_t n) {
  if (m.size() != n * n || n == 0) throw Error(ErrorKind::InvalidArgument, "matrix size mismatch");
  // H = A + iB maps to the real symmetric [[A, -B], [B, A]] with every eigenvalue doubled.
  const std::size_t N = 2 * n;
  std::vector<double> r(N * N);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex h = 0.5 * (m[i * n + j] + std::conj(m[j * n + i]));
      r[i * N + j] = h.real();
      r[(i + n) * N + (j + n)] = h.real();
      r[i * N + (j + n)] = -h.imag();
      r[(i + n) * N + j] = h.imag();
    }
  }
  return jacobi_eigenvalues(std::move(r), N).front();
}

std::vector<Complex> sectorial_kernel(const SampledFunction& f, double beta, const std::vector<Complex>& z) {
  if (!(beta > 0.0 && beta <= kPi / 2)) throw Error(ErrorKind::InvalidArgument, "beta must lie in (0, pi/2]");
  validate_points(z);
  std::vector<Complex> up(z.size()), low(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) {
    up[k] = f.eval(z[k]);
    low[k] = f.eval(std::conj(z[k]));
  }
  return build_kernel(z, up, low, beta);
}

PsdResult sectorial_kernel_psd(const SampledFunction& f, double beta, const std::vector<Complex>& z,
                               double slack) {
  const double min_eig = hermitian_min_eigenvalue(sectorial_kernel(f, beta, z), z.size());
  return {min_eig >= -slack, min_eig};
}

KernelTrials::KernelTrials(const SampledFunction& f, Options opt) {
  if (opt.points < 1 || opt.points > static_cast<int>(kMaxKernelPoints) || opt.trials < 1) {
    throw Error(ErrorKind::InvalidArgument, "kernel trials need 1..16 points and at least one trial");
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> log_r(std::log10(opt.r_min), std::log10(opt.r_max));
  std::uniform_real_distribution<double> angle(0.05 * kPi, 0.95 * kPi);
  points_.resize(opt.trials);
  for (auto& set : points_) {
    set.resize(opt.points);
    for (auto& z : set) z = std::polar(std::pow(10.0, log_r(rng)), angle(rng));
    validate_points(set);
  }
  struct Pair {
    std::vector<Complex> up, low;
  };
  const auto values = parallel_map(points_, [&](const std::vector<Complex>& set) {
    Pair p{std::vector<Complex>(set.size()), std::vector<Complex>(set.size())};
    for (std::size_t k = 0; k < set.size(); ++k) {
      p.up[k] = f.eval(set[k]);
      p.low[k] = f.eval(std::conj(set[k]));
    }
    return p;
  });
  for (const auto& p : values) {
    v_upper_.push_back(p.up);
    v_lower_.push_back(p.low);
  }
}

double KernelTrials::min_eigenvalue(double beta) const {
  if (!(beta > 0.0 && beta <= kPi / 2)) throw Error(ErrorKind::InvalidArgument, "beta must lie in (0, pi/2]");
  double worst = kInfinity;
  for (std::size_t t = 0; t < points_.size(); ++t) {
    const auto kern = build_kernel(points_[t], v_upper_[t], v_lower_[t], beta);
    worst = std::min(worst, hermitian_min_eigenvalue(kern, points_[t].size()));
  }
  return worst;
}

PsdResult KernelTrials::psd(double beta, double slack) const {
  const double m = min_eigenvalue(beta);
  return {m >= -slack, m};
}

MeasureTable extract_measure(const SampledFunction& f, const std::vector<double>& t_grid,
                             const ToleranceConfig& tol) {
  tol.validate();
  if (t_grid.size() < 2) throw Error(ErrorKind::InvalidArgument, "measure grid needs at least two nodes");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > 0.0) || (i > 0 && !(t_grid[i] > t_grid[i - 1]))) {
      throw Error(ErrorKind::InvalidArgument, "measure grid must be positive and increasing");
    }
  }
  const CheckResult inv = inverse_stieltjes_check(f, default_test_grid(), tol.psd_slack);
  if (!inv.pass) throw Error(ErrorKind::NotInverseStieltjes, "function fails the inverse Stieltjes test");

  const auto& eps = tol.limit_eps_schedule;
  MeasureTable mt;
  mt.t_grid = t_grid;
  mt.density = parallel_map(t_grid, [&](double t) {
    const double scale = std::min(1.0, t);
    std::vector<LimitSample> s;
    for (double e : eps) s.push_back({e * scale, Complex{f.eval(Complex{t, e * scale}).imag(), 0.0}});
    return extrapolate_limit(s, tol.divergence_bound).value.real() / kPi;
  });

  std::vector<LimitSample> g;
  for (double e : eps) g.push_back({std::sqrt(e), Complex{f.eval(Complex{-e, 0.0}).real(), 0.0}});
  const LimitEstimate gamma = extrapolate_limit(g, tol.divergence_bound);
  mt.gamma = gamma.value.real();
  mt.gamma_err = gamma.err_estimate;

  mt.cumulative.assign(t_grid.size(), 0.0);
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    mt.cumulative[i] =
        mt.cumulative[i - 1] + 0.5 * (mt.density[i] + mt.density[i - 1]) * (t_grid[i] - t_grid[i - 1]);
  }
  return mt;
}

double integral_dG_over_t(const MeasureTable& mt, double t_min, double t_max) {
  if (!(t_min > 0.0 && t_min < t_max)) throw Error(ErrorKind::InvalidArgument, "need 0 < t_min < t_max");
  if (mt.t_grid.size() < 2) throw Error(ErrorKind::InvalidArgument, "measure table too small");
  const double lo = std::max(t_min, mt.t_grid.front());
  const double hi = std::min(t_max, mt.t_grid.back());
  if (!(lo < hi)) return 0.0;
  std::vector<double> xs{lo};
  for (double t : mt.t_grid) {
    if (t > lo && t < hi) xs.push_back(t);
  }
  xs.push_back(hi);
  double sum = 0.0;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double f0 = interp(mt.t_grid, mt.density, xs[i - 1]) / xs[i - 1];
    const double f1 = interp(mt.t_grid, mt.density, xs[i]) / xs[i];
    sum += 0.5 * (f0 + f1) * (xs[i] - xs[i - 1]);
  }
  return sum;
}

bool class_s01r_check(const MeasureTable& mt, double growth_threshold) {
  if (mt.t_grid.size() < 2) throw Error(ErrorKind::InvalidArgument, "measure table too small");
  const double t_max = mt.t_grid.back();
  if (t_max / 10.0 < mt.t_grid.front()) {
    throw Error(ErrorKind::InvalidArgument, "measure table must span at least a decade");
  }
  const double g_hi = mt.cumulative.back();
  const double g_lo = interp(mt.t_grid, mt.cumulative, t_max / 10.0);
  return g_hi - g_lo > growth_threshold * g_lo;
}

Complex resynthesize_from_measure(const MeasureTable& mt, Complex z) {
  Complex sum = mt.gamma;
  auto integrand = [&](std::size_t i) {
    const double t = mt.t_grid[i];
    return (1.0 / (t - z) - 1.0 / t) * mt.density[i];
  };
  for (std::size_t i = 1; i < mt.t_grid.size(); ++i) {
    sum += 0.5 * (integrand(i) + integrand(i - 1)) * (mt.t_grid[i] - mt.t_grid[i - 1]);
  }
  return sum;
}

ClassLimits class_limits(const SampledFunction& f, const ToleranceConfig& tol) {
  tol.validate();
  auto limit = [&](std::vector<LimitSample> s, double& err) {
    try {
      const LimitEstimate e = extrapolate_limit(s, tol.divergence_bound);
      err = e.err_estimate;
      return e.value.real();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Divergent) throw;
      err = 0.0;
      const auto nearest = std::min_element(s.begin(), s.end(), [](const auto& a, const auto& b) {
        return std::abs(a.abscissa) < std::abs(b.abscissa);
      });
      return nearest->value.real() < 0.0 ? -kInfinity : kInfinity;
    }
  };

  ClassLimits out;
  std::vector<LimitSample> zero;
  for (double e : tol.limit_eps_schedule) zero.push_back({std::sqrt(e), Complex{f.eval({-e, 0.0}).real(), 0.0}});
  out.at_zero = limit(std::move(zero), out.err_zero);

  std::vector<LimitSample> inf;
  for (double r : tol.infinity_schedule) inf.push_back({1.0 / std::sqrt(r), Complex{f.eval({-r, 0.0}).real(), 0.0}});
  out.at_minus_inf = limit(std::move(inf), out.err_minus_inf);
  return out;
}

}  // namespace weylsys
