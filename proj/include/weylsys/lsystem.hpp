#pragma once

#include <optional>

#include "weylsys/malpha.hpp"
#include "weylsys/numerics.hpp"
#include "weylsys/weyl_engine.hpp"

namespace weylsys {

/// Schrödinger L-system Theta_{mu,h}: fully determined by mu in R u {inf},
/// h with Im h > 0, and the Weyl-Titchmarsh function of the symmetric operator.
/// The state-space operator and channel are never materialized; every observable
/// goes through the transfer and impedance formulas below.
class LSystemParams {
 public:
  /// mu may be +-infinity (both denote the point at infinity). Throws InvalidArgument if Im h <= 0.
  LSystemParams(double mu, Complex h, MFunction mf);

  double mu() const noexcept { return mu_; }
  bool mu_is_infinite() const noexcept { return mu_ == kInfinity; }
  Complex h() const noexcept { return h_; }
  const MFunction& m_function() const noexcept { return mf_; }

 private:
  double mu_;
  Complex h_;
  MFunction mf_;
};

/// Quasi-kernel boundary condition y'(ell) = xi y(ell); xi = infinity encodes y(ell) = 0.
struct QuasiKernelBC {
  double xi;
  bool is_dirichlet() const noexcept { return xi == kInfinity; }
};

// Scalar forms, given m_inf(z) directly.
Complex impedance_from_m(double mu, Complex h, Complex m_inf, double pole_tol = 1e-11);
Complex transfer_from_m(double mu, Complex h, Complex m_inf, double pole_tol = 1e-11);

/// V(z) = ((m + mu) Im h)/((mu - Re h) m + mu Re h - |h|^2); Im h/(m + Re h) for mu = inf.
Complex impedance(const LSystemParams& sys, Complex z);

/// W(z) = (mu - h)/(mu - conj h) * (m + conj h)/(m + h); prefactor 1 for mu = inf.
Complex transfer(const LSystemParams& sys, Complex z);

/// |V - i(W+1)^{-1}(W-1)| + |W - (1+iV)^{-1}(1-iV)|.
double vw_residual(Complex v, Complex w);
double vw_consistency(const LSystemParams& sys, Complex z);

QuasiKernelBC quasi_kernel_xi(double mu, Complex h);
inline QuasiKernelBC quasi_kernel_xi(const LSystemParams& sys) { return quasi_kernel_xi(sys.mu(), sys.h()); }

enum class RealizationTarget { neg_m_infinity, recip_m_infinity, neg_m_alpha };

/// The unique (mu, h) whose impedance equals the target: (0, i), (inf, i), (tan alpha, i).
LSystemParams realize(RealizationTarget target, const MFunction& mf,
                      std::optional<AlphaParam> alpha = std::nullopt);

}  // namespace weylsys
