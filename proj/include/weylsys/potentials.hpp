#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weylsys/numerics.hpp"

namespace weylsys {

/// Coefficient q on [ell, inf) of l(y) = -y'' + q y, with optional closed-form m-function.
///
/// The engine assumes the limit-point case at infinity (deficiency indices (1,1))
/// and, for evaluations on the negative axis, a non-negative minimal operator.
/// Neither is checked; table potentials that break these assumptions surface as
/// RiccatiBlowup or meaningless values.
class Potential {
 public:
  using Coefficient = std::function<double(double)>;
  using ClosedForm = std::function<Complex(Complex)>;

  Potential(double ell, Coefficient q, std::string label,
            ClosedForm closed_form_m = nullptr,
            std::optional<double> closed_form_m_minus_zero = std::nullopt);

  double ell() const noexcept { return ell_; }
  double q(double x) const { return q_(x); }
  const std::string& label() const noexcept { return label_; }

  bool has_closed_form() const noexcept { return static_cast<bool>(closed_form_m_); }
  /// Precondition: has_closed_form().
  Complex closed_form_m(Complex z) const { return closed_form_m_(z); }
  const std::optional<double>& closed_form_m_minus_zero() const noexcept { return m_minus_zero_; }

 private:
  double ell_;
  Coefficient q_;
  std::string label_;
  ClosedForm closed_form_m_;
  std::optional<double> m_minus_zero_;
};

/// q(x) = (nu^2 - 1/4)/x^2 on [1, inf). Attaches m(z) = 1 - iz/(sqrt(z) + i) and m(-0) = 1 for nu = 3/2.
Potential bessel_potential(double nu);

/// q = 0 on [ell, inf), m(z) = -i sqrt(z), m(-0) = 0.
Potential free_potential(double ell);

/// Piecewise-linear q through (x, q) samples, constant beyond both ends.
/// Throws EmptyTable or UnsortedTable (x must strictly increase).
Potential table_potential(double ell, std::vector<std::pair<double, double>> samples,
                          std::string label = "table");

/// Reads CSV with header `x,q`; ell is the first x. Throws EmptyTable, UnsortedTable
/// or InvalidArgument on malformed input.
Potential read_table_potential_csv(const std::string& path);

}  // namespace weylsys
