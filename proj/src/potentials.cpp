#include "weylsys/potentials.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

namespace weylsys {

Potential::Potential(double ell, Coefficient q, std::string label, ClosedForm closed_form_m,
                     std::optional<double> closed_form_m_minus_zero)
    : ell_(ell),
      q_(std::move(q)),
      label_(std::move(label)),
      closed_form_m_(std::move(closed_form_m)),
      m_minus_zero_(closed_form_m_minus_zero) {
  if (!std::isfinite(ell_)) throw Error(ErrorKind::InvalidArgument, "left endpoint must be finite");
  if (!q_) throw Error(ErrorKind::InvalidArgument, "potential coefficient is empty");
}

Potential bessel_potential(double nu) {
  if (!(nu > 0.0)) throw Error(ErrorKind::InvalidArgument, "Bessel order must be positive");
  const double c = nu * nu - 0.25;
  auto q = [c](double x) { return c / (x * x); };
  std::ostringstream label;
  label.precision(17);
  label << "bessel:" << nu;
  if (nu == 1.5) {
    auto m = [](Complex z) {
      const Complex i{0.0, 1.0};
      return 1.0 - i * z / (principal_sqrt_upper(z) + i);
    };
    return Potential(1.0, q, label.str(), m, 1.0);
  }
  return Potential(1.0, q, label.str());
}

Potential free_potential(double ell) {
  if (!(ell >= 0.0)) throw Error(ErrorKind::InvalidArgument, "left endpoint must be non-negative");
  std::ostringstream label;
  label.precision(17);
  label << "free:" << ell;
  // q = 0 is translation invariant, so the same m-function holds for every ell.
  auto m = [](Complex z) { return Complex{0.0, -1.0} * principal_sqrt_upper(z); };
  return Potential(ell, [](double) { return 0.0; }, label.str(), m, 0.0);
}

Potential table_potential(double ell, std::vector<std::pair<double, double>> samples,
                          std::string label) {
  if (samples.empty()) throw Error(ErrorKind::EmptyTable, "potential table has no samples");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!std::isfinite(samples[i].first) || !std::isfinite(samples[i].second)) {
      throw Error(ErrorKind::InvalidArgument, "potential table has non-finite entries");
    }
    if (i > 0 && !(samples[i].first > samples[i - 1].first)) {
      throw Error(ErrorKind::UnsortedTable, "potential table x values must strictly increase");
    }
  }
  auto table = std::make_shared<const std::vector<std::pair<double, double>>>(std::move(samples));
  auto q = [table](double x) {
    const auto& t = *table;
    if (x <= t.front().first) return t.front().second;
    if (x >= t.back().first) return t.back().second;
    auto hi = std::upper_bound(t.begin(), t.end(), x,
                               [](double v, const auto& s) { return v < s.first; });
    auto lo = hi - 1;
    const double w = (x - lo->first) / (hi->first - lo->first);
    return (1.0 - w) * lo->second + w * hi->second;
  };
  return Potential(ell, q, std::move(label));
}

Potential read_table_potential_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open potential table '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorKind::EmptyTable, "potential table file is empty");
  line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }),
             line.end());
  if (line != "x,q") throw Error(ErrorKind::InvalidArgument, "potential table header must be 'x,q'");

  std::vector<std::pair<double, double>> samples;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    std::string xs, qs;
    if (!std::getline(row, xs, ',') || !std::getline(row, qs)) {
      throw Error(ErrorKind::InvalidArgument, "malformed row at line " + std::to_string(lineno));
    }
    try {
      std::size_t px = 0, pq = 0;
      const double x = std::stod(xs, &px);
      const double q = std::stod(qs, &pq);
      if (xs.find_first_not_of(" \t\r", px) != std::string::npos ||
          qs.find_first_not_of(" \t\r", pq) != std::string::npos) {
        throw std::invalid_argument("trailing characters");
      }
      samples.emplace_back(x, q);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::InvalidArgument, "malformed number at line " + std::to_string(lineno));
    }
  }
  if (samples.empty()) throw Error(ErrorKind::EmptyTable, "potential table has no samples");
  const double ell = samples.front().first;
  return table_potential(ell, std::move(samples), "table:" + path);
}

}  // namespace weylsys
