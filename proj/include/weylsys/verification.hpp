#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weylsys/numerics.hpp"

namespace weylsys {

struct CriterionResult {
  std::string id;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CriterionResult> criteria;
  std::vector<std::string> notes;
  bool all_pass() const;
};

struct VerifyOptions {
  double x_max = 0.0;  // <= 0: engine default
  ToleranceConfig tol{};
  std::uint64_t seed = 0;
};

/// Runs the acceptance checks on the catalog potentials (Bessel nu = 3/2 and the free potential).
/// The engine is used wherever the check concerns computed m-functions.
VerificationReport run_verification(const VerifyOptions& opt = {});

}  // namespace weylsys
