// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>

#include "weylsys/verification.hpp"

int main() {
  const auto start = std::chrono::steady_clock::now();
  const weylsys::VerificationReport rep = weylsys::run_verification();
  for (const auto& c : rep.criteria) {
    std::printf("%s criterion %-3s %s: %s\n", c.pass ? "PASS" : "FAIL", c.id.c_str(), c.name.c_str(), c.detail.c_str());
  }
  for (const auto& n : rep.notes) std::printf("note %s\n", n.c_str());
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s (%.1f s)\n", rep.all_pass() ? "all criteria pass" : "some criteria fail", secs);
  return rep.all_pass() ? 0 : 1;
}
