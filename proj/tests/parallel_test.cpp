#include <stdexcept>
#include <string>

#include "doctest.h"
#include "weylsys/parallel.hpp"

using weylsys::parallel_map;

TEST_CASE("parallel_map keeps input order") {
  std::vector<int> in(1000);
  for (int i = 0; i < 1000; ++i) in[i] = i;
  const auto out = parallel_map(in, [](int x) { return x * x; });
  REQUIRE(out.size() == in.size());
  for (int i = 0; i < 1000; ++i) CHECK(out[i] == i * i);
  CHECK(parallel_map(std::vector<int>{}, [](int x) { return x; }).empty());
}

TEST_CASE("parallel_map rethrows the first failing input") {
  std::vector<int> in{0, 1, 2, 3, 4, 5, 6, 7};
  try {
    parallel_map(in, [](int x) -> int {
      if (x >= 3) throw std::runtime_error(std::to_string(x));
      return x;
    });
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()) == "3");
  }
}
