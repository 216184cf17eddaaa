#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <future>
#include <thread>
#include <vector>

namespace weylsys {

/// Applies fn to every input on a small pool of threads; results keep input order.
/// The first exception (by input index) is rethrown.
template <typename In, typename Fn>
auto parallel_map(const std::vector<In>& inputs, Fn fn)
    -> std::vector<std::invoke_result_t<Fn&, const In&>> {
  using Out = std::invoke_result_t<Fn&, const In&>;
  const std::size_t n = inputs.size();
  std::vector<Out> out(n);
  if (n == 0) return out;
  const std::size_t workers =
      std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::exception_ptr> errors(n);
  auto run = [&](std::size_t w) {
    for (std::size_t i = w; i < n; i += workers) {
      try {
        out[i] = fn(inputs[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::future<void>> tasks;
    tasks.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) tasks.push_back(std::async(std::launch::async, run, w));
    for (auto& t : tasks) t.get();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace weylsys
