#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "rfg/errors.hpp"

namespace rfg {

// Applies fn to every index in [0, n) on up to jobs threads and returns the
// results in index order. Worker w handles indices w, w + t, w + 2t, ... for
// t running threads; results and exceptions are recorded per index and the
// exception at the smallest index is rethrown, so the outcome is a pure
// function of (n, fn) and never depends on scheduling.
template <typename F>
auto parallel_map(std::size_t n, std::size_t jobs, F&& fn)
    -> std::vector<decltype(fn(std::size_t{0}))> {
  using R = decltype(fn(std::size_t{0}));
  if (jobs == 0) throw InputError("parallelism degree must be positive");

  std::vector<std::optional<R>> slots(n);
  std::vector<std::exception_ptr> errors(n);

  auto run_range = [&](std::size_t start, std::size_t stride) {
    for (std::size_t i = start; i < n; i += stride) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  std::size_t threads = jobs < n ? jobs : n;
  if (threads <= 1) {
    run_range(0, 1);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t w = 0; w < threads; ++w) pool.emplace_back(run_range, w, threads);
    for (std::thread& t : pool) t.join();
  }

  for (std::size_t i = 0; i < n; ++i)
    if (errors[i]) std::rethrow_exception(errors[i]);

  std::vector<R> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::move(*slots[i]));
  return out;
}

}  // namespace rfg
