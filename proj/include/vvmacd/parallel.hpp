#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace vvmacd {

// Worker count: explicit override, else VVMACD_THREADS, else hardware.
int thread_count();
// n <= 0 clears the override.
void set_thread_count(int n);

// Runs fn(i) for each i in [0, n) across the worker pool.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

// Maps fn over [0, n); results come back in index order so that downstream
// reduction is deterministic regardless of the worker count.
template <typename Fn>
auto parallel_map(std::size_t n, Fn&& fn)
    -> std::vector<decltype(fn(std::size_t{}))> {
  using R = decltype(fn(std::size_t{}));
  std::vector<std::optional<R>> slots(n);
  parallel_for(n, [&](std::size_t i) { slots[i].emplace(fn(i)); });
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace vvmacd
