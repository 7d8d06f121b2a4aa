#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace jackpos {

namespace detail {
inline std::atomic<int>& jobs_slot() {
  static std::atomic<int> j{1};
  return j;
}
}  // namespace detail

inline int jobs() { return detail::jobs_slot().load(); }
inline void set_jobs(int n) { detail::jobs_slot().store(std::max(1, n)); }

/// Applies fn to every item on up to jobs() threads; results keep the input order.
/// The first exception thrown by any task is rethrown after all workers stop.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, F fn) -> std::vector<decltype(fn(items.front()))> {
  using R = decltype(fn(items.front()));
  std::vector<std::optional<R>> slots(items.size());
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs()), items.size());
  if (workers <= 1) {
    std::vector<R> out;
    out.reserve(items.size());
    for (const auto& x : items) out.push_back(fn(x));
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= items.size()) return;
      try {
        slots[i].emplace(fn(items[i]));
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next.store(items.size());
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  std::vector<R> out;
  out.reserve(items.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace jackpos
