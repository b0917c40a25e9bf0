#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace riley {

/// Applies fn to every item on up to `jobs` threads. Results keep the input
/// order, so output is identical for any job count. The first exception
/// thrown by fn is rethrown after all workers join.
template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, Fn fn, unsigned jobs = 1)
    -> std::vector<std::invoke_result_t<Fn&, const T&>> {
  using R = std::invoke_result_t<Fn&, const T&>;
  if (jobs <= 1 || items.size() <= 1) {
    std::vector<R> out;
    out.reserve(items.size());
    for (const auto& item : items) out.push_back(fn(item));
    return out;
  }

  std::vector<std::optional<R>> slots(items.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        slots[i].emplace(fn(items[i]));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };

  const std::size_t n = std::min<std::size_t>(jobs, items.size());
  std::vector<std::jthread> threads;
  threads.reserve(n);
  for (std::size_t t = 0; t < n; ++t) threads.emplace_back(worker);
  threads.clear();

  if (error) std::rethrow_exception(error);
  std::vector<R> out;
  out.reserve(items.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace riley
