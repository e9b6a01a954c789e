#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <mutex>
#include <optional>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

namespace orientk::detail {

inline int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Evaluates fn(0..count-1), where fn returns an optional failure, and
/// returns the failure with the smallest index. The answer does not depend
/// on the thread count.
template <typename Fn>
auto first_failure(std::size_t count, int threads, Fn&& fn)
    -> std::optional<std::pair<std::size_t,
                               typename std::invoke_result_t<Fn&, std::size_t>::value_type>> {
  using Witness = typename std::invoke_result_t<Fn&, std::size_t>::value_type;
  using Result = std::optional<std::pair<std::size_t, Witness>>;

  const int workers =
      std::min<int>(resolve_threads(threads), static_cast<int>(std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      if (auto w = fn(i)) return Result{std::in_place, i, std::move(*w)};
    return std::nullopt;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};
  std::mutex mutex;
  Result result;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || i > best.load()) return;
      if (auto w = fn(i)) {
        std::lock_guard lock(mutex);
        if (i < best.load()) {
          best.store(i);
          result.emplace(i, std::move(*w));
        }
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  return result;
}

}  // namespace orientk::detail
