#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace quartic {

/// Number of worker threads; 0 means "use hardware concurrency".
unsigned resolve_workers(unsigned requested) noexcept;

/// Runs `row(i, out)` for every i in [first, last], splitting the range into
/// contiguous stripes, one per worker. Stripe outputs are concatenated in
/// stripe order, so the result is identical to a serial run.
template <class Item, class RowFn>
std::vector<Item> collect_rows(std::int64_t first, std::int64_t last, unsigned workers, RowFn row) {
  std::vector<Item> result;
  if (last < first) return result;
  const auto total = static_cast<std::uint64_t>(last - first) + 1;
  const auto count = static_cast<std::uint64_t>(std::max(1u, resolve_workers(workers)));
  const auto stripes = std::min<std::uint64_t>(count, total);

  if (stripes == 1) {
    for (std::int64_t i = first; i <= last; ++i) row(i, result);
    return result;
  }

  std::vector<std::vector<Item>> partial(stripes);
  std::vector<std::exception_ptr> failures(stripes);
  std::vector<std::thread> threads;
  threads.reserve(stripes);
  for (std::uint64_t s = 0; s < stripes; ++s) {
    const auto lo = first + static_cast<std::int64_t>(total * s / stripes);
    const auto hi = first + static_cast<std::int64_t>(total * (s + 1) / stripes) - 1;
    threads.emplace_back([&, s, lo, hi] {
      try {
        for (std::int64_t i = lo; i <= hi; ++i) row(i, partial[s]);
      } catch (...) {
        failures[s] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  // first failing stripe wins, matching what a serial scan would report
  for (auto& f : failures)
    if (f) std::rethrow_exception(f);
  for (auto& p : partial) result.insert(result.end(), p.begin(), p.end());
  return result;
}

}  // namespace quartic
