#pragma once

// Test-only reference implementations. Deliberately naive and independent of
// the library code paths they check.

#include <cstdint>
#include <numeric>
#include <tuple>
#include <vector>

namespace oracle {

inline std::vector<bool> sieve(std::int64_t limit) {
  std::vector<bool> prime(static_cast<std::size_t>(limit) + 1, true);
  prime[0] = false;
  if (limit >= 1) prime[1] = false;
  for (std::int64_t i = 2; i * i <= limit; ++i)
    if (prime[static_cast<std::size_t>(i)])
      for (std::int64_t j = i * i; j <= limit; j += i) prime[static_cast<std::size_t>(j)] = false;
  return prime;
}

inline bool trial_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline bool naive_square(std::int64_t v, std::int64_t* root = nullptr) {
  if (v < 0) return false;
  for (std::int64_t r = 0; r * r <= v; ++r)
    if (r * r == v) {
      if (root) *root = r;
      return true;
    }
  return false;
}

inline bool in_class(std::int64_t n, std::int64_t p) {
  return (n % 4 == 0 && p % 8 == 3) || (n % 4 == 2 && p % 8 == 7);
}

/// (n, p, m) rows with n <= n_max, by direct scan of every n and p.
inline std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> table_case_i(std::int64_t n_max) {
  std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> rows;
  for (std::int64_t n = 1; n <= n_max; ++n)
    for (std::int64_t p = 2; p < n * n; ++p)
      if (p % 2 == 1 && trial_prime(p) && in_class(n, p) && trial_prime(n * n - p)) rows.emplace_back(n, p, n * n - p);
  return rows;
}

/// (p, n, N) rows with p <= p_max.
inline std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> table_case_ii(std::int64_t p_max) {
  std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> rows;
  for (std::int64_t p = 2; p <= p_max; ++p) {
    if (p % 2 == 0 || !trial_prime(p)) continue;
    for (std::int64_t n = 1; n * n < p; ++n)
      if (in_class(n, p) && trial_prime(p - n * n)) rows.emplace_back(p, n, p - n * n);
  }
  return rows;
}

/// x^k = a (mod q) by enumerating every x.
inline bool kth_power_by_enumeration(std::int64_t a, int k, std::int64_t q) {
  const std::int64_t target = ((a % q) + q) % q;
  for (std::int64_t x = 1; x < q; ++x) {
    std::int64_t v = 1;
    for (int i = 0; i < k; ++i) v = v * x % q;
    if (v == target) return true;
  }
  return false;
}

}  // namespace oracle
