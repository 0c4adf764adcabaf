#pragma once

// Exact integer utilities. Nothing in here touches floating point.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "quartic/checked.hpp"

namespace quartic::arith {

using UInt = std::uint64_t;

/// floor(sqrt(n)), computed by integer Newton iteration.
UInt isqrt(UInt n) noexcept;

std::optional<UInt> is_perfect_square(UInt n) noexcept;

/// Signed convenience wrapper: negative values are never squares.
std::optional<Int> square_root_if_square(Int n) noexcept;

/// Exact cube root of a signed value, if one exists.
std::optional<Int> cube_root_if_cube(Int n) noexcept;

/// Deterministic Miller-Rabin. The witness set {2, 3, ..., 37} is proven
/// complete for every n < 3.3e24, so the whole uint64 range is covered
/// without a probabilistic error term.
bool is_prime(UInt n) noexcept;

UInt mulmod(UInt a, UInt b, UInt mod) noexcept;
UInt powmod(UInt base, UInt exp, UInt mod) noexcept;

/// Every ordered pair (r1, r2) with r1 * r2 == ell, ascending in r1.
/// Throws InvalidArgument for ell == 0.
std::vector<std::pair<UInt, UInt>> divisor_pairs(UInt ell);

/// Number of divisors, by trial division.
UInt divisor_count(UInt n);

/// Prime factorization as (prime, exponent) pairs, ascending.
std::vector<std::pair<UInt, unsigned>> factorize(UInt n);

bool is_squarefree(UInt n);

/// If n = p^k for a prime p and k >= 1, returns (p, k).
std::optional<std::pair<UInt, unsigned>> as_prime_power(UInt n);

/// Whether x^k == a (mod q) is solvable, for an odd prime q.
/// Throws InvalidArgument if q is not an odd prime, k == 0, or q | a.
bool is_kth_power_residue(Int a, UInt k, UInt q);

/// a mod m in [0, m).
inline UInt residue(Int a, UInt m) noexcept {
  const Int r = static_cast<Int>(static_cast<Wide>(a) % static_cast<Wide>(m));
  return static_cast<UInt>(r < 0 ? r + static_cast<Int>(m) : r);
}

}  // namespace quartic::arith
