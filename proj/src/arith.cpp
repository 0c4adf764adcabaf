#include "quartic/arith.hpp"

#include <array>
#include <bit>
#include <numeric>
#include <string>

namespace quartic::arith {

UInt isqrt(UInt n) noexcept {
  if (n < 2) return n;
  // 2^ceil(bits/2) is an upper bound for sqrt(n); Newton decreases
  // monotonically from any upper bound to the floor.
  const int shift = (std::bit_width(n) + 1) / 2;
  UInt x = UInt{1} << shift;
  UInt y = (x + n / x) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  // floor correction
  while (static_cast<unsigned __int128>(x) * x > n) --x;
  while (static_cast<unsigned __int128>(x + 1) * (x + 1) <= n) ++x;
  return x;
}

std::optional<UInt> is_perfect_square(UInt n) noexcept {
  // squares mod 16 are 0, 1, 4, 9
  constexpr unsigned kSquareMask16 = (1u << 0) | (1u << 1) | (1u << 4) | (1u << 9);
  if (((kSquareMask16 >> (n & 15u)) & 1u) == 0) return std::nullopt;
  const UInt r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

std::optional<Int> square_root_if_square(Int n) noexcept {
  if (n < 0) return std::nullopt;
  if (auto r = is_perfect_square(static_cast<UInt>(n))) return static_cast<Int>(*r);
  return std::nullopt;
}

std::optional<Int> cube_root_if_cube(Int n) noexcept {
  const bool neg = n < 0;
  const UInt mag = neg ? UInt{0} - static_cast<UInt>(n) : static_cast<UInt>(n);
  // integer bisection; 2642245^3 is the largest cube below 2^64
  UInt lo = 0, hi = 2642246;
  while (lo < hi) {
    const UInt mid = lo + (hi - lo + 1) / 2;
    if (static_cast<unsigned __int128>(mid) * mid * mid <= mag)
      lo = mid;
    else
      hi = mid - 1;
  }
  if (static_cast<unsigned __int128>(lo) * lo * lo != mag) return std::nullopt;
  return neg ? -static_cast<Int>(lo) : static_cast<Int>(lo);
}

UInt mulmod(UInt a, UInt b, UInt mod) noexcept {
  return static_cast<UInt>(static_cast<unsigned __int128>(a) * b % mod);
}

UInt powmod(UInt base, UInt exp, UInt mod) noexcept {
  if (mod == 1) return 0;
  UInt result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1u) result = mulmod(result, base, mod);
    base = mulmod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

namespace {

constexpr std::array<UInt, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool strong_probable_prime(UInt n, UInt a, UInt d, int s) noexcept {
  UInt x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(UInt n) noexcept {
  if (n < 2) return false;
  for (UInt p : kWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 41 * 41) return true;
  UInt d = n - 1;
  int s = 0;
  while ((d & 1u) == 0) {
    d >>= 1;
    ++s;
  }
  for (UInt a : kWitnesses)
    if (!strong_probable_prime(n, a, d, s)) return false;
  return true;
}

std::vector<std::pair<UInt, UInt>> divisor_pairs(UInt ell) {
  if (ell == 0) throw InvalidArgument("divisor_pairs: ell must be positive");
  std::vector<UInt> low;
  std::vector<UInt> high;
  const UInt root = isqrt(ell);
  for (UInt r = 1; r <= root; ++r) {
    if (ell % r != 0) continue;
    low.push_back(r);
    if (r != ell / r) high.push_back(ell / r);
  }
  std::vector<std::pair<UInt, UInt>> pairs;
  pairs.reserve(low.size() + high.size());
  for (UInt r : low) pairs.emplace_back(r, ell / r);
  for (auto it = high.rbegin(); it != high.rend(); ++it) pairs.emplace_back(*it, ell / *it);
  return pairs;
}

UInt divisor_count(UInt n) {
  UInt count = 1;
  for (auto [p, e] : factorize(n)) count *= (e + 1);
  return count;
}

std::vector<std::pair<UInt, unsigned>> factorize(UInt n) {
  if (n == 0) throw InvalidArgument("factorize: zero has no factorization");
  std::vector<std::pair<UInt, unsigned>> out;
  for (UInt p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_squarefree(UInt n) {
  if (n == 0) return false;
  for (auto [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

std::optional<std::pair<UInt, unsigned>> as_prime_power(UInt n) {
  if (n < 2) return std::nullopt;
  const auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

bool is_kth_power_residue(Int a, UInt k, UInt q) {
  if (k == 0) throw InvalidArgument("is_kth_power_residue: k must be positive");
  if (q == 2 || !is_prime(q))
    throw InvalidArgument("is_kth_power_residue: modulus " + std::to_string(q) + " is not an odd prime");
  const UInt r = residue(a, q);
  if (r == 0)
    throw InvalidArgument("is_kth_power_residue: " + std::to_string(a) + " is divisible by " +
                          std::to_string(q));
  // x^k = a solvable in the cyclic group (Z/q)^* iff a^((q-1)/g) = 1, g = gcd(k, q-1)
  const UInt g = std::gcd(k, q - 1);
  return powmod(r, (q - 1) / g, q) == 1;
}

}  // namespace quartic::arith
