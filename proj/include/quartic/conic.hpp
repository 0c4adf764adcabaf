#pragma once

// Integer solutions of x^2 + ell * y^2 = z^2 through the classical
// two-divisor parametrization
//
//   x = d (r1 k^2 - r2 l^2) / 2,   y = d k l,   z = d (r1 k^2 + r2 l^2) / 2,
//
// with r1 * r2 = ell, gcd(k, l) = 1 and d in {1, 2} for coprime (x, y).

#include <compare>
#include <vector>

#include "quartic/checked.hpp"
#include "quartic/error.hpp"

namespace quartic::conic {

struct ConicParametrization {
  Int ell = 1;
  Int d = 1;
  Int k = 1;
  Int lambda = 1;
  Int rho1 = 1;
  Int rho2 = 1;

  friend bool operator==(const ConicParametrization&, const ConicParametrization&) = default;
};

struct ConicTriple {
  Int x = 0;
  Int y = 0;
  Int z = 0;

  friend bool operator==(const ConicTriple&, const ConicTriple&) = default;
};

/// Canonical output order: z ascending, then x.
inline bool triple_order(const ConicTriple& a, const ConicTriple& b) noexcept {
  if (a.z != b.z) return a.z < b.z;
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

enum class ConicDefect {
  NonPositiveParameter,
  ScaleNotOneOrTwo,
  RhoProductMismatch,
  NotCoprime,
  NonPositiveX,
  OddNumerator,
};

const char* to_string(ConicDefect defect) noexcept;

class ConicParamError : public Error {
 public:
  ConicParamError(ConicDefect defect, const std::string& what)
      : Error(ErrorKind::InvalidArgument, what), defect_(defect) {}

  ConicDefect defect() const noexcept { return defect_; }

 private:
  ConicDefect defect_;
};

/// Throws ConicParamError naming the first violated invariant.
void validate(const ConicParametrization& param);

ConicTriple expand(const ConicParametrization& param);

/// All primitive triples with z <= z_max, generated from the parametrization
/// and deduplicated; sorted by (z, x).
std::vector<ConicTriple> enumerate_primitive(Int ell, Int z_max, unsigned workers = 1);

/// Independent ground truth: scans (z, y) directly and tests z^2 - ell*y^2
/// for squareness. Sorted by (z, x).
std::vector<ConicTriple> brute_force_oracle(Int ell, Int z_max, unsigned workers = 1);

/// Every admissible parameter tuple (d in {1, 2}) whose expansion is `t`.
std::vector<ConicParametrization> parametrizations_of(Int ell, const ConicTriple& t);

}  // namespace quartic::conic
