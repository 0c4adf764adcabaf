#include "quartic/conic.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "quartic/arith.hpp"
#include "quartic/parallel.hpp"

namespace quartic::conic {

const char* to_string(ConicDefect defect) noexcept {
  switch (defect) {
    case ConicDefect::NonPositiveParameter: return "non_positive_parameter";
    case ConicDefect::ScaleNotOneOrTwo: return "scale_not_one_or_two";
    case ConicDefect::RhoProductMismatch: return "rho_product_mismatch";
    case ConicDefect::NotCoprime: return "k_lambda_not_coprime";
    case ConicDefect::NonPositiveX: return "non_positive_x";
    case ConicDefect::OddNumerator: return "odd_numerator";
  }
  return "unknown";
}

void validate(const ConicParametrization& p) {
  if (p.ell < 1 || p.k < 1 || p.lambda < 1 || p.rho1 < 1 || p.rho2 < 1)
    throw ConicParamError(ConicDefect::NonPositiveParameter,
                          "conic parameters ell, k, lambda, rho1, rho2 must be positive");
  if (p.d != 1 && p.d != 2)
    throw ConicParamError(ConicDefect::ScaleNotOneOrTwo, "conic scale d must be 1 or 2, got " + std::to_string(p.d));
  if (checked::mul(p.rho1, p.rho2) != p.ell)
    throw ConicParamError(ConicDefect::RhoProductMismatch,
                          "rho1 * rho2 = " + std::to_string(p.rho1 * p.rho2) + " differs from ell = " +
                              std::to_string(p.ell));
  if (std::gcd(p.k, p.lambda) != 1)
    throw ConicParamError(ConicDefect::NotCoprime, "gcd(k, lambda) = " + std::to_string(std::gcd(p.k, p.lambda)) +
                                                      ", expected 1");
  const Int a = checked::mul(p.rho1, checked::square(p.k));
  const Int b = checked::mul(p.rho2, checked::square(p.lambda));
  if (a <= b)
    throw ConicParamError(ConicDefect::NonPositiveX, "rho1*k^2 - rho2*lambda^2 must be positive");
  if ((p.d * (a - b)) % 2 != 0)
    throw ConicParamError(ConicDefect::OddNumerator, "d*(rho1*k^2 - rho2*lambda^2) is odd; x would not be an integer");
}

ConicTriple expand(const ConicParametrization& p) {
  validate(p);
  const Int a = checked::mul(p.rho1, checked::square(p.k));
  const Int b = checked::mul(p.rho2, checked::square(p.lambda));
  return {checked::mul(p.d, a - b) / 2, checked::mul(checked::mul(p.d, p.k), p.lambda),
          checked::mul(p.d, checked::add(a, b)) / 2};
}

namespace {

void sort_unique(std::vector<ConicTriple>& v) {
  std::sort(v.begin(), v.end(), triple_order);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void require_positive(Int ell, Int z_max) {
  if (ell < 1) throw InvalidArgument("ell must be positive");
  if (z_max < 1) throw InvalidArgument("z_max must be positive");
}

}  // namespace

std::vector<ConicTriple> enumerate_primitive(Int ell, Int z_max, unsigned workers) {
  require_positive(ell, z_max);
  const Int twice_z = checked::mul(Int{2}, z_max);
  const auto pairs = arith::divisor_pairs(static_cast<arith::UInt>(ell));

  // one row per divisor pair; k and lambda grow until z passes z_max
  auto row = [&](std::int64_t idx, std::vector<ConicTriple>& out) {
    const Int rho1 = static_cast<Int>(pairs[static_cast<std::size_t>(idx)].first);
    const Int rho2 = static_cast<Int>(pairs[static_cast<std::size_t>(idx)].second);
    for (Int d = 1; d <= 2; ++d) {
      for (Int k = 1; d * rho1 * k * k < twice_z; ++k) {
        const Int a = rho1 * k * k;
        for (Int lambda = 1;; ++lambda) {
          const Int b = rho2 * lambda * lambda;
          if (d * (a + b) > twice_z) break;
          if (a <= b) break;  // b only grows with lambda
          if ((d * (a - b)) % 2 != 0) continue;
          if (std::gcd(k, lambda) != 1) continue;
          const ConicTriple t{d * (a - b) / 2, d * k * lambda, d * (a + b) / 2};
          if (std::gcd(t.x, t.y) != 1) continue;
          out.push_back(t);
        }
      }
    }
  };
  auto triples = collect_rows<ConicTriple>(0, static_cast<std::int64_t>(pairs.size()) - 1, workers, row);
  sort_unique(triples);
  return triples;
}

std::vector<ConicTriple> brute_force_oracle(Int ell, Int z_max, unsigned workers) {
  require_positive(ell, z_max);
  // ell * z_max^2 must stay exact
  checked::mul(ell, checked::square(z_max), "brute_force_oracle range");

  auto row = [ell](std::int64_t z, std::vector<ConicTriple>& out) {
    const Int zz = z * z;
    for (Int y = 1;; ++y) {
      const Int rest = zz - ell * y * y;
      if (rest <= 0) break;
      if (auto x = arith::square_root_if_square(rest); x && std::gcd(*x, y) == 1) out.push_back({*x, y, z});
    }
  };
  auto triples = collect_rows<ConicTriple>(1, z_max, workers, row);
  sort_unique(triples);
  return triples;
}

std::vector<ConicParametrization> parametrizations_of(Int ell, const ConicTriple& t) {
  require_positive(ell, 1);
  std::vector<ConicParametrization> found;
  if (t.x < 1 || t.y < 1 || t.z < 1) return found;
  for (Int d = 1; d <= 2; ++d) {
    if (t.y % d != 0) continue;
    const Int kl = t.y / d;
    for (auto [r1, r2] : arith::divisor_pairs(static_cast<arith::UInt>(ell))) {
      for (auto [k, lambda] : arith::divisor_pairs(static_cast<arith::UInt>(kl))) {
        const ConicParametrization p{ell, d, static_cast<Int>(k), static_cast<Int>(lambda), static_cast<Int>(r1),
                                     static_cast<Int>(r2)};
        try {
          if (expand(p) == t) found.push_back(p);
        } catch (const ConicParamError&) {
        }
      }
    }
  }
  return found;
}

}  // namespace quartic::conic
