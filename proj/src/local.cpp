#include "quartic/local.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "quartic/arith.hpp"

namespace quartic::local {

LocalModulus::LocalModulus(Int p, unsigned k) : p_(p), k_(k), value_(1) {
  if (p < 2 || !arith::is_prime(static_cast<arith::UInt>(p)))
    throw InvalidArgument("local modulus base " + std::to_string(p) + " is not prime");
  if (k < 1) throw InvalidArgument("local modulus exponent must be at least 1");
  for (unsigned i = 0; i < k; ++i) value_ = checked::mul(value_, p, "prime power");
}

LocalModulus LocalModulus::from_prime_power(Int q) {
  if (q >= 2)
    if (auto pk = arith::as_prime_power(static_cast<arith::UInt>(q)))
      return LocalModulus(static_cast<Int>(pk->first), pk->second);
  throw InvalidArgument(std::to_string(q) + " is not a prime power");
}

namespace {

using arith::UInt;

UInt reduce(Int a, Int m) { return arith::residue(a, static_cast<UInt>(m)); }

void require_within_limit(const LocalModulus& modulus, Int scan_limit) {
  if (modulus.value() > scan_limit)
    throw ScanLimitError("modulus " + std::to_string(modulus.value()) + " exceeds the residue scan limit " +
                         std::to_string(scan_limit) + "; raise scan_limit to continue");
}

// Lexicographically least primitive (x, y, z) with lhs(x, y) == rhs(z) mod M.
// rhs is tabulated once so the scan is over (x, y) only.
template <class Lhs, class Rhs>
std::optional<ResidueWitness> least_primitive_witness(const LocalModulus& modulus, Lhs lhs, Rhs rhs) {
  const Int m = modulus.value();
  const Int p = modulus.p();
  const auto size = static_cast<std::size_t>(m);
  std::vector<Int> any_z(size, -1);
  std::vector<Int> unit_z(size, -1);
  for (Int z = m - 1; z >= 0; --z) {
    const auto r = static_cast<std::size_t>(rhs(z));
    any_z[r] = z;
    if (z % p != 0) unit_z[r] = z;
  }
  for (Int x = 0; x < m; ++x) {
    const bool x_unit = x % p != 0;
    for (Int y = 0; y < m; ++y) {
      const auto r = static_cast<std::size_t>(lhs(x, y));
      const Int z = (x_unit || y % p != 0) ? any_z[r] : unit_z[r];
      if (z >= 0) return ResidueWitness{x, y, z};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<ResidueWitness> primitive_solvable_mod(const GeneralQuarticForm& form, const LocalModulus& modulus,
                                                     Int scan_limit) {
  require_within_limit(modulus, scan_limit);
  const Int m = modulus.value();
  const auto size = static_cast<std::size_t>(m);
  const Wide a = reduce(form.a(), m), b = reduce(form.b(), m), c = reduce(form.c(), m), d = reduce(form.d(), m);
  std::vector<Int> sq(size), fourth(size);
  for (Int i = 0; i < m; ++i) {
    sq[static_cast<std::size_t>(i)] = static_cast<Int>(Wide{i} * i % m);
    fourth[static_cast<std::size_t>(i)] = static_cast<Int>(Wide{sq[static_cast<std::size_t>(i)]} * sq[static_cast<std::size_t>(i)] % m);
  }
  auto lhs = [&](Int x, Int y) {
    const auto ix = static_cast<std::size_t>(x), iy = static_cast<std::size_t>(y);
    return static_cast<Int>((a * fourth[ix] + b * (Wide{sq[ix]} * sq[iy] % m) + c * fourth[iy]) % m);
  };
  auto rhs = [&](Int z) { return static_cast<Int>(d * sq[static_cast<std::size_t>(z)] % m); };
  return least_primitive_witness(modulus, lhs, rhs);
}

bool check_witness(const GeneralQuarticForm& form, const LocalModulus& modulus, const ResidueWitness& w) {
  const Int m = modulus.value(), p = modulus.p();
  if (w.x % p == 0 && w.y % p == 0 && w.z % p == 0) return false;
  auto r = [m](Wide v) { return static_cast<Int>(((v % m) + m) % m); };
  const Wide x2 = r(Wide{w.x} * w.x), y2 = r(Wide{w.y} * w.y), z2 = r(Wide{w.z} * w.z);
  const Wide lhs = r(r(form.a()) * r(x2 * x2)) + r(r(form.b()) * r(x2 * y2)) + r(r(form.c()) * r(y2 * y2));
  return r(lhs - r(r(form.d()) * z2)) == 0;
}

bool real_solvable(const GeneralQuarticForm& form) {
  // d > 0, so we need a t^2 + b t + c >= 0 for some t = x^2/y^2 >= 0 (or y = 0)
  const Int a = form.a(), b = form.b(), c = form.c();
  if (a >= 0 || c >= 0) return true;
  // a < 0, c < 0: maximum over t >= 0 sits at t = -b/(2a), which needs b > 0
  return b > 0 && form.discriminant() >= 0;
}

void validate_side_conditions(const GeneralQuarticForm& form) {
  if (form.discriminant() == 0) throw InvalidArgument("side condition violated: b^2 - 4ac must be nonzero");
  if (!arith::is_squarefree(static_cast<UInt>(form.d())))
    throw InvalidArgument("side condition violated: d = " + std::to_string(form.d()) + " is not squarefree");
}

namespace {

QuadraticSystemSolution normalize(QuadraticSystemSolution s) {
  const Int lead = s.u != 0 ? s.u : s.v != 0 ? s.v : s.w != 0 ? s.w : s.z;
  if (lead < 0) s = {-s.u, -s.v, -s.w, -s.z};
  return s;
}

bool system_holds(const GeneralQuarticForm& f, const QuadraticSystemSolution& s) {
  const Wide lhs = Wide{f.a()} * s.u * s.u + Wide{f.b()} * s.v * s.v + Wide{f.c()} * s.w * s.w;
  return lhs == Wide{f.d()} * s.z * s.z && Wide{s.u} * s.w == Wide{s.v} * s.v;
}

}  // namespace

std::vector<QuadraticSystemSolution> system_search(const GeneralQuarticForm& form, Int bound,
                                                   SideConditions conditions) {
  if (conditions == SideConditions::Enforce) validate_side_conditions(form);
  if (bound < 0) throw InvalidArgument("system_search bound must be nonnegative");
  checked::mul(checked::square(bound), Int{4});
  std::set<QuadraticSystemSolution> found;
  for (Int u = -bound; u <= bound; ++u) {
    for (Int w = -bound; w <= bound; ++w) {
      const Int uw = u * w;
      if (uw < 0) continue;
      const auto v = arith::square_root_if_square(uw);
      if (!v || *v > bound) continue;
      for (Int vs : {*v, -*v}) {
        const Wide lhs = Wide{form.a()} * u * u + Wide{form.b()} * vs * vs + Wide{form.c()} * w * w;
        if (lhs < 0 || lhs % form.d() != 0) continue;
        const auto z = arith::square_root_if_square(checked::narrow(lhs / form.d()));
        if (!z || *z > bound) continue;
        for (Int zs : {*z, -*z}) {
          if (u == 0 && vs == 0 && w == 0 && zs == 0) continue;
          found.insert(normalize({u, vs, w, zs}));
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

CorrespondenceReport check_13_14_correspondence(const GeneralQuarticForm& form, Int bound,
                                                SideConditions conditions) {
  if (conditions == SideConditions::Enforce) validate_side_conditions(form);
  CorrespondenceReport report;
  report.bound = bound;
  if (bound >= 1) report.quartic_solutions = search_general(form, bound);
  for (const auto& s : report.quartic_solutions) {
    const QuadraticSystemSolution image{checked::square(s.x), checked::mul(s.x, s.y), checked::square(s.y), s.z};
    if (!system_holds(form, image)) report.forward_verified = false;
  }
  report.system_solutions = system_search(form, bound, SideConditions::Skip);
  for (const auto& s : report.system_solutions) {
    const bool u_sq = arith::square_root_if_square(s.u < 0 ? -s.u : s.u).has_value();
    const bool w_sq = arith::square_root_if_square(s.w < 0 ? -s.w : s.w).has_value();
    if (!(u_sq && w_sq)) report.without_preimage.push_back(s);
  }
  return report;
}

bool LocalReport::self_consistent() const {
  for (const auto& v : verdicts)
    if (v.witness && !check_witness(form, v.modulus, *v.witness)) return false;
  return true;
}

LocalReport local_report(const GeneralQuarticForm& form, const std::vector<LocalModulus>& moduli, Int global_bound,
                         Int scan_limit, unsigned workers) {
  LocalReport report{form, real_solvable(form), {}, global_bound, {}};
  for (const auto& mod : moduli) {
    ModulusVerdict v{mod, primitive_solvable_mod(form, mod, scan_limit), true};
    v.system_equivalence_claimed = !(mod.k() == 1 && form.d() % mod.p() == 0);
    report.verdicts.push_back(v);
  }
  if (global_bound >= 1) report.global_solutions = search_general(form, global_bound, workers);
  return report;
}

std::vector<LocalModulus> prime_powers_up_to(Int limit) {
  std::vector<LocalModulus> out;
  for (Int q = 2; q <= limit; ++q)
    if (auto pk = arith::as_prime_power(static_cast<UInt>(q)))
      out.emplace_back(static_cast<Int>(pk->first), pk->second);
  return out;
}

AitkenLemmermeyerVerdict aitken_lemmermeyer_check(Int q, Int d) {
  AitkenLemmermeyerVerdict v;
  v.q = q;
  v.d = d;
  if (q < 1 || d < 1) return v;
  v.q_prime_1_mod_16 = q % 16 == 1 && arith::is_prime(static_cast<UInt>(q));
  v.d_squarefree = arith::is_squarefree(static_cast<UInt>(d));
  if (v.q_prime_1_mod_16 && d % q != 0)
    v.d_square_not_fourth_power_mod_q = arith::is_kth_power_residue(d, 2, static_cast<UInt>(q)) &&
                                        !arith::is_kth_power_residue(d, 4, static_cast<UInt>(q));
  v.q_fourth_power_mod_odd_divisors = true;
  for (auto [prime, e] : arith::factorize(static_cast<UInt>(d))) {
    if (prime == 2) continue;
    if (q % static_cast<Int>(prime) == 0 || !arith::is_kth_power_residue(q, 4, prime)) {
      v.q_fourth_power_mod_odd_divisors = false;
      break;
    }
  }
  return v;
}

std::vector<AitkenLemmermeyerVerdict> hasse_scan(Int q_max, Int d_max) {
  std::vector<AitkenLemmermeyerVerdict> out;
  for (Int q = 1; q <= q_max; ++q) {
    if (q % 16 != 1 || !arith::is_prime(static_cast<UInt>(q))) continue;
    for (Int d = 1; d <= d_max; ++d)
      if (auto v = aitken_lemmermeyer_check(q, d); v.holds()) out.push_back(v);
  }
  return out;
}

bool SelmerReport::consistent_with_local_global_failure() const noexcept {
  if (!nontrivial_solutions.empty()) return false;
  for (const auto& [mod, w] : witnesses)
    if (!w) return false;
  return true;
}

std::optional<ResidueWitness> selmer_primitive_mod(const LocalModulus& modulus, Int scan_limit) {
  require_within_limit(modulus, scan_limit);
  const Int m = modulus.value();
  auto cube = [m](Int t) { return Wide{t} * t % m * t % m; };
  auto lhs = [&](Int x, Int y) { return static_cast<Int>((3 * cube(x) + 4 * cube(y)) % m); };
  auto rhs = [&](Int z) { return static_cast<Int>(((-5 * cube(z)) % m + m) % m); };
  return least_primitive_witness(modulus, lhs, rhs);
}

SelmerReport selmer_fixture(Int bound, const std::vector<LocalModulus>& moduli, Int scan_limit) {
  if (bound < 0) throw InvalidArgument("selmer_fixture bound must be nonnegative");
  SelmerReport report;
  report.bound = bound;
  checked::mul(Int{9}, checked::mul(bound, checked::square(bound)));
  for (Int x = -bound; x <= bound; ++x)
    for (Int y = -bound; y <= bound; ++y) {
      const Int t = 3 * x * x * x + 4 * y * y * y;
      if (t % 5 != 0) continue;
      const auto z = arith::cube_root_if_cube(-t / 5);
      if (!z || *z > bound || *z < -bound) continue;
      if (x == 0 && y == 0 && *z == 0) continue;
      report.nontrivial_solutions.push_back({x, y, *z});
    }
  for (const auto& mod : moduli) report.witnesses.emplace_back(mod, selmer_primitive_mod(mod, scan_limit));
  return report;
}

}  // namespace quartic::local
