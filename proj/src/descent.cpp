#include "quartic/descent.hpp"

#include <array>
#include <numeric>
#include <sstream>

#include "quartic/arith.hpp"

namespace quartic::descent {

const char* to_string(ParityBranch b) noexcept {
  switch (b) {
    case ParityBranch::OddOdd: return "odd_odd";
    case ParityBranch::EvenOdd: return "even_odd";
    case ParityBranch::OddEven: return "odd_even";
  }
  return "unknown";
}

const char* to_string(Case9 c) noexcept { return c == Case9::Case9a ? "case_9a" : "case_9b"; }
const char* to_string(Sign s) noexcept { return s == Sign::Plus ? "plus" : "minus"; }

const char* to_string(RhoAssignment r) noexcept {
  return r == RhoAssignment::Rho1IsPrime ? "rho1_is_prime" : "rho2_is_prime";
}

const char* to_string(OutcomeKind k) noexcept {
  switch (k) {
    case OutcomeKind::ContradictionMod4: return "contradiction_mod4";
    case OutcomeKind::ContradictionMod8: return "contradiction_mod8";
    case OutcomeKind::Descended: return "descended";
    case OutcomeKind::Stalled: return "stalled";
  }
  return "unknown";
}

bool BranchReport::all_confirmed() const noexcept {
  for (const auto& c : checks)
    if (!c.confirmed()) return false;
  return !checks.empty();
}

bool verify_factorization_identity(Int n, Int p, Int x, Int y) {
  const Wide wn = n, wp = p, wx = x, wy = y;
  const Wide x2 = checked::mul(wx, wx), y2 = checked::mul(wy, wy);
  const Wide y4 = checked::mul(y2, y2);
  const Wide s = checked::add(x2, checked::mul(wn, y2));
  const Wide m = checked::sub(checked::mul(wn, wn), wp);
  const Wide form = checked::add(checked::add(checked::mul(x2, x2), checked::mul(checked::mul(Wide{2}, wn),
                                                                                  checked::mul(x2, y2))),
                                 checked::mul(m, y4));
  return checked::sub(checked::mul(s, s), form) == checked::mul(wp, y4);
}

// ---- residue scans -----------------------------------------------------

namespace {

constexpr Int kScanModulus = 8;

Int mod(Wide v, Int m) {
  Wide r = v % m;
  return static_cast<Int>(r < 0 ? r + m : r);
}

struct Scan {
  BranchCheck check;

  void visit(bool satisfied, std::initializer_list<Int> tuple) {
    ++check.tuples_scanned;
    if (!satisfied) return;
    if (check.survivors++ == 0) check.first_survivor.assign(tuple);
  }
};

BranchCheck scan_odd_odd(Int n, Int m) {
  Scan s{{"odd_odd", 4, 0, 0, {}}};
  for (Int x = 1; x < kScanModulus; x += 2)
    for (Int y = 1; y < kScanModulus; y += 2)
      for (Int z = 0; z < kScanModulus; ++z) {
        const Wide lhs = Wide{x * x * x * x} + Wide{2} * n * x * x * y * y + Wide{m} * y * y * y * y;
        s.visit(mod(lhs - z * z, 4) == 0, {x, y, z});
      }
  return s.check;
}

BranchCheck scan_even_odd(Int n, Int m) {
  Scan s{{"even_odd", 8, 0, 0, {}}};
  for (Int x = 0; x < kScanModulus; x += 2)
    for (Int y = 1; y < kScanModulus; y += 2)
      for (Int z = 0; z < kScanModulus; ++z) {
        const Wide lhs = Wide{x * x * x * x} + Wide{2} * n * x * x * y * y + Wide{m} * y * y * y * y;
        s.visit(mod(lhs - z * z, 8) == 0, {x, y, z});
      }
  return s.check;
}

BranchCheck scan_case_9b(Int n, Int p) {
  Scan s{{"case_9b", 4, 0, 0, {}}};
  for (Int x0 = 1; x0 < kScanModulus; x0 += 2)
    for (Int y0 = 0; y0 < kScanModulus; y0 += 2)
      for (Int y1 = 0; y1 < kScanModulus; ++y1)
        for (Int y2 = 1; y2 < kScanModulus; y2 += 2) {
          const Wide lhs = Wide{x0 * x0} + Wide{n} * y0 * y0;
          const Wide four_y1 = Wide{4} * y1 * y1 * y1 * y1;
          // the y2 exponent is checked both as a fourth power and as a square
          const Int e4 = mod(lhs - four_y1 - Wide{p} * y2 * y2 * y2 * y2, 4);
          const Int e2 = mod(lhs - four_y1 - Wide{p} * y2 * y2, 4);
          s.visit(e4 == 0, {x0, y0, y1, y2, 4});
          s.visit(e2 == 0, {x0, y0, y1, y2, 2});
        }
  return s.check;
}

BranchCheck scan_subcase_2i(Int n, Int m) {
  Scan s{{"subcase_2i", 4, 0, 0, {}}};
  const std::array<std::pair<Int, Int>, 2> rhos = {{{1, m}, {m, 1}}};
  for (auto [r1, r2] : rhos)
    for (Int k = 0; k < kScanModulus; ++k)
      for (Int l = 0; l < kScanModulus; ++l) {
        if (k % 2 == 0 && l % 2 == 0) continue;  // gcd(k1, l1) = 1
        const Wide rhs = -Wide{r1} * k * k * k * k + Wide{2} * n * k * k * l * l - Wide{r2} * l * l * l * l;
        for (Int y2 = 0; y2 < kScanModulus; ++y2) s.visit(mod(Wide{y2} * y2 - rhs, 4) == 0, {r1, k, l, y2});
      }
  return s.check;
}

BranchCheck scan_subcase_2ii(Int n, Int big_n) {
  Scan s{{"subcase_2ii", 4, 0, 0, {}}};
  for (Int k = 0; k < kScanModulus; ++k)
    for (Int l = 0; l < kScanModulus; ++l) {
      if (k % 2 == 0 && l % 2 == 0) continue;
      const Wide rhs = Wide{big_n} * k * k * k * k + Wide{2} * n * k * k * l * l - Wide{l} * l * l * l;
      for (Int y2 = 0; y2 < kScanModulus; ++y2) s.visit(mod(Wide{y2} * y2 - rhs, 4) == 0, {k, l, y2});
    }
  return s.check;
}

}  // namespace

BranchReport residue_branch_scan(Int n, Int p) {
  BranchReport report;
  report.n = n;
  report.p = p;
  report.m = checked::sub(checked::square(n), p);
  if (auto v = family::validate_combo(n, p); std::holds_alternative<family::FamilyCombo>(v))
    report.combo = std::get<family::FamilyCombo>(v);
  // only residues mod 8 matter below
  const Int n8 = mod(n, 8), p8 = mod(p, 8), m8 = mod(report.m, 8);
  report.checks.push_back(scan_odd_odd(n8, m8));
  report.checks.push_back(scan_even_odd(n8, m8));
  report.checks.push_back(scan_case_9b(n8, p8));
  if (report.m > 0)
    report.checks.push_back(scan_subcase_2i(n8, m8));
  else
    report.checks.push_back(scan_subcase_2ii(n8, mod(-Wide{report.m}, 8)));
  return report;
}

BranchReport residue_branch_scan(const family::FamilyCombo& combo) { return residue_branch_scan(combo.n, combo.p); }

// ---- descent step ------------------------------------------------------

std::pair<Int, Int> split_deltas(Int x0, Int y0, Int z0, Int n) {
  const Int s = checked::add(checked::square(x0), checked::mul(n, checked::square(y0)));
  if (z0 <= 0) throw InvalidArgument("split_deltas: z0 must be positive");
  if (s % 2 == 0 || z0 % 2 == 0)
    throw InvalidArgument("split_deltas: x0^2 + n*y0^2 = " + std::to_string(s) + " and z0 = " + std::to_string(z0) +
                          " must both be odd");
  if (s <= z0)
    throw InvalidArgument("split_deltas: delta2 = (" + std::to_string(s) + " - " + std::to_string(z0) +
                          ")/2 must be positive");
  return {(s + z0) / 2, (s - z0) / 2};
}

std::optional<InverseResult> inverse_construct(Int n, Int m, Int k1, Int lambda1) {
  if (k1 < 1 || lambda1 < 1) throw InvalidArgument("inverse_construct: k1 and lambda1 must be positive");
  if (std::gcd(k1, lambda1) != 1) throw InvalidArgument("inverse_construct: gcd(k1, lambda1) must be 1");
  const FamilyQuarticForm form(n, m);
  if (auto y2 = arith::square_root_if_square(evaluate(form, k1, lambda1)); y2 && *y2 > 0)
    return InverseResult{{k1, lambda1, *y2}, RhoAssignment::Rho2IsPrime};
  if (auto y2 = arith::square_root_if_square(evaluate(form, lambda1, k1)); y2 && *y2 > 0)
    return InverseResult{{lambda1, k1, *y2}, RhoAssignment::Rho1IsPrime};
  return std::nullopt;
}

namespace {

std::optional<Int> fourth_root(Int v) {
  if (auto r = arith::square_root_if_square(v)) return arith::square_root_if_square(*r);
  return std::nullopt;
}

bool is_square_residue_mod4(Int r) { return r == 0 || r == 1; }

DescentTrace& stall(DescentTrace& t, std::string why) {
  t.outcome = {OutcomeKind::Stalled, std::nullopt, std::move(why)};
  return t;
}

// The congruence steps check the obstruction on the concrete residues: a
// genuine solution can never produce one, so reaching it means the
// hypotheses behind that step are absent.
DescentTrace& congruence_step(DescentTrace& t, Wide value, Int modulus, OutcomeKind kind, const std::string& label) {
  const Int r = mod(value, modulus);
  std::ostringstream why;
  why << label << " = " << r << " (mod " << modulus << ")";
  const bool square_residue = modulus == 4 ? is_square_residue_mod4(r) : (r == 0 || r == 1 || r == 4);
  if (square_residue) {
    why << " is a square residue; no obstruction without the family hypotheses";
    return stall(t, why.str());
  }
  why << " is not a square residue";
  t.outcome = {kind, std::nullopt, why.str()};
  return t;
}

// x^2 + ell*y^2 = z^2 step shared by both subcases: returns a d = 2
// parametrization whose k and lambda are perfect squares.
std::optional<conic::ConicParametrization> square_split_parametrization(Int ell, const conic::ConicTriple& t,
                                                                        std::string& why) {
  const auto params = conic::parametrizations_of(ell, t);
  if (params.empty()) {
    why = "no conic parametrization found";
    return std::nullopt;
  }
  bool saw_d2 = false;
  for (const auto& p : params) {
    if (p.d != 2) continue;
    saw_d2 = true;
    if (arith::square_root_if_square(p.k) && arith::square_root_if_square(p.lambda)) return p;
  }
  why = saw_d2 ? "k and lambda are not both perfect squares" : "only d = 1 parametrizations exist";
  return std::nullopt;
}

DescentTrace& finish_descended(DescentTrace& t, const FamilyQuarticForm& form, SolutionTriple smaller) {
  if (!is_solution(form, smaller)) return stall(t, "constructed triple does not satisfy the form");
  const Wide before = Wide{t.primitive.x} * t.primitive.y;
  const Wide after = Wide{*t.k1} * *t.lambda1;
  if (!(after < before)) return stall(t, "constructed triple is not smaller");
  std::ostringstream why;
  why << "k1*lambda1 = " << static_cast<Int>(after) << " < x0*y0 = " << static_cast<Int>(before);
  t.outcome = {OutcomeKind::Descended, smaller, why.str()};
  return t;
}

DescentTrace& subcase_positive(DescentTrace& t, const FamilyQuarticForm& form) {
  // x0^2 + m (2 y1^2)^2 = (y2^2 - 2n y1^2)^2
  const Int n = t.n, m = t.m, y1 = *t.y1, y2 = *t.y2;
  const Int w = checked::mul(Int{2}, checked::square(y1));
  const Int u = checked::sub(checked::square(y2), checked::mul(checked::mul(Int{2}, n), checked::square(y1)));
  if (u == 0) return stall(t, "y2^2 - 2n y1^2 vanishes");
  const Int abs_u = u < 0 ? -u : u;
  std::string why;
  auto param = square_split_parametrization(m, {t.primitive.x, w, abs_u}, why);
  if (!param) return stall(t, "subcase m > 0: " + why);
  t.conic_step = param;
  t.k1 = *arith::square_root_if_square(param->k);
  t.lambda1 = *arith::square_root_if_square(param->lambda);
  const Int k1 = *t.k1, l1 = *t.lambda1;
  t.sign = u > 0 ? Sign::Plus : Sign::Minus;

  if (*t.sign == Sign::Minus) {
    const Wide rhs = -Wide{param->rho1} * checked::fourth(k1) + Wide{2} * n * checked::square(k1) * checked::square(l1) -
                     Wide{param->rho2} * checked::fourth(l1);
    return congruence_step(t, rhs, 4, OutcomeKind::ContradictionMod4, "-r1 k1^4 + 2n k1^2 l1^2 - r2 l1^4");
  }
  if (param->rho1 == 1) {
    t.rho_assignment = RhoAssignment::Rho2IsPrime;
    return finish_descended(t, form, {k1, l1, y2});
  }
  if (param->rho2 == 1) {
    t.rho_assignment = RhoAssignment::Rho1IsPrime;
    return finish_descended(t, form, {l1, k1, y2});
  }
  return stall(t, "rho split is neither (1, m) nor (m, 1)");
}

DescentTrace& subcase_negative(DescentTrace& t, const FamilyQuarticForm& form) {
  // x0^2 = (y2^2 - 2n y1^2)^2 + N (2 y1^2)^2
  const Int n = t.n, big_n = -t.m, y1 = *t.y1, y2 = *t.y2;
  const Int w = checked::mul(Int{2}, checked::square(y1));
  const Int u = checked::sub(checked::square(y2), checked::mul(checked::mul(Int{2}, n), checked::square(y1)));
  if (u == 0) return stall(t, "y2^2 - 2n y1^2 vanishes");
  const Int abs_u = u < 0 ? -u : u;
  if (std::gcd(abs_u, w) != 1) return stall(t, "gcd(|y2^2 - 2n y1^2|, 2 y1^2) != 1");
  std::string why;
  auto param = square_split_parametrization(big_n, {abs_u, w, t.primitive.x}, why);
  if (!param) return stall(t, "subcase m < 0: " + why);
  t.sign = u > 0 ? Sign::Plus : Sign::Minus;
  if (u < 0) {
    // canonicalize so that y2^2 - 2n y1^2 = r1 k^2 - r2 l^2 holds with sign
    std::swap(param->rho1, param->rho2);
    std::swap(param->k, param->lambda);
  }
  t.conic_step = param;
  t.k1 = *arith::square_root_if_square(param->k);
  t.lambda1 = *arith::square_root_if_square(param->lambda);
  const Int k1 = *t.k1, l1 = *t.lambda1;

  if (param->rho1 == 1) {
    t.rho_assignment = RhoAssignment::Rho2IsPrime;
    return finish_descended(t, form, {k1, l1, y2});
  }
  if (param->rho2 == 1) {
    t.rho_assignment = RhoAssignment::Rho1IsPrime;
    const Wide rhs = Wide{big_n} * checked::fourth(k1) + Wide{2} * n * checked::square(k1) * checked::square(l1) -
                     Wide{checked::fourth(l1)};
    return congruence_step(t, rhs, 4, OutcomeKind::ContradictionMod4, "N k1^4 + 2n k1^2 l1^2 - l1^4");
  }
  return stall(t, "rho split is neither (1, N) nor (N, 1)");
}

}  // namespace

DescentTrace descend(const FamilyQuarticForm& form, const SolutionTriple& s) {
  if (s.x < 1 || s.y < 1 || s.z < 1 || !is_solution(form, s)) {
    std::ostringstream msg;
    msg << "(" << s.x << ", " << s.y << ", " << s.z << ") is not a positive solution of x^4 + " << 2 * form.n()
        << " x^2 y^2 + " << form.m() << " y^4 = z^2";
    throw Error(ErrorKind::NotASolution, msg.str());
  }
  DescentTrace t;
  t.n = form.n();
  t.m = form.m();
  t.p = checked::sub(checked::square(t.n), t.m);
  if (t.p > 0)
    if (auto v = family::validate_combo(t.n, t.p); std::holds_alternative<family::FamilyCombo>(v))
      t.combo = std::get<family::FamilyCombo>(v);
  t.input = s;
  t.primitive = reduce_primitive(form, s);
  const Int x0 = t.primitive.x, y0 = t.primitive.y, z0 = t.primitive.z;

  if (x0 % 2 == 1 && y0 % 2 == 1) {
    t.branch = ParityBranch::OddOdd;
    return congruence_step(t, Wide{1} + Wide{2} * t.n + t.m, 4, OutcomeKind::ContradictionMod4, "1 + 2n + m");
  }
  if (x0 % 2 == 0) {
    t.branch = ParityBranch::EvenOdd;
    if (t.m % 2 == 0) return stall(t, "m is even, so z0 need not be odd");
    return congruence_step(t, Wide{t.m}, 8, OutcomeKind::ContradictionMod8, "m");
  }
  t.branch = ParityBranch::OddEven;

  if (t.p <= 0) return stall(t, "n^2 - m = " + std::to_string(t.p) + " is not positive; no factorization");
  t.factorization_holds = verify_factorization_identity(t.n, t.p, x0, y0);
  if (!*t.factorization_holds) return stall(t, "factorization identity failed");

  auto [d1, d2] = split_deltas(x0, y0, z0, t.n);
  if (std::gcd(d1, d2) != 1) {
    t.delta1 = d1;
    t.delta2 = d2;
    return stall(t, "gcd(delta1, delta2) != 1");
  }
  if (d1 % 2 != 0) {
    std::swap(d1, d2);
    t.deltas_swapped = true;
  }
  t.delta1 = d1;
  t.delta2 = d2;

  const Int p = t.p;
  if (d1 % p == 0) {
    t.case9 = Case9::Case9a;
    const auto y1 = d1 % (4 * p) == 0 ? fourth_root(d1 / (4 * p)) : std::nullopt;
    const auto y2 = fourth_root(d2);
    if (!y1 || !y2) return stall(t, "case 9a: delta1 != 4p*y1^4 or delta2 != y2^4");
    t.y1 = y1;
    t.y2 = y2;
  } else if (d2 % p == 0) {
    t.case9 = Case9::Case9b;
    const auto y1 = d1 % 4 == 0 ? fourth_root(d1 / 4) : std::nullopt;
    const auto y2 = fourth_root(d2 / p);
    if (!y1 || !y2) return stall(t, "case 9b: delta1 != 4*y1^4 or delta2 != p*y2^4");
    t.y1 = y1;
    t.y2 = y2;
  } else {
    return stall(t, "p divides neither delta1 nor delta2");
  }
  if (checked::mul(Int{2}, checked::mul(*t.y1, *t.y2)) != y0) return stall(t, "y0 != 2*y1*y2");

  if (*t.case9 == Case9::Case9b) {
    // x0^2 + n y0^2 = 4 y1^4 + p y2^4 = 1 (mod 4) forces p = 1 (mod 4)
    return congruence_step(t, Wide{checked::fourth(*t.y2)} * p, 4, OutcomeKind::ContradictionMod4, "p y2^4");
  }
  return t.m > 0 ? subcase_positive(t, form) : subcase_negative(t, form);
}

DescentTrace descend(const family::FamilyCombo& combo, const SolutionTriple& s) {
  auto trace = descend(FamilyQuarticForm(combo.n, combo.m), s);
  trace.combo = combo;
  return trace;
}

}  // namespace quartic::descent
