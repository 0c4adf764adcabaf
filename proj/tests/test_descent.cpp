#include <doctest.h>

#include <numeric>
#include <random>

#include "quartic/descent.hpp"
#include "quartic/family.hpp"

using namespace quartic;
using namespace quartic::descent;

namespace {

std::vector<family::FamilyCombo> table_combos() {
  auto all = family::enumerate_case_i(16);
  const auto two = family::enumerate_case_ii(251);
  all.insert(all.end(), two.begin(), two.end());
  return all;
}

}  // namespace

TEST_CASE("factorization identity examples") {
  CHECK(verify_factorization_identity(4, 3, 1, 2));
  CHECK(verify_factorization_identity(9, 5, 7, 0));
  CHECK(verify_factorization_identity(2, 7, 3, 1));
}

TEST_CASE("factorization identity on random tuples") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<Int> n(1, 100), p(1, 1000), xy(-100, 100);
  for (int i = 0; i < 10000; ++i) REQUIRE(verify_factorization_identity(n(rng), p(rng), xy(rng), xy(rng)));
}

TEST_CASE("residue scans confirm every branch for the tabulated combos") {
  for (const auto& c : table_combos()) {
    CAPTURE(c.n);
    CAPTURE(c.p);
    const auto report = residue_branch_scan(c);
    REQUIRE(report.checks.size() == 4);
    CHECK(report.checks[3].branch == (c.tag == family::CaseTag::CaseI ? "subcase_2i" : "subcase_2ii"));
    for (const auto& check : report.checks) {
      CHECK(check.tuples_scanned > 0);
      CHECK(check.confirmed());
    }
    CHECK(report.all_confirmed());
    CHECK(report.combo.has_value());
  }
}

TEST_CASE("residue scan on (4, 3)") {
  const auto r = residue_branch_scan(4, 3);
  CHECK(r.m == 13);
  CHECK(r.all_confirmed());
  CHECK(r.checks[0].branch == "odd_odd");
  CHECK(r.checks[0].modulus == 4);
  CHECK(r.checks[1].modulus == 8);
}

TEST_CASE("residue scan on (2, 7) covers the negative subcase") {
  const auto r = residue_branch_scan(2, 7);
  CHECK(r.m == -3);
  CHECK(r.checks[3].branch == "subcase_2ii");
  CHECK(r.all_confirmed());
}

TEST_CASE("residue scan flags a non-family input") {
  const auto r = residue_branch_scan(1, 5);
  CHECK_FALSE(r.combo);
  CHECK_FALSE(r.all_confirmed());
  // m = -4 is even, so z even survives mod 8
  CHECK_FALSE(r.checks[1].confirmed());
  CHECK_FALSE(r.checks[1].first_survivor.empty());
}

TEST_CASE("split_deltas") {
  CHECK(split_deltas(1, 2, 15, 4) == std::pair<Int, Int>{16, 1});
  CHECK(split_deltas(3, 2, 11, 1) == std::pair<Int, Int>{12, 1});
  CHECK_THROWS_AS(split_deltas(1, 0, 1, 7), InvalidArgument);
  CHECK(split_deltas(2, 1, 3, 1) == std::pair<Int, Int>{4, 1});
  CHECK_THROWS_AS(split_deltas(2, 2, 3, 1), InvalidArgument);
  CHECK_THROWS_AS(split_deltas(1, 2, 9, 2), InvalidArgument);
  CHECK_THROWS_AS(split_deltas(1, 2, 4, 1), InvalidArgument);
}

TEST_CASE("split_deltas product form") {
  for (Int n = 1; n <= 6; ++n)
    for (Int x = 1; x <= 15; x += 2)
      for (Int y = 2; y <= 14; y += 2)
        for (Int z = 1; z < x * x + n * y * y; z += 2) {
          const Int s = x * x + n * y * y;
          const auto [d1, d2] = split_deltas(x, y, z, n);
          REQUIRE(d1 + d2 == s);
          REQUIRE(d1 - d2 == z);
          REQUIRE(4 * d1 * d2 == s * s - z * z);
        }
}

TEST_CASE("inverse_construct examples") {
  const auto hit = inverse_construct(2, 4, 1, 1);
  REQUIRE(hit);
  CHECK(hit->triple == SolutionTriple{1, 1, 3});
  CHECK_FALSE(inverse_construct(4, 13, 1, 1));  // 22
  CHECK_FALSE(inverse_construct(4, 13, 2, 1));  // 61 and 241
  CHECK_THROWS_AS(inverse_construct(4, 13, 2, 2), InvalidArgument);
  // n = 2, m = 2: (2, 1) gives 34, the swapped (1, 2) gives 49
  const auto swapped = inverse_construct(2, 2, 2, 1);
  REQUIRE(swapped);
  CHECK(swapped->orientation == RhoAssignment::Rho1IsPrime);
  CHECK(swapped->triple == SolutionTriple{1, 2, 7});
}

TEST_CASE("inverse_construct finds nothing for tabulated combos") {
  for (const auto& c : table_combos())
    for (Int k = 1; k <= 50; ++k)
      for (Int l = 1; l <= 50; ++l)
        if (std::gcd(k, l) == 1) REQUIRE_FALSE(inverse_construct(c.n, c.m, k, l));
}

TEST_CASE("descend rejects non-solutions") {
  const auto combo = family::make_combo(4, 3);
  try {
    descend(combo, {1, 2, 15});
    FAIL("expected NotASolution");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotASolution);
  }
  CHECK_THROWS_AS(descend(FamilyQuarticForm(2, 4), {0, 1, 2}), Error);
}

TEST_CASE("descend on a perfect-square form stops in the odd/odd branch") {
  const auto t = descend(FamilyQuarticForm(2, 4), {2, 2, 12});
  CHECK(t.primitive == SolutionTriple{1, 1, 3});
  CHECK(t.branch == ParityBranch::OddOdd);
  CHECK(t.outcome.kind == OutcomeKind::Stalled);
  CHECK_FALSE(t.combo);
}

TEST_CASE("descend constructs a smaller solution") {
  // n = 2, m = 2 (p = 2): hand-checked chain (31, 28, 2273) -> (1, 2, 7)
  const FamilyQuarticForm f(2, 2);
  const auto t = descend(f, {31, 28, 2273});
  CHECK(t.branch == ParityBranch::OddEven);
  CHECK(t.factorization_holds == true);
  CHECK(t.delta1 == 128);
  CHECK(t.delta2 == 2401);
  CHECK(t.deltas_swapped);
  CHECK(t.case9 == Case9::Case9a);
  CHECK(t.y1 == 2);
  CHECK(t.y2 == 7);
  REQUIRE(t.conic_step);
  CHECK(t.conic_step->d == 2);
  CHECK(t.conic_step->k == 4);
  CHECK(t.conic_step->lambda == 1);
  CHECK(t.conic_step->rho1 == 2);
  CHECK(t.k1 == 2);
  CHECK(t.lambda1 == 1);
  CHECK(t.sign == Sign::Plus);
  CHECK(t.rho_assignment == RhoAssignment::Rho1IsPrime);
  REQUIRE(t.outcome.kind == OutcomeKind::Descended);
  CHECK(*t.outcome.smaller == SolutionTriple{1, 2, 7});

  // the next step lands on the minus sign and stops there
  const auto next = descend(f, *t.outcome.smaller);
  CHECK(next.case9 == Case9::Case9a);
  CHECK(next.sign == Sign::Minus);
  CHECK(next.outcome.kind == OutcomeKind::Stalled);
}

TEST_CASE("descent invariants over synthetic solutions") {
  int descended = 0;
  for (Int n = 1; n <= 6; ++n)
    for (Int m = -30; m <= 40; ++m) {
      if (m == 0) continue;
      const FamilyQuarticForm f(n, m);
      for (const auto& s : search(f, 40)) {
        const auto t = descend(f, s);
        REQUIRE(is_solution(f, t.primitive));
        REQUIRE(std::gcd(t.primitive.x, t.primitive.y) == 1);
        if (t.delta1 && t.delta2 && t.factorization_holds) {
          REQUIRE(*t.delta1 + *t.delta2 == t.primitive.x * t.primitive.x + n * t.primitive.y * t.primitive.y);
        }
        if (t.y1 && t.y2 && t.outcome.kind != OutcomeKind::Stalled) REQUIRE(t.primitive.y == 2 * *t.y1 * *t.y2);
        if (t.k1 && t.lambda1 && t.y1) {
          REQUIRE(std::gcd(*t.k1, *t.lambda1) == 1);
          REQUIRE(*t.y1 == *t.k1 * *t.lambda1);
        }
        if (t.outcome.kind == OutcomeKind::Descended) {
          ++descended;
          REQUIRE(is_solution(f, *t.outcome.smaller));
          REQUIRE(*t.k1 * *t.lambda1 < t.primitive.x * t.primitive.y);
        }
        // a genuine solution can never trigger a congruence contradiction
        REQUIRE(t.outcome.kind != OutcomeKind::ContradictionMod4);
        REQUIRE(t.outcome.kind != OutcomeKind::ContradictionMod8);
      }
    }
  CHECK(descended > 0);
}

TEST_CASE("inverse_construct round-trips through descend's entry check") {
  for (Int n = 1; n <= 5; ++n)
    for (Int k = 1; k <= 20; ++k)
      for (Int l = 1; l <= 20; ++l) {
        if (std::gcd(k, l) != 1) continue;
        const auto hit = inverse_construct(n, n * n, k, l);
        REQUIRE(hit);
        CHECK(hit->triple.z == k * k + n * l * l);
        CHECK_NOTHROW(descend(FamilyQuarticForm(n, n * n), hit->triple));
      }
}
