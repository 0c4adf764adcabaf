#include <doctest.h>

#include <random>

#include "quartic/forms.hpp"

using namespace quartic;

TEST_CASE("form construction") {
  CHECK_THROWS_AS(FamilyQuarticForm(0, 5), InvalidArgument);
  CHECK_THROWS_AS(FamilyQuarticForm(2, 0), InvalidArgument);
  CHECK_NOTHROW(FamilyQuarticForm(2, -3));
  CHECK_THROWS_AS(GeneralQuarticForm(1, 0, 1, 0), InvalidArgument);
  CHECK(GeneralQuarticForm(1, 4, 4, 1).discriminant() == 0);
}

TEST_CASE("evaluate") {
  CHECK(evaluate(FamilyQuarticForm(4, 13), 1, 2) == 241);
  CHECK(evaluate(FamilyQuarticForm(2, 4), 1, 1) == 9);
  CHECK(evaluate(FamilyQuarticForm(7, -3), 1, 0) == 1);
  CHECK(evaluate(FamilyQuarticForm(2, -3), 1, 1) == 2);
  CHECK(evaluate(GeneralQuarticForm(1, 0, -17, 2), 2, 1) == -1);
  CHECK_THROWS_AS(evaluate(FamilyQuarticForm(4, 13), 100000, 100000), OverflowError);
}

TEST_CASE("reduce_primitive") {
  const FamilyQuarticForm f(2, 4);
  CHECK(reduce_primitive(f, {2, 2, 12}) == SolutionTriple{1, 1, 3});
  CHECK(reduce_primitive(f, {3, 3, 27}) == SolutionTriple{1, 1, 3});
  CHECK(reduce_primitive(f, {1, 2, 9}) == SolutionTriple{1, 2, 9});
  CHECK_THROWS_AS(reduce_primitive(f, {2, 2, 13}), Error);
}

TEST_CASE("reduce_primitive is idempotent and preserves solutions") {
  const FamilyQuarticForm f(3, 9);
  for (const auto& s : search(f, 30)) {
    const auto r = reduce_primitive(f, s);
    REQUIRE(is_solution(f, r));
    REQUIRE(std::gcd(r.x, r.y) == 1);
    REQUIRE(reduce_primitive(f, r) == r);
  }
}

TEST_CASE("search examples") {
  CHECK(search(FamilyQuarticForm(4, 13), 200).empty());
  CHECK(search(FamilyQuarticForm(2, -3), 200).empty());
  const auto sq = search(FamilyQuarticForm(2, 4), 3);
  REQUIRE(sq.size() == 9);
  for (const auto& s : sq) CHECK(s.z == s.x * s.x + 2 * s.y * s.y);
  CHECK_THROWS_AS(search(FamilyQuarticForm(2, 4), 0), InvalidArgument);
}

TEST_CASE("perfect-square forms have bound^2 solutions") {
  for (Int n = 1; n <= 6; ++n) {
    const auto sols = search(FamilyQuarticForm(n, n * n), 25);
    REQUIRE(sols.size() == 625);
    for (const auto& s : sols) REQUIRE(s.z == s.x * s.x + n * s.y * s.y);
  }
}

TEST_CASE("search results are monotone in the bound") {
  const FamilyQuarticForm f(2, 2);  // has solutions, e.g. (1, 2, 7)
  const auto big = search(f, 120);
  REQUIRE_FALSE(big.empty());
  for (Int b : {10, 40, 77}) {
    std::vector<SolutionTriple> filtered;
    for (const auto& s : big)
      if (s.x <= b && s.y <= b) filtered.push_back(s);
    CHECK(filtered == search(f, b));
  }
}

TEST_CASE("parallel and serial search agree") {
  const FamilyQuarticForm f(1, -9);
  CHECK(search(f, 300, 4) == search(f, 300, 1));
  CHECK(search(f, 300, 7) == search(f, 300, 1));
  const GeneralQuarticForm g(1, 4, 4, 1);
  CHECK(search_general(g, 100, 3) == search_general(g, 100, 1));
}

TEST_CASE("search_general examples") {
  CHECK(search_general(GeneralQuarticForm(1, 9, 27, 1), 200).empty());
  CHECK(search_general(GeneralQuarticForm(1, 0, -17, 2), 200).empty());
  const auto sols = search_general(GeneralQuarticForm(1, 4, 4, 1), 2);
  REQUIRE(sols.size() == 4);
  for (const auto& s : sols) CHECK(s.z == s.x * s.x + 2 * s.y * s.y);
  // d > 1: 2x^4 + 0 + 2y^4 = 2z^2 reduces to x^4 + y^4 = z^2, which has none
  CHECK(search_general(GeneralQuarticForm(2, 0, 2, 2), 100).empty());
  // x^4 + x^2 y^2 + y^4 = 3 z^2 at (1, 1, 1)
  const auto d3 = search_general(GeneralQuarticForm(1, 1, 1, 3), 1);
  REQUIRE(d3.size() == 1);
  CHECK(d3[0] == SolutionTriple{1, 1, 1});
}

TEST_CASE("search overflow names the offending pair") {
  try {
    search(FamilyQuarticForm(1, 1), 100000);
    FAIL("expected overflow");
  } catch (const OverflowError& e) {
    CHECK(std::string(e.what()).find("(x=") != std::string::npos);
  }
}
