#pragma once

// Executable form of the infinite-descent argument for the family quartics:
// exhaustive residue scans for every congruence obstruction, the
// (x^2 + n y^2)^2 - z^2 = p y^4 factorization, the delta split, and the
// construction of a smaller solution from a larger one.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quartic/conic.hpp"
#include "quartic/family.hpp"
#include "quartic/forms.hpp"

namespace quartic::descent {

enum class ParityBranch { OddOdd, EvenOdd, OddEven };
enum class Case9 { Case9a, Case9b };
enum class Sign { Plus, Minus };
/// Which of the two divisors in the conic step carries the prime |m|.
enum class RhoAssignment { Rho1IsPrime, Rho2IsPrime };
enum class OutcomeKind { ContradictionMod4, ContradictionMod8, Descended, Stalled };

const char* to_string(ParityBranch) noexcept;
const char* to_string(Case9) noexcept;
const char* to_string(Sign) noexcept;
const char* to_string(RhoAssignment) noexcept;
const char* to_string(OutcomeKind) noexcept;

struct Outcome {
  OutcomeKind kind = OutcomeKind::Stalled;
  std::optional<SolutionTriple> smaller;  // set iff kind == Descended
  std::string detail;
};

struct DescentTrace {
  Int n = 0;
  Int m = 0;
  Int p = 0;  // n^2 - m
  std::optional<family::FamilyCombo> combo;
  SolutionTriple input;
  SolutionTriple primitive;
  ParityBranch branch = ParityBranch::OddOdd;
  std::optional<bool> factorization_holds;
  std::optional<Int> delta1;
  std::optional<Int> delta2;
  bool deltas_swapped = false;
  std::optional<Case9> case9;
  std::optional<Int> y1;
  std::optional<Int> y2;
  std::optional<conic::ConicParametrization> conic_step;
  std::optional<Int> k1;
  std::optional<Int> lambda1;
  std::optional<Sign> sign;
  std::optional<RhoAssignment> rho_assignment;
  Outcome outcome;
};

struct BranchCheck {
  std::string branch;
  Int modulus = 0;
  std::uint64_t tuples_scanned = 0;
  std::uint64_t survivors = 0;
  std::vector<Int> first_survivor;

  bool confirmed() const noexcept { return survivors == 0; }
};

struct BranchReport {
  Int n = 0;
  Int p = 0;
  Int m = 0;
  std::optional<family::FamilyCombo> combo;
  std::vector<BranchCheck> checks;

  bool all_confirmed() const noexcept;
};

/// (x^2 + n y^2)^2 - (x^4 + 2n x^2 y^2 + (n^2 - p) y^4) == p y^4, in 128 bits.
bool verify_factorization_identity(Int n, Int p, Int x, Int y);

/// Scans every residue tuple mod 8 for each congruence obstruction used by
/// the descent argument and records survivors. Accepts arbitrary (n, p) so
/// that non-family inputs can be shown to break the argument; m = n^2 - p.
///
/// Branches, in report order:
///   odd_odd       x, y odd:  x^4 + 2n x^2 y^2 + m y^4 = z^2 (mod 4)
///   even_odd      x even, y odd: same equation (mod 8)
///   case_9b       x0 odd, y0 even, y2 odd:
///                 x0^2 + n y0^2 = 4 y1^4 + p y2^e (mod 4), e in {2, 4}
///   subcase_2i    m > 0, (k1, l1) not both even, {r1, r2} = {1, m}:
///                 y2^2 = -r1 k1^4 + 2n k1^2 l1^2 - r2 l1^4 (mod 4)
///   subcase_2ii   m < 0, (k1, l1) not both even, N = -m:
///                 y2^2 = N k1^4 + 2n k1^2 l1^2 - l1^4 (mod 4)
BranchReport residue_branch_scan(Int n, Int p);
BranchReport residue_branch_scan(const family::FamilyCombo& combo);

/// delta1 = (s + z0)/2, delta2 = (s - z0)/2 with s = x0^2 + n y0^2.
/// Throws InvalidArgument unless s and z0 are odd and s > z0 > 0.
std::pair<Int, Int> split_deltas(Int x0, Int y0, Int z0, Int n);

struct InverseResult {
  SolutionTriple triple;
  /// Rho2IsPrime: triple is (k1, l1, y2); Rho1IsPrime: (l1, k1, y2).
  RhoAssignment orientation;
};

/// Tests k1^4 + 2n k1^2 l1^2 + m l1^4 and m k1^4 + 2n k1^2 l1^2 + l1^4 for
/// being positive squares and returns the first hit as a solution of the
/// form (n, m). Throws InvalidArgument if gcd(k1, l1) != 1.
std::optional<InverseResult> inverse_construct(Int n, Int m, Int k1, Int lambda1);

/// Runs one descent step on a claimed solution of x^4 + 2n x^2y^2 + m y^4 = z^2.
/// Throws Error(NotASolution) if `s` does not satisfy the form.
DescentTrace descend(const FamilyQuarticForm& form, const SolutionTriple& s);
DescentTrace descend(const family::FamilyCombo& combo, const SolutionTriple& s);

}  // namespace quartic::descent
