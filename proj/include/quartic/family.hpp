#pragma once

// The family of quartics x^4 + 2n x^2 y^2 + m y^4 = z^2 with m = n^2 - p
// that admit no positive solutions: n even with the matching class of the
// odd prime p mod 8, and |n^2 - p| prime.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quartic/checked.hpp"
#include "quartic/error.hpp"

namespace quartic::family {

enum class CaseTag { CaseI, CaseII };

const char* to_string(CaseTag tag) noexcept;

struct FamilyCombo {
  Int n = 0;
  Int p = 0;
  Int m = 0;               // n^2 - p, negative in case II
  std::optional<Int> N;    // p - n^2, present iff case II
  CaseTag tag = CaseTag::CaseI;

  friend bool operator==(const FamilyCombo&, const FamilyCombo&) = default;
};

/// Hypothesis checks in the order make_combo applies them.
enum class HypothesisFailure {
  NonPositiveN,
  PNotOddPrime,
  CongruenceClass,
  DifferenceNotPrime,
};

const char* to_string(HypothesisFailure failure) noexcept;

class ComboRejected : public Error {
 public:
  ComboRejected(HypothesisFailure failure, const std::string& what)
      : Error(ErrorKind::InvalidArgument, what), failure_(failure) {}

  HypothesisFailure failure() const noexcept { return failure_; }

 private:
  HypothesisFailure failure_;
};

/// (n = 0 mod 4 and p = 3 mod 8) or (n = 2 mod 4 and p = 7 mod 8).
bool check_congruence_class(Int n, Int p) noexcept;

std::variant<FamilyCombo, HypothesisFailure> validate_combo(Int n, Int p);

/// Throws ComboRejected naming the first failed hypothesis.
FamilyCombo make_combo(Int n, Int p);

/// Case I combos with n <= n_max, ordered by (n, p).
std::vector<FamilyCombo> enumerate_case_i(Int n_max);

/// Case II combos with p <= p_max, ordered by (p, n).
std::vector<FamilyCombo> enumerate_case_ii(Int p_max);

struct DerivedResidue {
  CaseTag tag;
  Int value;  // m mod 8 for case I, N mod 8 for case II
};

/// m mod 8 (case I, always 5) or N mod 8 (case II, always 3). Throws
/// Error(InconsistentInput) if the residue differs, which cannot happen for
/// a combo built by make_combo.
DerivedResidue derived_residues(const FamilyCombo& combo);

// ---- table output -------------------------------------------------------

/// `index,n,p,m` for case I, `index,p,n,N,m` for case II; LF endings.
std::string table_csv(const std::vector<FamilyCombo>& combos, CaseTag tag);

struct PublishedRow {
  Int n;
  Int p;
  Int m;
};

/// Rows as printed in the published tables (n <= 16 and p <= 251), kept
/// verbatim so the generated tables can be diffed against them.
const std::vector<PublishedRow>& published_table_i();
const std::vector<PublishedRow>& published_table_ii();

/// Markdown report comparing a computed table to the published rows.
std::string published_diff_markdown(const std::vector<FamilyCombo>& computed, CaseTag tag);

}  // namespace quartic::family
