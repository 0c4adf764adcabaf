#pragma once

// Local solvability of a x^4 + b x^2 y^2 + c y^4 = d z^2 modulo prime
// powers, the companion system a u^2 + b v^2 + c w^2 = d z^2, u w = v^2,
// and fixtures for known failures of the local-global principle.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quartic/forms.hpp"

namespace quartic::local {

inline constexpr Int kDefaultScanLimit = 100000;

class LocalModulus {
 public:
  /// Throws InvalidArgument unless p is prime and k >= 1; OverflowError if
  /// p^k does not fit.
  LocalModulus(Int p, unsigned k);

  /// Decomposes a prime power q = p^k; throws InvalidArgument otherwise.
  static LocalModulus from_prime_power(Int q);

  Int p() const noexcept { return p_; }
  unsigned k() const noexcept { return k_; }
  Int value() const noexcept { return value_; }

 private:
  Int p_;
  unsigned k_;
  Int value_;
};

struct ResidueWitness {
  Int x = 0;
  Int y = 0;
  Int z = 0;
};

/// Lexicographically least (x, y, z) in [0, p^k)^3 with
/// a x^4 + b x^2 y^2 + c y^4 = d z^2 (mod p^k) and p not dividing all of
/// x, y, z. Throws ScanLimitError if p^k > scan_limit.
std::optional<ResidueWitness> primitive_solvable_mod(const GeneralQuarticForm& form, const LocalModulus& modulus,
                                                     Int scan_limit = kDefaultScanLimit);

bool check_witness(const GeneralQuarticForm& form, const LocalModulus& modulus, const ResidueWitness& w);

/// Whether the form takes a value of the same sign as d at a real point
/// (x, y) != (0, 0), i.e. whether a nontrivial real solution exists.
bool real_solvable(const GeneralQuarticForm& form);

// ---- the (u, v, w, z) system --------------------------------------------

struct QuadraticSystemSolution {
  Int u = 0;
  Int v = 0;
  Int w = 0;
  Int z = 0;

  friend auto operator<=>(const QuadraticSystemSolution&, const QuadraticSystemSolution&) = default;
};

enum class SideConditions { Enforce, Skip };

/// Throws InvalidArgument naming the violated condition: b^2 - 4ac == 0, or
/// d not squarefree.
void validate_side_conditions(const GeneralQuarticForm& form);

/// All nontrivial solutions with every coordinate in [-bound, bound],
/// normalized so the first nonzero coordinate is positive; sorted.
std::vector<QuadraticSystemSolution> system_search(const GeneralQuarticForm& form, Int bound,
                                                   SideConditions conditions = SideConditions::Enforce);

struct CorrespondenceReport {
  Int bound = 0;
  std::vector<SolutionTriple> quartic_solutions;
  /// every quartic solution's image (x^2, xy, y^2, z) solved the system
  bool forward_verified = true;
  std::vector<QuadraticSystemSolution> system_solutions;
  /// system solutions in the bound whose |u|, |w| are not both squares
  std::vector<QuadraticSystemSolution> without_preimage;
};

/// Maps quartic solutions forward into the system and reports, without
/// asserting anything, which bounded system solutions lack a preimage.
CorrespondenceReport check_13_14_correspondence(const GeneralQuarticForm& form, Int bound,
                                                SideConditions conditions = SideConditions::Enforce);

// ---- reports ---------------------------------------------------------------

struct ModulusVerdict {
  LocalModulus modulus;
  std::optional<ResidueWitness> witness;
  /// The quartic/system equivalence of local solvability is only claimed for
  /// k >= 2, or k = 1 with p not dividing d.
  bool system_equivalence_claimed = true;

  bool solvable() const noexcept { return witness.has_value(); }
};

struct LocalReport {
  GeneralQuarticForm form;
  bool real_solvable = false;
  std::vector<ModulusVerdict> verdicts;
  Int global_bound = 0;
  std::vector<SolutionTriple> global_solutions;

  /// Every witness re-checks arithmetically.
  bool self_consistent() const;
};

LocalReport local_report(const GeneralQuarticForm& form, const std::vector<LocalModulus>& moduli, Int global_bound,
                         Int scan_limit = kDefaultScanLimit, unsigned workers = 1);

/// Every prime power p^k <= limit, ordered by value.
std::vector<LocalModulus> prime_powers_up_to(Int limit);

// ---- generalized Lind-Reichardt family ------------------------------------

struct AitkenLemmermeyerVerdict {
  Int q = 0;
  Int d = 0;
  bool q_prime_1_mod_16 = false;
  bool d_squarefree = false;
  bool d_square_not_fourth_power_mod_q = false;
  bool q_fourth_power_mod_odd_divisors = false;

  bool holds() const noexcept {
    return q_prime_1_mod_16 && d_squarefree && d_square_not_fourth_power_mod_q && q_fourth_power_mod_odd_divisors;
  }
  /// x^4 - q y^4 = d z^2
  GeneralQuarticForm form() const { return GeneralQuarticForm(1, 0, -q, d); }
};

AitkenLemmermeyerVerdict aitken_lemmermeyer_check(Int q, Int d);

/// All (q, d) with q <= q_max, d <= d_max satisfying every condition,
/// ordered by (q, d).
std::vector<AitkenLemmermeyerVerdict> hasse_scan(Int q_max, Int d_max);

// ---- cubic fixture 3x^3 + 4y^3 + 5z^3 = 0 ---------------------------------

struct SelmerReport {
  Int bound = 0;
  std::vector<SolutionTriple> nontrivial_solutions;  // signed coordinates
  std::vector<std::pair<LocalModulus, std::optional<ResidueWitness>>> witnesses;

  bool consistent_with_local_global_failure() const noexcept;
};

std::optional<ResidueWitness> selmer_primitive_mod(const LocalModulus& modulus, Int scan_limit = kDefaultScanLimit);

SelmerReport selmer_fixture(Int bound, const std::vector<LocalModulus>& moduli, Int scan_limit = kDefaultScanLimit);

}  // namespace quartic::local
