#pragma once

// Quartic forms x^4 + 2n x^2 y^2 + m y^4 = z^2 and the general shape
// a x^4 + b x^2 y^2 + c y^4 = d z^2, with bounded exhaustive search.
//
// Both equations are even in x and y, so searching positive x, y covers
// every solution up to sign.

#include <compare>
#include <vector>

#include "quartic/checked.hpp"

namespace quartic {

class FamilyQuarticForm {
 public:
  /// Throws InvalidArgument unless n >= 1 and m != 0.
  FamilyQuarticForm(Int n, Int m);

  Int n() const noexcept { return n_; }
  Int m() const noexcept { return m_; }

  friend bool operator==(const FamilyQuarticForm&, const FamilyQuarticForm&) = default;

 private:
  Int n_;
  Int m_;
};

/// a x^4 + b x^2 y^2 + c y^4 = d z^2. The right-hand coefficient d is
/// unrelated to the conic scale factor of the same name.
class GeneralQuarticForm {
 public:
  /// Throws InvalidArgument unless d >= 1.
  GeneralQuarticForm(Int a, Int b, Int c, Int d);

  Int a() const noexcept { return a_; }
  Int b() const noexcept { return b_; }
  Int c() const noexcept { return c_; }
  Int d() const noexcept { return d_; }

  /// b^2 - 4ac, in 128 bits.
  Wide discriminant() const noexcept;

  friend bool operator==(const GeneralQuarticForm&, const GeneralQuarticForm&) = default;

 private:
  Int a_, b_, c_, d_;
};

struct SolutionTriple {
  Int x = 0;
  Int y = 0;
  Int z = 0;

  friend auto operator<=>(const SolutionTriple&, const SolutionTriple&) = default;
};

Int evaluate(const FamilyQuarticForm& form, Int x, Int y);

/// Left-hand side a x^4 + b x^2 y^2 + c y^4.
Int evaluate(const GeneralQuarticForm& form, Int x, Int y);

bool is_solution(const FamilyQuarticForm& form, const SolutionTriple& s);
bool is_solution(const GeneralQuarticForm& form, const SolutionTriple& s);

/// Divides out delta = gcd(x, y): returns (x/delta, y/delta, z/delta^2).
/// Throws Error(InconsistentInput) if `s` does not satisfy the form or
/// delta^2 does not divide z.
SolutionTriple reduce_primitive(const FamilyQuarticForm& form, const SolutionTriple& s);

/// All (x, y, z) with 1 <= x, y <= bound and z >= 1, sorted by (x, y).
/// Overflow is reported with the offending (x, y).
std::vector<SolutionTriple> search(const FamilyQuarticForm& form, Int bound, unsigned workers = 1);

std::vector<SolutionTriple> search_general(const GeneralQuarticForm& form, Int bound, unsigned workers = 1);

}  // namespace quartic
