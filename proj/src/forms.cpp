#include "quartic/forms.hpp"

#include <numeric>
#include <string>

#include "quartic/arith.hpp"
#include "quartic/parallel.hpp"

namespace quartic {

FamilyQuarticForm::FamilyQuarticForm(Int n, Int m) : n_(n), m_(m) {
  if (n < 1) throw InvalidArgument("form coefficient n must be positive, got " + std::to_string(n));
  if (m == 0) throw InvalidArgument("form coefficient m must be nonzero");
}

GeneralQuarticForm::GeneralQuarticForm(Int a, Int b, Int c, Int d) : a_(a), b_(b), c_(c), d_(d) {
  if (d < 1) throw InvalidArgument("right-hand coefficient d must be positive, got " + std::to_string(d));
}

Wide GeneralQuarticForm::discriminant() const noexcept {
  return static_cast<Wide>(b_) * b_ - 4 * static_cast<Wide>(a_) * c_;
}

namespace {

// a*X2^2 + b*X2*Y2 + c*Y2^2 with X2 = x^2, Y2 = y^2, all checked
Int combine(Int a, Int b, Int c, Int x2, Int y2) {
  const Int x4 = checked::square(x2);
  const Int y4 = checked::square(y2);
  const Int t1 = checked::mul(a, x4);
  const Int t2 = checked::mul(b, checked::mul(x2, y2));
  const Int t3 = checked::mul(c, y4);
  return checked::add(checked::add(t1, t2), t3);
}

std::string at(Int x, Int y) { return "evaluating at (x=" + std::to_string(x) + ", y=" + std::to_string(y) + ")"; }

Int family_value(const FamilyQuarticForm& f, Int x2, Int y2, Int x, Int y) {
  try {
    return combine(1, checked::mul(Int{2}, f.n()), f.m(), x2, y2);
  } catch (const OverflowError& e) {
    throw OverflowError(at(x, y) + ": " + e.what());
  }
}

Int general_value(const GeneralQuarticForm& f, Int x2, Int y2, Int x, Int y) {
  try {
    return combine(f.a(), f.b(), f.c(), x2, y2);
  } catch (const OverflowError& e) {
    throw OverflowError(at(x, y) + ": " + e.what());
  }
}

Int checked_sq(Int v, Int x, Int y) {
  try {
    return checked::square(v);
  } catch (const OverflowError& e) {
    throw OverflowError(at(x, y) + ": " + e.what());
  }
}

}  // namespace

Int evaluate(const FamilyQuarticForm& form, Int x, Int y) {
  return family_value(form, checked_sq(x, x, y), checked_sq(y, x, y), x, y);
}

Int evaluate(const GeneralQuarticForm& form, Int x, Int y) {
  return general_value(form, checked_sq(x, x, y), checked_sq(y, x, y), x, y);
}

bool is_solution(const FamilyQuarticForm& form, const SolutionTriple& s) {
  return evaluate(form, s.x, s.y) == checked::square(s.z);
}

bool is_solution(const GeneralQuarticForm& form, const SolutionTriple& s) {
  return evaluate(form, s.x, s.y) == checked::mul(form.d(), checked::square(s.z));
}

SolutionTriple reduce_primitive(const FamilyQuarticForm& form, const SolutionTriple& s) {
  if (!is_solution(form, s))
    throw Error(ErrorKind::InconsistentInput, "reduce_primitive: (" + std::to_string(s.x) + ", " +
                                                  std::to_string(s.y) + ", " + std::to_string(s.z) +
                                                  ") does not satisfy the form");
  const Int delta = std::gcd(s.x, s.y);
  if (delta <= 1) return s;
  const Int delta2 = checked::square(delta);
  if (s.z % delta2 != 0)
    throw Error(ErrorKind::InconsistentInput, "reduce_primitive: delta^2 = " + std::to_string(delta2) +
                                                  " does not divide z = " + std::to_string(s.z));
  return {s.x / delta, s.y / delta, s.z / delta2};
}

namespace {

void require_bound(Int bound) {
  if (bound < 1) throw InvalidArgument("search bound must be positive, got " + std::to_string(bound));
}

std::vector<Int> squares_up_to(Int bound) {
  std::vector<Int> sq(static_cast<std::size_t>(bound) + 1);
  for (Int i = 0; i <= bound; ++i) sq[static_cast<std::size_t>(i)] = checked::square(i);
  return sq;
}

}  // namespace

std::vector<SolutionTriple> search(const FamilyQuarticForm& form, Int bound, unsigned workers) {
  require_bound(bound);
  const auto sq = squares_up_to(bound);
  auto row = [&](std::int64_t x, std::vector<SolutionTriple>& out) {
    const Int x2 = sq[static_cast<std::size_t>(x)];
    for (Int y = 1; y <= bound; ++y) {
      const Int v = family_value(form, x2, sq[static_cast<std::size_t>(y)], x, y);
      if (v < 1) continue;
      if (auto z = arith::square_root_if_square(v)) out.push_back({x, y, *z});
    }
  };
  return collect_rows<SolutionTriple>(1, bound, workers, row);
}

std::vector<SolutionTriple> search_general(const GeneralQuarticForm& form, Int bound, unsigned workers) {
  require_bound(bound);
  const auto sq = squares_up_to(bound);
  const Int d = form.d();
  auto row = [&](std::int64_t x, std::vector<SolutionTriple>& out) {
    const Int x2 = sq[static_cast<std::size_t>(x)];
    for (Int y = 1; y <= bound; ++y) {
      const Int v = general_value(form, x2, sq[static_cast<std::size_t>(y)], x, y);
      if (v < 1) continue;
      if (v % d != 0) continue;
      if (auto z = arith::square_root_if_square(v / d)) out.push_back({x, y, *z});
    }
  };
  return collect_rows<SolutionTriple>(1, bound, workers, row);
}

}  // namespace quartic
