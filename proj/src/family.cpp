#include "quartic/family.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "quartic/arith.hpp"

namespace quartic::family {

const char* to_string(CaseTag tag) noexcept { return tag == CaseTag::CaseI ? "case_i" : "case_ii"; }

const char* to_string(HypothesisFailure failure) noexcept {
  switch (failure) {
    case HypothesisFailure::NonPositiveN: return "n_not_positive";
    case HypothesisFailure::PNotOddPrime: return "p_not_odd_prime";
    case HypothesisFailure::CongruenceClass: return "congruence_class";
    case HypothesisFailure::DifferenceNotPrime: return "difference_not_prime";
  }
  return "unknown";
}

bool check_congruence_class(Int n, Int p) noexcept {
  if (n < 1 || p < 1) return false;
  return (n % 4 == 0 && p % 8 == 3) || (n % 4 == 2 && p % 8 == 7);
}

std::variant<FamilyCombo, HypothesisFailure> validate_combo(Int n, Int p) {
  if (n < 1) return HypothesisFailure::NonPositiveN;
  if (p < 3 || !arith::is_prime(static_cast<arith::UInt>(p))) return HypothesisFailure::PNotOddPrime;
  if (!check_congruence_class(n, p)) return HypothesisFailure::CongruenceClass;
  const Int m = checked::sub(checked::square(n, "n^2"), p, "n^2 - p");
  // m = 0 would need p = n^2, impossible for prime p
  const Int magnitude = m < 0 ? -m : m;
  if (!arith::is_prime(static_cast<arith::UInt>(magnitude))) return HypothesisFailure::DifferenceNotPrime;
  FamilyCombo combo{n, p, m, std::nullopt, CaseTag::CaseI};
  if (m < 0) {
    combo.N = -m;
    combo.tag = CaseTag::CaseII;
  }
  return combo;
}

FamilyCombo make_combo(Int n, Int p) {
  auto result = validate_combo(n, p);
  if (auto* combo = std::get_if<FamilyCombo>(&result)) return *combo;
  const auto failure = std::get<HypothesisFailure>(result);
  std::ostringstream msg;
  msg << "(n=" << n << ", p=" << p << ") rejected: ";
  switch (failure) {
    case HypothesisFailure::NonPositiveN: msg << "n must be a positive integer"; break;
    case HypothesisFailure::PNotOddPrime: msg << p << " is not an odd prime"; break;
    case HypothesisFailure::CongruenceClass:
      msg << "needs n = 0 mod 4 with p = 3 mod 8, or n = 2 mod 4 with p = 7 mod 8";
      break;
    case HypothesisFailure::DifferenceNotPrime: {
      const Int m = n * n - p;
      msg << "|n^2 - p| = " << (m < 0 ? -m : m) << " is not prime";
      break;
    }
  }
  throw ComboRejected(failure, msg.str());
}

std::vector<FamilyCombo> enumerate_case_i(Int n_max) {
  std::vector<FamilyCombo> out;
  for (Int n = 2; n <= n_max; n += 2) {
    const Int nn = checked::square(n, "n^2");
    for (Int p = 3; p < nn; p += 2) {
      if (!check_congruence_class(n, p)) continue;
      if (auto r = validate_combo(n, p); std::holds_alternative<FamilyCombo>(r))
        out.push_back(std::get<FamilyCombo>(r));
    }
  }
  return out;
}

std::vector<FamilyCombo> enumerate_case_ii(Int p_max) {
  std::vector<FamilyCombo> out;
  for (Int p = 3; p <= p_max; p += 2) {
    if (p % 8 != 3 && p % 8 != 7) continue;
    if (!arith::is_prime(static_cast<arith::UInt>(p))) continue;
    for (Int n = 2; n * n < p; n += 2) {
      if (auto r = validate_combo(n, p); std::holds_alternative<FamilyCombo>(r))
        out.push_back(std::get<FamilyCombo>(r));
    }
  }
  return out;
}

DerivedResidue derived_residues(const FamilyCombo& combo) {
  if (combo.tag == CaseTag::CaseI) {
    const Int r = static_cast<Int>(arith::residue(combo.m, 8));
    if (r != 5) throw Error(ErrorKind::InconsistentInput, "case I combo with m mod 8 = " + std::to_string(r));
    return {CaseTag::CaseI, r};
  }
  const Int r = static_cast<Int>(arith::residue(combo.N.value_or(-combo.m), 8));
  if (r != 3) throw Error(ErrorKind::InconsistentInput, "case II combo with N mod 8 = " + std::to_string(r));
  return {CaseTag::CaseII, r};
}

std::string table_csv(const std::vector<FamilyCombo>& combos, CaseTag tag) {
  std::ostringstream out;
  out << (tag == CaseTag::CaseI ? "index,n,p,m\n" : "index,p,n,N,m\n");
  std::size_t index = 1;
  for (const auto& c : combos) {
    if (tag == CaseTag::CaseI)
      out << index << ',' << c.n << ',' << c.p << ',' << c.m << '\n';
    else
      out << index << ',' << c.p << ',' << c.n << ',' << -c.m << ',' << c.m << '\n';
    ++index;
  }
  return out.str();
}

const std::vector<PublishedRow>& published_table_i() {
  static const std::vector<PublishedRow> rows = {
      {4, 3, 13},     {4, 11, 5},     {6, 7, 29},     {6, 23, 13},    {6, 31, 5},     {8, 3, 61},
      {8, 11, 53},    {8, 59, 5},     {10, 47, 53},   {10, 71, 29},   {12, 43, 101},  {12, 83, 61},
      {12, 107, 37},  {12, 131, 13},  {12, 139, 5},   {14, 23, 173},  {14, 47, 149},  {14, 167, 29},
      {14, 191, 5},   {16, 59, 197},  {16, 83, 173},  {16, 107, 149}, {16, 227, 29},  {16, 251, 5},
  };
  return rows;
}

const std::vector<PublishedRow>& published_table_ii() {
  // stored as (n, p, m); the printed column order is p, n, N, m
  static const std::vector<PublishedRow> rows = {
      {2, 7, -3},     {2, 23, -19},   {2, 47, -43},   {6, 47, -11},   {4, 59, -43},   {8, 67, -3},
      {2, 71, -67},   {2, 79, -73},   {6, 79, -43},   {4, 83, -67},   {8, 83, -19},   {6, 103, -67},
      {10, 103, -3},  {8, 107, -43},  {8, 131, -67},  {12, 163, -19}, {2, 167, -163}, {6, 167, -131},
      {10, 167, -67}, {4, 179, -163}, {6, 199, -163}, {14, 199, -3},  {12, 211, -67}, {4, 227, -211},
      {8, 227, -163}, {12, 227, -83}, {10, 239, -139}, {14, 239, -43}, {12, 251, -107},
  };
  return rows;
}

namespace {

std::string describe(const PublishedRow& r, CaseTag tag) {
  std::ostringstream s;
  if (tag == CaseTag::CaseI)
    s << "(n=" << r.n << ", p=" << r.p << ", m=" << r.m << ")";
  else
    s << "(p=" << r.p << ", n=" << r.n << ", N=" << -r.m << ", m=" << r.m << ")";
  return s.str();
}

}  // namespace

std::string published_diff_markdown(const std::vector<FamilyCombo>& computed, CaseTag tag) {
  const auto& published = tag == CaseTag::CaseI ? published_table_i() : published_table_ii();
  auto key = [](const PublishedRow& r) { return std::tuple(r.n, r.p, r.m); };
  std::set<std::tuple<Int, Int, Int>> computed_keys;
  for (const auto& c : computed) computed_keys.emplace(c.n, c.p, c.m);
  std::set<std::tuple<Int, Int, Int>> published_keys;
  for (const auto& r : published) published_keys.insert(key(r));

  std::ostringstream md;
  md << "# Table " << (tag == CaseTag::CaseI ? "I" : "II") << ": computed vs. published\n\n";
  md << "- computed rows: " << computed.size() << "\n";
  md << "- published rows: " << published.size() << "\n\n";

  md << "## Published rows absent from the computed table\n\n";
  bool any = false;
  for (const auto& r : published) {
    if (computed_keys.count(key(r))) continue;
    any = true;
    md << "- " << describe(r, tag) << ": ";
    auto verdict = validate_combo(r.n, r.p);
    if (auto* f = std::get_if<HypothesisFailure>(&verdict)) {
      const Int diff = r.n * r.n - r.p;
      md << "rejected (" << to_string(*f) << "); n^2 - p = " << diff;
      if (diff != r.m) md << ", which also differs from the printed m = " << r.m;
    } else {
      md << "valid combination, but the printed m = " << r.m << " disagrees with n^2 - p = "
         << std::get<FamilyCombo>(verdict).m;
    }
    md << "\n";
  }
  if (!any) md << "none\n";

  md << "\n## Computed rows missing from the published table\n\n";
  any = false;
  for (const auto& c : computed) {
    if (published_keys.count({c.n, c.p, c.m})) continue;
    any = true;
    md << "- " << describe({c.n, c.p, c.m}, tag) << ": satisfies every hypothesis\n";
  }
  if (!any) md << "none\n";
  return md.str();
}

}  // namespace quartic::family
