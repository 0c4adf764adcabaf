#include "quartic/serialize.hpp"

namespace quartic {

using nlohmann::json;

namespace {

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json witness_json(const std::optional<local::ResidueWitness>& w) {
  if (!w) return nullptr;
  return json::array({w->x, w->y, w->z});
}

json modulus_json(const local::LocalModulus& m) {
  return {{"p", m.p()}, {"k", m.k()}, {"value", m.value()}};
}

json form_json(const GeneralQuarticForm& f) { return {{"a", f.a()}, {"b", f.b()}, {"c", f.c()}, {"d", f.d()}}; }

json system_json(const local::QuadraticSystemSolution& s) { return json::array({s.u, s.v, s.w, s.z}); }

}  // namespace

json to_json(const SolutionTriple& s) { return {{"x", s.x}, {"y", s.y}, {"z", s.z}}; }

json to_json(const conic::ConicTriple& t) { return {{"x", t.x}, {"y", t.y}, {"z", t.z}}; }

json to_json(const conic::ConicParametrization& p) {
  return {{"ell", p.ell}, {"d", p.d}, {"k", p.k}, {"lambda", p.lambda}, {"rho1", p.rho1}, {"rho2", p.rho2}};
}

json to_json(const family::FamilyCombo& c) {
  return {{"n", c.n}, {"p", c.p}, {"m", c.m}, {"N", opt(c.N)}, {"case", family::to_string(c.tag)}};
}

json to_json(const descent::BranchReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"branch", c.branch},
                      {"modulus", c.modulus},
                      {"residue_range", 8},
                      {"tuples_scanned", c.tuples_scanned},
                      {"survivors", c.survivors},
                      {"confirmed", c.confirmed()},
                      {"first_survivor", c.first_survivor.empty() ? json(nullptr) : json(c.first_survivor)}});
  return {{"n", r.n},
          {"p", r.p},
          {"m", r.m},
          {"combo", r.combo ? to_json(*r.combo) : json(nullptr)},
          {"checks", checks},
          {"all_confirmed", r.all_confirmed()}};
}

json to_json(const descent::DescentTrace& t) {
  json out = {{"n", t.n},
              {"m", t.m},
              {"p", t.p},
              {"combo", t.combo ? to_json(*t.combo) : json(nullptr)},
              {"input", to_json(t.input)},
              {"primitive", to_json(t.primitive)},
              {"branch", descent::to_string(t.branch)},
              {"factorization_holds", opt(t.factorization_holds)},
              {"delta1", opt(t.delta1)},
              {"delta2", opt(t.delta2)},
              {"deltas_swapped", t.deltas_swapped},
              {"case9", t.case9 ? json(descent::to_string(*t.case9)) : json(nullptr)},
              {"y1", opt(t.y1)},
              {"y2", opt(t.y2)},
              {"conic_step", t.conic_step ? to_json(*t.conic_step) : json(nullptr)},
              {"k1", opt(t.k1)},
              {"lambda1", opt(t.lambda1)},
              {"sign", t.sign ? json(descent::to_string(*t.sign)) : json(nullptr)},
              {"rho_assignment", t.rho_assignment ? json(descent::to_string(*t.rho_assignment)) : json(nullptr)}};
  out["outcome"] = {{"kind", descent::to_string(t.outcome.kind)},
                    {"smaller", t.outcome.smaller ? to_json(*t.outcome.smaller) : json(nullptr)},
                    {"detail", t.outcome.detail}};
  return out;
}

json to_json(const local::LocalReport& r) {
  json verdicts = json::array();
  for (const auto& v : r.verdicts)
    verdicts.push_back({{"modulus", modulus_json(v.modulus)},
                        {"solvable", v.solvable()},
                        {"witness", witness_json(v.witness)},
                        {"system_equivalence_claimed", v.system_equivalence_claimed}});
  json sols = json::array();
  for (const auto& s : r.global_solutions) sols.push_back(to_json(s));
  return {{"form", form_json(r.form)},
          {"real_solvable", r.real_solvable},
          {"verdicts", verdicts},
          {"self_consistent", r.self_consistent()},
          {"global_search", {{"bound", r.global_bound}, {"count", r.global_solutions.size()}, {"solutions", sols}}}};
}

json to_json(const local::CorrespondenceReport& r) {
  json quartic = json::array(), system = json::array(), orphans = json::array();
  for (const auto& s : r.quartic_solutions) quartic.push_back(to_json(s));
  for (const auto& s : r.system_solutions) system.push_back(system_json(s));
  for (const auto& s : r.without_preimage) orphans.push_back(system_json(s));
  return {{"bound", r.bound},
          {"quartic_solutions", quartic},
          {"forward_verified", r.forward_verified},
          {"system_solutions", system},
          {"without_preimage", orphans}};
}

json to_json(const local::AitkenLemmermeyerVerdict& v) {
  return {{"q", v.q},
          {"d", v.d},
          {"q_prime_1_mod_16", v.q_prime_1_mod_16},
          {"d_squarefree", v.d_squarefree},
          {"d_square_not_fourth_power_mod_q", v.d_square_not_fourth_power_mod_q},
          {"q_fourth_power_mod_odd_divisors", v.q_fourth_power_mod_odd_divisors},
          {"holds", v.holds()}};
}

json to_json(const local::SelmerReport& r) {
  json sols = json::array(), wits = json::array();
  for (const auto& s : r.nontrivial_solutions) sols.push_back(to_json(s));
  for (const auto& [m, w] : r.witnesses) wits.push_back({{"modulus", modulus_json(m)}, {"witness", witness_json(w)}});
  return {{"bound", r.bound},
          {"nontrivial_solutions", sols},
          {"witnesses", wits},
          {"consistent_with_local_global_failure", r.consistent_with_local_global_failure()}};
}

}  // namespace quartic
