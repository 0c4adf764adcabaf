#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quartic/arith.hpp"
#include "quartic/conic.hpp"
#include "quartic/descent.hpp"
#include "quartic/family.hpp"
#include "quartic/forms.hpp"
#include "quartic/local.hpp"
#include "quartic/serialize.hpp"

namespace py = pybind11;
using namespace quartic;
using nlohmann::json;

namespace {

py::object to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(to_py(v));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
      return out;
    }
    default: return py::none();
  }
}

using Triple = std::tuple<Int, Int, Int>;

std::vector<Triple> triples(const std::vector<SolutionTriple>& v) {
  std::vector<Triple> out;
  for (const auto& s : v) out.emplace_back(s.x, s.y, s.z);
  return out;
}

std::vector<local::LocalModulus> moduli_of(const std::vector<Int>& prime_powers) {
  std::vector<local::LocalModulus> out;
  for (Int q : prime_powers) out.push_back(local::LocalModulus::from_prime_power(q));
  return out;
}

std::optional<Triple> witness(const std::optional<local::ResidueWitness>& w) {
  if (!w) return std::nullopt;
  return Triple{w->x, w->y, w->z};
}

}  // namespace

PYBIND11_MODULE(_quartic, m) {
  m.doc() = "Quartic x^4 + 2n x^2 y^2 + m y^4 = z^2: tables, searches, descent, local checks";

  static py::exception<Error> quartic_error(m, "QuarticError");
  static py::exception<ScanLimitError> scan_limit_error(m, "ScanLimitError", quartic_error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const OverflowError& e) {
      PyErr_SetString(PyExc_OverflowError, e.what());
    } catch (const InvalidArgument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const ScanLimitError& e) {
      scan_limit_error(e.what());
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::InvalidArgument)
        PyErr_SetString(PyExc_ValueError, e.what());
      else
        quartic_error(e.what());
    }
  });

  m.def("is_prime", &arith::is_prime, py::arg("n"));
  m.def("isqrt", &arith::isqrt, py::arg("n"));
  m.def("divisor_pairs", &arith::divisor_pairs, py::arg("n"));
  m.def("is_kth_power_residue", &arith::is_kth_power_residue, py::arg("a"), py::arg("k"), py::arg("q"));

  m.def(
      "enumerate_primitive",
      [](Int ell, Int z_max, unsigned workers) {
        std::vector<Triple> out;
        for (const auto& t : conic::enumerate_primitive(ell, z_max, workers)) out.emplace_back(t.x, t.y, t.z);
        return out;
      },
      py::arg("ell"), py::arg("z_max"), py::arg("workers") = 1);
  m.def(
      "conic_brute_force",
      [](Int ell, Int z_max) {
        std::vector<Triple> out;
        for (const auto& t : conic::brute_force_oracle(ell, z_max)) out.emplace_back(t.x, t.y, t.z);
        return out;
      },
      py::arg("ell"), py::arg("z_max"));

  m.def(
      "case_i",
      [](Int n_max) {
        json a = json::array();
        for (const auto& c : family::enumerate_case_i(n_max)) a.push_back(to_json(c));
        return to_py(a);
      },
      py::arg("n_max") = 16);
  m.def(
      "case_ii",
      [](Int p_max) {
        json a = json::array();
        for (const auto& c : family::enumerate_case_ii(p_max)) a.push_back(to_json(c));
        return to_py(a);
      },
      py::arg("p_max") = 251);
  m.def(
      "validate_combo",
      [](Int n, Int p) -> py::object {
        const auto r = family::validate_combo(n, p);
        if (const auto* c = std::get_if<family::FamilyCombo>(&r)) return to_py(to_json(*c));
        return py::str(family::to_string(std::get<family::HypothesisFailure>(r)));
      },
      py::arg("n"), py::arg("p"));

  m.def(
      "search",
      [](Int n, Int mm, Int bound, unsigned workers) { return triples(search(FamilyQuarticForm(n, mm), bound, workers)); },
      py::arg("n"), py::arg("m"), py::arg("bound"), py::arg("workers") = 1);
  m.def(
      "search_general",
      [](Int a, Int b, Int c, Int d, Int bound, unsigned workers) {
        return triples(search_general(GeneralQuarticForm(a, b, c, d), bound, workers));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("bound"), py::arg("workers") = 1);

  m.def(
      "residue_branch_scan", [](Int n, Int p) { return to_py(to_json(descent::residue_branch_scan(n, p))); },
      py::arg("n"), py::arg("p"));
  m.def(
      "descend",
      [](Int n, Int mm, Int x, Int y, Int z) {
        return to_py(to_json(descent::descend(FamilyQuarticForm(n, mm), {x, y, z})));
      },
      py::arg("n"), py::arg("m"), py::arg("x"), py::arg("y"), py::arg("z"));
  m.def(
      "inverse_construct",
      [](Int n, Int mm, Int k1, Int lambda1) -> std::optional<Triple> {
        const auto r = descent::inverse_construct(n, mm, k1, lambda1);
        if (!r) return std::nullopt;
        return Triple{r->triple.x, r->triple.y, r->triple.z};
      },
      py::arg("n"), py::arg("m"), py::arg("k1"), py::arg("lambda1"));
  m.def("verify_factorization_identity", &descent::verify_factorization_identity, py::arg("n"), py::arg("p"),
        py::arg("x"), py::arg("y"));

  m.def(
      "primitive_solvable_mod",
      [](Int a, Int b, Int c, Int d, Int q, Int scan_limit) {
        return witness(local::primitive_solvable_mod(GeneralQuarticForm(a, b, c, d),
                                                     local::LocalModulus::from_prime_power(q), scan_limit));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("q"),
      py::arg("scan_limit") = local::kDefaultScanLimit);
  m.def(
      "local_report",
      [](Int a, Int b, Int c, Int d, const std::vector<Int>& prime_powers, Int bound, Int scan_limit) {
        return to_py(
            to_json(local::local_report(GeneralQuarticForm(a, b, c, d), moduli_of(prime_powers), bound, scan_limit)));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("prime_powers"), py::arg("bound"),
      py::arg("scan_limit") = local::kDefaultScanLimit);
  m.def(
      "hasse_scan",
      [](Int q_max, Int d_max) {
        std::vector<std::pair<Int, Int>> out;
        for (const auto& v : local::hasse_scan(q_max, d_max)) out.emplace_back(v.q, v.d);
        return out;
      },
      py::arg("q_max"), py::arg("d_max"));
  m.def(
      "selmer_fixture",
      [](Int bound, const std::vector<Int>& prime_powers) {
        return to_py(to_json(local::selmer_fixture(bound, moduli_of(prime_powers))));
      },
      py::arg("bound"), py::arg("prime_powers"));
}
