#pragma once

// JSON encodings with stable field names, shared by the CLI and bindings.

#include <json.hpp>

#include "quartic/descent.hpp"
#include "quartic/family.hpp"
#include "quartic/forms.hpp"
#include "quartic/local.hpp"

namespace quartic {

nlohmann::json to_json(const SolutionTriple& s);
nlohmann::json to_json(const conic::ConicTriple& t);
nlohmann::json to_json(const conic::ConicParametrization& p);
nlohmann::json to_json(const family::FamilyCombo& c);
nlohmann::json to_json(const descent::BranchReport& r);
nlohmann::json to_json(const descent::DescentTrace& t);
nlohmann::json to_json(const local::LocalReport& r);
nlohmann::json to_json(const local::CorrespondenceReport& r);
nlohmann::json to_json(const local::AitkenLemmermeyerVerdict& v);
nlohmann::json to_json(const local::SelmerReport& r);

}  // namespace quartic
