#pragma once

#include <nlohmann/json.hpp>

#include "nsring/ci3.hpp"
#include "nsring/family.hpp"
#include "nsring/index.hpp"
#include "nsring/semigroup.hpp"

namespace nsring {

using json = nlohmann::ordered_json;

json to_json(const NumericalSemigroup& h); // array of generators
json to_json(const AperyTable& t);
json to_json(const IndexReport& r);
json to_json(const CiEdim3Structure& s);
json to_json(const GluingStep& s);
json to_json(const FamilySpec& s);

GluingStep gluing_step_from_json(const json& j);
FamilySpec family_spec_from_json(const json& j);

} // namespace nsring
