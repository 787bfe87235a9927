#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "chowfano/forms.hpp"
#include "chowfano/projbundle.hpp"

namespace chowfano {

// wire formats: partitions as integer arrays, classes as term lists, rationals
// as "p/q" strings everywhere

nlohmann::ordered_json partition_to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::ordered_json chow_to_json(const ChowClass& c);
ChowClass chow_from_json(const GrassContext& ctx, const nlohmann::json& j);

nlohmann::ordered_json pbelement_to_json(const HilbElem& e);
HilbElem pbelement_from_json(const HilbRing& ring, const nlohmann::json& j);

nlohmann::ordered_json cubic_to_json(const symp::CubicForm& c);
symp::CubicForm cubic_from_json(const nlohmann::json& j);

nlohmann::ordered_json quadric_to_json(const symp::QuadricForm& q);
symp::QuadricForm quadric_from_json(const nlohmann::json& j);

nlohmann::ordered_json subspace_to_json(const symp::Subspace& s);
symp::Subspace subspace_from_json(const nlohmann::json& j);

}  // namespace chowfano
