#pragma once

#include <json.hpp>

#include "monomega/decomposition.hpp"
#include "monomega/edge_ideal.hpp"
#include "monomega/linearity.hpp"
#include "monomega/omega.hpp"

namespace monomega {

// Insertion-ordered JSON so renderings are byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const Json& j);

Json to_json(const StandardDecomposition& d);
Json to_json(const CanonicalDecomposition& d);
Json to_json(const OmegaResult& r);
Json to_json(const PowerTable& t);
Json to_json(const EdgePowerReport& r);

}  // namespace monomega
