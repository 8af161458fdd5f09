#pragma once

#include <json.hpp>

#include "polystab/stability.hpp"

namespace polystab {

// All emitters use ordered_json with fixed insertion order so equal inputs
// produce byte-identical documents.
using Json = nlohmann::ordered_json;

Json polytope_to_json(const LatticePolytope& p);
Json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const Json& j);
Json support_to_json(const WeightSupport& s);
WeightSupport support_from_json(const Json& j);
Json pair_to_json(const StabilityPair& p);
StabilityPair pair_from_json(const Json& j);
Json report_to_json(const DegenerationReport& r);
DegenerationReport report_from_json(const Json& j);

std::string dump_canonical(const Json& j);

}  // namespace polystab
