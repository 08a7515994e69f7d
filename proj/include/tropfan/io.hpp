#pragma once

#include <string>

#include "json.hpp"
#include "tropfan/endo.hpp"

namespace tropfan {

using Json = nlohmann::ordered_json;

/// Canonical matroid file ({"schema":"matroid/1", ...}). Emission always
/// uses the explicit basis family; parsing accepts kinds "matrix", "bases"
/// and "circuits". Matrix entries are canonical rational strings over Q or
/// residue strings over GF(p); anything non-canonical is rejected.
Json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const Json& j, int cap = kDefaultGroundCap);

Json subsets_to_json(const std::vector<Subset>& sets);
Json chain_to_json(const ChainOfFlats& chain);
Json chains_to_json(const std::vector<ChainOfFlats>& chains);
Json nested_sets_to_json(const std::vector<NestedSet>& sets);

Json fan_to_json(const SimplicialFan& fan);
Json fan_to_json(const BergmanFan& fan);

Json report_to_json(const VerificationReport& report);
Json compatibility_to_json(const CompatibilityReport& report);

IntegerLinearMap map_from_json(const Json& j);
Json map_to_json(const IntegerLinearMap& map);

Json parse_json_text(const std::string& text);

} // namespace tropfan
