#pragma once

#include <ostream>
#include <vector>

#include "gsedf/construct.hpp"
#include "gsedf/feasibility.hpp"
#include "gsedf/search.hpp"
#include "gsedf/verify.hpp"
#include "json.hpp"

namespace gsedf::io {

using Json = nlohmann::json;

Json to_json(const AbelianGroup& g);
Json to_json(const GroupElement& x);
Json to_json(const ElementSet& s);

/// {"group": [d...], "lambda": [l...], "sets": [[[coords]...]...]}
Json to_json(const DiffFamily& f);
/// Throws invalid on malformed input, plus the DiffFamily constructor errors.
DiffFamily family_from_json(const Json& j);

/// {"name": ..., "args": [...], "base": recipe|null}
Json to_json(const ConstructionRecipe& r);
ConstructionRecipe recipe_from_json(const Json& j);

Json to_json(const ParamTuple& t);
Json to_json(const VerifyReport& r, const DiffFamily& f);
Json to_json(const ParamTuple& t, const FeasibilityVerdict& v);
/// Elapsed time is included only on request so default output is reproducible.
Json to_json(const SearchOutcome& o, bool include_timing = false);
Json to_json(const AlphaReport& r);

/// Header `v,m,k,lambda,status,reason`; k and lambda lists are space-separated.
void write_csv(std::ostream& out, const std::vector<ParamTuple>& tuples);

}  // namespace gsedf::io
