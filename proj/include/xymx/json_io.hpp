#pragma once

// JSON views of the domain types.  Exact integers are serialized as decimal
// strings; object key order and list order are deterministic so identical
// inputs produce byte-identical output.

#include <json.hpp>

#include "xymx/classify.hpp"
#include "xymx/hasse.hpp"
#include "xymx/pell.hpp"
#include "xymx/thue.hpp"

namespace xymx {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const PowerSolution& s);
PowerSolution solution_from_json(const ordered_json& j);

ordered_json to_json(const SolutionSet& set);
SolutionSet solution_set_from_json(const ordered_json& j);

ordered_json to_json(const ThueOutcome& outcome);
ordered_json to_json(const SieveReport& report, long k, const Integer& m);
ordered_json to_json(const HasseVerdict& verdict, long k, const Integer& m,
                     const Integer& c);
ordered_json to_json(const PellUnit& unit);
ordered_json to_json(const PellRep& rep);

}  // namespace xymx
