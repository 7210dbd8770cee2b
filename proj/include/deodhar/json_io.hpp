// JSON forms shared by the CLI, the fixtures and the tests.
#pragma once

#include <map>
#include <string>

#include "json.hpp"

#include "deodhar/diagrams.hpp"
#include "deodhar/fibers.hpp"
#include "deodhar/networks.hpp"
#include "deodhar/plucker.hpp"
#include "deodhar/wilson.hpp"

namespace deodhar {

using Json = nlohmann::json;

// Parses text, turning syntax errors into ValidationError.
Json parse_json(const std::string& text);

// {"n", "k", "vertical_steps", "filling": rows of "+", "o", "b", top row first}
GoDiagram diagram_from_json(const Json& j);
Json diagram_to_json(const GoDiagram& d);

// {"weights": [{"box": [i, j], "value": "num/den"}]}
std::map<Box, Rational> weights_from_json(const Json& j);
Json weights_to_json(const std::map<Box, Rational>& w);

// [{"subset": [...], "value": "num/den"}], nonzero coordinates, sorted.
Json plucker_to_json(const PluckerVector& p);
// Subsets missing from the list are zero. k is read from the entries.
PluckerVector plucker_from_json(const Json& j, int m);

Json description_to_json(const CellDescription& c);
Json network_to_json(const WeightedGoNetwork& wn);
Json poset_to_json(const BoundaryPoset& p);

// {"n", "propagators": [[i, j], ...]}
WilsonLoopDiagram wld_from_json(const Json& j);
Json wld_to_json(const WilsonLoopDiagram& w);
Json rotation_to_json(const Rotation& r);
Json monodromy_to_json(const MonodromyReport& r);

}  // namespace deodhar
