#pragma once

// JSON forms of the library's value types. Rationals and big integers are
// written as decimal strings ("10", "-4", "1/2"); serializing a parsed
// document reproduces it byte for byte.

#include <json.hpp>

#include <span>
#include <string>
#include <vector>

#include "grecip/arrangement.hpp"
#include "grecip/golomb_graph.hpp"
#include "grecip/mixed_graph.hpp"
#include "grecip/quasipoly.hpp"

namespace grecip {

using Json = nlohmann::json;

// {"period": 12, "constituents": [["10","-4","1/2"], ...]}
Json to_json(const Quasipolynomial& q);
Quasipolynomial quasipolynomial_from_json(const Json& j);

// {"m": 3, "vertices": [["0","0","1"], ...]}
Json vertices_to_json(int m, std::span<const RationalPoint> vertices);
std::vector<RationalPoint> vertices_from_json(const Json& j);

// {"m": 3, "count": 10, "orientations": [["1","2","12","3","23"], ...]}
Json orientations_to_json(int m,
                          std::span<const GolombOrientation> orientations);
std::vector<GolombOrientation> orientations_from_json(const Json& j);

// {"n": 3, "edges": [[1,3],[2,3]], "arcs": [[1,2]]}
Json to_json(const MixedGraph& g);
// Throws ValidationError for loops and duplicate or conflicting pairs, and
// ParseError for malformed documents.
MixedGraph mixed_graph_from_json(const Json& j);
MixedGraph read_mixed_graph(const std::string& path);

Json to_json(const Polynomial& p);  // ["0","1","-3/2","1/2"]
Polynomial polynomial_from_json(const Json& j);

// Pretty-printed with two-space indent and a trailing newline.
std::string dump(const Json& j);

}  // namespace grecip
