#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "grecip/mixed_graph.hpp"
#include "grecip/rational.hpp"

namespace grecip::fixtures {

// Known values of g_3(t) for 6 <= t <= 35.
const std::map<std::int64_t, std::int64_t>& g3_table();

// Triangle on [3] with arc 1 -> 2 and edges {1,3}, {2,3}.
MixedGraph triangle();

// Lattice points of k P(triangle) with their closed-region multiplicities,
// for k = 1 (six points) and k = 2 (eighteen points).
struct MultiplicityRow {
  std::vector<std::int64_t> point;
  std::uint64_t multiplicity;
};
const std::vector<MultiplicityRow>& triangle_multiplicities(int k);

}  // namespace grecip::fixtures
