#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grecip/budget.hpp"
#include "grecip/polynomial.hpp"
#include "grecip/rational.hpp"

namespace grecip {

// Simple mixed graph on vertices 1..n: undirected edges E (stored with the
// smaller endpoint first) and arcs A. No loops; a pair is either one edge or
// arcs, and the only allowed repeat is an antiparallel arc pair.
class MixedGraph {
 public:
  using Pair = std::pair<int, int>;

  MixedGraph() = default;
  // Throws ValidationError naming the first offending pair.
  MixedGraph(int n, std::vector<Pair> edges, std::vector<Pair> arcs);

  int n() const { return n_; }
  const std::vector<Pair>& edges() const { return edges_; }
  const std::vector<Pair>& arcs() const { return arcs_; }

  friend bool operator==(const MixedGraph&, const MixedGraph&) = default;

 private:
  int n_ = 0;
  std::vector<Pair> edges_;
  std::vector<Pair> arcs_;
};

// One direction per undirected edge, indexed like G.edges(): true keeps the
// stored (u, v) with u < v as u -> v, false reverses it.
struct Orientation {
  std::vector<bool> forward;
  friend bool operator==(const Orientation&, const Orientation&) = default;
};

// Arcs of G together with the oriented edges.
std::vector<MixedGraph::Pair> oriented_arcs(const MixedGraph& g,
                                            const Orientation& o);
// A topological order of the orientation, smallest vertex first among ties.
// Empty if the orientation has a cycle.
std::vector<int> topological_order(const MixedGraph& g, const Orientation& o);

// (V, A) has no directed cycle.
bool is_acyclic_mixed(const MixedGraph& g);

// Proper colorings c: V -> {1..t}: c(u) != c(v) on edges, c(u) < c(v) on arcs.
BigInt count_proper_colorings(const MixedGraph& g, std::int64_t t,
                              const SearchOptions& opts = {});

// Zero polynomial when G is not acyclic; otherwise the degree-n polynomial
// through the coloring counts at t = 0..n.
Polynomial chromatic_polynomial(const MixedGraph& g,
                                const SearchOptions& opts = {});

// Acyclic orientations in lexicographic order of the direction vector with
// `true` (forward) first. Throws BudgetExceeded if 2^|E| exceeds the budget.
std::vector<Orientation> enumerate_acyclic_orientations(
    const MixedGraph& g, const SearchOptions& opts = {});

// Acyclic orientations whose every directed edge u -> v (arcs included)
// satisfies c(u) <= c(v). `coloring` is indexed by vertex - 1.
std::uint64_t compatible_orientation_count(
    const MixedGraph& g, const std::vector<std::int64_t>& coloring,
    const SearchOptions& opts = {});

struct MixedReciprocityReport {
  std::int64_t t = 0;
  Polynomial chromatic;
  Rational lhs;  // (-1)^n chi_G(-t)
  // Compatible-orientation counts summed over colorings V -> {0..t-1}, the
  // lattice points of (t-1) P(G).
  BigInt rhs;
  // The same sum over colorings V -> {0..t} (lattice points of t P(G)); this
  // is what a literal reading with dilation t would compare against.
  BigInt rhs_dilate_t;
  bool ok = false;
};

MixedReciprocityReport reciprocity_check_mixed(const MixedGraph& g,
                                               std::int64_t t,
                                               const SearchOptions& opts = {});

// Least t with a proper t-coloring; nullopt when G is not acyclic.
std::optional<int> chromatic_number(const MixedGraph& g,
                                    const SearchOptions& opts = {});

// Number of distinct cells of the arrangement {x_u = x_v : uv in E} met by
// the interior of P(G), found by classifying every vertex ranking that is
// consistent with the arcs. Independent of orientation enumeration.
std::uint64_t count_regions_by_rankings(const MixedGraph& g,
                                        const SearchOptions& opts = {});

}  // namespace grecip
