#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "grecip/arrangement.hpp"
#include "grecip/budget.hpp"
#include "grecip/golomb.hpp"
#include "grecip/mixed_graph.hpp"

namespace grecip {

// Proper nonempty consecutive subsets of [m], ordered by size and then by
// first element: {1},{2},{3},{1,2},{2,3} for m = 3. These are the vertices
// of the Golomb graph; vertex k of build_golomb_graph(m) is element k-1.
std::vector<Interval> consecutive_subsets(int m);

// "12" for {1,2}. Requires last <= 9 so labels stay unambiguous.
std::string subset_label(const Interval& s);
Interval parse_subset_label(std::string_view label);

// Complete mixed graph on consecutive_subsets(m) with arcs U -> V for U a
// strict subset of V and undirected edges everywhere else.
MixedGraph build_golomb_graph(int m);

// An acyclic orientation of the complete graph Gamma_m, i.e. a strict total
// order on the proper consecutive subsets. `order()` lists subset indices
// (into consecutive_subsets(m)) from smallest to largest.
class GolombOrientation {
 public:
  GolombOrientation() = default;
  GolombOrientation(int m, std::vector<int> order);

  int m() const { return m_; }
  const std::vector<int>& order() const { return order_; }
  std::vector<Interval> subsets() const;
  // Position of subset index k in the order.
  int rank(int k) const { return rank_.at(static_cast<std::size_t>(k)); }
  bool before(int a, int b) const { return rank(a) < rank(b); }

  std::vector<std::string> labels() const;
  std::string to_string() const;  // "1 < 2 < 12 < 3 < 23"

  friend bool operator==(const GolombOrientation& a,
                         const GolombOrientation& b) {
    return a.m_ == b.m_ && a.order_ == b.order_;
  }

 private:
  int m_ = 0;
  std::vector<int> order_;
  std::vector<int> rank_;
};

enum class RegionCheck {
  // Orders extending inclusion that satisfy the shift condition
  // (U∪W before V∪W iff U before V) and are realized by some point of the
  // open simplex. These are the regions of (Delta_m, G_m).
  kRealizable,
  // Only inclusion and the shift condition; no geometric test.
  kShiftConditionOnly,
};

struct OrientationSearchOptions : SearchOptions {
  RegionCheck check = RegionCheck::kRealizable;
  int max_m = 6;
};

// Deterministic: lexicographic in order() regardless of thread count.
std::vector<GolombOrientation> enumerate_constrained_orientations(
    int m, const OrientationSearchOptions& opts = {});

// Inclusion, shift condition and totality; no geometric test.
bool satisfies_shift_condition(const GolombOrientation& o);

// Number of orientations whose closed region contains z, i.e. interval sums
// are weakly increasing along the order. 1 iff z is a Golomb ruler.
std::uint64_t multiplicity(const Ruler& z,
                           std::span<const GolombOrientation> orientations);
std::uint64_t multiplicity(const Ruler& z,
                           const OrientationSearchOptions& opts = {});

struct RegionSignVector {
  std::vector<Hyperplane> hyperplanes;  // golomb_hyperplanes(m)
  std::vector<int> signs;               // sign of normal . z inside the region
  RationalPoint witness;                // interior point realizing the order
};

// Signs of every hyperplane of G_m on the region of `o`, plus an exact
// interior witness. Throws InfeasibleRegion if no point of the open simplex
// realizes the order.
RegionSignVector region_sign_vector(const GolombOrientation& o);

// The order induced by gap reversal [a,b] -> [m+1-b, m+1-a].
GolombOrientation reverse_orientation(const GolombOrientation& o);

}  // namespace grecip
