#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grecip/golomb.hpp"
#include "grecip/rational.hpp"

namespace grecip {

// Linear hyperplane {z : normal . z = 0} in R^m. Canonical: entries have gcd
// 1 and the first nonzero entry is positive.
struct Hyperplane {
  std::vector<int> normal;

  static Hyperplane canonical(std::vector<int> normal);
  // sum_{j in U} z_j = sum_{j in V} z_j
  static Hyperplane from_dpcs(int m, const DpcsPair& p);

  std::int64_t evaluate(const std::vector<std::int64_t>& z) const;
  Rational evaluate(const std::vector<Rational>& z) const;

  // "z1 + z2 = z3": positive-coefficient terms on the left.
  std::string to_string() const;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
  friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;
};

using RationalPoint = std::vector<Rational>;

// The Golomb arrangement G_m: one canonical hyperplane per distinct dpcs
// equation, sorted. Empty for m < 2.
std::vector<Hyperplane> golomb_hyperplanes(int m);

// Vertices of the inside-out polytope (Delta_m, G_m): points of the simplex
// {z >= 0, sum z = 1} cut out by m-1 independent equations drawn from G_m
// and the facets z_j = 0. Deduplicated and sorted. Empty for m < 2.
std::vector<RationalPoint> iop_vertices(int m);

// Same vertex set, each point scaled to its primitive integer vector
// (nonnegative entries, positive sum). Used by the region search.
std::vector<std::vector<std::int64_t>> iop_vertex_rays(int m);

// lcm of all coordinate denominators of iop_vertices(m); 1 for m < 2. The
// period of g_m divides this.
std::int64_t period_bound(int m);

// Reverses coordinates (gap reversal z_i -> z_{m+1-i}).
RationalPoint reverse_point(const RationalPoint& p);
Hyperplane reverse_hyperplane(const Hyperplane& h);

std::string vertices_to_csv(const std::vector<RationalPoint>& vertices);

}  // namespace grecip
