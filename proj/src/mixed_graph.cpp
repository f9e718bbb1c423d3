#include "grecip/mixed_graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "grecip/errors.hpp"

namespace grecip {
namespace {

std::string pair_text(const MixedGraph::Pair& p) {
  return "[" + std::to_string(p.first) + "," + std::to_string(p.second) + "]";
}

// Kahn's algorithm; returns the order or an empty vector on a cycle.
std::vector<int> kahn(int n, const std::vector<MixedGraph::Pair>& arcs) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n) + 1);
  std::vector<int> indeg(static_cast<std::size_t>(n) + 1, 0);
  for (auto [u, v] : arcs) {
    out[static_cast<std::size_t>(u)].push_back(v);
    ++indeg[static_cast<std::size_t>(v)];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 1; v <= n; ++v)
    if (indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
  std::vector<int> order;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int w : out[static_cast<std::size_t>(v)])
      if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push(w);
  }
  if (static_cast<int>(order.size()) != n) order.clear();
  return order;
}

bool acyclic(int n, const std::vector<MixedGraph::Pair>& arcs) {
  return n == 0 || !kahn(n, arcs).empty();
}

std::uint64_t checked_power(std::int64_t base, int exp, std::uint64_t budget) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > budget / static_cast<std::uint64_t>(base)) throw BudgetExceeded(budget);
    r *= static_cast<std::uint64_t>(base);
  }
  if (r > budget) throw BudgetExceeded(budget);
  return r;
}

// Calls visit(c) for every c in {lo..hi}^n.
template <class Visit>
void for_each_coloring(int n, std::int64_t lo, std::int64_t hi, Visit&& visit) {
  if (hi < lo && n > 0) return;
  std::vector<std::int64_t> c(static_cast<std::size_t>(n), lo);
  for (;;) {
    visit(c);
    int i = n - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == hi) c[static_cast<std::size_t>(i--)] = lo;
    if (i < 0) return;
    ++c[static_cast<std::size_t>(i)];
  }
}

std::vector<std::vector<MixedGraph::Pair>> acyclic_arc_sets(const MixedGraph& g,
                                                             const SearchOptions& opts) {
  std::vector<std::vector<MixedGraph::Pair>> out;
  for (const auto& o : enumerate_acyclic_orientations(g, opts)) out.push_back(oriented_arcs(g, o));
  return out;
}

std::uint64_t count_compatible(const std::vector<std::vector<MixedGraph::Pair>>& arc_sets,
                               const std::vector<std::int64_t>& c) {
  std::uint64_t count = 0;
  for (const auto& arcs : arc_sets) {
    bool ok = std::all_of(arcs.begin(), arcs.end(), [&](const auto& a) {
      return c[static_cast<std::size_t>(a.first - 1)] <= c[static_cast<std::size_t>(a.second - 1)];
    });
    if (ok) ++count;
  }
  return count;
}

}  // namespace

MixedGraph::MixedGraph(int n, std::vector<Pair> edges, std::vector<Pair> arcs)
    : n_(n), arcs_(std::move(arcs)) {
  if (n < 0) throw ValidationError("vertex count must be non-negative");
  // Antiparallel arcs (u,v), (v,u) form a directed 2-cycle and are kept.
  std::set<Pair> edge_keys, arc_keys;
  auto check = [&](const Pair& p) {
    if (p.first < 1 || p.first > n || p.second < 1 || p.second > n)
      throw ValidationError("pair " + pair_text(p) + " has a vertex outside 1.." + std::to_string(n));
    if (p.first == p.second) throw ValidationError("loop " + pair_text(p) + " is not allowed");
  };
  auto conflict = [&](const Pair& p) {
    throw ValidationError("pair " + pair_text(p) + " duplicates or conflicts with an earlier pair");
  };
  for (auto& e : edges) {
    check(e);
    Pair key = std::minmax(e.first, e.second);
    if (!edge_keys.insert(key).second) conflict(e);
    edges_.push_back(key);
  }
  for (const auto& a : arcs_) {
    check(a);
    if (edge_keys.count(std::minmax(a.first, a.second)) || !arc_keys.insert(a).second) conflict(a);
  }
}

std::vector<MixedGraph::Pair> oriented_arcs(const MixedGraph& g, const Orientation& o) {
  if (o.forward.size() != g.edges().size())
    throw std::invalid_argument("orientation size does not match the edge count");
  std::vector<MixedGraph::Pair> arcs = g.arcs();
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    auto [u, v] = g.edges()[i];
    arcs.emplace_back(o.forward[i] ? u : v, o.forward[i] ? v : u);
  }
  return arcs;
}

std::vector<int> topological_order(const MixedGraph& g, const Orientation& o) {
  return kahn(g.n(), oriented_arcs(g, o));
}

bool is_acyclic_mixed(const MixedGraph& g) { return acyclic(g.n(), g.arcs()); }

BigInt count_proper_colorings(const MixedGraph& g, std::int64_t t, const SearchOptions& opts) {
  if (t < 0) throw std::invalid_argument("t must be non-negative");
  const int n = g.n();
  // constraints[v]: (u, kind) for u < v; kind 0: c(u) != c(v), 1: c(u) < c(v),
  // 2: c(u) > c(v).
  std::vector<std::vector<std::pair<int, int>>> constraints(static_cast<std::size_t>(n) + 1);
  for (auto [u, v] : g.edges()) constraints[static_cast<std::size_t>(v)].emplace_back(u, 0);
  for (auto [u, v] : g.arcs()) {
    if (u < v)
      constraints[static_cast<std::size_t>(v)].emplace_back(u, 1);
    else
      constraints[static_cast<std::size_t>(u)].emplace_back(v, 2);
  }
  NodeCounter counter(opts.node_budget);
  NodeMeter meter(counter);
  std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, int v) -> void {
    if (v > n) {
      ++count;
      return;
    }
    for (std::int64_t col = 1; col <= t; ++col) {
      meter.tick();
      bool ok = true;
      for (auto [u, kind] : constraints[static_cast<std::size_t>(v)]) {
        auto cu = c[static_cast<std::size_t>(u)];
        if ((kind == 0 && cu == col) || (kind == 1 && !(cu < col)) || (kind == 2 && !(cu > col))) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      c[static_cast<std::size_t>(v)] = col;
      self(self, v + 1);
    }
  };
  rec(rec, 1);
  meter.flush();
  return BigInt(static_cast<unsigned long>(count));
}

Polynomial chromatic_polynomial(const MixedGraph& g, const SearchOptions& opts) {
  if (!is_acyclic_mixed(g)) return {};
  std::vector<std::pair<Rational, Rational>> points;
  for (int t = 0; t <= g.n(); ++t)
    points.emplace_back(Rational(t), Rational(count_proper_colorings(g, t, opts)));
  return lagrange_interpolate(points);
}

std::vector<Orientation> enumerate_acyclic_orientations(const MixedGraph& g,
                                                        const SearchOptions& opts) {
  const int k = static_cast<int>(g.edges().size());
  if (k >= 63) throw BudgetExceeded(opts.node_budget);
  const std::uint64_t total = checked_power(2, k, opts.node_budget);
  std::vector<Orientation> out;
  Orientation o;
  o.forward.resize(static_cast<std::size_t>(k));
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    for (int i = 0; i < k; ++i) o.forward[static_cast<std::size_t>(i)] = ((idx >> (k - 1 - i)) & 1u) == 0;
    if (acyclic(g.n(), oriented_arcs(g, o))) out.push_back(o);
  }
  return out;
}

std::uint64_t compatible_orientation_count(const MixedGraph& g,
                                           const std::vector<std::int64_t>& coloring,
                                           const SearchOptions& opts) {
  if (static_cast<int>(coloring.size()) != g.n())
    throw std::invalid_argument("coloring must assign a value to every vertex");
  return count_compatible(acyclic_arc_sets(g, opts), coloring);
}

MixedReciprocityReport reciprocity_check_mixed(const MixedGraph& g, std::int64_t t,
                                               const SearchOptions& opts) {
  if (t < 0) throw std::invalid_argument("t must be non-negative");
  MixedReciprocityReport r;
  r.t = t;
  r.chromatic = chromatic_polynomial(g, opts);
  r.lhs = r.chromatic(Rational(-t));
  if (g.n() % 2 == 1) r.lhs = -r.lhs;

  const auto arc_sets = acyclic_arc_sets(g, opts);
  checked_power(t + 1, g.n(), opts.node_budget);
  auto weighted_sum = [&](std::int64_t colors) {
    std::uint64_t sum = 0;
    if (colors > 0 || g.n() == 0)
      for_each_coloring(g.n(), 0, colors - 1,
                        [&](const std::vector<std::int64_t>& c) { sum += count_compatible(arc_sets, c); });
    return BigInt(static_cast<unsigned long>(sum));
  };
  r.rhs = weighted_sum(t);
  r.rhs_dilate_t = weighted_sum(t + 1);
  r.ok = r.lhs == Rational(r.rhs);
  return r;
}

std::optional<int> chromatic_number(const MixedGraph& g, const SearchOptions& opts) {
  if (!is_acyclic_mixed(g)) return std::nullopt;
  // An acyclic mixed graph has a proper coloring with n colors (rank along a
  // topological order), so the search ends by t = max(n, 1).
  for (int t = 1; t <= std::max(g.n(), 1); ++t)
    if (count_proper_colorings(g, t, opts) > 0) return t;
  return std::max(g.n(), 1);
}

std::uint64_t count_regions_by_rankings(const MixedGraph& g, const SearchOptions& opts) {
  const int n = g.n();
  NodeCounter counter(opts.node_budget);
  NodeMeter meter(counter);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  std::set<std::vector<bool>> cells;
  do {
    meter.tick();
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    bool respects = std::all_of(g.arcs().begin(), g.arcs().end(), [&](const auto& a) {
      return pos[static_cast<std::size_t>(a.first)] < pos[static_cast<std::size_t>(a.second)];
    });
    if (!respects) continue;
    std::vector<bool> signs;
    for (auto [u, v] : g.edges()) signs.push_back(pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(v)]);
    cells.insert(std::move(signs));
  } while (std::next_permutation(perm.begin(), perm.end()));
  meter.flush();
  return cells.size();
}

}  // namespace grecip
