#include "grecip/golomb_graph.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "parallel.hpp"

namespace grecip {

std::vector<Interval> consecutive_subsets(int m) {
  std::vector<Interval> out;
  for (int len = 1; len < m; ++len)
    for (int a = 1; a + len - 1 <= m; ++a) out.push_back({a, a + len - 1});
  return out;
}

std::string subset_label(const Interval& s) {
  if (s.first < 1 || s.last > 9 || s.first > s.last)
    throw std::invalid_argument("subset labels need 1 <= first <= last <= 9");
  std::string label;
  for (int j = s.first; j <= s.last; ++j) label += static_cast<char>('0' + j);
  return label;
}

Interval parse_subset_label(std::string_view label) {
  if (label.empty()) throw ParseError("empty subset label");
  for (std::size_t i = 0; i < label.size(); ++i) {
    char c = label[i];
    if (c < '1' || c > '9' || (i > 0 && c != label[i - 1] + 1))
      throw ParseError("not a consecutive subset label: '" + std::string(label) + "'");
  }
  return {label.front() - '0', label.back() - '0'};
}

MixedGraph build_golomb_graph(int m) {
  auto subsets = consecutive_subsets(m);
  const int n = static_cast<int>(subsets.size());
  std::vector<MixedGraph::Pair> edges, arcs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto& a = subsets[static_cast<std::size_t>(i)];
      const auto& b = subsets[static_cast<std::size_t>(j)];
      if (b.strictly_contains(a))
        arcs.emplace_back(i + 1, j + 1);
      else if (a.strictly_contains(b))
        arcs.emplace_back(j + 1, i + 1);
      else
        edges.emplace_back(i + 1, j + 1);
    }
  return MixedGraph(n, std::move(edges), std::move(arcs));
}

GolombOrientation::GolombOrientation(int m, std::vector<int> order)
    : m_(m), order_(std::move(order)) {
  const std::size_t n = consecutive_subsets(m).size();
  if (order_.size() != n)
    throw std::invalid_argument("orientation must rank all " + std::to_string(n) +
                                " consecutive subsets");
  rank_.assign(n, -1);
  for (std::size_t pos = 0; pos < n; ++pos) {
    int k = order_[pos];
    if (k < 0 || static_cast<std::size_t>(k) >= n || rank_[static_cast<std::size_t>(k)] != -1)
      throw std::invalid_argument("orientation order is not a permutation");
    rank_[static_cast<std::size_t>(k)] = static_cast<int>(pos);
  }
}

std::vector<Interval> GolombOrientation::subsets() const {
  auto all = consecutive_subsets(m_);
  std::vector<Interval> out;
  for (int k : order_) out.push_back(all[static_cast<std::size_t>(k)]);
  return out;
}

std::vector<std::string> GolombOrientation::labels() const {
  std::vector<std::string> out;
  for (const auto& s : subsets()) out.push_back(subset_label(s));
  return out;
}

std::string GolombOrientation::to_string() const {
  std::string s;
  for (const auto& label : labels()) {
    if (!s.empty()) s += " < ";
    s += label;
  }
  return s;
}

namespace {

constexpr int kNoLink = -1;

// Index structures shared by the searches for one m.
struct GraphTables {
  int m = 0;
  int n = 0;
  std::vector<Interval> subsets;
  std::vector<std::uint32_t> strict_subsets;  // bitmask of indices inside k
  // link[a*n+b] = u*n+v when "a before b" is equivalent to "u before v":
  // overlapping a, b map to (a\b, b\a) and back.
  std::vector<int> link;

  explicit GraphTables(int m_) : m(m_), subsets(consecutive_subsets(m_)) {
    n = static_cast<int>(subsets.size());
    if (n > 32) throw std::invalid_argument("m too large for the orientation search");
    strict_subsets.assign(static_cast<std::size_t>(n), 0);
    std::map<Interval, int> index;
    for (int k = 0; k < n; ++k) index[subsets[static_cast<std::size_t>(k)]] = k;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (at(a).strictly_contains(at(b))) strict_subsets[static_cast<std::size_t>(a)] |= 1u << b;

    link.assign(static_cast<std::size_t>(n * n), kNoLink);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const auto& A = at(a);
        const auto& B = at(b);
        if (a == b || A.strictly_contains(B) || B.strictly_contains(A)) continue;
        if (A.last < B.first || B.last < A.first) continue;  // disjoint
        // Overlapping, neither contains the other: W = A∩B is forced.
        Interval U = A.first < B.first ? Interval{A.first, B.first - 1}
                                       : Interval{B.last + 1, A.last};
        Interval V = A.first < B.first ? Interval{A.last + 1, B.last}
                                       : Interval{B.first, A.first - 1};
        int u = index.at(U), v = index.at(V);
        link[static_cast<std::size_t>(a * n + b)] = u * n + v;
        link[static_cast<std::size_t>(u * n + v)] = a * n + b;
      }
  }

  const Interval& at(int k) const { return subsets[static_cast<std::size_t>(k)]; }
};

// Vertex rays with their interval sums, row-major: sums[v * n + k].
struct VertexTable {
  std::size_t count = 0;
  std::vector<std::int64_t> sums;
  std::vector<std::vector<std::int64_t>> rays;
};

const VertexTable& vertex_table(int m) {
  static std::mutex mu;
  static std::map<int, VertexTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  VertexTable t;
  t.rays = iop_vertex_rays(m);
  t.count = t.rays.size();
  auto subsets = consecutive_subsets(m);
  for (const auto& w : t.rays)
    for (const auto& s : subsets) {
      std::int64_t sum = 0;
      for (int j = s.first; j <= s.last; ++j) sum += w[static_cast<std::size_t>(j - 1)];
      t.sums.push_back(sum);
    }
  return cache.emplace(m, std::move(t)).first->second;
}

// Builds orders smallest-first. A prefix is kept only if some point of the
// open simplex puts the prefix, in order, below every remaining subset;
// every such prefix extends to at least one region, so the realizable
// search never dead-ends.
class OrientationSearch {
 public:
  OrientationSearch(const GraphTables& g, const VertexTable* vertices, NodeCounter& counter)
      : g_(g), vt_(vertices), meter_(counter) {
    rank_.assign(static_cast<std::size_t>(g_.n), kUnplaced);
    if (vt_) {
      std::vector<int> all(vt_->count);
      std::iota(all.begin(), all.end(), 0);
      live_.push_back(std::move(all));
    }
  }

  std::vector<int> root_candidates() {
    std::vector<int> out;
    for (int x = 0; x < g_.n; ++x)
      if (g_.strict_subsets[static_cast<std::size_t>(x)] == 0) out.push_back(x);
    return out;
  }

  void run(int first, std::vector<GolombOrientation>& out) {
    out_ = &out;
    if (g_.n == 0) {
      out.emplace_back(g_.m, std::vector<int>{});
      return;
    }
    if (try_place(first)) {
      descend();
      unplace();
    }
    meter_.flush();
  }

 private:
  static constexpr int kUnplaced = 1 << 30;

  void descend() {
    if (static_cast<int>(order_.size()) == g_.n) {
      out_->emplace_back(g_.m, order_);
      return;
    }
    for (int x = 0; x < g_.n; ++x) {
      if (rank_[static_cast<std::size_t>(x)] != kUnplaced) continue;
      if ((g_.strict_subsets[static_cast<std::size_t>(x)] & ~placed_) != 0) continue;
      if (try_place(x)) {
        descend();
        unplace();
      }
    }
  }

  bool before(int a, int b) const {
    return rank_[static_cast<std::size_t>(a)] < rank_[static_cast<std::size_t>(b)];
  }
  bool known(int a, int b) const {
    return rank_[static_cast<std::size_t>(a)] != kUnplaced ||
           rank_[static_cast<std::size_t>(b)] != kUnplaced;
  }

  bool try_place(int x) {
    meter_.tick();
    rank_[static_cast<std::size_t>(x)] = static_cast<int>(order_.size());
    placed_ |= 1u << x;
    bool ok = shift_consistent(x) && (!vt_ || realizable(x));
    if (!ok) {
      rank_[static_cast<std::size_t>(x)] = kUnplaced;
      placed_ &= ~(1u << x);
      return false;
    }
    order_.push_back(x);
    return true;
  }

  void unplace() {
    int x = order_.back();
    order_.pop_back();
    rank_[static_cast<std::size_t>(x)] = kUnplaced;
    placed_ &= ~(1u << x);
    if (vt_) live_.pop_back();
  }

  // Every pair (x, r) is decided now; its linked pair must agree if decided.
  bool shift_consistent(int x) const {
    const int n = g_.n;
    for (int r = 0; r < n; ++r) {
      if (rank_[static_cast<std::size_t>(r)] != kUnplaced) continue;
      int l = g_.link[static_cast<std::size_t>(x * n + r)];
      if (l == kNoLink) continue;
      int u = l / n, v = l % n;
      if (known(u, v) && !before(u, v)) return false;
    }
    return true;
  }

  // Narrow the live vertex set to the closure of {s_x <= s_r for every
  // unplaced r}, failing if some constraint cuts the cone to a lower
  // dimension (no live vertex strictly below it).
  bool realizable(int x) {
    const int n = g_.n;
    const auto& sums = vt_->sums;
    std::vector<int> cur = live_.back();
    std::vector<int> next;
    for (int r = 0; r < n; ++r) {
      if (rank_[static_cast<std::size_t>(r)] != kUnplaced) continue;
      if (g_.at(r).strictly_contains(g_.at(x))) continue;
      bool strict = false;
      next.clear();
      for (int v : cur) {
        auto sx = sums[static_cast<std::size_t>(v * n + x)];
        auto sr = sums[static_cast<std::size_t>(v * n + r)];
        if (sx <= sr) {
          next.push_back(v);
          strict = strict || sx < sr;
        }
      }
      if (!strict) return false;
      cur.swap(next);
    }
    live_.push_back(std::move(cur));
    return true;
  }

  const GraphTables& g_;
  const VertexTable* vt_;
  NodeMeter meter_;
  std::vector<int> rank_;
  std::vector<int> order_;
  std::uint32_t placed_ = 0;
  std::vector<std::vector<int>> live_;
  std::vector<GolombOrientation>* out_ = nullptr;
};

}  // namespace

std::vector<GolombOrientation> enumerate_constrained_orientations(
    int m, const OrientationSearchOptions& opts) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (m > opts.max_m)
    throw std::invalid_argument("orientation enumeration is limited to m <= " +
                                std::to_string(opts.max_m));
  GraphTables tables(m);
  const VertexTable* vertices =
      opts.check == RegionCheck::kRealizable && m >= 2 ? &vertex_table(m) : nullptr;
  NodeCounter counter(opts.node_budget);

  if (tables.n == 0) return {GolombOrientation(m, {})};
  std::vector<int> roots;
  {
    OrientationSearch probe(tables, vertices, counter);
    roots = probe.root_candidates();
  }
  std::vector<std::vector<GolombOrientation>> parts(roots.size());
  detail::parallel_for(roots.size(), opts.threads, [&](std::size_t i) {
    OrientationSearch search(tables, vertices, counter);
    search.run(roots[i], parts[i]);
  });
  std::vector<GolombOrientation> out;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  return out;
}

bool satisfies_shift_condition(const GolombOrientation& o) {
  GraphTables g(o.m());
  const int n = g.n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      if (g.at(b).strictly_contains(g.at(a)) && !o.before(a, b)) return false;
      int l = g.link[static_cast<std::size_t>(a * n + b)];
      if (l != kNoLink && o.before(a, b) != o.before(l / n, l % n)) return false;
    }
  return true;
}

std::uint64_t multiplicity(const Ruler& z, std::span<const GolombOrientation> orientations) {
  const auto subsets = consecutive_subsets(z.m());
  std::vector<std::int64_t> sums;
  for (const auto& s : subsets) sums.push_back(z.interval_sum(s));
  std::uint64_t count = 0;
  for (const auto& o : orientations) {
    if (o.m() != z.m()) throw std::invalid_argument("orientation and ruler sizes differ");
    const auto& order = o.order();
    bool ok = true;
    for (std::size_t i = 0; ok && i + 1 < order.size(); ++i)
      ok = sums[static_cast<std::size_t>(order[i])] <= sums[static_cast<std::size_t>(order[i + 1])];
    if (ok) ++count;
  }
  return count;
}

std::uint64_t multiplicity(const Ruler& z, const OrientationSearchOptions& opts) {
  auto orientations = enumerate_constrained_orientations(z.m(), opts);
  return multiplicity(z, orientations);
}

RegionSignVector region_sign_vector(const GolombOrientation& o) {
  const int m = o.m();
  RegionSignVector out;
  out.hyperplanes = golomb_hyperplanes(m);
  if (m < 2) {
    if (m == 1) out.witness = {Rational(1)};
    return out;
  }
  const auto& vt = vertex_table(m);
  const int n = static_cast<int>(o.order().size());
  const auto& order = o.order();

  // Average of every arrangement vertex in the closed region. If the region
  // is full-dimensional this puts positive weight on each of its vertices,
  // so the average is an interior point.
  RationalPoint centroid(static_cast<std::size_t>(m), Rational(0));
  std::size_t hits = 0;
  for (std::size_t v = 0; v < vt.count; ++v) {
    bool in = true;
    for (int i = 0; in && i + 1 < n; ++i)
      in = vt.sums[v * static_cast<std::size_t>(n) + static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] <=
           vt.sums[v * static_cast<std::size_t>(n) + static_cast<std::size_t>(order[static_cast<std::size_t>(i + 1)])];
    if (!in) continue;
    ++hits;
    const auto& w = vt.rays[v];
    std::int64_t total = std::accumulate(w.begin(), w.end(), std::int64_t{0});
    for (int j = 0; j < m; ++j)
      centroid[static_cast<std::size_t>(j)] +=
          make_rational(static_cast<long>(w[static_cast<std::size_t>(j)]), static_cast<long>(total));
  }
  if (hits == 0)
    throw InfeasibleRegion("closed region of " + o.to_string() + " is empty");
  for (auto& c : centroid) c /= static_cast<unsigned long>(hits);

  auto subsets = o.subsets();
  auto sum = [&](const Interval& s) {
    Rational acc = 0;
    for (int j = s.first; j <= s.last; ++j) acc += centroid[static_cast<std::size_t>(j - 1)];
    return acc;
  };
  for (std::size_t i = 0; i + 1 < subsets.size(); ++i)
    if (!(sum(subsets[i]) < sum(subsets[i + 1])))
      throw InfeasibleRegion("no point of the open simplex realizes " + o.to_string());
  for (const auto& c : centroid)
    if (c <= 0) throw InfeasibleRegion("region of " + o.to_string() + " misses the open simplex");

  for (const auto& h : out.hyperplanes) out.signs.push_back(sgn(h.evaluate(centroid)));
  out.witness = std::move(centroid);
  return out;
}

GolombOrientation reverse_orientation(const GolombOrientation& o) {
  const int m = o.m();
  auto subsets = consecutive_subsets(m);
  std::map<Interval, int> index;
  for (std::size_t k = 0; k < subsets.size(); ++k) index[subsets[k]] = static_cast<int>(k);
  std::vector<int> order;
  for (const auto& s : o.subsets()) order.push_back(index.at({m + 1 - s.last, m + 1 - s.first}));
  return GolombOrientation(m, std::move(order));
}

}  // namespace grecip
