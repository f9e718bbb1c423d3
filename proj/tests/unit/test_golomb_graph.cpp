#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "../oracles.hpp"
#include "grecip/golomb_graph.hpp"

using namespace grecip;

namespace {

const std::vector<GolombOrientation>& regions(int m) {
  static std::map<int, std::vector<GolombOrientation>> cache;
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, enumerate_constrained_orientations(m)).first;
  return it->second;
}

// Brute force over all permutations of the consecutive subsets: keep those
// extending inclusion and satisfying A before B <=> U before V for every
// A = U ∪ W, B = V ∪ W with U, V, W nonempty and pairwise disjoint.
std::size_t shift_orders_by_permutation(int m) {
  auto subsets = consecutive_subsets(m);
  const int n = static_cast<int>(subsets.size());
  auto members = [&](const Interval& s) {
    std::set<int> out;
    for (int j = s.first; j <= s.last; ++j) out.insert(j);
    return out;
  };
  struct Rule { int a, b, u, v; };
  std::vector<Rule> rules;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          auto A = members(subsets[static_cast<std::size_t>(a)]);
          auto B = members(subsets[static_cast<std::size_t>(b)]);
          auto U = members(subsets[static_cast<std::size_t>(u)]);
          auto V = members(subsets[static_cast<std::size_t>(v)]);
          std::set<int> W;
          std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::inserter(W, W.end()));
          if (W.empty()) continue;
          std::set<int> UW = U, VW = V;
          UW.insert(W.begin(), W.end());
          VW.insert(W.begin(), W.end());
          bool disjoint = std::none_of(U.begin(), U.end(), [&](int x) { return V.count(x) || W.count(x); }) &&
                          std::none_of(V.begin(), V.end(), [&](int x) { return W.count(x); });
          if (disjoint && UW == A && VW == B) rules.push_back({a, b, u, v});
        }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> pos(static_cast<std::size_t>(n));
  std::size_t count = 0;
  do {
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    bool ok = true;
    for (int a = 0; ok && a < n; ++a)
      for (int b = 0; ok && b < n; ++b)
        if (subsets[static_cast<std::size_t>(b)].strictly_contains(subsets[static_cast<std::size_t>(a)]))
          ok = pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)];
    for (const auto& r : rules)
      if (ok)
        ok = (pos[static_cast<std::size_t>(r.a)] < pos[static_cast<std::size_t>(r.b)]) ==
             (pos[static_cast<std::size_t>(r.u)] < pos[static_cast<std::size_t>(r.v)]);
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace

TEST(ConsecutiveSubsets, OrderAndLabels) {
  auto s = consecutive_subsets(3);
  ASSERT_EQ(s.size(), 5u);
  std::vector<std::string> labels;
  for (const auto& i : s) labels.push_back(subset_label(i));
  EXPECT_EQ(labels, (std::vector<std::string>{"1", "2", "3", "12", "23"}));
  EXPECT_TRUE(consecutive_subsets(1).empty());
  for (int m = 1; m <= 8; ++m) EXPECT_EQ(consecutive_subsets(m).size(), static_cast<std::size_t>(m * (m + 1) / 2 - 1));
  EXPECT_EQ(parse_subset_label("234"), (Interval{2, 4}));
  EXPECT_THROW(parse_subset_label("13"), ParseError);
  EXPECT_THROW(parse_subset_label(""), ParseError);
}

TEST(GolombGraph, M3) {
  auto g = build_golomb_graph(3);
  EXPECT_EQ(g.n(), 5);
  std::set<MixedGraph::Pair> arcs(g.arcs().begin(), g.arcs().end());
  // 1->12, 2->12, 2->23, 3->23 with vertices 1,2,3,12,23 numbered 1..5.
  EXPECT_EQ(arcs, (std::set<MixedGraph::Pair>{{1, 4}, {2, 4}, {2, 5}, {3, 5}}));
  EXPECT_EQ(g.edges().size(), 6u);
}

TEST(GolombGraph, M1AndM2) {
  EXPECT_EQ(build_golomb_graph(1).n(), 0);
  auto g = build_golomb_graph(2);
  EXPECT_EQ(g.n(), 2);
  EXPECT_TRUE(g.arcs().empty());
  EXPECT_EQ(g.edges(), (std::vector<MixedGraph::Pair>{{1, 2}}));
}

TEST(ConstrainedOrientations, Counts) {
  const std::size_t expected[] = {1, 2, 10, 114, 2608};
  for (int m = 1; m <= 5; ++m) EXPECT_EQ(regions(m).size(), expected[m - 1]) << "m=" << m;
}

TEST(ConstrainedOrientations, M2Explicit) {
  std::vector<std::string> got;
  for (const auto& o : regions(2)) got.push_back(o.to_string());
  EXPECT_EQ(got, (std::vector<std::string>{"1 < 2", "2 < 1"}));
}

TEST(ConstrainedOrientations, ShiftConditionAloneOvercountsFromM4) {
  OrientationSearchOptions opts;
  opts.check = RegionCheck::kShiftConditionOnly;
  for (int m = 1; m <= 4; ++m) {
    auto shift_only = enumerate_constrained_orientations(m, opts);
    EXPECT_EQ(shift_only.size(), shift_orders_by_permutation(m)) << "m=" << m;
    for (const auto& o : regions(m))
      EXPECT_NE(std::find(shift_only.begin(), shift_only.end(), o), shift_only.end());
  }
  EXPECT_EQ(enumerate_constrained_orientations(3, opts).size(), 10u);
  EXPECT_EQ(enumerate_constrained_orientations(4, opts).size(), 122u);

  // The eight extra orders at m = 4 have no realizing point.
  std::size_t infeasible = 0;
  for (const auto& o : enumerate_constrained_orientations(4, opts)) {
    try {
      region_sign_vector(o);
    } catch (const InfeasibleRegion&) {
      ++infeasible;
    }
  }
  EXPECT_EQ(infeasible, 8u);
}

TEST(ConstrainedOrientations, SortedAndShiftConsistent) {
  for (int m = 1; m <= 5; ++m) {
    const auto& os = regions(m);
    for (std::size_t i = 0; i + 1 < os.size(); ++i) EXPECT_LT(os[i].order(), os[i + 1].order());
    for (const auto& o : os) EXPECT_TRUE(satisfies_shift_condition(o));
  }
}

TEST(ConstrainedOrientations, ParallelMatchesSerial) {
  OrientationSearchOptions par;
  par.threads = 3;
  EXPECT_EQ(enumerate_constrained_orientations(5, par), regions(5));
}

TEST(ConstrainedOrientations, LimitsAndBudget) {
  EXPECT_THROW(enumerate_constrained_orientations(7), std::invalid_argument);
  OrientationSearchOptions tiny;
  tiny.node_budget = 100;
  EXPECT_THROW(enumerate_constrained_orientations(5, tiny), BudgetExceeded);
}

TEST(Multiplicity, Examples) {
  EXPECT_EQ(multiplicity(Ruler({1, 3, 2}), regions(3)), 1u);
  EXPECT_EQ(multiplicity(Ruler({2, 2}), regions(2)), 2u);
  EXPECT_EQ(multiplicity(Ruler({1, 1, 1}), regions(3)), 6u);
  EXPECT_EQ(multiplicity(Ruler({0, 0, 0}), regions(3)), 10u);
  EXPECT_EQ(multiplicity(Ruler({1, 3, 2})), 1u);
}

TEST(Multiplicity, CenterOfSimplexByPerturbation) {
  // Oracle: the closed region of o contains c iff c + eps (w - c) realizes o
  // strictly for a small eps, where w is an interior witness of o.
  const RationalPoint center(3, make_rational(1, 3));
  const Rational eps = make_rational(1, 1000);
  std::size_t count = 0;
  for (const auto& o : regions(3)) {
    auto w = region_sign_vector(o).witness;
    RationalPoint p;
    for (std::size_t j = 0; j < 3; ++j) p.push_back(center[j] + eps * (w[j] - center[j]));
    auto sums = [&](const Interval& s) {
      Rational acc = 0;
      for (int j = s.first; j <= s.last; ++j) acc += p[static_cast<std::size_t>(j - 1)];
      return acc;
    };
    auto subs = o.subsets();
    bool strict = true;
    for (std::size_t i = 0; i + 1 < subs.size(); ++i) strict = strict && sums(subs[i]) < sums(subs[i + 1]);
    count += strict;
  }
  EXPECT_EQ(count, 6u);
  EXPECT_EQ(multiplicity(Ruler({1, 1, 1}), regions(3)), count);
}

TEST(Multiplicity, OneExactlyForGolombRulers) {
  for (int m = 1; m <= 4; ++m)
    for (std::int64_t t = 1; t <= 20; ++t)
      for (auto& z : oracle::compositions(m, t)) {
        Ruler r(z);
        EXPECT_EQ(multiplicity(r, regions(m)) == 1, is_golomb(r)) << r.to_string();
      }
}

TEST(RegionSignVector, M2) {
  auto sv = region_sign_vector(regions(2)[0]);  // 1 < 2
  ASSERT_EQ(sv.hyperplanes.size(), 1u);
  EXPECT_EQ(sv.signs, (std::vector<int>{-1}));
}

TEST(RegionSignVector, M3RegionOfRuler132) {
  Ruler r({1, 3, 2});
  const GolombOrientation* hit = nullptr;
  for (const auto& o : regions(3))
    if (multiplicity(r, std::span(&o, 1)) == 1) hit = &o;
  ASSERT_NE(hit, nullptr);
  auto sv = region_sign_vector(*hit);
  for (std::size_t i = 0; i < sv.hyperplanes.size(); ++i) {
    auto v = sv.hyperplanes[i].evaluate(r.gaps());
    EXPECT_EQ(sv.signs[i], v > 0 ? 1 : -1) << sv.hyperplanes[i].to_string();
  }
}

TEST(RegionSignVector, DistinctAndRealizedUpToM4) {
  for (int m = 2; m <= 4; ++m) {
    std::set<std::vector<int>> seen;
    for (const auto& o : regions(m)) {
      auto sv = region_sign_vector(o);
      EXPECT_TRUE(seen.insert(sv.signs).second);
      EXPECT_TRUE(std::none_of(sv.signs.begin(), sv.signs.end(), [](int s) { return s == 0; }));
      Rational total = 0;
      for (const auto& c : sv.witness) {
        EXPECT_GT(c, 0);
        total += c;
      }
      EXPECT_EQ(total, 1);
    }
  }
}

TEST(RegionSignVector, RejectsUnrealizableOrder) {
  // z1 < z3 and z2 < z4 force z1 + z2 < z3 + z4, so 34 before 12 cannot be
  // realized even though no shift rule relates those two.
  auto subsets = consecutive_subsets(4);
  auto idx = [&](std::string_view label) {
    return static_cast<int>(std::find(subsets.begin(), subsets.end(), parse_subset_label(label)) - subsets.begin());
  };
  std::vector<int> order;
  for (auto l : {"1", "2", "3", "4", "34", "23", "12", "234", "123"}) order.push_back(idx(l));
  GolombOrientation bad(4, order);
  EXPECT_THROW(region_sign_vector(bad), InfeasibleRegion);
}

TEST(ReverseOrientation, InvolutionWithOrbitsOfSizeTwo) {
  for (int m = 1; m <= 5; ++m) {
    const auto& os = regions(m);
    for (const auto& o : os) {
      auto r = reverse_orientation(o);
      EXPECT_EQ(reverse_orientation(r), o);
      EXPECT_NE(std::find(os.begin(), os.end(), r), os.end());
      if (m >= 2) EXPECT_FALSE(r == o);
    }
  }
}
