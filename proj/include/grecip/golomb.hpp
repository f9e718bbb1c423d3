#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grecip/budget.hpp"
#include "grecip/rational.hpp"

namespace grecip {

// A closed integer interval {first, ..., last} of [m], 1-based.
struct Interval {
  int first = 1;
  int last = 1;

  int size() const { return last - first + 1; }
  bool contains(int j) const { return first <= j && j <= last; }
  bool strictly_contains(const Interval& o) const {
    return first <= o.first && o.last <= last && *this != o;
  }
  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

// Two disjoint proper consecutive subsets U = [a,b], V = [c,d] with
// 1 <= a <= b < c <= d <= m.
struct DpcsPair {
  Interval u;
  Interval v;
  friend bool operator==(const DpcsPair&, const DpcsPair&) = default;
};

// All dpcs pairs of [m], ordered by (a, b, c, d).
std::vector<DpcsPair> dpcs_pairs(int m);

// A ruler in gap (measurement) form: z_1..z_m, length t = sum of gaps.
// Gaps may be zero for a general ruler; a Golomb ruler has positive gaps.
class Ruler {
 public:
  Ruler() = default;
  explicit Ruler(std::vector<std::int64_t> gaps);

  static Ruler from_markings(const std::vector<std::int64_t>& markings);

  int m() const { return static_cast<int>(gaps_.size()); }
  std::int64_t length() const;
  const std::vector<std::int64_t>& gaps() const { return gaps_; }
  std::int64_t gap(int j) const { return gaps_.at(j - 1); }  // 1-based

  // x_0 = 0, x_k = z_1 + ... + z_k.
  std::vector<std::int64_t> markings() const;
  std::int64_t interval_sum(const Interval& s) const;

  std::string to_string() const;  // "(1,3,2)"

  friend bool operator==(const Ruler&, const Ruler&) = default;
  friend auto operator<=>(const Ruler&, const Ruler&) = default;

 private:
  std::vector<std::int64_t> gaps_;
};

// Positive gaps and distinct interval sums over every dpcs pair.
bool is_golomb(const Ruler& r);
// Independent characterization on markings: all x_j - x_k (j > k) distinct
// and positive.
bool has_distinct_differences(const Ruler& r);

Ruler complement(const Ruler& r);

// Golomb rulers with m gaps and length t, lexicographic in the gaps.
std::vector<Ruler> enumerate_golomb_rulers(int m, std::int64_t t,
                                           const SearchOptions& opts = {});
// g_m(t) as a raw lattice-point count. Zero for t <= 0.
BigInt count_golomb_rulers(int m, std::int64_t t,
                           const SearchOptions& opts = {});
// Same, charging nodes to a counter shared by a sequence of searches.
BigInt count_golomb_rulers(int m, std::int64_t t, NodeCounter& counter,
                           unsigned threads = 1);

// Least t >= 1 with g_m(t) > 0. Throws grecip::Error when no ruler of length
// <= ceiling exists. The node budget covers the whole scan.
std::int64_t optimal_length(int m, std::int64_t ceiling = 10'000,
                            const SearchOptions& opts = {});

}  // namespace grecip
