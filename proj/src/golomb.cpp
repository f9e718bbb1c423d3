#include "grecip/golomb.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "parallel.hpp"

namespace grecip {

std::vector<DpcsPair> dpcs_pairs(int m) {
  std::vector<DpcsPair> out;
  for (int a = 1; a <= m; ++a)
    for (int b = a; b <= m; ++b)
      for (int c = b + 1; c <= m; ++c)
        for (int d = c; d <= m; ++d) out.push_back({{a, b}, {c, d}});
  return out;
}

Ruler::Ruler(std::vector<std::int64_t> gaps) : gaps_(std::move(gaps)) {
  if (gaps_.empty()) throw std::invalid_argument("a ruler needs m >= 1 gaps");
  for (auto z : gaps_)
    if (z < 0) throw std::invalid_argument("ruler gaps must be non-negative");
}

Ruler Ruler::from_markings(const std::vector<std::int64_t>& markings) {
  if (markings.size() < 2 || markings.front() != 0)
    throw std::invalid_argument("markings must start at 0 and have m+1 entries");
  std::vector<std::int64_t> gaps;
  for (std::size_t k = 1; k < markings.size(); ++k)
    gaps.push_back(markings[k] - markings[k - 1]);
  return Ruler(std::move(gaps));
}

std::int64_t Ruler::length() const {
  return std::accumulate(gaps_.begin(), gaps_.end(), std::int64_t{0});
}

std::vector<std::int64_t> Ruler::markings() const {
  std::vector<std::int64_t> x(gaps_.size() + 1, 0);
  std::partial_sum(gaps_.begin(), gaps_.end(), x.begin() + 1);
  return x;
}

std::int64_t Ruler::interval_sum(const Interval& s) const {
  std::int64_t sum = 0;
  for (int j = s.first; j <= s.last; ++j) sum += gap(j);
  return sum;
}

std::string Ruler::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < gaps_.size(); ++i) out << (i ? "," : "") << gaps_[i];
  out << ')';
  return out.str();
}

bool is_golomb(const Ruler& r) {
  for (auto z : r.gaps())
    if (z <= 0) return false;
  for (const auto& p : dpcs_pairs(r.m()))
    if (r.interval_sum(p.u) == r.interval_sum(p.v)) return false;
  return true;
}

bool has_distinct_differences(const Ruler& r) {
  auto x = r.markings();
  std::set<std::int64_t> seen;
  for (std::size_t j = 1; j < x.size(); ++j)
    for (std::size_t k = 0; k < j; ++k) {
      auto d = x[j] - x[k];
      if (d <= 0 || !seen.insert(d).second) return false;
    }
  return true;
}

Ruler complement(const Ruler& r) {
  auto gaps = r.gaps();
  std::reverse(gaps.begin(), gaps.end());
  return Ruler(std::move(gaps));
}

namespace {

// Depth-first placement of the interior marks x_1 < ... < x_{m-1} of a ruler
// with x_0 = 0 and x_m = t fixed, keeping a bitset of measured differences.
class RulerSearch {
 public:
  RulerSearch(int m, std::int64_t t, NodeCounter& counter)
      : m_(m), t_(t), used_(static_cast<std::size_t>(t / 64 + 1), 0), meter_(counter) {
    marks_.reserve(static_cast<std::size_t>(m) + 1);
    marks_.push_back(0);
    set(t_);
  }

  // Visits every completion whose first interior mark is x1 (or the single
  // ruler (t) when m == 1).
  template <class Visit>
  void run(std::int64_t x1, Visit&& visit) {
    if (m_ == 1) {
      visit(marks_);
      return;
    }
    if (try_place(x1)) {
      descend(2, visit);
      unplace();
    }
    meter_.flush();
  }

  std::int64_t max_first_mark() const { return t_ - (m_ - 1); }

 private:
  template <class Visit>
  void descend(int k, Visit& visit) {
    if (k == m_) {
      marks_.push_back(t_);
      visit(marks_);
      marks_.pop_back();
      return;
    }
    const std::int64_t hi = t_ - (m_ - k);
    for (std::int64_t x = marks_.back() + 1; x <= hi; ++x) {
      if (try_place(x)) {
        descend(k + 1, visit);
        unplace();
      }
    }
  }

  bool try_place(std::int64_t x) {
    meter_.tick();
    std::size_t added = 0;
    bool ok = true;
    auto add = [&](std::int64_t d) {
      if (test(d)) return false;
      set(d);
      pending_[added++] = d;
      return true;
    };
    pending_.resize(marks_.size() + 1);
    if (!add(t_ - x)) ok = false;
    for (std::size_t i = 0; ok && i < marks_.size(); ++i)
      if (!add(x - marks_[i])) ok = false;
    if (!ok) {
      for (std::size_t i = 0; i < added; ++i) clear(pending_[i]);
      return false;
    }
    marks_.push_back(x);
    undo_.push_back(added);
    undo_values_.insert(undo_values_.end(), pending_.begin(),
                        pending_.begin() + static_cast<std::ptrdiff_t>(added));
    return true;
  }

  void unplace() {
    std::size_t added = undo_.back();
    undo_.pop_back();
    for (std::size_t i = 0; i < added; ++i) {
      clear(undo_values_.back());
      undo_values_.pop_back();
    }
    marks_.pop_back();
  }

  bool test(std::int64_t d) const {
    return (used_[static_cast<std::size_t>(d >> 6)] >> (d & 63)) & 1u;
  }
  void set(std::int64_t d) { used_[static_cast<std::size_t>(d >> 6)] |= 1ULL << (d & 63); }
  void clear(std::int64_t d) {
    used_[static_cast<std::size_t>(d >> 6)] &= ~(1ULL << (d & 63));
  }

  int m_;
  std::int64_t t_;
  std::vector<std::uint64_t> used_;
  std::vector<std::int64_t> marks_;
  std::vector<std::int64_t> pending_;
  std::vector<std::size_t> undo_;
  std::vector<std::int64_t> undo_values_;
  NodeMeter meter_;
};

void check_args(int m, std::int64_t t) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (t < 0) throw std::invalid_argument("t must be >= 0");
}

// Number of first-mark branches; branch i has x_1 = i + 1.
std::size_t branch_count(int m, std::int64_t t) {
  if (t < m) return 0;
  return m == 1 ? 1 : static_cast<std::size_t>(t - (m - 1));
}

}  // namespace

std::vector<Ruler> enumerate_golomb_rulers(int m, std::int64_t t,
                                           const SearchOptions& opts) {
  check_args(m, t);
  const std::size_t branches = branch_count(m, t);
  NodeCounter counter(opts.node_budget);
  std::vector<std::vector<Ruler>> parts(branches);
  detail::parallel_for(branches, opts.threads, [&](std::size_t i) {
    RulerSearch search(m, t, counter);
    search.run(static_cast<std::int64_t>(i) + 1, [&](const std::vector<std::int64_t>& x) {
      parts[i].push_back(Ruler::from_markings(m == 1 ? std::vector<std::int64_t>{0, t} : x));
    });
  });
  std::vector<Ruler> out;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  return out;
}

BigInt count_golomb_rulers(int m, std::int64_t t, const SearchOptions& opts) {
  NodeCounter counter(opts.node_budget);
  return count_golomb_rulers(m, t, counter, opts.threads);
}

BigInt count_golomb_rulers(int m, std::int64_t t, NodeCounter& counter, unsigned threads) {
  check_args(m, t);
  const std::size_t branches = branch_count(m, t);
  std::vector<std::uint64_t> parts(branches, 0);
  detail::parallel_for(branches, threads, [&](std::size_t i) {
    RulerSearch search(m, t, counter);
    search.run(static_cast<std::int64_t>(i) + 1,
               [&](const std::vector<std::int64_t>&) { ++parts[i]; });
  });
  BigInt total = 0;
  for (auto c : parts) total += static_cast<unsigned long>(c);
  return total;
}

std::int64_t optimal_length(int m, std::int64_t ceiling, const SearchOptions& opts) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  NodeCounter counter(opts.node_budget);
  // m gaps are positive and pairwise distinct, so t >= m(m+1)/2.
  for (std::int64_t t = std::int64_t{m} * (m + 1) / 2; t <= ceiling; ++t)
    if (count_golomb_rulers(m, t, counter, opts.threads) > 0) return t;
  throw Error("no Golomb ruler with " + std::to_string(m) +
              " gaps has length <= " + std::to_string(ceiling));
}

}  // namespace grecip
