#pragma once

#include <atomic>
#include <cstdint>

#include "grecip/errors.hpp"

namespace grecip {

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000ULL;

struct SearchOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  unsigned threads = 1;
};

// Shared between worker threads of one search. Nodes are charged in batches
// so the atomic is touched rarely.
class NodeCounter {
 public:
  explicit NodeCounter(std::uint64_t budget) : budget_(budget) {}

  void charge(std::uint64_t nodes) {
    if (used_.fetch_add(nodes, std::memory_order_relaxed) + nodes > budget_)
      throw BudgetExceeded(budget_);
  }
  void charge_nothrow(std::uint64_t nodes) noexcept {
    used_.fetch_add(nodes, std::memory_order_relaxed);
  }
  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
  std::atomic<std::uint64_t> used_{0};
};

// Per-thread front end to a NodeCounter.
class NodeMeter {
 public:
  static constexpr std::uint64_t kBatch = 4096;

  explicit NodeMeter(NodeCounter& counter) : counter_(counter) {}
  NodeMeter(const NodeMeter&) = delete;
  NodeMeter& operator=(const NodeMeter&) = delete;
  ~NodeMeter() {
    // Flush without throwing; the final tally only matters for reporting.
    if (pending_ > 0) counter_.charge_nothrow(pending_);
  }

  void tick() {
    if (++pending_ == kBatch) flush();
  }
  void flush() {
    std::uint64_t n = pending_;
    pending_ = 0;
    counter_.charge(n);
  }

 private:
  NodeCounter& counter_;
  std::uint64_t pending_ = 0;
};

}  // namespace grecip
