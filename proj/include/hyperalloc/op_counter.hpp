#pragma once

#include <cstdint>

namespace hyperalloc {

/// Logical operation tally used for machine-independent scaling checks:
/// threshold comparisons plus edge operations (insert, break, inspect).
struct OpCounter {
  std::uint64_t comparisons = 0;
  std::uint64_t edge_ops = 0;

  std::uint64_t total() const { return comparisons + edge_ops; }
};

inline void count_comparison(OpCounter* counter, std::uint64_t n = 1) {
  if (counter) counter->comparisons += n;
}

inline void count_edge_op(OpCounter* counter, std::uint64_t n = 1) {
  if (counter) counter->edge_ops += n;
}

}  // namespace hyperalloc
