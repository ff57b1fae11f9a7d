#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "hyperalloc/allocation.hpp"

namespace hyperalloc {

using VertexSet = std::vector<Vertex>;

namespace detail {

// Sets of size <= 2. Singletons can always be taken: swapping a singleton
// {a} into an optimal packing for the pair covering a never loses. What is
// left is a maximum matching on the pairs avoiding every singleton element.
inline std::size_t max_disjoint_small_sets(std::span<const VertexSet> sets) {
  std::vector<Vertex> singles;
  for (const auto& s : sets) {
    if (s.size() == 1) singles.push_back(s[0]);
  }
  std::sort(singles.begin(), singles.end());
  singles.erase(std::unique(singles.begin(), singles.end()), singles.end());
  auto is_single = [&](Vertex v) { return std::binary_search(singles.begin(), singles.end(), v); };

  std::unordered_map<Vertex, std::size_t> local;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  auto id = [&](Vertex v) { return local.try_emplace(v, local.size()).first->second; };
  for (const auto& s : sets) {
    if (s.size() != 2 || is_single(s[0]) || is_single(s[1])) continue;
    const std::size_t a = id(s[0]);
    const std::size_t b = id(s[1]);
    pairs.emplace_back(a, b);
  }
  if (pairs.empty()) return singles.size();

  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph graph(local.size());
  for (const auto& [a, b] : pairs) boost::add_edge(a, b, graph);
  std::vector<boost::graph_traits<Graph>::vertex_descriptor> mate(local.size());
  boost::edmonds_maximum_cardinality_matching(graph, &mate[0]);
  return singles.size() + boost::matching_size(graph, &mate[0]);
}

// Sorted, deduplicated copies of the sets with every strict superset of
// another set removed. Exchanging a superset for its subset inside a packing
// keeps it a packing of the same size, so the optimum is unchanged.
inline std::vector<VertexSet> drop_supersets(std::span<const VertexSet> sets) {
  std::vector<VertexSet> sorted(sets.begin(), sets.end());
  for (auto& s : sorted) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  std::sort(sorted.begin(), sorted.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<VertexSet> kept;
  for (const auto& s : sorted) {
    const bool dominated = std::any_of(kept.begin(), kept.end(), [&](const VertexSet& k) {
      return std::includes(s.begin(), s.end(), k.begin(), k.end());
    });
    if (!dominated) kept.push_back(s);
  }
  return kept;
}

// Groups sets into classes connected by shared elements; packings of
// different classes never interact.
inline std::vector<std::vector<VertexSet>> independent_components(std::vector<VertexSet> sets) {
  std::unordered_map<Vertex, std::size_t> owner;
  std::vector<std::size_t> parent(sets.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (Vertex v : sets[i]) {
      auto [it, inserted] = owner.try_emplace(v, i);
      if (!inserted) parent[find(i)] = find(it->second);
    }
  }
  std::unordered_map<std::size_t, std::size_t> slot;
  std::vector<std::vector<VertexSet>> components;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    auto [it, inserted] = slot.try_emplace(find(i), components.size());
    if (inserted) components.emplace_back();
    components[it->second].push_back(std::move(sets[i]));
  }
  return components;
}

// Exact search by rising targets: starting from a greedy packing, asks
// whether t disjoint sets fit for t = best + 1, best + 2, ... until one does
// not. Each decision branches on the least-covered free element (take one of
// its sets, or leave it unused), prunes when too few free elements remain for
// t sets, and remembers per free-element set the largest target known to fail.
class DisjointSetSearch {
 public:
  explicit DisjointSetSearch(std::span<const VertexSet> sets) : sets_(sets.begin(), sets.end()) {
    std::unordered_map<Vertex, std::size_t> local;
    for (const auto& s : sets) {
      for (Vertex v : s) local.try_emplace(v, local.size());
    }
    n_elements_ = local.size();
    words_ = std::max<std::size_t>(1, (n_elements_ + 63) / 64);
    masks_.assign(sets.size() * words_, 0);
    sizes_.assign(sets.size(), 0);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (Vertex v : sets[i]) {
        const std::size_t bit = local.at(v);
        masks_[i * words_ + bit / 64] |= std::uint64_t{1} << (bit % 64);
      }
      for (std::size_t w = 0; w < words_; ++w) sizes_[i] += std::popcount(masks_[i * words_ + w]);
    }
    n_sets_ = sets.size();
  }

  std::size_t solve();

 private:
  using Mask = std::vector<std::uint64_t>;

  struct MaskHash {
    std::size_t operator()(const Mask& m) const {
      std::uint64_t h = 0x9e3779b97f4a7c15ULL;
      for (std::uint64_t w : m) h = (h ^ w) * 0xbf58476d1ce4e5b9ULL;
      return static_cast<std::size_t>(h ^ (h >> 31));
    }
  };

  const std::uint64_t* set_mask(std::size_t i) const { return &masks_[i * words_]; }

  bool inside(std::size_t i, const Mask& free) const {
    const std::uint64_t* m = set_mask(i);
    for (std::size_t w = 0; w < words_; ++w) {
      if (m[w] & ~free[w]) return false;
    }
    return true;
  }

  bool fits(const Mask& given, std::size_t target) {
    if (target == 0) return true;
    std::vector<std::size_t> inner;
    Mask free(words_, 0);
    std::size_t smallest = SIZE_MAX;
    for (std::size_t i = 0; i < n_sets_; ++i) {
      if (!inside(i, given)) continue;
      inner.push_back(i);
      smallest = std::min(smallest, sizes_[i]);
      for (std::size_t w = 0; w < words_; ++w) free[w] |= set_mask(i)[w];
    }
    if (inner.empty()) return false;
    std::size_t n_free = 0;
    for (std::uint64_t w : free) n_free += std::popcount(w);
    if (n_free / smallest < target) return false;
    if (auto it = failed_.find(free); it != failed_.end() && it->second <= target) return false;

    std::vector<std::size_t> occurrence(n_elements_, 0);
    for (std::size_t i : inner) {
      for (std::size_t w = 0; w < words_; ++w) {
        for (std::uint64_t m = set_mask(i)[w]; m; m &= m - 1) ++occurrence[w * 64 + std::countr_zero(m)];
      }
    }
    std::size_t pivot = SIZE_MAX;
    for (std::size_t bit = 0; bit < n_elements_; ++bit) {
      if (occurrence[bit] && (pivot == SIZE_MAX || occurrence[bit] < occurrence[pivot])) pivot = bit;
    }
    const std::size_t pivot_word = pivot / 64;
    const std::uint64_t pivot_flag = std::uint64_t{1} << (pivot % 64);

    Mask next(words_);
    for (std::size_t i : inner) {
      if (!(set_mask(i)[pivot_word] & pivot_flag)) continue;
      for (std::size_t w = 0; w < words_; ++w) next[w] = free[w] & ~set_mask(i)[w];
      if (fits(next, target - 1)) return true;
    }
    next = free;
    next[pivot_word] &= ~pivot_flag;
    if (fits(next, target)) return true;
    auto [it, inserted] = failed_.try_emplace(std::move(free), target);
    if (!inserted) it->second = std::min(it->second, target);
    return false;
  }

  std::vector<VertexSet> sets_;
  std::size_t n_elements_ = 0;
  std::size_t n_sets_ = 0;
  std::size_t words_ = 1;
  std::vector<std::uint64_t> masks_;
  std::vector<std::size_t> sizes_;
  std::unordered_map<Mask, std::size_t, MaskHash> failed_;  // smallest target known not to fit
};

}  // namespace detail

/// Size of a largest subfamily of pairwise-disjoint sets (maximum set
/// packing). Exact; uses maximum matching when every set has at most two
/// elements and an exact bounded search otherwise. Sets must be non-empty.
inline std::size_t max_disjoint_sets(std::span<const VertexSet> sets) {
  std::size_t largest = 0;
  for (const auto& s : sets) {
    if (s.empty()) throw std::invalid_argument("max_disjoint_sets: empty set");
    largest = std::max(largest, s.size());
  }
  if (sets.empty()) return 0;
  if (largest <= 2) return detail::max_disjoint_small_sets(sets);
  std::size_t total = 0;
  for (const auto& component : detail::independent_components(detail::drop_supersets(sets))) {
    total += detail::DisjointSetSearch(component).solve();
  }
  return total;
}

/// Size of a greedy packing (smallest sets first); a lower bound on
/// max_disjoint_sets.
inline std::size_t greedy_disjoint_sets(std::span<const VertexSet> sets) {
  std::vector<const VertexSet*> order;
  for (const auto& s : sets) order.push_back(&s);
  std::stable_sort(order.begin(), order.end(),
                   [](const VertexSet* a, const VertexSet* b) { return a->size() < b->size(); });
  std::unordered_set<Vertex> used;
  std::size_t count = 0;
  for (const VertexSet* s : order) {
    if (std::any_of(s->begin(), s->end(), [&](Vertex v) { return used.count(v); })) continue;
    used.insert(s->begin(), s->end());
    ++count;
  }
  return count;
}

inline std::size_t detail::DisjointSetSearch::solve() {
  std::size_t best = greedy_disjoint_sets(sets_);
  Mask all(words_, 0);
  for (std::size_t bit = 0; bit < n_elements_; ++bit) all[bit / 64] |= std::uint64_t{1} << (bit % 64);
  while (fits(all, best + 1)) ++best;
  return best;
}

/// Exact search regardless of set sizes, without reductions.
inline std::size_t max_disjoint_sets_search(std::span<const VertexSet> sets) {
  if (sets.empty()) return 0;
  for (const auto& s : sets) {
    if (s.empty()) throw std::invalid_argument("max_disjoint_sets: empty set");
  }
  return detail::DisjointSetSearch(sets).solve();
}

}  // namespace hyperalloc
