#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <unordered_map>
#include <vector>

#include "affcox/finite_weyl.hpp"

namespace affcox::detail {

inline std::size_t hash_bytes(const void* data, std::size_t n, std::size_t seed = 1469598103934665603ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::size_t h = seed;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

/// Breadth-first closure of `start` under x -> conj(i, x) for generators
/// i in [first, last], keeping only steps with length(conj) <= length(x).
/// on_edge(from, i, to) is called for every accepted step (including ones
/// that land on an already visited element).
template <class Element, class Hash, class Conj, class Length, class OnEdge>
ClosureResult<Element> descent_bfs(const Element& start, int first, int last, Conj conj, Length length,
                                   std::size_t node_budget, OnEdge on_edge) {
  ClosureResult<Element> out;
  std::unordered_map<Element, int, Hash> seen;
  std::vector<Element> order;
  order.push_back(start);
  seen.emplace(start, length(start));
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Element x = order[head];
    const int lx = seen.at(x);
    for (int i = first; i <= last; ++i) {
      Element y = conj(i, x);
      auto it = seen.find(y);
      int ly = 0;
      if (it != seen.end()) {
        ly = it->second;
      } else {
        ly = length(y);
      }
      if (ly > lx) continue;
      on_edge(x, i, y);
      if (it != seen.end()) continue;
      if (order.size() >= node_budget) {
        out.complete = false;
        break;
      }
      seen.emplace(y, ly);
      order.push_back(std::move(y));
    }
    if (!out.complete) break;
  }
  int minimum = std::numeric_limits<int>::max();
  for (const auto& [e, l] : seen) minimum = std::min(minimum, l);
  out.minimal_length = minimum;
  for (const auto& [e, l] : seen) {
    out.reachable.push_back(e);
    if (l == minimum) out.minimal.push_back(e);
  }
  std::sort(out.reachable.begin(), out.reachable.end());
  std::sort(out.minimal.begin(), out.minimal.end());
  return out;
}

}  // namespace affcox::detail
