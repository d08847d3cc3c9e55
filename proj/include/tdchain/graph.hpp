#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "tdchain/error.hpp"

namespace tdchain {

/**
 * Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
 * Parallel edges collapse and self-loops are rejected.
 */
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(std::size_t n) : adj_(n) {}

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_; }

  void add_edge(std::size_t u, std::size_t v) {
    if (u == v) throw MalformedInput("self-loop on vertex " + std::to_string(u));
    if (u >= adj_.size() || v >= adj_.size())
      throw MalformedInput("edge endpoint out of range");
    if (insert_sorted(adj_[u], v)) {
      insert_sorted(adj_[v], u);
      ++edges_;
    }
  }

  bool has_edge(std::size_t u, std::size_t v) const {
    if (u >= adj_.size()) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const { return adj_[v].size(); }

  /// Edges as (u, v) with u < v, lexicographically ordered.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(edges_);
    for (std::size_t u = 0; u < adj_.size(); ++u)
      for (std::size_t v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

 private:
  static bool insert_sorted(std::vector<std::size_t>& list, std::size_t x) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it != list.end() && *it == x) return false;
    list.insert(it, x);
    return true;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::size_t edges_ = 0;
};

}  // namespace tdchain
