#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tdchain/complex.hpp"
#include "tdchain/error.hpp"
#include "tdchain/graph.hpp"

namespace tdchain {

/**
 * An unrooted tree decomposition: one sorted vertex bag per node plus the
 * tree edges between nodes.
 */
struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t node_count() const { return bags.size(); }

  std::size_t max_bag_size() const {
    std::size_t s = 0;
    for (const auto& b : bags) s = std::max(s, b.size());
    return s;
  }

  /// Largest bag size minus one; -1 when every bag is empty.
  int width() const { return static_cast<int>(max_bag_size()) - 1; }

  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

struct ValidationReport {
  bool is_tree = true;
  bool vertex_coverage = true;
  bool edge_coverage = true;
  bool connectivity = true;
  /// Only meaningful for the complex-aware overload.
  bool width_at_least_dimension = true;
  int width = -1;
  std::string witness;

  bool ok() const {
    return is_tree && vertex_coverage && edge_coverage && connectivity &&
           width_at_least_dimension;
  }
};

namespace detail {

inline bool bag_contains(const std::vector<Vertex>& bag, Vertex v) {
  return std::binary_search(bag.begin(), bag.end(), v);
}

inline std::vector<std::vector<std::size_t>> tree_adjacency(const TreeDecomposition& td) {
  std::vector<std::vector<std::size_t>> adj(td.node_count());
  for (auto [a, b] : td.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

}  // namespace detail

/**
 * Checks the three tree-decomposition axioms (plus that the node graph is a
 * tree) and records the first violation found as a human-readable witness.
 */
inline ValidationReport validate_decomposition(const UndirectedGraph& g,
                                               const TreeDecomposition& td) {
  ValidationReport r;
  r.width = td.width();
  const std::size_t n = td.node_count();
  auto fail = [&](bool& flag, const std::string& why) {
    if (r.witness.empty()) r.witness = why;
    flag = false;
  };

  for (const auto& bag : td.bags) {
    if (!std::is_sorted(bag.begin(), bag.end()) ||
        std::adjacent_find(bag.begin(), bag.end()) != bag.end())
      fail(r.is_tree, "bag is not a sorted set");
    for (Vertex v : bag)
      if (v >= g.vertex_count()) fail(r.vertex_coverage, "bag names unknown vertex");
  }

  if (n == 0) {
    fail(r.is_tree, "decomposition has no nodes");
  } else if (td.edges.size() != n - 1) {
    fail(r.is_tree, "node graph has " + std::to_string(td.edges.size()) + " edges for " +
                        std::to_string(n) + " nodes");
  } else {
    for (auto [a, b] : td.edges)
      if (a >= n || b >= n || a == b) {
        fail(r.is_tree, "tree edge endpoint out of range");
        return r;
      }
    auto adj = detail::tree_adjacency(td);
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v : adj[u])
        if (!seen[v]) {
          seen[v] = true;
          ++reached;
          stack.push_back(v);
        }
    }
    if (reached != n) fail(r.is_tree, "node graph is disconnected");
  }
  if (!r.is_tree) return r;

  std::vector<std::vector<std::size_t>> holders(g.vertex_count());
  for (std::size_t t = 0; t < n; ++t)
    for (Vertex v : td.bags[t])
      if (v < g.vertex_count()) holders[v].push_back(t);

  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (holders[v].empty()) {
      fail(r.vertex_coverage, "vertex " + std::to_string(v) + " is in no bag");
      break;
    }

  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (std::size_t t : holders[u])
      if (detail::bag_contains(td.bags[t], v)) {
        covered = true;
        break;
      }
    if (!covered) {
      fail(r.edge_coverage,
           "edge {" + std::to_string(u) + "," + std::to_string(v) + "} is in no bag");
      break;
    }
  }

  // A vertex's holder set is connected iff it spans exactly |holders|-1 tree edges.
  std::vector<std::size_t> internal(g.vertex_count(), 0);
  for (auto [a, b] : td.edges) {
    const auto& A = td.bags[a];
    const auto& B = td.bags[b];
    std::vector<Vertex> common;
    std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(common));
    for (Vertex v : common)
      if (v < g.vertex_count()) ++internal[v];
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!holders[v].empty() && internal[v] + 1 != holders[v].size()) {
      fail(r.connectivity, "nodes holding vertex " + std::to_string(v) + " are disconnected");
      break;
    }
  return r;
}

/// Validates against the 1-skeleton of `k` and also checks width >= dim(k).
inline ValidationReport validate_decomposition(const SimplicialComplex& k,
                                               const TreeDecomposition& td) {
  ValidationReport r = validate_decomposition(skeleton_graph(k), td);
  if (r.ok() && td.width() < k.dimension()) {
    r.width_at_least_dimension = false;
    r.witness = "width " + std::to_string(td.width()) + " is below complex dimension " +
                std::to_string(k.dimension());
  }
  return r;
}

// ---------------------------------------------------------------------------
// Elimination orderings
// ---------------------------------------------------------------------------

/// Width of the decomposition produced by eliminating vertices in `order`.
inline int elimination_width(const UndirectedGraph& g, std::span<const Vertex> order) {
  std::vector<std::set<Vertex>> adj(g.vertex_count());
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  int width = g.vertex_count() ? 0 : -1;
  for (Vertex v : order) {
    std::vector<Vertex> nb(adj[v].begin(), adj[v].end());
    width = std::max(width, static_cast<int>(nb.size()));
    for (Vertex a : nb) {
      adj[a].erase(v);
      for (Vertex b : nb)
        if (a != b) adj[a].insert(b);
    }
    adj[v].clear();
  }
  return width;
}

/**
 * Tree decomposition from a perfect elimination of `g` along `order`: the bag
 * of v is v plus its neighbours at elimination time, attached to the bag of
 * the earliest-eliminated of those neighbours.
 */
inline TreeDecomposition decomposition_from_order(const UndirectedGraph& g,
                                                  std::span<const Vertex> order) {
  const std::size_t n = g.vertex_count();
  if (order.size() != n) throw InvalidDecomposition("elimination order must list every vertex");
  std::vector<std::size_t> pos(n, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || pos[order[i]] != SIZE_MAX)
      throw InvalidDecomposition("elimination order is not a permutation");
    pos[order[i]] = i;
  }
  TreeDecomposition td;
  if (n == 0) {
    td.bags.emplace_back();
    return td;
  }
  std::vector<std::set<Vertex>> adj(n);
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  td.bags.resize(n);
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = order[i];
    std::vector<Vertex> nb(adj[v].begin(), adj[v].end());
    std::vector<Vertex> bag = nb;
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    td.bags[i] = std::move(bag);
    if (nb.empty()) {
      roots.push_back(i);
    } else {
      Vertex next = *std::min_element(nb.begin(), nb.end(),
                                      [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
      td.edges.emplace_back(i, pos[next]);
    }
    for (Vertex a : nb) {
      adj[a].erase(v);
      for (Vertex b : nb)
        if (a != b) adj[a].insert(b);
    }
    adj[v].clear();
  }
  for (std::size_t i = 1; i < roots.size(); ++i) td.edges.emplace_back(roots[i - 1], roots[i]);
  return td;
}

namespace detail {

/// Greedy elimination driven by a per-vertex score; ties go to the lower id.
template <class Score>
std::vector<Vertex> greedy_order(const UndirectedGraph& g, Score score, bool two_hop_update) {
  const std::size_t n = g.vertex_count();
  std::vector<std::set<Vertex>> adj(n);
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  using Key = std::tuple<std::size_t, std::size_t, Vertex>;
  std::set<Key> queue;
  std::vector<Key> key(n);
  std::vector<bool> done(n, false);
  for (Vertex v = 0; v < n; ++v) {
    key[v] = Key{score(adj, v), adj[v].size(), v};
    queue.insert(key[v]);
  }
  std::vector<Vertex> order;
  order.reserve(n);
  while (!queue.empty()) {
    Vertex v = std::get<2>(*queue.begin());
    queue.erase(queue.begin());
    done[v] = true;
    order.push_back(v);
    std::vector<Vertex> nb(adj[v].begin(), adj[v].end());
    for (Vertex a : nb) {
      adj[a].erase(v);
      for (Vertex b : nb)
        if (a != b) adj[a].insert(b);
    }
    adj[v].clear();
    std::set<Vertex> touched(nb.begin(), nb.end());
    if (two_hop_update)
      for (Vertex a : nb) touched.insert(adj[a].begin(), adj[a].end());
    for (Vertex u : touched) {
      if (done[u]) continue;
      queue.erase(key[u]);
      key[u] = Key{score(adj, u), adj[u].size(), u};
      queue.insert(key[u]);
    }
  }
  return order;
}

inline std::size_t fill_in(const std::vector<std::set<Vertex>>& adj, Vertex v) {
  std::size_t missing = 0;
  for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
    for (auto b = std::next(a); b != adj[v].end(); ++b)
      if (!adj[*a].count(*b)) ++missing;
  return missing;
}

}  // namespace detail

inline std::vector<Vertex> min_fill_order(const UndirectedGraph& g) {
  return detail::greedy_order(g, detail::fill_in, true);
}

inline std::vector<Vertex> min_degree_order(const UndirectedGraph& g) {
  return detail::greedy_order(
      g, [](const std::vector<std::set<Vertex>>& adj, Vertex v) { return adj[v].size(); },
      false);
}

/**
 * Exact minimum-width elimination order by depth-first branch and bound over
 * elimination prefixes. A prefix is identified by its eliminated set, since
 * the remaining graph only depends on that set.
 */
inline std::vector<Vertex> exact_order(const UndirectedGraph& g, std::size_t max_vertices = 10) {
  const std::size_t n = g.vertex_count();
  if (n > max_vertices)
    throw BudgetExceeded("exact-small decomposition refused: graph has " + std::to_string(n) +
                         " vertices, limit is " + std::to_string(max_vertices));
  if (n > 30) throw BudgetExceeded("exact-small decomposition supports at most 30 vertices");
  if (n == 0) return {};
  using Mask = std::uint32_t;
  std::vector<Mask> nb(n, 0);
  for (auto [u, v] : g.edges()) {
    nb[u] |= Mask{1} << v;
    nb[v] |= Mask{1} << u;
  }
  // Degree of v once `gone` is eliminated: vertices outside gone reachable through gone.
  auto degree_after = [&](Mask gone, std::size_t v) {
    Mask reach = nb[v];
    Mask frontier = reach & gone;
    Mask visited = frontier;
    while (frontier) {
      std::size_t x = std::countr_zero(frontier);
      frontier &= frontier - 1;
      Mask fresh = nb[x] & ~visited & ~(Mask{1} << v);
      reach |= fresh;
      Mask more = fresh & gone;
      visited |= more;
      frontier |= more;
    }
    return std::popcount(reach & ~gone & ~(Mask{1} << v));
  };

  std::vector<Vertex> best = min_fill_order(g);
  int best_width = elimination_width(g, best);
  std::unordered_map<Mask, int> seen;
  std::vector<Vertex> prefix;
  const Mask all = (n == 32) ? ~Mask{0} : ((Mask{1} << n) - 1);

  auto search = [&](auto&& self, Mask gone, int width) -> void {
    if (gone == all) {
      if (width < best_width) {
        best_width = width;
        best = prefix;
      }
      return;
    }
    auto it = seen.find(gone);
    if (it != seen.end() && it->second <= width) return;
    seen[gone] = width;
    for (std::size_t v = 0; v < n; ++v) {
      if (gone & (Mask{1} << v)) continue;
      int w = std::max(width, degree_after(gone, v));
      if (w >= best_width) continue;
      prefix.push_back(v);
      self(self, gone | (Mask{1} << v), w);
      prefix.pop_back();
    }
  };
  search(search, 0, 0);
  return best;
}

enum class DecompositionStrategy { MinFill, MinDegree, ExactSmall };

inline TreeDecomposition build_decomposition(const UndirectedGraph& g,
                                             DecompositionStrategy strategy,
                                             std::size_t exact_limit = 10) {
  switch (strategy) {
    case DecompositionStrategy::MinFill: return decomposition_from_order(g, min_fill_order(g));
    case DecompositionStrategy::MinDegree: return decomposition_from_order(g, min_degree_order(g));
    case DecompositionStrategy::ExactSmall:
      return decomposition_from_order(g, exact_order(g, exact_limit));
  }
  throw Error("unknown decomposition strategy");
}

// ---------------------------------------------------------------------------
// Nice tree decompositions
// ---------------------------------------------------------------------------

enum class NodeKind { Leaf, Introduce, Forget, Join };

inline const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Leaf: return "leaf";
    case NodeKind::Introduce: return "introduce";
    case NodeKind::Forget: return "forget";
    case NodeKind::Join: return "join";
  }
  return "?";
}

/**
 * Rooted decomposition with empty root and leaf bags in which every other
 * node introduces one vertex, forgets one vertex, or joins two children
 * with equal bags.
 *
 * Node ids are assigned bottom-up: every child id is smaller than its
 * parent's, so iterating ids in increasing order visits children first.
 */
struct NiceTreeDecomposition {
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  std::vector<std::vector<Vertex>> bags;
  std::vector<NodeKind> kinds;
  /// Introduced or forgotten vertex; unused for leaf and join nodes.
  std::vector<Vertex> vertex;
  std::vector<std::vector<std::size_t>> children;
  std::vector<std::size_t> parent;
  std::size_t root = 0;

  std::size_t node_count() const { return bags.size(); }

  std::size_t max_bag_size() const {
    std::size_t s = 0;
    for (const auto& b : bags) s = std::max(s, b.size());
    return s;
  }
  int width() const { return static_cast<int>(max_bag_size()) - 1; }

  std::size_t count(NodeKind k) const {
    return static_cast<std::size_t>(std::count(kinds.begin(), kinds.end(), k));
  }

  TreeDecomposition as_tree_decomposition() const {
    TreeDecomposition td;
    td.bags = bags;
    for (std::size_t t = 0; t < node_count(); ++t)
      if (parent[t] != npos) td.edges.emplace_back(parent[t], t);
    return td;
  }
};

/// Describes the first violated nice-decomposition invariant, if any.
inline std::optional<std::string> nice_violation(const NiceTreeDecomposition& ntd) {
  const std::size_t n = ntd.node_count();
  if (n == 0) return "no nodes";
  if (ntd.kinds.size() != n || ntd.vertex.size() != n || ntd.children.size() != n ||
      ntd.parent.size() != n)
    return "per-node arrays have inconsistent sizes";
  if (ntd.root >= n || ntd.parent[ntd.root] != NiceTreeDecomposition::npos)
    return "root is invalid";
  if (!ntd.bags[ntd.root].empty()) return "root bag is not empty";
  for (std::size_t t = 0; t < n; ++t) {
    const auto& kids = ntd.children[t];
    for (std::size_t c : kids)
      if (c >= t || ntd.parent[c] != t) return "child ids must precede parents";
    if (t != ntd.root && ntd.parent[t] == NiceTreeDecomposition::npos)
      return "node " + std::to_string(t) + " has no parent";
    const auto& bag = ntd.bags[t];
    Vertex w = ntd.vertex[t];
    switch (ntd.kinds[t]) {
      case NodeKind::Leaf:
        if (!kids.empty() || !bag.empty()) return "leaf " + std::to_string(t) + " is not empty";
        break;
      case NodeKind::Introduce: {
        if (kids.size() != 1) return "introduce node needs one child";
        auto expect = ntd.bags[kids[0]];
        if (detail::bag_contains(expect, w)) return "introduced vertex already in child bag";
        expect.insert(std::lower_bound(expect.begin(), expect.end(), w), w);
        if (expect != bag) return "introduce node " + std::to_string(t) + " has wrong bag";
        break;
      }
      case NodeKind::Forget: {
        if (kids.size() != 1) return "forget node needs one child";
        if (detail::bag_contains(bag, w)) return "forgotten vertex still in bag";
        auto expect = bag;
        expect.insert(std::lower_bound(expect.begin(), expect.end(), w), w);
        if (expect != ntd.bags[kids[0]])
          return "forget node " + std::to_string(t) + " has wrong bag";
        break;
      }
      case NodeKind::Join:
        if (kids.size() != 2) return "join node needs two children";
        if (ntd.bags[kids[0]] != bag || ntd.bags[kids[1]] != bag)
          return "join node " + std::to_string(t) + " children bags differ";
        break;
    }
  }
  return std::nullopt;
}

namespace detail {

/// Contracts tree edges whose one bag is a subset of the other's.
inline TreeDecomposition compress(const TreeDecomposition& td) {
  const std::size_t n = td.node_count();
  std::vector<std::set<std::size_t>> adj(n);
  for (auto [a, b] : td.edges) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  std::vector<bool> alive(n, true);
  std::deque<std::size_t> work;
  for (std::size_t t = 0; t < n; ++t) work.push_back(t);
  while (!work.empty()) {
    std::size_t u = work.front();
    work.pop_front();
    if (!alive[u]) continue;
    for (std::size_t v : adj[u]) {
      const auto& A = td.bags[u];
      const auto& B = td.bags[v];
      if (!std::includes(B.begin(), B.end(), A.begin(), A.end())) continue;
      alive[u] = false;
      for (std::size_t x : adj[u]) {
        adj[x].erase(u);
        if (x != v) {
          adj[x].insert(v);
          adj[v].insert(x);
        }
        work.push_back(x);
      }
      adj[u].clear();
      break;
    }
  }
  TreeDecomposition out;
  std::vector<std::size_t> remap(n, SIZE_MAX);
  for (std::size_t t = 0; t < n; ++t)
    if (alive[t]) {
      remap[t] = out.bags.size();
      out.bags.push_back(td.bags[t]);
    }
  for (std::size_t t = 0; t < n; ++t)
    if (alive[t])
      for (std::size_t v : adj[t])
        if (t < v) out.edges.emplace_back(remap[t], remap[v]);
  return out;
}

}  // namespace detail

/**
 * Converts a valid tree decomposition of `g` into a nice one of the same
 * width. Bags that are subsets of a neighbour are contracted first, which
 * bounds the node count linearly in width times vertex count.
 */
inline NiceTreeDecomposition make_nice(const UndirectedGraph& g, const TreeDecomposition& input) {
  ValidationReport report = validate_decomposition(g, input);
  if (!report.ok()) throw InvalidDecomposition("cannot normalize: " + report.witness);

  TreeDecomposition td = detail::compress(input);
  const std::size_t m = td.node_count();
  auto adj = detail::tree_adjacency(td);

  // Root at node 0; iterative DFS for parent links and a post-order.
  std::vector<std::size_t> tparent(m, SIZE_MAX), order;
  std::vector<std::vector<std::size_t>> tchildren(m);
  {
    std::vector<std::size_t> stack{0};
    std::vector<bool> seen(m, false);
    seen[0] = true;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      order.push_back(u);
      for (std::size_t v : adj[u])
        if (!seen[v]) {
          seen[v] = true;
          tparent[v] = u;
          tchildren[u].push_back(v);
          stack.push_back(v);
        }
    }
    std::reverse(order.begin(), order.end());
  }
  std::vector<std::size_t> subtree(m, 1);
  for (std::size_t u : order)
    if (tparent[u] != SIZE_MAX) subtree[tparent[u]] += subtree[u];

  NiceTreeDecomposition ntd;
  auto add = [&](std::vector<Vertex> bag, NodeKind kind, Vertex w,
                 std::vector<std::size_t> kids) {
    std::size_t id = ntd.bags.size();
    for (std::size_t c : kids) ntd.parent[c] = id;
    ntd.bags.push_back(std::move(bag));
    ntd.kinds.push_back(kind);
    ntd.vertex.push_back(w);
    ntd.children.push_back(std::move(kids));
    ntd.parent.push_back(NiceTreeDecomposition::npos);
    return id;
  };
  // Walks from node `from` (bag `cur`) to bag `target`: forgets first, then introduces.
  auto morph = [&](std::size_t from, std::vector<Vertex> cur, const std::vector<Vertex>& target) {
    std::vector<Vertex> drop, gain;
    std::set_difference(cur.begin(), cur.end(), target.begin(), target.end(),
                        std::back_inserter(drop));
    std::set_difference(target.begin(), target.end(), cur.begin(), cur.end(),
                        std::back_inserter(gain));
    for (Vertex w : drop) {
      cur.erase(std::lower_bound(cur.begin(), cur.end(), w));
      from = add(cur, NodeKind::Forget, w, {from});
    }
    for (Vertex w : gain) {
      cur.insert(std::lower_bound(cur.begin(), cur.end(), w), w);
      from = add(cur, NodeKind::Introduce, w, {from});
    }
    return from;
  };

  std::vector<std::size_t> top(m);
  for (std::size_t u : order) {
    auto kids = tchildren[u];
    std::stable_sort(kids.begin(), kids.end(), [&](std::size_t a, std::size_t b) {
      return subtree[a] > subtree[b] || (subtree[a] == subtree[b] && a < b);
    });
    std::vector<std::size_t> branches;
    for (std::size_t c : kids) branches.push_back(morph(top[c], td.bags[c], td.bags[u]));
    if (branches.empty()) {
      std::size_t leaf = add({}, NodeKind::Leaf, 0, {});
      branches.push_back(morph(leaf, {}, td.bags[u]));
    }
    std::size_t cur = branches[0];
    for (std::size_t i = 1; i < branches.size(); ++i)
      cur = add(td.bags[u], NodeKind::Join, 0, {cur, branches[i]});
    top[u] = cur;
  }
  ntd.root = morph(top[0], td.bags[0], {});
  return ntd;
}

/**
 * A node whose bag contains every vertex of `s` (the lowest such id). Also
 * checks that the set of such nodes is connected.
 */
inline std::size_t simplex_home_node(const NiceTreeDecomposition& ntd, const Simplex& s) {
  std::vector<bool> holds(ntd.node_count(), false);
  std::size_t count = 0, first = NiceTreeDecomposition::npos;
  for (std::size_t t = 0; t < ntd.node_count(); ++t)
    if (s.subset_of(ntd.bags[t])) {
      holds[t] = true;
      ++count;
      if (first == NiceTreeDecomposition::npos) first = t;
    }
  if (count == 0) throw InvalidDecomposition("no bag contains the simplex");
  std::size_t links = 0;
  for (std::size_t t = 0; t < ntd.node_count(); ++t)
    if (holds[t] && ntd.parent[t] != NiceTreeDecomposition::npos && holds[ntd.parent[t]])
      ++links;
  if (links + 1 != count) throw InvalidDecomposition("bags containing the simplex are disconnected");
  return first;
}

/// min-fill elimination followed by normalization.
inline NiceTreeDecomposition default_nice_decomposition(const SimplicialComplex& k) {
  UndirectedGraph g = skeleton_graph(k);
  return make_nice(g, build_decomposition(g, DecompositionStrategy::MinFill));
}

}  // namespace tdchain
