#pragma once

// Helpers shared by the test binaries: random instances, from-scratch
// reference computations, and a second treewidth oracle.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "tdchain/tdchain.hpp"

namespace testing_support {

using namespace tdchain;

inline std::string data_path(const std::string& name) { return std::string(TDCHAIN_DATA_DIR) + "/" + name; }

inline SimplicialComplex fixture(const std::string& name) {
  return io::parse_complex(io::read_file(data_path(name)));
}

inline Chain fixture_chain(const SimplicialComplex& k, const std::string& name) {
  return io::parse_chain(io::read_file(data_path(name)), k);
}

inline UndirectedGraph random_graph(gen::Rng& rng, std::size_t n, unsigned percent) {
  UndirectedGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng() % 100 < percent) g.add_edge(u, v);
  return g;
}

/**
 * A valid but usually far from optimal decomposition: a random elimination
 * order, plus a few extra bags hung off random nodes holding random subsets
 * of that node's bag.
 */
inline TreeDecomposition random_decomposition(gen::Rng& rng, const UndirectedGraph& g) {
  std::vector<Vertex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::shuffle(order.begin(), order.end(), rng);
  TreeDecomposition td = decomposition_from_order(g, order);
  const std::size_t extra = rng() % 4;
  for (std::size_t e = 0; e < extra; ++e) {
    std::size_t at = rng() % td.node_count();
    std::vector<Vertex> bag;
    for (Vertex v : td.bags[at])
      if (rng() & 1) bag.push_back(v);
    td.bags.push_back(bag);
    td.edges.emplace_back(at, td.bags.size() - 1);
  }
  return td;
}

/// Treewidth by trying every permutation as an elimination order.
inline int permutation_treewidth(const UndirectedGraph& g) {
  if (g.vertex_count() == 0) return -1;
  std::vector<Vertex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), Vertex{0});
  int best = static_cast<int>(g.vertex_count());
  do {
    best = std::min(best, elimination_width(g, order));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

inline std::vector<std::size_t> subtree(const NiceTreeDecomposition& ntd, std::size_t t) {
  std::vector<std::size_t> out, stack{t};
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    out.push_back(u);
    for (std::size_t c : ntd.children[u]) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Vertex> subtree_vertices(const NiceTreeDecomposition& ntd, std::size_t t) {
  std::vector<Vertex> vs;
  for (std::size_t u : subtree(ntd, t)) vs.insert(vs.end(), ntd.bags[u].begin(), ntd.bags[u].end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

/// Indices of dim-simplices with every vertex in `set` (sorted).
inline std::vector<std::size_t> induced(const SimplicialComplex& k, int dim,
                                        const std::vector<Vertex>& set) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < k.count(dim); ++i)
    if (k.simplex(dim, i).subset_of(set)) out.push_back(i);
  return out;
}

inline bool in_sorted(const std::vector<std::size_t>& v, std::size_t x) {
  return std::binary_search(v.begin(), v.end(), x);
}

/// Sum over members of a global-index chain, restricted to members of `keep`.
inline Chain restrict_to(const Chain& c, const std::vector<std::size_t>& keep, bool inside) {
  Chain out = Chain::empty(c.dimension);
  for (std::size_t i : c.members)
    if (in_sorted(keep, i) == inside) out.members.push_back(i);
  return out;
}

inline Chain boundary_or_empty(const SimplicialComplex& k, const Chain& c) {
  return c.is_empty() ? Chain::empty(c.dimension - 1) : boundary(k, c);
}

inline gen::ComplexShape shape_for(int d) {
  gen::ComplexShape shape;
  shape.max_vertices = 8;
  shape.dimension = d;
  shape.max_top_simplices = 14;
  return shape;
}

}  // namespace testing_support
