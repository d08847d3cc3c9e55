#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <optional>
#include <vector>

#include "tdchain/complex.hpp"
#include "tdchain/error.hpp"
#include "tdchain/tree_decomposition.hpp"

namespace tdchain {

/**
 * What the subtree rooted at a node sees of the complex.
 *
 *   vertices  = union of bags in the subtree (V_t)
 *   simplices = K[V_t] with the d-simplices of K[X_t] removed (K_t),
 *               as per-dimension sorted indices into the parent complex
 *   partial_boundary = the part of b inside K_t but outside K[X_t]
 */
struct RootedScope {
  std::size_t node = 0;
  int chain_dimension = 1;
  std::vector<Vertex> vertices;
  std::vector<std::vector<std::size_t>> simplices;
  Chain partial_boundary;

  const std::vector<std::size_t>& in_dimension(int dim) const {
    static const std::vector<std::size_t> kEmpty;
    if (dim < 0 || dim >= static_cast<int>(simplices.size())) return kEmpty;
    return simplices[dim];
  }
};

/**
 * Memoized per-node scopes. K[V_t] is built from the children: introducing
 * w adds only simplices inside the new bag that contain w, forgetting leaves
 * it unchanged, and a join takes the union of both sides.
 */
class ScopeTable {
 public:
  ScopeTable(const SimplicialComplex& k, const NiceTreeDecomposition& ntd, Chain b)
      : k_(k), ntd_(ntd), b_(std::move(b)), cache_(ntd.node_count()) {
    check_chain(k_, b_);
  }

  /// Dimension d of the chains the scope is cut for (one above the boundary).
  int chain_dimension() const { return b_.dimension + 1; }

  const RootedScope& at(std::size_t t) {
    if (t >= ntd_.node_count()) throw Error("unknown node id " + std::to_string(t));
    if (cache_[t]) return cache_[t]->scope;
    std::vector<std::size_t> pending, stack{t};
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      if (cache_[u]) continue;
      pending.push_back(u);
      for (std::size_t c : ntd_.children[u]) stack.push_back(c);
    }
    std::sort(pending.begin(), pending.end());
    for (std::size_t u : pending) compute(u);
    return cache_[t]->scope;
  }

 private:
  struct Memo {
    std::vector<std::vector<std::size_t>> full;  // K[V_t]
    RootedScope scope;
  };

  static std::vector<std::size_t> merge(const std::vector<std::size_t>& a,
                                        const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  void compute(std::size_t t) {
    const int levels = k_.dimension() + 1;
    const auto& bag = ntd_.bags[t];
    const auto& kids = ntd_.children[t];
    Memo m;
    m.full.assign(levels, {});
    switch (ntd_.kinds[t]) {
      case NodeKind::Leaf: break;
      case NodeKind::Forget:
        m.full = cache_[kids[0]]->full;
        m.scope.vertices = cache_[kids[0]]->scope.vertices;
        break;
      case NodeKind::Introduce: {
        const Memo& child = *cache_[kids[0]];
        Vertex w = ntd_.vertex[t];
        m.scope.vertices = child.scope.vertices;
        m.scope.vertices.insert(
            std::lower_bound(m.scope.vertices.begin(), m.scope.vertices.end(), w), w);
        for (int d = 0; d < levels; ++d) {
          std::vector<std::size_t> fresh;
          const auto& all = k_.simplices(d);
          for (std::size_t i = 0; i < all.size(); ++i)
            if (all[i].contains(w) && all[i].subset_of(bag)) fresh.push_back(i);
          m.full[d] = merge(child.full[d], fresh);
        }
        break;
      }
      case NodeKind::Join: {
        const Memo& a = *cache_[kids[0]];
        const Memo& b = *cache_[kids[1]];
        std::set_union(a.scope.vertices.begin(), a.scope.vertices.end(),
                       b.scope.vertices.begin(), b.scope.vertices.end(),
                       std::back_inserter(m.scope.vertices));
        for (int d = 0; d < levels; ++d) m.full[d] = merge(a.full[d], b.full[d]);
        break;
      }
    }
    const int d = chain_dimension();
    m.scope.node = t;
    m.scope.chain_dimension = d;
    m.scope.simplices = m.full;
    if (d < levels) {
      auto& top = m.scope.simplices[d];
      top.erase(std::remove_if(top.begin(), top.end(),
                               [&](std::size_t i) { return k_.simplex(d, i).subset_of(bag); }),
                top.end());
    }
    m.scope.partial_boundary = Chain::empty(b_.dimension);
    const std::vector<std::size_t> none;
    const auto& faces = b_.dimension < levels ? m.full[b_.dimension] : none;
    for (std::size_t i : b_.members)
      if (std::binary_search(faces.begin(), faces.end(), i) &&
          !k_.simplex(b_.dimension, i).subset_of(bag))
        m.scope.partial_boundary.members.push_back(i);
    cache_[t] = std::move(m);
  }

  const SimplicialComplex& k_;
  const NiceTreeDecomposition& ntd_;
  Chain b_;
  std::vector<std::optional<Memo>> cache_;
};

/// One-off scope lookup; prefer ScopeTable when querying many nodes.
inline RootedScope scope(const SimplicialComplex& k, const NiceTreeDecomposition& ntd,
                         const Chain& b, std::size_t t) {
  ScopeTable table(k, ntd, b);
  return table.at(t);
}

}  // namespace tdchain
