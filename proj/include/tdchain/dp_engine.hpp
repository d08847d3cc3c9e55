#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tdchain/complex.hpp"
#include "tdchain/error.hpp"
#include "tdchain/tree_decomposition.hpp"

namespace tdchain {

/// A (d-1)-chain inside one bag, one bit per (d-1)-simplex of K[X_t].
using ChainKey = std::uint64_t;

/// Default refusal threshold on table entries per node and on subsets enumerated per forget node.
inline constexpr std::uint64_t kDefaultEntryBudget = std::uint64_t{1} << 24;

/**
 * Objective value. Weights compare first and the simplex count breaks
 * ties, which keeps witnesses deterministic under weighted inputs.
 */
struct Cost {
  double weight = 0.0;
  std::size_t count = 0;

  friend Cost operator+(const Cost& a, const Cost& b) {
    return Cost{a.weight + b.weight, a.count + b.count};
  }
  friend bool operator<(const Cost& a, const Cost& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    return a.count < b.count;
  }
  friend bool operator==(const Cost&, const Cost&) = default;
};

/**
 * Table entry with its backpointer:
 *   introduce: first = child key
 *   forget:    first = child key, second = chosen subset of the new d-simplices
 *   join:      first = left key,  second = right key
 */
struct TableEntry {
  Cost cost;
  ChainKey first = 0;
  ChainKey second = 0;
};

/// Finite entries of one node, sorted by key. A missing key means +infinity.
struct NodeTable {
  std::vector<std::pair<ChainKey, TableEntry>> entries;

  std::size_t size() const { return entries.size(); }

  const TableEntry* find(ChainKey key) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), key,
                               [](const auto& e, ChainKey k) { return e.first < k; });
    if (it == entries.end() || it->first != key) return nullptr;
    return &it->second;
  }
};

/**
 * Everything the transitions at one node need, precomputed from the bag.
 */
struct NodeFrame {
  /// Global indices of the (d-1)-simplices of K[X_t], ascending; bit i of a key is faces[i].
  std::vector<std::size_t> faces;
  std::vector<double> face_weights;
  /// Introduce/forget: where each bit of the child's key lands here (-1: dropped).
  std::vector<int> child_bit;
  /// Forget: the d-simplices of K[X_t'] that contain the forgotten vertex.
  std::vector<std::size_t> cofaces;
  std::vector<double> coface_weights;
  /// Forget: boundary of each coface, as a key over the child's faces.
  std::vector<ChainKey> coface_boundary;
  /// Forget: child bits whose simplex contains the forgotten vertex.
  ChainKey forgotten = 0;
  /// Forget: the part of b among those forgotten bits.
  ChainKey target = 0;
};

struct TableStats {
  std::vector<std::size_t> node_entries;
  std::vector<std::size_t> node_faces;
  std::size_t peak_entries = 0;
  std::size_t total_entries = 0;
  std::size_t max_bag_size = 0;
  /// C(max bag size, d): the most (d-1)-simplices any bag can hold.
  std::size_t face_bound = 0;
};

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace detail {

/// Calls f(subset) for every size-`r` subset of `items`, in lexicographic order.
template <class F>
void for_each_subset(const std::vector<Vertex>& items, std::size_t r, F&& f) {
  const std::size_t n = items.size();
  if (r > n) return;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  std::vector<Vertex> pick(r);
  while (true) {
    for (std::size_t i = 0; i < r; ++i) pick[i] = items[idx[i]];
    f(pick);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline ChainKey translate(ChainKey key, const std::vector<int>& map) {
  ChainKey out = 0;
  while (key) {
    int bit = std::countr_zero(key);
    key &= key - 1;
    int to = map[bit];
    if (to >= 0) out |= ChainKey{1} << to;
  }
  return out;
}

inline Cost key_cost(ChainKey key, const std::vector<double>& weights) {
  Cost c;
  while (key) {
    int bit = std::countr_zero(key);
    key &= key - 1;
    c.weight += weights[bit];
    ++c.count;
  }
  return c;
}

inline NodeTable finish(std::unordered_map<ChainKey, TableEntry>& acc) {
  NodeTable t;
  t.entries.assign(acc.begin(), acc.end());
  std::sort(t.entries.begin(), t.entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return t;
}

inline void relax(std::unordered_map<ChainKey, TableEntry>& acc, ChainKey key,
                  const TableEntry& candidate) {
  auto [it, inserted] = acc.try_emplace(key, candidate);
  if (!inserted && candidate.cost < it->second.cost) it->second = candidate;
}

}  // namespace detail

/// Which simplices a weight function applies to.
enum class WeightedLevel { Chain, Boundary };

/**
 * Precomputed per-node frames for a dynamic program over `ntd` solving for
 * d-chains, d = b.dimension + 1. Refuses bags holding more than 64
 * (d-1)-simplices (keys are 64-bit) and forget nodes with more than
 * `entry_budget` subsets to try; run_dp also refuses any table that grows
 * past the budget.
 */
class DpContext {
 public:
  DpContext(const SimplicialComplex& k, const NiceTreeDecomposition& ntd, const Chain& b,
            const WeightFunction* weights, WeightedLevel weighted,
            std::uint64_t entry_budget = kDefaultEntryBudget)
      : k_(k),
        ntd_(ntd),
        d_(b.dimension + 1),
        budget_(std::max<std::uint64_t>(entry_budget, 1)),
        frames_(ntd.node_count()) {
    check_chain(k, b);
    if (auto why = nice_violation(ntd)) throw InvalidDecomposition(*why);
    const int weighted_dim = weighted == WeightedLevel::Chain ? d_ : d_ - 1;
    if (weights) {
      if (weights->dimension() != weighted_dim)
        throw DimensionError("weights are on " + std::to_string(weights->dimension()) +
                             "-simplices, expected " + std::to_string(weighted_dim));
      if (weights->size() != k.count(weighted_dim))
        throw MalformedInput("weight function does not cover every simplex");
    }
    auto weight_of = [&](int dim, std::size_t i) {
      return (weights && dim == weighted_dim) ? (*weights)(i) : (dim == weighted_dim ? 1.0 : 0.0);
    };
    std::vector<bool> in_b(k.count(b.dimension), false);
    for (std::size_t i : b.members) in_b[i] = true;


    for (std::size_t t = 0; t < ntd.node_count(); ++t) {
      NodeFrame& f = frames_[t];
      const auto& bag = ntd.bags[t];
      if (d_ >= 1)
        detail::for_each_subset(bag, static_cast<std::size_t>(d_), [&](const auto& pick) {
          if (auto i = k.index_of(Simplex(pick))) f.faces.push_back(*i);
        });
      std::sort(f.faces.begin(), f.faces.end());
      if (f.faces.size() > 64)
        throw BudgetExceeded("node " + std::to_string(t) + " has " + std::to_string(f.faces.size()) +
                             " (d-1)-simplices in its bag; at most 64 fit in a key");
      for (std::size_t i : f.faces) f.face_weights.push_back(weight_of(d_ - 1, i));
      max_bag_ = std::max(max_bag_, bag.size());
    }

    for (std::size_t t = 0; t < ntd.node_count(); ++t) {
      NodeFrame& f = frames_[t];
      const NodeKind kind = ntd.kinds[t];
      if (kind != NodeKind::Introduce && kind != NodeKind::Forget) continue;
      const std::size_t child = ntd.children[t][0];
      const NodeFrame& cf = frames_[child];
      const Vertex w = ntd.vertex[t];
      f.child_bit.assign(cf.faces.size(), -1);
      for (std::size_t i = 0; i < cf.faces.size(); ++i) {
        auto it = std::lower_bound(f.faces.begin(), f.faces.end(), cf.faces[i]);
        if (it != f.faces.end() && *it == cf.faces[i])
          f.child_bit[i] = static_cast<int>(it - f.faces.begin());
      }
      if (kind != NodeKind::Forget) continue;

      for (std::size_t i = 0; i < cf.faces.size(); ++i) {
        if (!k.simplex(d_ - 1, cf.faces[i]).contains(w)) continue;
        f.forgotten |= ChainKey{1} << i;
        if (in_b[cf.faces[i]]) f.target |= ChainKey{1} << i;
      }
      const auto& child_bag = ntd.bags[child];
      std::vector<Vertex> others;
      for (Vertex v : child_bag)
        if (v != w) others.push_back(v);
      detail::for_each_subset(others, static_cast<std::size_t>(d_), [&](const auto& pick) {
        std::vector<Vertex> tau = pick;
        tau.insert(std::lower_bound(tau.begin(), tau.end(), w), w);
        Simplex s(std::move(tau));
        if (auto i = k.index_of(s)) {
          ChainKey bd = 0;
          for (std::size_t j = 0; j < s.size(); ++j) {
            std::size_t face = *k.index_of(s.facet(j));
            auto it = std::lower_bound(cf.faces.begin(), cf.faces.end(), face);
            bd |= ChainKey{1} << (it - cf.faces.begin());
          }
          f.cofaces.push_back(*i);
          f.coface_weights.push_back(weight_of(d_, *i));
          f.coface_boundary.push_back(bd);
        }
      });
      if (f.cofaces.size() >= 63 || (std::uint64_t{1} << f.cofaces.size()) > budget_)
        throw BudgetExceeded("forget node " + std::to_string(t) + " has " +
                             std::to_string(f.cofaces.size()) + " new d-simplices; 2^" +
                             std::to_string(f.cofaces.size()) + " subsets exceed the budget of " +
                             std::to_string(budget_));
    }
    face_bound_ = binomial(max_bag_, static_cast<std::size_t>(d_));
  }

  const SimplicialComplex& complex() const { return k_; }
  const NiceTreeDecomposition& decomposition() const { return ntd_; }
  int chain_dimension() const { return d_; }
  const NodeFrame& frame(std::size_t t) const { return frames_.at(t); }
  std::size_t max_bag_size() const { return max_bag_; }
  std::size_t face_bound() const { return face_bound_; }
  std::uint64_t entry_budget() const { return budget_; }

  void expect_kind(std::size_t t, NodeKind kind) const {
    if (t >= ntd_.node_count() || ntd_.kinds[t] != kind)
      throw std::logic_error("node " + std::to_string(t) + " is not a " + to_string(kind) +
                             " node");
  }

 private:
  const SimplicialComplex& k_;
  const NiceTreeDecomposition& ntd_;
  int d_;
  std::uint64_t budget_;
  std::vector<NodeFrame> frames_;
  std::size_t max_bag_ = 0;
  std::size_t face_bound_ = 0;
};

// ---------------------------------------------------------------------------
// Node transitions shared by both problems
// ---------------------------------------------------------------------------

/// The empty chain spans the empty boundary at a leaf.
inline NodeTable leaf_table() {
  NodeTable t;
  t.entries.push_back({ChainKey{0}, TableEntry{}});
  return t;
}

/// Child entries carried over; keys touching the new vertex stay absent.
inline NodeTable introduce_table(const DpContext& ctx, std::size_t t, const NodeTable& child) {
  const NodeFrame& f = ctx.frame(t);
  NodeTable out;
  out.entries.reserve(child.size());
  for (const auto& [key, e] : child.entries)
    out.entries.push_back({detail::translate(key, f.child_bit), TableEntry{e.cost, key, 0}});
  std::sort(out.entries.begin(), out.entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

/**
 * Forget transition. For every child entry and every subset of the
 * d-simplices that become available, the objective decides whether the
 * combination is admissible and what it adds to the cost.
 */
template <class Objective>
NodeTable forget_table(const DpContext& ctx, std::size_t t, const NodeTable& child,
                       const Objective& objective) {
  const NodeFrame& f = ctx.frame(t);
  const NodeFrame& cf = ctx.frame(ctx.decomposition().children[t][0]);
  const std::size_t m = f.cofaces.size();
  const std::size_t subsets = std::size_t{1} << m;
  std::vector<ChainKey> bd(subsets, 0);
  std::vector<Cost> gamma(subsets);
  for (std::size_t g = 1; g < subsets; ++g) {
    std::size_t low = std::countr_zero(g);
    bd[g] = bd[g & (g - 1)] ^ f.coface_boundary[low];
    gamma[g] = gamma[g & (g - 1)] + Cost{f.coface_weights[low], 1};
  }
  std::unordered_map<ChainKey, TableEntry> acc;
  for (const auto& [key, e] : child.entries) {
    for (std::size_t g = 0; g < subsets; ++g) {
      const ChainKey sum = key ^ bd[g];
      const ChainKey residual = sum & f.forgotten;
      std::optional<Cost> local = objective.local(residual, f.target, gamma[g], cf);
      if (!local) continue;
      const ChainKey beta = detail::translate(sum & ~f.forgotten, f.child_bit);
      detail::relax(acc, beta, TableEntry{e.cost + *local, key, static_cast<ChainKey>(g)});
    }
  }
  return detail::finish(acc);
}

/// Join transition: every split of the bag chain between the two children.
inline NodeTable join_table(const NodeTable& left, const NodeTable& right) {
  std::unordered_map<ChainKey, TableEntry> acc;
  for (const auto& [a, ea] : left.entries)
    for (const auto& [b, eb] : right.entries)
      detail::relax(acc, a ^ b, TableEntry{ea.cost + eb.cost, a, b});
  return detail::finish(acc);
}

/// Every node table plus the statistics gathered while building them.
struct DpRun {
  std::vector<NodeTable> tables;
  TableStats stats;

  const TableEntry* root_entry(const DpContext& ctx) const {
    return tables[ctx.decomposition().root].find(0);
  }
};

/**
 * Bottom-up evaluation. Asserts at every node that the table holds at most
 * 2^(faces in the bag) entries and that the bag holds at most C(s, d) faces.
 */
template <class Objective>
DpRun run_dp(const DpContext& ctx, const Objective& objective) {
  const auto& ntd = ctx.decomposition();
  DpRun run;
  run.tables.resize(ntd.node_count());
  run.stats.node_entries.resize(ntd.node_count());
  run.stats.node_faces.resize(ntd.node_count());
  run.stats.max_bag_size = ctx.max_bag_size();
  run.stats.face_bound = ctx.face_bound();
  for (std::size_t t = 0; t < ntd.node_count(); ++t) {
    const auto& kids = ntd.children[t];
    NodeTable table;
    switch (ntd.kinds[t]) {
      case NodeKind::Leaf: table = leaf_table(); break;
      case NodeKind::Introduce: table = introduce_table(ctx, t, run.tables[kids[0]]); break;
      case NodeKind::Forget:
        table = forget_table(ctx, t, run.tables[kids[0]], objective);
        break;
      case NodeKind::Join: table = join_table(run.tables[kids[0]], run.tables[kids[1]]); break;
    }
    const std::size_t faces = ctx.frame(t).faces.size();
    if (faces > ctx.face_bound() || (faces < 64 && table.size() > (std::uint64_t{1} << faces)))
      throw std::logic_error("table at node " + std::to_string(t) + " exceeds its size bound");
    if (table.size() > ctx.entry_budget())
      throw BudgetExceeded("table at node " + std::to_string(t) + " has " +
                           std::to_string(table.size()) + " entries, over the budget of " +
                           std::to_string(ctx.entry_budget()));
    run.stats.node_entries[t] = table.size();
    run.stats.node_faces[t] = faces;
    run.stats.peak_entries = std::max(run.stats.peak_entries, table.size());
    run.stats.total_entries += table.size();
    run.tables[t] = std::move(table);
  }
  return run;
}

/// Follows backpointers from (t, key) and collects the chosen d-simplices.
inline std::vector<std::size_t> reconstruct(const DpContext& ctx, const DpRun& run, std::size_t t,
                                            ChainKey key) {
  const auto& ntd = ctx.decomposition();
  std::vector<std::size_t> chain;
  std::vector<std::pair<std::size_t, ChainKey>> stack{{t, key}};
  while (!stack.empty()) {
    auto [u, k] = stack.back();
    stack.pop_back();
    const TableEntry* e = run.tables[u].find(k);
    if (!e) throw std::logic_error("dangling backpointer at node " + std::to_string(u));
    const auto& kids = ntd.children[u];
    switch (ntd.kinds[u]) {
      case NodeKind::Leaf: break;
      case NodeKind::Introduce: stack.emplace_back(kids[0], e->first); break;
      case NodeKind::Forget: {
        const NodeFrame& f = ctx.frame(u);
        for (ChainKey g = e->second; g; g &= g - 1) chain.push_back(f.cofaces[std::countr_zero(g)]);
        stack.emplace_back(kids[0], e->first);
        break;
      }
      case NodeKind::Join:
        stack.emplace_back(kids[0], e->first);
        stack.emplace_back(kids[1], e->second);
        break;
    }
  }
  std::sort(chain.begin(), chain.end());
  return chain;
}

/// The chain a key stands for at node t, as global simplex indices.
inline Chain key_chain(const DpContext& ctx, std::size_t t, ChainKey key) {
  const NodeFrame& f = ctx.frame(t);
  Chain c = Chain::empty(ctx.chain_dimension() - 1);
  for (; key; key &= key - 1) c.members.push_back(f.faces[std::countr_zero(key)]);
  std::sort(c.members.begin(), c.members.end());
  return c;
}

/// Inverse of key_chain; throws if the chain is not inside the bag.
inline ChainKey chain_key(const DpContext& ctx, std::size_t t, const Chain& c) {
  const NodeFrame& f = ctx.frame(t);
  ChainKey key = 0;
  for (std::size_t i : c.members) {
    auto it = std::lower_bound(f.faces.begin(), f.faces.end(), i);
    if (it == f.faces.end() || *it != i) throw DimensionError("chain is not supported on the bag");
    key |= ChainKey{1} << (it - f.faces.begin());
  }
  return key;
}

}  // namespace tdchain
