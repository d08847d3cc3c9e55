#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tdchain/complex.hpp"
#include "tdchain/dp_engine.hpp"
#include "tdchain/error.hpp"
#include "tdchain/graph.hpp"
#include "tdchain/obcp.hpp"
#include "tdchain/ohcp.hpp"

namespace tdchain {

/// Hard limits for the exhaustive searches; exceeding one is a refusal.
struct OracleBudget {
  std::uint64_t max_chains = std::uint64_t{1} << 20;
  std::size_t max_tw_vertices = 10;
};

namespace detail {

inline std::uint64_t chain_space(const SimplicialComplex& k, int d, const OracleBudget& budget) {
  const std::size_t m = k.count(d);
  if (m >= 63 || (std::uint64_t{1} << m) > budget.max_chains)
    throw BudgetExceeded("oracle refused: 2^" + std::to_string(m) + " " + std::to_string(d) +
                         "-chains exceed the budget of " + std::to_string(budget.max_chains));
  return std::uint64_t{1} << m;
}

inline Chain chain_from_mask(int d, std::uint64_t mask) {
  Chain c = Chain::empty(d);
  for (; mask; mask &= mask - 1) c.members.push_back(std::countr_zero(mask));
  return c;
}

inline Cost chain_cost(const Chain& c, const WeightFunction* w) {
  return Cost{chain_weight(c, w), c.size()};
}

}  // namespace detail

/**
 * Tries every d-chain in counter order and keeps the first cheapest one
 * whose boundary is b.
 */
inline ObcpSolution brute_force_obcp(const SimplicialComplex& k, const Chain& b,
                                     const WeightFunction* w = nullptr,
                                     const OracleBudget& budget = {}) {
  check_chain(k, b);
  const int d = b.dimension + 1;
  const std::uint64_t total = detail::chain_space(k, d, budget);
  ObcpSolution best;
  best.chain = Chain::empty(d);
  Cost best_cost;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Chain c = detail::chain_from_mask(d, mask);
    if (boundary(k, c) != b) continue;
    Cost cost = detail::chain_cost(c, w);
    if (!best.solved() || cost < best_cost) {
      best.status = ObcpStatus::Solved;
      best.chain = std::move(c);
      best_cost = cost;
    }
  }
  best.weight = best.solved() ? best_cost.weight : 0.0;
  return best;
}

/// Minimizes the weight of b + boundary(c) over every d-chain c.
inline OhcpSolution brute_force_ohcp(const SimplicialComplex& k, const Chain& b,
                                     const WeightFunction* w = nullptr,
                                     const OracleBudget& budget = {}) {
  check_chain(k, b);
  const int d = b.dimension + 1;
  const std::uint64_t total = detail::chain_space(k, d, budget);
  OhcpSolution best;
  Cost best_cost;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Chain c = detail::chain_from_mask(d, mask);
    Chain h = c.is_empty() ? b : chain_add(b, boundary(k, c));
    Cost cost = detail::chain_cost(h, w);
    if (mask == 0 || cost < best_cost) {
      best.homologous = std::move(h);
      best.witness = std::move(c);
      best_cost = cost;
    }
  }
  best.weight = best_cost.weight;
  return best;
}

/**
 * Exact treewidth as the minimum over all elimination orders of the largest
 * neighbourhood met while eliminating. Orders are enumerated through their
 * eliminated prefixes: best(S) is the cheapest way to eliminate exactly S.
 */
inline int brute_force_treewidth(const UndirectedGraph& g, const OracleBudget& budget = {}) {
  const std::size_t n = g.vertex_count();
  if (n > budget.max_tw_vertices || n > 28)
    throw BudgetExceeded("treewidth oracle refused: " + std::to_string(n) +
                         " vertices exceed the limit of " +
                         std::to_string(std::min<std::size_t>(budget.max_tw_vertices, 28)));
  if (n == 0) return -1;
  using Mask = std::uint32_t;
  std::vector<Mask> nb(n, 0);
  for (auto [u, v] : g.edges()) {
    nb[u] |= Mask{1} << v;
    nb[v] |= Mask{1} << u;
  }
  auto degree_after = [&](Mask gone, std::size_t v) {
    const Mask self = Mask{1} << v;
    Mask visited = 0, reach = nb[v], frontier = nb[v] & gone;
    while (frontier) {
      std::size_t x = std::countr_zero(frontier);
      frontier &= frontier - 1;
      if (visited & (Mask{1} << x)) continue;
      visited |= Mask{1} << x;
      reach |= nb[x];
      frontier |= nb[x] & gone & ~visited;
    }
    return static_cast<std::int8_t>(std::popcount(reach & ~gone & ~self));
  };
  const Mask full = (Mask{1} << n) - 1;
  std::vector<std::int8_t> best(std::size_t{1} << n, 0);
  for (Mask s = 1; s <= full; ++s) {
    std::int8_t value = 127;
    for (Mask rest = s; rest; rest &= rest - 1) {
      std::size_t v = std::countr_zero(rest);
      Mask before = s & ~(Mask{1} << v);
      value = std::min(value, std::max(best[before], degree_after(before, v)));
    }
    best[s] = value;
    if (s == full) break;
  }
  return best[full];
}

}  // namespace tdchain
