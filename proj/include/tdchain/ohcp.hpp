#pragma once

#include <optional>
#include <utility>

#include "tdchain/complex.hpp"
#include "tdchain/dp_engine.hpp"
#include "tdchain/obcp.hpp"
#include "tdchain/tree_decomposition.hpp"

namespace tdchain {

/**
 * Homologous-chain objective: every combination is admissible, and the cost
 * is the weight of the forgotten residual plus the forgotten part of b. That
 * residual can no longer change once its vertex has left the bag.
 */
struct HomologousChainObjective {
  std::optional<Cost> local(ChainKey residual, ChainKey target, const Cost&,
                            const NodeFrame& child) const {
    return detail::key_cost(residual ^ target, child.face_weights);
  }
};

inline NodeTable ohcp_leaf(const DpContext& ctx, std::size_t t) {
  ctx.expect_kind(t, NodeKind::Leaf);
  return leaf_table();
}

inline NodeTable ohcp_introduce(const DpContext& ctx, std::size_t t, const NodeTable& child) {
  ctx.expect_kind(t, NodeKind::Introduce);
  return introduce_table(ctx, t, child);
}

inline NodeTable ohcp_forget(const DpContext& ctx, std::size_t t, const NodeTable& child) {
  ctx.expect_kind(t, NodeKind::Forget);
  return forget_table(ctx, t, child, HomologousChainObjective{});
}

inline NodeTable ohcp_join(const DpContext& ctx, std::size_t t, const NodeTable& left,
                           const NodeTable& right) {
  ctx.expect_kind(t, NodeKind::Join);
  return join_table(left, right);
}

struct OhcpSolution {
  /// Minimum-weight chain homologous to b.
  Chain homologous;
  /// d-chain with b + homologous = boundary(witness).
  Chain witness;
  double weight = 0.0;
  TableStats stats;
};

/**
 * Minimum-weight (d-1)-chain h homologous to b, together with the d-chain c
 * certifying b + h = boundary(c). Always feasible since c = 0 gives h = b.
 */
inline OhcpSolution solve_ohcp(const SimplicialComplex& k, const Chain& b,
                               const SolveOptions& opts = {}) {
  check_chain(k, b);
  return detail::with_decomposition(k, opts, [&](const NiceTreeDecomposition& ntd) {
    DpContext ctx(k, ntd, b, opts.weights, WeightedLevel::Boundary, opts.entry_budget);
    DpRun run = run_dp(ctx, HomologousChainObjective{});
    const TableEntry* root = run.root_entry(ctx);
    if (!root) throw std::logic_error("homologous-chain table has no root entry");
    OhcpSolution sol;
    sol.weight = root->cost.weight;
    sol.witness = Chain{b.dimension + 1, reconstruct(ctx, run, ntd.root, 0)};
    sol.homologous = sol.witness.is_empty() ? b : chain_add(b, boundary(k, sol.witness));
    sol.stats = std::move(run.stats);
    return sol;
  });
}

}  // namespace tdchain
