#pragma once

#include <optional>
#include <utility>

#include "tdchain/complex.hpp"
#include "tdchain/dp_engine.hpp"
#include "tdchain/tree_decomposition.hpp"

namespace tdchain {

/// Options shared by both solvers.
struct SolveOptions {
  /// Nice decomposition of the complex's 1-skeleton; built with min-fill when null.
  const NiceTreeDecomposition* decomposition = nullptr;
  /// Chain weights (d-simplices for OBCP, (d-1)-simplices for OHCP); Hamming norm when null.
  const WeightFunction* weights = nullptr;
  std::uint64_t entry_budget = kDefaultEntryBudget;
  /// OBCP only: report infeasible without running the program when b is not a cycle.
  bool check_cycle_first = false;
};

/**
 * Bounded-chain objective: the residual of a forget step must equal the
 * forgotten part of b exactly, and the cost is the weight of the added simplices.
 */
struct BoundedChainObjective {
  std::optional<Cost> local(ChainKey residual, ChainKey target, const Cost& added,
                            const NodeFrame&) const {
    if (residual != target) return std::nullopt;
    return added;
  }
};

inline NodeTable obcp_leaf(const DpContext& ctx, std::size_t t) {
  ctx.expect_kind(t, NodeKind::Leaf);
  return leaf_table();
}

inline NodeTable obcp_introduce(const DpContext& ctx, std::size_t t, const NodeTable& child) {
  ctx.expect_kind(t, NodeKind::Introduce);
  return introduce_table(ctx, t, child);
}

inline NodeTable obcp_forget(const DpContext& ctx, std::size_t t, const NodeTable& child) {
  ctx.expect_kind(t, NodeKind::Forget);
  return forget_table(ctx, t, child, BoundedChainObjective{});
}

inline NodeTable obcp_join(const DpContext& ctx, std::size_t t, const NodeTable& left,
                           const NodeTable& right) {
  ctx.expect_kind(t, NodeKind::Join);
  return join_table(left, right);
}

enum class ObcpStatus { Solved, Infeasible };

struct ObcpSolution {
  ObcpStatus status = ObcpStatus::Infeasible;
  /// Minimum-weight d-chain with boundary b; empty when infeasible.
  Chain chain;
  double weight = 0.0;
  TableStats stats;

  bool solved() const { return status == ObcpStatus::Solved; }
};

namespace detail {

/// Uses the caller's decomposition (validated against the skeleton) or builds one.
template <class F>
auto with_decomposition(const SimplicialComplex& k, const SolveOptions& opts, F&& f) {
  if (opts.decomposition) {
    ValidationReport r = validate_decomposition(skeleton_graph(k),
                                                opts.decomposition->as_tree_decomposition());
    if (!r.ok()) throw InvalidDecomposition("decomposition does not fit the complex: " + r.witness);
    return f(*opts.decomposition);
  }
  NiceTreeDecomposition ntd = default_nice_decomposition(k);
  return f(ntd);
}

}  // namespace detail

/**
 * Minimum-weight d-chain c with boundary b, d = b.dimension + 1.
 * Infeasible exactly when the root's empty-boundary entry is absent.
 */
inline ObcpSolution solve_obcp(const SimplicialComplex& k, const Chain& b,
                               const SolveOptions& opts = {}) {
  check_chain(k, b);
  ObcpSolution sol;
  sol.chain = Chain::empty(b.dimension + 1);
  if (opts.check_cycle_first && b.dimension >= 1 && !boundary(k, b).is_empty()) return sol;
  return detail::with_decomposition(k, opts, [&](const NiceTreeDecomposition& ntd) {
    DpContext ctx(k, ntd, b, opts.weights, WeightedLevel::Chain, opts.entry_budget);
    DpRun run = run_dp(ctx, BoundedChainObjective{});
    sol.stats = std::move(run.stats);
    if (const TableEntry* root = run.root_entry(ctx)) {
      sol.status = ObcpStatus::Solved;
      sol.weight = root->cost.weight;
      sol.chain.members = reconstruct(ctx, run, ntd.root, 0);
    }
    return sol;
  });
}

/// b and h are homologous iff b + h bounds some d-chain.
inline bool is_homologous(const SimplicialComplex& k, const Chain& b, const Chain& h,
                          const SolveOptions& opts = {}) {
  SolveOptions plain = opts;
  plain.weights = nullptr;
  return solve_obcp(k, chain_add(b, h), plain).solved();
}

inline bool is_null_homologous(const SimplicialComplex& k, const Chain& b,
                               const SolveOptions& opts = {}) {
  return is_homologous(k, b, Chain::empty(b.dimension), opts);
}

}  // namespace tdchain
