#include <map>

#include "catch_amalgamated.hpp"

#include "support.hpp"

using namespace tdchain;
using namespace testing_support;

namespace {

WeightFunction random_integer_weights(gen::Rng& rng, const SimplicialComplex& k, int dim) {
  std::vector<double> w(k.count(dim));
  for (double& x : w) x = static_cast<double>(rng() % 5);
  return WeightFunction(dim, std::move(w));
}

/**
 * Table of node t from its scope alone: every d-chain c of K_t whose
 * boundary agrees with b_t outside the bag, keyed by the part of the
 * boundary inside the bag.
 */
std::map<ChainKey, Cost> table_from_scope(const DpContext& ctx, const RootedScope& s,
                                          const WeightFunction* w, bool bounded) {
  const SimplicialComplex& k = ctx.complex();
  const int d = ctx.chain_dimension();
  const auto& tops = s.in_dimension(d);
  const auto& faces = ctx.frame(s.node).faces;
  std::map<ChainKey, Cost> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << tops.size()); ++mask) {
    Chain c = Chain::empty(d);
    for (std::size_t i = 0; i < tops.size(); ++i)
      if (mask >> i & 1) c.members.push_back(tops[i]);
    Chain bd = boundary_or_empty(k, c);
    Chain outside = restrict_to(bd, faces, false);
    Cost cost;
    if (bounded) {
      if (outside != s.partial_boundary) continue;
      cost = Cost{chain_weight(c, w), c.size()};
    } else {
      Chain h = chain_add(outside, s.partial_boundary);
      cost = Cost{chain_weight(h, w), h.size()};
    }
    ChainKey key = chain_key(ctx, s.node, restrict_to(bd, faces, true));
    auto [it, fresh] = out.try_emplace(key, cost);
    if (!fresh && cost < it->second) it->second = cost;
  }
  return out;
}

}  // namespace

TEST_CASE("single triangle: the filled face is the only chain bounded by the edges") {
  SimplicialComplex k = fixture("triangle.cplx");
  ObcpSolution sol = solve_obcp(k, fixture_chain(k, "triangle_boundary.chain"));
  REQUIRE(sol.solved());
  CHECK(sol.weight == 1.0);
  CHECK(sol.chain == Chain::from_indices(2, {0}));
}

TEST_CASE("a lone edge of the triangle bounds nothing") {
  SimplicialComplex k = fixture("triangle.cplx");
  Chain b = fixture_chain(k, "triangle_edge.chain");
  CHECK_FALSE(solve_obcp(k, b).solved());
  SolveOptions quick;
  quick.check_cycle_first = true;
  CHECK_FALSE(solve_obcp(k, b, quick).solved());
  CHECK_FALSE(brute_force_obcp(k, b).solved());
}

TEST_CASE("octahedron equator is spanned by a hemisphere") {
  SimplicialComplex k = fixture("octahedron.cplx");
  Chain b = fixture_chain(k, "octahedron_equator.chain");
  ObcpSolution sol = solve_obcp(k, b);
  REQUIRE(sol.solved());
  CHECK(sol.weight == 4.0);
  CHECK(boundary(k, sol.chain) == b);
  CHECK(brute_force_obcp(k, b).weight == 4.0);

  WeightFunction south = io::parse_weights(io::read_file(data_path("octahedron_south.w")), k, 2);
  SolveOptions opts;
  opts.weights = &south;
  ObcpSolution cheap = solve_obcp(k, b, opts);
  REQUIRE(cheap.solved());
  CHECK(cheap.weight == 2.0);
  for (std::size_t i : cheap.chain.members) CHECK(k.simplex(2, i).contains(*k.vertex_of_label(5)));
}

TEST_CASE("the empty boundary is spanned by the empty chain") {
  SimplicialComplex k = fixture("octahedron.cplx");
  ObcpSolution sol = solve_obcp(k, Chain::empty(1));
  REQUIRE(sol.solved());
  CHECK(sol.weight == 0.0);
  CHECK(sol.chain.is_empty());
}

TEST_CASE("a 0-chain is bounded iff each component holds an even number of its points") {
  SimplicialComplex k = build_complex({{0, 1}, {1, 2}, {5, 6}});
  auto pts = [&](std::vector<Label> ls) {
    std::vector<Simplex> s;
    for (Label l : ls) s.push_back(Simplex{*k.vertex_of_label(l)});
    return chain_of(k, 0, s);
  };
  ObcpSolution ends = solve_obcp(k, pts({0, 2}));
  REQUIRE(ends.solved());
  CHECK(ends.weight == 2.0);
  CHECK_FALSE(solve_obcp(k, pts({0, 5})).solved());
  CHECK_FALSE(solve_obcp(k, pts({0})).solved());
}

TEST_CASE("DP agrees with the exhaustive search on random instances") {
  gen::Rng rng(41);
  for (int round = 0; round < 150; ++round) {
    const int d = 1 + round % 3;
    SimplicialComplex k = gen::random_complex(rng, shape_for(d));
    Chain b = gen::random_target(rng, k, d);
    ObcpSolution dp = solve_obcp(k, b);
    ObcpSolution oracle = brute_force_obcp(k, b);
    INFO("round " << round);
    REQUIRE(dp.solved() == oracle.solved());
    if (!dp.solved()) continue;
    CHECK(dp.weight == oracle.weight);
    CHECK(dp.chain.size() == oracle.chain.size());
    CHECK(boundary_or_empty(k, dp.chain) == b);
  }
}

TEST_CASE("weighted DP agrees with the exhaustive search") {
  gen::Rng rng(42);
  for (int round = 0; round < 100; ++round) {
    const int d = 1 + round % 3;
    SimplicialComplex k = gen::random_complex(rng, shape_for(d));
    Chain b = gen::random_target(rng, k, d);
    WeightFunction w = random_integer_weights(rng, k, d);
    SolveOptions opts;
    opts.weights = &w;
    ObcpSolution dp = solve_obcp(k, b, opts);
    ObcpSolution oracle = brute_force_obcp(k, b, &w);
    REQUIRE(dp.solved() == oracle.solved());
    if (!dp.solved()) continue;
    CHECK(dp.weight == oracle.weight);
    CHECK(chain_weight(dp.chain, w) == dp.weight);
  }
}

TEST_CASE("the answer does not depend on the decomposition") {
  gen::Rng rng(43);
  for (int round = 0; round < 60; ++round) {
    const int d = 1 + round % 3;
    SimplicialComplex k = gen::random_complex(rng, shape_for(d));
    Chain b = gen::random_target(rng, k, d);
    UndirectedGraph g = skeleton_graph(k);
    NiceTreeDecomposition ntd = make_nice(g, random_decomposition(rng, g));
    SolveOptions opts;
    opts.decomposition = &ntd;
    ObcpSolution a = solve_obcp(k, b), c = solve_obcp(k, b, opts);
    REQUIRE(a.solved() == c.solved());
    CHECK(a.weight == c.weight);
  }
}

TEST_CASE("every node table equals the exhaustive table over its scope") {
  gen::Rng rng(44);
  for (int round = 0; round < 40; ++round) {
    const int d = 1 + round % 3;
    SimplicialComplex k = gen::random_complex(rng, shape_for(d));
    Chain b = gen::random_target(rng, k, d);
    UndirectedGraph g = skeleton_graph(k);
    NiceTreeDecomposition ntd = make_nice(g, random_decomposition(rng, g));
    DpContext ctx(k, ntd, b, nullptr, WeightedLevel::Chain);
    DpRun run = run_dp(ctx, BoundedChainObjective{});
    ScopeTable scopes(k, ntd, b);
    for (std::size_t t = 0; t < ntd.node_count(); ++t) {
      auto expect = table_from_scope(ctx, scopes.at(t), nullptr, true);
      INFO("round " << round << " node " << t << " kind " << to_string(ntd.kinds[t]));
      REQUIRE(run.tables[t].size() == expect.size());
      for (const auto& [key, entry] : run.tables[t].entries) {
        REQUIRE(expect.count(key) == 1);
        CHECK(entry.cost == expect[key]);
        Chain c = Chain{d, reconstruct(ctx, run, t, key)};
        CHECK(Cost{chain_weight(c), c.size()} == entry.cost);
      }
    }
  }
}

TEST_CASE("tables stay within 2^(faces in the bag) entries") {
  gen::Rng rng(45);
  for (int round = 0; round < 60; ++round) {
    const int d = 1 + round % 3;
    SimplicialComplex k = gen::random_complex(rng, shape_for(d));
    ObcpSolution sol = solve_obcp(k, gen::random_target(rng, k, d));
    for (std::size_t t = 0; t < sol.stats.node_entries.size(); ++t) {
      CHECK(sol.stats.node_faces[t] <= sol.stats.face_bound);
      CHECK(sol.stats.node_entries[t] <= (std::size_t{1} << sol.stats.node_faces[t]));
    }
  }
}

TEST_CASE("transitions insist on the right node kind") {
  SimplicialComplex k = fixture("triangle.cplx");
  Chain b = fixture_chain(k, "triangle_boundary.chain");
  NiceTreeDecomposition ntd = default_nice_decomposition(k);
  DpContext ctx(k, ntd, b, nullptr, WeightedLevel::Chain);
  std::size_t leaf = 0;
  while (ntd.kinds[leaf] != NodeKind::Leaf) ++leaf;
  CHECK(obcp_leaf(ctx, leaf).size() == 1);
  CHECK_THROWS_AS(obcp_forget(ctx, leaf, obcp_leaf(ctx, leaf)), std::logic_error);
  CHECK_THROWS_AS(obcp_introduce(ctx, ntd.root, obcp_leaf(ctx, leaf)), std::logic_error);
}

TEST_CASE("forget tables only keep entries matching b on the forgotten faces") {
  SimplicialComplex k = fixture("triangle.cplx");
  Chain b = fixture_chain(k, "triangle_boundary.chain");
  NiceTreeDecomposition ntd = default_nice_decomposition(k);
  DpContext ctx(k, ntd, b, nullptr, WeightedLevel::Chain);
  DpRun run = run_dp(ctx, BoundedChainObjective{});
  // once the first vertex is forgotten, the triangle has been chosen or b cannot be met
  for (std::size_t t = 0; t < ntd.node_count(); ++t) {
    if (ntd.kinds[t] != NodeKind::Forget || ntd.bags[t].size() != 2) continue;
    REQUIRE(run.tables[t].size() == 1);
    CHECK(run.tables[t].entries[0].second.cost.weight == 1.0);
  }
}

TEST_CASE("budgets are refused, not truncated") {
  SimplicialComplex k = fixture("octahedron.cplx");
  SolveOptions opts;
  opts.entry_budget = 1;
  CHECK_THROWS_AS(solve_obcp(k, fixture_chain(k, "octahedron_equator.chain"), opts), BudgetExceeded);
  CHECK_THROWS_AS(brute_force_obcp(k, Chain::empty(1), nullptr, OracleBudget{16, 10}), BudgetExceeded);
}

TEST_CASE("mismatched inputs are rejected") {
  SimplicialComplex k = fixture("octahedron.cplx");
  Chain b = fixture_chain(k, "octahedron_equator.chain");
  WeightFunction edges = WeightFunction::uniform(k, 1);
  SolveOptions opts;
  opts.weights = &edges;
  CHECK_THROWS_AS(solve_obcp(k, b, opts), DimensionError);
  NiceTreeDecomposition other = default_nice_decomposition(fixture("triangle.cplx"));
  SolveOptions wrong;
  wrong.decomposition = &other;
  CHECK_THROWS_AS(solve_obcp(k, b, wrong), InvalidDecomposition);
}

TEST_CASE("homology tests on the fixtures") {
  SimplicialComplex annulus = fixture("annulus.cplx");
  Chain outer = fixture_chain(annulus, "annulus_outer.chain");
  Chain inner = fixture_chain(annulus, "annulus_inner.chain");
  CHECK_FALSE(is_null_homologous(annulus, outer));
  CHECK_FALSE(is_null_homologous(annulus, inner));
  CHECK(is_homologous(annulus, outer, inner));
  CHECK(is_homologous(annulus, outer, outer));
  SimplicialComplex oct = fixture("octahedron.cplx");
  CHECK(is_null_homologous(oct, fixture_chain(oct, "octahedron_equator.chain")));
}

TEST_CASE("homology tests agree with oracle feasibility") {
  gen::Rng rng(46);
  for (int round = 0; round < 100; ++round) {
    const int d = 1 + round % 3;
    SimplicialComplex k = gen::random_complex(rng, shape_for(d));
    Chain b = gen::random_target(rng, k, d);
    Chain h = gen::random_target(rng, k, d);
    CHECK(is_homologous(k, b, h) == brute_force_obcp(k, chain_add(b, h)).solved());
  }
}
