#include <map>

#include "catch_amalgamated.hpp"

#include "support.hpp"

using namespace tdchain;
using namespace testing_support;

TEST_CASE("octahedron equator is null-homologous") {
  SimplicialComplex k = fixture("octahedron.cplx");
  Chain b = fixture_chain(k, "octahedron_equator.chain");
  OhcpSolution sol = solve_ohcp(k, b);
  CHECK(sol.weight == 0.0);
  CHECK(sol.homologous.is_empty());
  CHECK(boundary(k, sol.witness) == b);
  CHECK(brute_force_ohcp(k, b).weight == 0.0);
}

TEST_CASE("annulus outer cycle shrinks to the inner 3-cycle") {
  SimplicialComplex k = fixture("annulus.cplx");
  Chain outer = fixture_chain(k, "annulus_outer.chain");
  OhcpSolution sol = solve_ohcp(k, outer);
  CHECK(sol.weight == 3.0);
  CHECK(sol.homologous == fixture_chain(k, "annulus_inner.chain"));
  CHECK(chain_add(outer, sol.homologous) == boundary(k, sol.witness));
  CHECK(brute_force_ohcp(k, outer).weight == 3.0);
}

TEST_CASE("an already minimal chain is returned with an empty witness") {
  SimplicialComplex k = fixture("annulus.cplx");
  Chain inner = fixture_chain(k, "annulus_inner.chain");
  OhcpSolution sol = solve_ohcp(k, inner);
  CHECK(sol.weight == 3.0);
  CHECK(sol.homologous == inner);
  CHECK(sol.witness.is_empty());
}

TEST_CASE("edge weights steer the homologous cycle") {
  SimplicialComplex k = fixture("annulus.cplx");
  Chain outer = fixture_chain(k, "annulus_outer.chain");
  std::vector<double> w(k.count(1), 1.0);
  for (std::size_t i : fixture_chain(k, "annulus_inner.chain").members) w[i] = 5.0;
  WeightFunction weights(1, w);
  SolveOptions opts;
  opts.weights = &weights;
  OhcpSolution sol = solve_ohcp(k, outer, opts);
  CHECK(sol.weight == brute_force_ohcp(k, outer, &weights).weight);
  CHECK(sol.weight == chain_weight(sol.homologous, weights));
  CHECK(sol.weight <= 6.0);
  WeightFunction faces = WeightFunction::uniform(k, 2);
  SolveOptions wrong;
  wrong.weights = &faces;
  CHECK_THROWS_AS(solve_ohcp(k, outer, wrong), DimensionError);
}

TEST_CASE("DP agrees with the exhaustive search on random instances") {
  gen::Rng rng(51);
  for (int round = 0; round < 150; ++round) {
    const int d = 1 + round % 3;
    SimplicialComplex k = gen::random_complex(rng, shape_for(d));
    Chain b = gen::random_chain(rng, k, d - 1);
    OhcpSolution dp = solve_ohcp(k, b);
    OhcpSolution oracle = brute_force_ohcp(k, b);
    INFO("round " << round);
    CHECK(dp.weight == oracle.weight);
    CHECK(dp.homologous == chain_add(b, boundary_or_empty(k, dp.witness)));
    CHECK(chain_weight(dp.homologous) == dp.weight);
  }
}

TEST_CASE("weighted DP agrees with the exhaustive search") {
  gen::Rng rng(52);
  for (int round = 0; round < 100; ++round) {
    const int d = 1 + round % 3;
    SimplicialComplex k = gen::random_complex(rng, shape_for(d));
    Chain b = gen::random_target(rng, k, d);
    std::vector<double> w(k.count(d - 1));
    for (double& x : w) x = static_cast<double>(rng() % 4);
    WeightFunction weights(d - 1, w);
    SolveOptions opts;
    opts.weights = &weights;
    OhcpSolution dp = solve_ohcp(k, b, opts);
    CHECK(dp.weight == brute_force_ohcp(k, b, &weights).weight);
    CHECK(dp.weight == chain_weight(dp.homologous, weights));
  }
}

TEST_CASE("node tables equal the exhaustive tables over each scope") {
  gen::Rng rng(53);
  for (int round = 0; round < 30; ++round) {
    const int d = 1 + round % 3;
    SimplicialComplex k = gen::random_complex(rng, shape_for(d));
    Chain b = gen::random_chain(rng, k, d - 1);
    UndirectedGraph g = skeleton_graph(k);
    NiceTreeDecomposition ntd = make_nice(g, random_decomposition(rng, g));
    DpContext ctx(k, ntd, b, nullptr, WeightedLevel::Boundary);
    DpRun run = run_dp(ctx, HomologousChainObjective{});
    ScopeTable scopes(k, ntd, b);
    for (std::size_t t = 0; t < ntd.node_count(); ++t) {
      const RootedScope& s = scopes.at(t);
      const auto& tops = s.in_dimension(d);
      const auto& faces = ctx.frame(t).faces;
      std::map<ChainKey, Cost> expect;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << tops.size()); ++mask) {
        Chain c = Chain::empty(d);
        for (std::size_t i = 0; i < tops.size(); ++i)
          if (mask >> i & 1) c.members.push_back(tops[i]);
        Chain bd = boundary_or_empty(k, c);
        Chain h = chain_add(restrict_to(bd, faces, false), s.partial_boundary);
        Cost cost{chain_weight(h), h.size()};
        auto [it, fresh] = expect.try_emplace(chain_key(ctx, t, restrict_to(bd, faces, true)), cost);
        if (!fresh && cost < it->second) it->second = cost;
      }
      INFO("round " << round << " node " << t);
      REQUIRE(run.tables[t].size() == expect.size());
      for (const auto& [key, entry] : run.tables[t].entries) CHECK(entry.cost == expect.at(key));
    }
  }
}

TEST_CASE("transition wrappers check node kinds") {
  SimplicialComplex k = fixture("triangle.cplx");
  Chain b = fixture_chain(k, "triangle_edge.chain");
  NiceTreeDecomposition ntd = default_nice_decomposition(k);
  DpContext ctx(k, ntd, b, nullptr, WeightedLevel::Boundary);
  CHECK_THROWS_AS(ohcp_leaf(ctx, ntd.root), std::logic_error);
  CHECK_THROWS_AS(ohcp_join(ctx, ntd.root, leaf_table(), leaf_table()), std::logic_error);
}

TEST_CASE("a lone edge of the triangle is homologous to the other two") {
  SimplicialComplex k = fixture("triangle.cplx");
  Chain b = fixture_chain(k, "triangle_edge.chain");
  OhcpSolution sol = solve_ohcp(k, b);
  CHECK(sol.weight == 1.0);
  CHECK(sol.homologous == b);
}
