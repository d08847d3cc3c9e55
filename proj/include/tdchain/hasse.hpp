#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "tdchain/complex.hpp"
#include "tdchain/dp_engine.hpp"
#include "tdchain/error.hpp"
#include "tdchain/graph.hpp"
#include "tdchain/oracle.hpp"
#include "tdchain/tree_decomposition.hpp"

namespace tdchain {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// d-simplices as vertices, adjacent when they share a (d-1)-face.
inline UndirectedGraph connectivity_graph(const SimplicialComplex& k, int d) {
  if (d < 1) throw DimensionError("connectivity graph needs d >= 1");
  UndirectedGraph g(k.count(d));
  std::vector<std::vector<std::size_t>> cofaces(k.count(d - 1));
  for (std::size_t i = 0; i < k.count(d); ++i) {
    const Simplex& s = k.simplex(d, i);
    for (std::size_t j = 0; j < s.size(); ++j) cofaces[*k.index_of(s.facet(j))].push_back(i);
  }
  for (const auto& list : cofaces)
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b = a + 1; b < list.size(); ++b) g.add_edge(list[a], list[b]);
  return g;
}

/**
 * Level d of the Hasse diagram. Vertex i < |K_{d-1}| is the (d-1)-simplex
 * with index i; vertex |K_{d-1}| + j is the d-simplex with index j.
 */
inline UndirectedGraph hasse_level(const SimplicialComplex& k, int d) {
  if (d < 1) throw DimensionError("Hasse level needs d >= 1");
  const std::size_t offset = k.count(d - 1);
  UndirectedGraph g(offset + k.count(d));
  for (std::size_t j = 0; j < k.count(d); ++j) {
    const Simplex& s = k.simplex(d, j);
    for (std::size_t f = 0; f < s.size(); ++f) g.add_edge(*k.index_of(s.facet(f)), offset + j);
  }
  return g;
}

/**
 * Decomposition of hasse_level(k, d) built from a decomposition of the
 * 1-skeleton: each bag becomes the (d-1)-simplices inside it, and every
 * d-simplex hangs off the first node whose bag contains it, in a pendant
 * bag holding that node's faces plus the d-simplex itself.
 */
inline TreeDecomposition hasse_td_from_skeleton(const SimplicialComplex& k,
                                                const TreeDecomposition& td, int d) {
  if (d < 1) throw DimensionError("Hasse level needs d >= 1");
  ValidationReport r = validate_decomposition(skeleton_graph(k), td);
  if (!r.ok()) throw InvalidDecomposition("skeleton decomposition is invalid: " + r.witness);
  const std::size_t offset = k.count(d - 1);
  TreeDecomposition out;
  out.edges = td.edges;
  for (const auto& bag : td.bags) {
    std::vector<Vertex> faces;
    detail::for_each_subset(bag, static_cast<std::size_t>(d), [&](const auto& pick) {
      if (auto i = k.index_of(Simplex(pick))) faces.push_back(*i);
    });
    std::sort(faces.begin(), faces.end());
    out.bags.push_back(std::move(faces));
  }
  for (std::size_t j = 0; j < k.count(d); ++j) {
    const Simplex& tau = k.simplex(d, j);
    std::size_t home = SIZE_MAX;
    for (std::size_t t = 0; t < td.node_count() && home == SIZE_MAX; ++t)
      if (tau.subset_of(td.bags[t])) home = t;
    if (home == SIZE_MAX) throw InvalidDecomposition("no bag contains a d-simplex");
    std::vector<Vertex> bag = out.bags[home];
    bag.push_back(offset + j);
    out.bags.push_back(std::move(bag));
    out.edges.emplace_back(home, out.bags.size() - 1);
  }
  return out;
}

/// The full complex on n vertices: every non-empty subset of {0..n-1}.
inline SimplicialComplex simplex_delta(std::size_t n) {
  if (n < 1) throw DimensionError("simplex_delta needs n >= 1");
  std::vector<Label> all(n);
  std::iota(all.begin(), all.end(), Label{0});
  return build_complex({all});
}

/// Largest breadth-first distance; nullopt when the graph is disconnected.
inline std::optional<std::size_t> diameter(const UndirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::size_t best = 0;
  std::vector<std::size_t> dist(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), SIZE_MAX);
    dist[s] = 0;
    std::deque<std::size_t> q{s};
    std::size_t reached = 1;
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop_front();
      for (std::size_t v : g.neighbors(u))
        if (dist[v] == SIZE_MAX) {
          dist[v] = dist[u] + 1;
          best = std::max(best, dist[v]);
          ++reached;
          q.push_back(v);
        }
    }
    if (reached != n) return std::nullopt;
  }
  return best;
}

namespace detail {

inline std::vector<std::uint64_t> adjacency_masks(const UndirectedGraph& g,
                                                  std::uint64_t max_subsets) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw DimensionError("expansion needs at least two vertices");
  if (n >= 63 || (std::uint64_t{1} << n) > max_subsets)
    throw BudgetExceeded("expansion refused: 2^" + std::to_string(n) +
                         " subsets exceed the budget of " + std::to_string(max_subsets));
  std::vector<std::uint64_t> nb(n, 0);
  for (auto [u, v] : g.edges()) {
    nb[u] |= std::uint64_t{1} << v;
    nb[v] |= std::uint64_t{1} << u;
  }
  return nb;
}

/// min over 1 <= |S| <= n/2 of measure(S) / |S|.
template <class Measure>
Rational min_ratio(std::size_t n, Measure measure) {
  const std::uint64_t full = std::uint64_t{1} << n;
  std::int64_t best_num = -1, best_den = 1;
  for (std::uint64_t s = 1; s < full; ++s) {
    const std::int64_t size = std::popcount(s);
    if (static_cast<std::size_t>(2 * size) > n) continue;
    const std::int64_t num = measure(s);
    if (best_num < 0 || num * best_den < best_num * size) {
      best_num = num;
      best_den = size;
    }
  }
  return Rational(best_num, best_den);
}

}  // namespace detail

inline constexpr std::uint64_t kDefaultSubsetBudget = std::uint64_t{1} << 22;

/// Exact min |delta(S)| / |S| over 1 <= |S| <= |V|/2.
inline Rational edge_expansion_bruteforce(const UndirectedGraph& g,
                                          std::uint64_t max_subsets = kDefaultSubsetBudget) {
  auto nb = detail::adjacency_masks(g, max_subsets);
  return detail::min_ratio(g.vertex_count(), [&](std::uint64_t s) {
    std::int64_t cut = 0;
    for (std::uint64_t r = s; r; r &= r - 1) cut += std::popcount(nb[std::countr_zero(r)] & ~s);
    return cut;
  });
}

/// Exact min |N(S)| / |S| over 1 <= |S| <= |V|/2.
inline Rational vertex_expansion_bruteforce(const UndirectedGraph& g,
                                            std::uint64_t max_subsets = kDefaultSubsetBudget) {
  auto nb = detail::adjacency_masks(g, max_subsets);
  return detail::min_ratio(g.vertex_count(), [&](std::uint64_t s) {
    std::uint64_t around = 0;
    for (std::uint64_t r = s; r; r &= r - 1) around |= nb[std::countr_zero(r)];
    return static_cast<std::int64_t>(std::popcount(around & ~s));
  });
}

/**
 * Checks that relabelling the vertices of the full complex on n vertices by
 * the bijection `f` maps Hasse level d onto itself, preserving adjacency and
 * non-adjacency.
 */
inline bool hasse_relabeling_is_automorphism(std::size_t n, int d, const std::vector<Vertex>& f) {
  if (f.size() != n) return false;
  std::vector<Vertex> sorted = f;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < n; ++i)
    if (sorted[i] != i) return false;
  SimplicialComplex k = simplex_delta(n);
  UndirectedGraph g = hasse_level(k, d);
  const std::size_t offset = k.count(d - 1);
  std::vector<std::size_t> phi(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const int dim = v < offset ? d - 1 : d;
    const Simplex& s = k.simplex(dim, v < offset ? v : v - offset);
    std::vector<Vertex> image;
    for (Vertex x : s.vertices()) image.push_back(f[x]);
    std::size_t idx = *k.index_of(Simplex(std::move(image)));
    phi[v] = dim == d ? offset + idx : idx;
  }
  std::vector<std::size_t> check = phi;
  std::sort(check.begin(), check.end());
  if (std::adjacent_find(check.begin(), check.end()) != check.end()) return false;
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    for (std::size_t v = u + 1; v < g.vertex_count(); ++v)
      if (g.has_edge(u, v) != g.has_edge(phi[u], phi[v])) return false;
  return true;
}

/// One evaluated inequality lhs >= rhs (or <=) with exact operands.
struct BoundCheck {
  std::string name;
  std::string relation;  // ">=" or "<="
  Rational lhs;
  Rational rhs;
  bool holds = true;
};

/// Identifies the graph as Hasse level d of the full complex on n vertices.
struct HasseContext {
  std::size_t n = 0;
  int d = 1;
};

struct ReportBudget {
  std::uint64_t max_subsets = kDefaultSubsetBudget;
  std::size_t max_tw_vertices = 10;
  bool measure_expansion = true;
};

struct ExpansionReport {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  /// nullopt: disconnected (infinite diameter).
  std::optional<std::size_t> diameter;
  /// Harmonic mean of min and max degree; nullopt when min degree is 0.
  std::optional<Rational> harmonic_mean;
  /// nullopt: not measured (budget or disabled).
  std::optional<Rational> vertex_expansion;
  std::optional<Rational> edge_expansion;
  std::optional<int> treewidth;
  std::optional<HasseContext> hasse;
  std::vector<BoundCheck> checks;

  bool any_violation() const {
    return std::any_of(checks.begin(), checks.end(), [](const auto& c) { return !c.holds; });
  }
};

/**
 * Measures diameter, degrees, expansions and (within budget) exact
 * treewidth, then evaluates the expansion/treewidth inequalities that link
 * them. With a Hasse context, also checks the diameter, harmonic-mean and
 * edge-expansion bounds for Hasse levels of full complexes.
 */
inline ExpansionReport bound_report(const UndirectedGraph& g,
                                    std::optional<HasseContext> hasse = std::nullopt,
                                    const ReportBudget& budget = {}) {
  ExpansionReport r;
  r.hasse = hasse;
  r.vertex_count = g.vertex_count();
  r.edge_count = g.edge_count();
  if (r.vertex_count > 0) {
    r.min_degree = SIZE_MAX;
    for (std::size_t v = 0; v < r.vertex_count; ++v) {
      r.min_degree = std::min(r.min_degree, g.degree(v));
      r.max_degree = std::max(r.max_degree, g.degree(v));
    }
  }
  r.diameter = diameter(g);
  if (r.min_degree > 0) {
    const auto a = static_cast<std::int64_t>(r.min_degree);
    const auto b = static_cast<std::int64_t>(r.max_degree);
    r.harmonic_mean = Rational(2 * a * b, a + b);
  }
  if (budget.measure_expansion && r.vertex_count >= 2) {
    try {
      r.edge_expansion = edge_expansion_bruteforce(g, budget.max_subsets);
      r.vertex_expansion = vertex_expansion_bruteforce(g, budget.max_subsets);
    } catch (const BudgetExceeded&) {
      r.edge_expansion.reset();
      r.vertex_expansion.reset();
    }
  }
  if (r.vertex_count <= budget.max_tw_vertices)
    r.treewidth = brute_force_treewidth(g, OracleBudget{1, budget.max_tw_vertices});

  auto add = [&](std::string name, Rational lhs, const char* rel, Rational rhs) {
    bool holds = std::string(rel) == ">=" ? lhs >= rhs : lhs <= rhs;
    r.checks.push_back(BoundCheck{std::move(name), rel, lhs, rhs, holds});
  };
  const auto nv = static_cast<std::int64_t>(r.vertex_count);
  const auto dmax = static_cast<std::int64_t>(r.max_degree);
  if (r.vertex_expansion && r.edge_expansion && dmax > 0)
    add("vertex_expansion >= edge_expansion / max_degree", *r.vertex_expansion, ">=",
        *r.edge_expansion / dmax);
  if (r.treewidth && r.vertex_expansion)
    add("treewidth >= vertex_expansion * |V| / 4", Rational(*r.treewidth), ">=",
        *r.vertex_expansion * nv / 4);
  if (r.treewidth && r.edge_expansion && dmax > 0)
    add("treewidth >= edge_expansion * |V| / (4 * max_degree)", Rational(*r.treewidth), ">=",
        *r.edge_expansion * nv / (4 * dmax));

  if (hasse) {
    const auto n = static_cast<std::int64_t>(hasse->n);
    const std::int64_t d = hasse->d;
    const bool spread = n >= 2 * d + 1;
    if (r.diameter)
      add("diameter <= 2d + 2", Rational(static_cast<std::int64_t>(*r.diameter)), "<=",
          Rational(2 * d + 2));
    if (spread && r.harmonic_mean) add("harmonic_mean >= d + 1", *r.harmonic_mean, ">=", Rational(d + 1));
    if (spread && r.edge_expansion) add("edge_expansion >= 1/4", *r.edge_expansion, ">=", Rational(1, 4));
    if (r.edge_expansion && r.harmonic_mean && r.diameter && *r.diameter > 0)
      add("edge_expansion >= harmonic_mean / (2 * diameter)", *r.edge_expansion, ">=",
          *r.harmonic_mean / (2 * static_cast<std::int64_t>(*r.diameter)));
    if (spread && r.treewidth)
      add("treewidth >= C(n, d+1) / (16 * (n - d))", Rational(*r.treewidth), ">=",
          Rational(static_cast<std::int64_t>(binomial(hasse->n, hasse->d + 1)), 16 * (n - d)));
  }
  return r;
}

}  // namespace tdchain
