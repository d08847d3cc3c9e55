#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "tdchain/complex.hpp"
#include "tdchain/error.hpp"

namespace tdchain::gen {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi]; plain modulo keeps streams identical across standard libraries.
inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

struct ComplexShape {
  std::size_t max_vertices = 8;
  int dimension = 2;
  std::size_t max_top_simplices = 14;
  /// Extra random edges thrown in as maximal simplices (only when d >= 2).
  std::size_t max_extra_edges = 3;
};

/**
 * Random complex whose top simplices are random (d+1)-subsets of at most
 * max_vertices vertices, plus a few stray edges. Vertex labels are shuffled
 * and spaced out so that relabelling is exercised.
 */
inline SimplicialComplex random_complex(Rng& rng, const ComplexShape& shape) {
  const auto d = static_cast<std::size_t>(shape.dimension);
  if (shape.max_vertices < d + 1) throw DimensionError("too few vertices for the dimension");
  const std::size_t n = pick(rng, d + 1, shape.max_vertices);
  const std::size_t want = pick(rng, 1, std::max<std::size_t>(shape.max_top_simplices, 1));
  std::vector<Label> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = static_cast<Label>(3 * i + pick(rng, 0, 2));
  std::shuffle(names.begin(), names.end(), rng);

  std::set<std::vector<Label>> tops;
  std::vector<std::size_t> ids(n);
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  for (std::size_t tries = 0; tops.size() < want && tries < 20 * want; ++tries) {
    std::shuffle(ids.begin(), ids.end(), rng);
    std::vector<Label> s;
    for (std::size_t i = 0; i <= d; ++i) s.push_back(names[ids[i]]);
    std::sort(s.begin(), s.end());
    tops.insert(s);
  }
  std::vector<std::vector<Label>> facets(tops.begin(), tops.end());
  const std::size_t extra =
      (d >= 2 && shape.max_extra_edges) ? pick(rng, 0, shape.max_extra_edges) : 0;
  for (std::size_t e = 0; e < extra && n >= 2; ++e) {
    std::size_t a = pick(rng, 0, n - 1), b = pick(rng, 0, n - 1);
    if (a != b) facets.push_back({names[a], names[b]});
  }
  for (Label l : names) facets.push_back({l});
  return build_complex(facets);
}

/// Uniformly random subset of the dim-simplices.
inline Chain random_chain(Rng& rng, const SimplicialComplex& k, int dim) {
  Chain c = Chain::empty(dim);
  for (std::size_t i = 0; i < k.count(dim); ++i)
    if (rng() & 1) c.members.push_back(i);
  return c;
}

/**
 * Target (d-1)-chain for a d-dimensional problem: half the time the
 * boundary of a random d-chain (always feasible), otherwise arbitrary.
 */
inline Chain random_target(Rng& rng, const SimplicialComplex& k, int d) {
  if (d >= 1 && (rng() & 1)) {
    Chain c = random_chain(rng, k, d);
    return c.is_empty() ? Chain::empty(d - 1) : boundary(k, c);
  }
  return random_chain(rng, k, d - 1);
}

/// Triangles {i, i+1, i+2} for i < n-2: a strip of pathwidth 2.
inline SimplicialComplex triangulated_strip(std::size_t n) {
  if (n < 3) throw DimensionError("a strip needs at least three vertices");
  std::vector<std::vector<Label>> tris;
  for (std::size_t i = 0; i + 2 < n; ++i)
    tris.push_back({static_cast<Label>(i), static_cast<Label>(i + 1), static_cast<Label>(i + 2)});
  return build_complex(tris);
}

}  // namespace tdchain::gen
