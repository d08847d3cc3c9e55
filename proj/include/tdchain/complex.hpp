#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tdchain/error.hpp"
#include "tdchain/graph.hpp"

namespace tdchain {

/// Dense vertex identifier inside a complex (0..n-1).
using Vertex = std::size_t;
/// Vertex identifier as it appears in input files.
using Label = std::int64_t;

/**
 * A simplex stored as its strictly increasing vertex sequence.
 */
class Simplex {
 public:
  Simplex() = default;

  /// Canonicalizes an arbitrary vertex list; duplicates are malformed input.
  explicit Simplex(std::vector<Vertex> vertices) : v_(std::move(vertices)) {
    std::sort(v_.begin(), v_.end());
    if (std::adjacent_find(v_.begin(), v_.end()) != v_.end())
      throw MalformedInput("simplex lists vertex " +
                           std::to_string(*std::adjacent_find(v_.begin(), v_.end())) +
                           " twice");
  }
  Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

  int dimension() const { return static_cast<int>(v_.size()) - 1; }
  std::size_t size() const { return v_.size(); }
  const std::vector<Vertex>& vertices() const { return v_; }
  Vertex operator[](std::size_t i) const { return v_[i]; }

  bool contains(Vertex v) const { return std::binary_search(v_.begin(), v_.end(), v); }

  /// True when every vertex of this simplex lies in the sorted range `set`.
  bool subset_of(std::span<const Vertex> sorted_set) const {
    return std::includes(sorted_set.begin(), sorted_set.end(), v_.begin(), v_.end());
  }

  /// The face with position `i` removed.
  Simplex facet(std::size_t i) const {
    Simplex f;
    f.v_.reserve(v_.size() - 1);
    for (std::size_t j = 0; j < v_.size(); ++j)
      if (j != i) f.v_.push_back(v_[j]);
    return f;
  }

  friend auto operator<=>(const Simplex&, const Simplex&) = default;
  friend bool operator==(const Simplex&, const Simplex&) = default;

 private:
  std::vector<Vertex> v_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Vertex v : s.vertices()) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/**
 * An immutable simplicial complex closed under taking faces.
 *
 * Vertices are dense ids 0..n-1; `labels()[v]` recovers the identifier the
 * vertex had in the input. Per dimension, simplices are sorted
 * lexicographically and a simplex's position in that list is its index.
 */
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Builds from per-dimension simplex sets that are already closed under faces.
  static SimplicialComplex from_closed_levels(std::vector<std::vector<Simplex>> levels,
                                              std::vector<Label> labels) {
    SimplicialComplex k;
    while (!levels.empty() && levels.back().empty()) levels.pop_back();
    k.levels_ = std::move(levels);
    k.labels_ = std::move(labels);
    k.index_.resize(k.levels_.size());
    for (std::size_t d = 0; d < k.levels_.size(); ++d) {
      auto& level = k.levels_[d];
      std::sort(level.begin(), level.end());
      level.erase(std::unique(level.begin(), level.end()), level.end());
      k.index_[d].reserve(level.size());
      for (std::size_t i = 0; i < level.size(); ++i) k.index_[d].emplace(level[i], i);
    }
    for (std::size_t i = 0; i < k.labels_.size(); ++i) k.label_index_.emplace(k.labels_[i], i);
    return k;
  }

  /// Largest simplex dimension, -1 for the empty complex.
  int dimension() const { return static_cast<int>(levels_.size()) - 1; }
  std::size_t vertex_count() const { return count(0); }

  std::size_t count(int dim) const {
    if (dim < 0 || dim >= static_cast<int>(levels_.size())) return 0;
    return levels_[dim].size();
  }

  const std::vector<Simplex>& simplices(int dim) const {
    static const std::vector<Simplex> kEmpty;
    if (dim < 0 || dim >= static_cast<int>(levels_.size())) return kEmpty;
    return levels_[dim];
  }

  const Simplex& simplex(int dim, std::size_t index) const { return levels_.at(dim).at(index); }

  std::optional<std::size_t> index_of(const Simplex& s) const {
    int d = s.dimension();
    if (d < 0 || d >= static_cast<int>(levels_.size())) return std::nullopt;
    auto it = index_[d].find(s);
    if (it == index_[d].end()) return std::nullopt;
    return it->second;
  }

  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  const std::vector<Label>& labels() const { return labels_; }
  Label label(Vertex v) const { return labels_.at(v); }
  std::optional<Vertex> vertex_of_label(Label l) const {
    auto it = label_index_.find(l);
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
  }

  /// Original labels of a simplex, in canonical order.
  std::vector<Label> labels_of(const Simplex& s) const {
    std::vector<Label> out;
    out.reserve(s.size());
    for (Vertex v : s.vertices()) out.push_back(labels_[v]);
    return out;
  }

  /// Simplices that are not a proper face of any other simplex.
  std::vector<Simplex> facets() const {
    std::vector<Simplex> out;
    for (int d = 0; d <= dimension(); ++d) {
      std::vector<bool> covered(count(d), false);
      for (const Simplex& s : simplices(d + 1))
        for (std::size_t i = 0; i < s.size(); ++i) covered[*index_of(s.facet(i))] = true;
      for (std::size_t i = 0; i < count(d); ++i)
        if (!covered[i]) out.push_back(levels_[d][i]);
    }
    return out;
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.levels_ == b.levels_ && a.labels_ == b.labels_;
  }

 private:
  std::vector<std::vector<Simplex>> levels_;
  std::vector<std::unordered_map<Simplex, std::size_t, SimplexHash>> index_;
  std::vector<Label> labels_;
  std::unordered_map<Label, Vertex> label_index_;
};

/**
 * Face closure of a list of simplices given by vertex labels.
 *
 * Labels are mapped to dense ids in increasing label order, so the canonical
 * ordering of simplices agrees with the ordering of their labels.
 */
inline SimplicialComplex build_complex(const std::vector<std::vector<Label>>& maximal_simplices) {
  std::set<Label> distinct;
  for (const auto& s : maximal_simplices) {
    std::set<Label> seen;
    for (Label l : s) {
      if (l < 0) throw MalformedInput("negative vertex id " + std::to_string(l));
      if (!seen.insert(l).second)
        throw MalformedInput("simplex lists vertex " + std::to_string(l) + " twice");
    }
    if (s.size() > 24) throw MalformedInput("simplex with more than 24 vertices");
    distinct.insert(s.begin(), s.end());
  }
  std::vector<Label> labels(distinct.begin(), distinct.end());
  std::map<Label, Vertex> dense;
  for (std::size_t i = 0; i < labels.size(); ++i) dense.emplace(labels[i], i);

  std::vector<std::set<Simplex>> levels;
  for (const auto& s : maximal_simplices) {
    if (s.empty()) continue;
    std::vector<Vertex> vs;
    for (Label l : s) vs.push_back(dense.at(l));
    std::sort(vs.begin(), vs.end());
    if (levels.size() < vs.size()) levels.resize(vs.size());
    const std::uint32_t full = (1u << vs.size());
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      std::vector<Vertex> face;
      for (std::size_t i = 0; i < vs.size(); ++i)
        if (mask & (1u << i)) face.push_back(vs[i]);
      std::size_t d = face.size() - 1;
      levels[d].insert(Simplex(std::move(face)));
    }
  }
  std::vector<std::vector<Simplex>> out;
  for (auto& level : levels) out.emplace_back(level.begin(), level.end());
  return SimplicialComplex::from_closed_levels(std::move(out), std::move(labels));
}

/**
 * A Z2 chain: a dimension and a sorted set of simplex indices.
 */
struct Chain {
  int dimension = 0;
  std::vector<std::size_t> members;

  static Chain empty(int dim) { return Chain{dim, {}}; }

  /// Sorts the indices; a repeated index is refused rather than cancelled.
  static Chain from_indices(int dim, std::vector<std::size_t> indices) {
    std::sort(indices.begin(), indices.end());
    if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
      throw MalformedInput("chain lists a simplex twice");
    return Chain{dim, std::move(indices)};
  }

  std::size_t size() const { return members.size(); }
  bool is_empty() const { return members.empty(); }
  bool contains(std::size_t i) const {
    return std::binary_search(members.begin(), members.end(), i);
  }

  friend bool operator==(const Chain&, const Chain&) = default;
};

/// Looks up each simplex and builds the chain; throws if one is missing from `k`.
inline Chain chain_of(const SimplicialComplex& k, int dim, const std::vector<Simplex>& simplices) {
  std::vector<std::size_t> idx;
  idx.reserve(simplices.size());
  for (const Simplex& s : simplices) {
    if (s.dimension() != dim) throw DimensionError("simplex dimension does not match chain");
    auto i = k.index_of(s);
    if (!i) throw MalformedInput("simplex is not in the complex");
    idx.push_back(*i);
  }
  return Chain::from_indices(dim, std::move(idx));
}

inline void check_chain(const SimplicialComplex& k, const Chain& c) {
  if (c.dimension < 0) throw DimensionError("negative chain dimension");
  for (std::size_t i : c.members)
    if (i >= k.count(c.dimension))
      throw MalformedInput("chain references simplex index " + std::to_string(i) +
                           " outside the complex");
}

/// Symmetric difference of two chains of the same dimension.
inline Chain chain_add(const Chain& a, const Chain& b) {
  if (a.dimension != b.dimension)
    throw DimensionError("cannot add a " + std::to_string(a.dimension) + "-chain and a " +
                         std::to_string(b.dimension) + "-chain");
  Chain out{a.dimension, {}};
  out.members.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.members.begin(), a.members.end(), b.members.begin(),
                                b.members.end(), std::back_inserter(out.members));
  return out;
}

/// Z2 boundary: each simplex contributes all of its codimension-one faces.
inline Chain boundary(const SimplicialComplex& k, const Chain& c) {
  if (c.dimension < 1)
    throw DimensionError("boundary of a " + std::to_string(c.dimension) +
                         "-chain is not supported");
  check_chain(k, c);
  std::vector<std::size_t> faces;
  for (std::size_t i : c.members) {
    const Simplex& s = k.simplex(c.dimension, i);
    for (std::size_t j = 0; j < s.size(); ++j) faces.push_back(*k.index_of(s.facet(j)));
  }
  std::sort(faces.begin(), faces.end());
  Chain out{c.dimension - 1, {}};
  for (std::size_t i = 0; i < faces.size();) {
    std::size_t j = i;
    while (j < faces.size() && faces[j] == faces[i]) ++j;
    if ((j - i) % 2 == 1) out.members.push_back(faces[i]);
    i = j;
  }
  return out;
}

/**
 * Non-negative weights on the simplices of one dimension.
 */
class WeightFunction {
 public:
  WeightFunction() = default;
  WeightFunction(int dim, std::vector<double> weights) : dim_(dim), w_(std::move(weights)) {
    for (double x : w_)
      if (!(x >= 0.0) || !std::isfinite(x))
        throw MalformedInput("weights must be finite and non-negative");
  }

  static WeightFunction uniform(const SimplicialComplex& k, int dim, double value = 1.0) {
    return WeightFunction(dim, std::vector<double>(k.count(dim), value));
  }

  int dimension() const { return dim_; }
  std::size_t size() const { return w_.size(); }
  double operator()(std::size_t index) const { return w_.at(index); }
  const std::vector<double>& values() const { return w_; }

 private:
  int dim_ = 0;
  std::vector<double> w_;
};

inline double chain_weight(const Chain& c) { return static_cast<double>(c.size()); }

inline double chain_weight(const Chain& c, const WeightFunction& w) {
  if (w.dimension() != c.dimension)
    throw DimensionError("weight function dimension does not match chain");
  double total = 0.0;
  for (std::size_t i : c.members) total += w(i);
  return total;
}

inline double chain_weight(const Chain& c, const WeightFunction* w) {
  return w ? chain_weight(c, *w) : chain_weight(c);
}

/**
 * Result of restricting a complex to a vertex set, with maps from the
 * subcomplex's vertex ids and simplex indices back to the parent.
 */
struct Subcomplex {
  SimplicialComplex complex;
  std::vector<Vertex> vertex_to_parent;
  std::vector<std::vector<std::size_t>> index_to_parent;
};

/// K[U]: every simplex of `k` whose vertices all lie in `u`.
inline Subcomplex induced_subcomplex(const SimplicialComplex& k, std::vector<Vertex> u) {
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  u.erase(std::remove_if(u.begin(), u.end(), [&](Vertex v) { return v >= k.vertex_count(); }),
          u.end());
  std::vector<std::size_t> to_local(k.vertex_count(), SIZE_MAX);
  for (std::size_t i = 0; i < u.size(); ++i) to_local[u[i]] = i;

  Subcomplex sub;
  sub.vertex_to_parent = u;
  std::vector<std::vector<Simplex>> levels;
  for (int d = 0; d <= k.dimension(); ++d) {
    std::vector<Simplex> level;
    std::vector<std::size_t> back;
    const auto& all = k.simplices(d);
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (!all[i].subset_of(u)) continue;
      std::vector<Vertex> local;
      for (Vertex v : all[i].vertices()) local.push_back(to_local[v]);
      level.emplace_back(std::move(local));
      back.push_back(i);
    }
    if (level.empty()) break;
    levels.push_back(std::move(level));
    sub.index_to_parent.push_back(std::move(back));
  }
  std::vector<Label> labels;
  for (Vertex v : u) labels.push_back(k.label(v));
  sub.complex = SimplicialComplex::from_closed_levels(std::move(levels), std::move(labels));
  return sub;
}

/// Graph on the complex's vertices with its edges.
inline UndirectedGraph skeleton_graph(const SimplicialComplex& k) {
  UndirectedGraph g(k.vertex_count());
  for (const Simplex& e : k.simplices(1)) g.add_edge(e[0], e[1]);
  return g;
}

}  // namespace tdchain
