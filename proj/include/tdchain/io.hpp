#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tdchain/complex.hpp"
#include "tdchain/error.hpp"
#include "tdchain/tree_decomposition.hpp"

namespace tdchain::io {

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

/// Non-empty lines with '#' comments stripped, split on whitespace.
inline std::vector<Line> lines_of(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {std::istream_iterator<std::string>(in), std::istream_iterator<std::string>()}};
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

[[noreturn]] inline void fail(std::size_t line, const std::string& what) {
  throw MalformedInput("line " + std::to_string(line) + ": " + what);
}

inline Label parse_label(const std::string& token, std::size_t line) {
  Label v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    fail(line, "'" + token + "' is not an integer vertex id");
  if (v < 0) fail(line, "negative vertex id " + token);
  return v;
}

inline std::vector<Label> parse_simplex(const std::vector<std::string>& tokens, std::size_t first,
                                        std::size_t last, std::size_t line) {
  std::vector<Label> s;
  for (std::size_t i = first; i < last; ++i) s.push_back(parse_label(tokens[i], line));
  std::vector<Label> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end())
    fail(line, "vertex " + std::to_string(*it) + " repeated in a simplex");
  return sorted;
}

inline std::string join(const std::vector<Label>& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s[i]);
  }
  return out;
}

/// Dense vertex ids of a labelled simplex, or nullopt if K lacks it.
inline std::optional<Simplex> find_simplex(const SimplicialComplex& k, const std::vector<Label>& s) {
  std::vector<Vertex> ids;
  for (Label l : s) {
    auto v = k.vertex_of_label(l);
    if (!v) return std::nullopt;
    ids.push_back(*v);
  }
  Simplex simplex(std::move(ids));
  if (!k.contains(simplex)) return std::nullopt;
  return simplex;
}

}  // namespace detail

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

/// FNV-1a, 64 bit, as 16 hex digits.
inline std::string digest(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------------------
// .cplx
// ---------------------------------------------------------------------------

inline SimplicialComplex parse_complex(std::string_view text) {
  std::vector<std::vector<Label>> simplices;
  for (const auto& line : detail::lines_of(text)) {
    if (line.tokens.size() > 24) detail::fail(line.number, "simplex has more than 24 vertices");
    simplices.push_back(detail::parse_simplex(line.tokens, 0, line.tokens.size(), line.number));
  }
  return build_complex(simplices);
}

/// Maximal simplices, by dimension then lexicographically, one per line.
inline std::string serialize_complex(const SimplicialComplex& k) {
  std::string out;
  for (const Simplex& s : k.facets()) out += detail::join(k.labels_of(s)) + '\n';
  return out;
}

// ---------------------------------------------------------------------------
// .chain
// ---------------------------------------------------------------------------

inline Chain parse_chain(std::string_view text, const SimplicialComplex& k) {
  auto lines = detail::lines_of(text);
  if (lines.empty()) throw MalformedInput("chain file is empty; expected 'dim D'");
  const auto& head = lines.front();
  if (head.tokens.size() != 2 || head.tokens[0] != "dim")
    detail::fail(head.number, "expected 'dim D'");
  const Label dim = detail::parse_label(head.tokens[1], head.number);
  if (dim > 23) detail::fail(head.number, "dimension too large");
  std::vector<std::size_t> members;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    auto s = detail::parse_simplex(line.tokens, 0, line.tokens.size(), line.number);
    if (static_cast<Label>(s.size()) != dim + 1)
      detail::fail(line.number, "simplex {" + detail::join(s) + "} is not " +
                                    std::to_string(dim) + "-dimensional");
    auto found = detail::find_simplex(k, s);
    if (!found) detail::fail(line.number, "simplex {" + detail::join(s) + "} is not in the complex");
    std::size_t idx = *k.index_of(*found);
    if (std::find(members.begin(), members.end(), idx) != members.end())
      detail::fail(line.number, "simplex {" + detail::join(s) + "} listed twice");
    members.push_back(idx);
  }
  return Chain::from_indices(static_cast<int>(dim), std::move(members));
}

/// "dim D" then the simplices in canonical order, by original label.
inline std::string serialize_chain(const SimplicialComplex& k, const Chain& c) {
  check_chain(k, c);
  std::string out = "dim " + std::to_string(c.dimension) + '\n';
  for (std::size_t i : c.members) out += detail::join(k.labels_of(k.simplex(c.dimension, i))) + '\n';
  return out;
}

// ---------------------------------------------------------------------------
// .w
// ---------------------------------------------------------------------------

/// "<vertex ids> : <weight>" lines over dim-simplices; unlisted simplices weigh 1.
inline WeightFunction parse_weights(std::string_view text, const SimplicialComplex& k, int dim) {
  std::vector<double> w(k.count(dim), 1.0);
  std::vector<bool> seen(w.size(), false);
  for (const auto& line : detail::lines_of(text)) {
    auto colon = std::find(line.tokens.begin(), line.tokens.end(), ":");
    if (colon == line.tokens.end() || colon + 2 != line.tokens.end())
      detail::fail(line.number, "expected '<vertex ids> : <weight>'");
    const std::size_t split = static_cast<std::size_t>(colon - line.tokens.begin());
    auto s = detail::parse_simplex(line.tokens, 0, split, line.number);
    if (static_cast<int>(s.size()) != dim + 1)
      detail::fail(line.number, "weight given for a " + std::to_string(int(s.size()) - 1) +
                                    "-simplex, expected dimension " + std::to_string(dim));
    auto found = detail::find_simplex(k, s);
    if (!found) detail::fail(line.number, "simplex {" + detail::join(s) + "} is not in the complex");
    const std::string& token = line.tokens.back();
    char* end = nullptr;
    double value = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || !std::isfinite(value) || value < 0)
      detail::fail(line.number, "'" + token + "' is not a non-negative real");
    std::size_t idx = *k.index_of(*found);
    if (seen[idx]) detail::fail(line.number, "simplex {" + detail::join(s) + "} weighted twice");
    seen[idx] = true;
    w[idx] = value;
  }
  return WeightFunction(dim, std::move(w));
}

// ---------------------------------------------------------------------------
// .td
// ---------------------------------------------------------------------------

/// A decomposition as written: bags hold raw ids (labels or Hasse vertex ids).
struct TdFile {
  TreeDecomposition td;
  std::size_t vertex_count = 0;
};

inline TdFile parse_td(std::string_view text) {
  auto lines = detail::lines_of(text);
  std::vector<detail::Line> kept;
  for (auto& l : lines)
    if (l.tokens[0] != "c") kept.push_back(std::move(l));
  if (kept.empty()) throw MalformedInput("decomposition file has no header");
  const auto& head = kept.front();
  if (head.tokens.size() != 5 || head.tokens[0] != "s" || head.tokens[1] != "td")
    detail::fail(head.number, "expected 's td <#nodes> <max bag> <#vertices>'");
  const auto nodes = static_cast<std::size_t>(detail::parse_label(head.tokens[2], head.number));
  const auto max_bag = static_cast<std::size_t>(detail::parse_label(head.tokens[3], head.number));
  TdFile file;
  file.vertex_count = static_cast<std::size_t>(detail::parse_label(head.tokens[4], head.number));
  file.td.bags.resize(nodes);
  std::vector<bool> seen(nodes, false);
  auto node_id = [&](const std::string& token, std::size_t line) {
    Label id = detail::parse_label(token, line);
    if (id < 1 || static_cast<std::size_t>(id) > nodes)
      detail::fail(line, "node id " + token + " out of range");
    return static_cast<std::size_t>(id - 1);
  };
  for (std::size_t i = 1; i < kept.size(); ++i) {
    const auto& line = kept[i];
    if (line.tokens[0] == "b") {
      if (line.tokens.size() < 2) detail::fail(line.number, "bag line without a node id");
      std::size_t id = node_id(line.tokens[1], line.number);
      if (seen[id]) detail::fail(line.number, "bag " + line.tokens[1] + " given twice");
      seen[id] = true;
      auto bag = detail::parse_simplex(line.tokens, 2, line.tokens.size(), line.number);
      file.td.bags[id].assign(bag.begin(), bag.end());
    } else if (line.tokens.size() == 2) {
      file.td.edges.emplace_back(node_id(line.tokens[0], line.number),
                                 node_id(line.tokens[1], line.number));
    } else {
      detail::fail(line.number, "expected a bag line or a tree edge");
    }
  }
  for (std::size_t t = 0; t < nodes; ++t)
    if (!seen[t]) throw MalformedInput("bag " + std::to_string(t + 1) + " is missing");
  if (file.td.max_bag_size() != max_bag)
    detail::fail(head.number, "header declares max bag " + std::to_string(max_bag) + " but found " +
                                  std::to_string(file.td.max_bag_size()));
  return file;
}

inline std::string serialize_td(const TreeDecomposition& td, std::size_t vertex_count) {
  std::string out = "s td " + std::to_string(td.node_count()) + ' ' +
                    std::to_string(td.max_bag_size()) + ' ' + std::to_string(vertex_count) + '\n';
  for (std::size_t t = 0; t < td.node_count(); ++t) {
    out += "b " + std::to_string(t + 1);
    for (Vertex v : td.bags[t]) out += ' ' + std::to_string(v);
    out += '\n';
  }
  for (auto [a, b] : td.edges) out += std::to_string(a + 1) + ' ' + std::to_string(b + 1) + '\n';
  return out;
}

/// Replaces original labels in the bags by the complex's dense vertex ids.
inline TreeDecomposition td_from_labels(const SimplicialComplex& k, const TreeDecomposition& td) {
  TreeDecomposition out = td;
  for (auto& bag : out.bags) {
    for (Vertex& v : bag) {
      auto id = k.vertex_of_label(static_cast<Label>(v));
      if (!id) throw MalformedInput("decomposition names vertex " + std::to_string(v) +
                                    ", which is not in the complex");
      v = *id;
    }
    std::sort(bag.begin(), bag.end());
  }
  return out;
}

/// Inverse of td_from_labels.
inline TreeDecomposition td_to_labels(const SimplicialComplex& k, const TreeDecomposition& td) {
  TreeDecomposition out = td;
  for (auto& bag : out.bags)
    for (Vertex& v : bag) v = static_cast<Vertex>(k.label(v));
  return out;
}

inline std::string serialize_complex_td(const SimplicialComplex& k, const TreeDecomposition& td) {
  return serialize_td(td_to_labels(k, td), k.vertex_count());
}

}  // namespace tdchain::io
