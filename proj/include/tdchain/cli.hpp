#pragma once

// Command-line front end. Needs CLI11.hpp and json.hpp on the include path.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tdchain/complex.hpp"
#include "tdchain/error.hpp"
#include "tdchain/generate.hpp"
#include "tdchain/hasse.hpp"
#include "tdchain/io.hpp"
#include "tdchain/obcp.hpp"
#include "tdchain/ohcp.hpp"
#include "tdchain/oracle.hpp"
#include "tdchain/tree_decomposition.hpp"

namespace tdchain::cli {

using json = nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNegative = 2;

/// Environment variable overriding the per-node table budget.
inline constexpr const char* kBudgetVariable = "TDCHAIN_ENTRY_BUDGET";

inline std::uint64_t entry_budget_from_env() {
  const char* raw = std::getenv(kBudgetVariable);
  if (!raw || !*raw) return kDefaultEntryBudget;
  std::uint64_t v = 0;
  const char* end = raw + std::char_traits<char>::length(raw);
  auto [ptr, ec] = std::from_chars(raw, end, v);
  if (ec != std::errc{} || ptr != end || v == 0)
    throw Error(std::string(kBudgetVariable) + " must be a positive integer");
  return v;
}

/// Shortest decimal that reads back to the same double.
inline std::string format_weight(double w) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, w);
  return ec == std::errc{} ? std::string(buf, ptr) : std::to_string(w);
}

namespace detail {

struct Loaded {
  std::string path;
  std::string text;
};

inline Loaded load(const std::string& path) { return {path, io::read_file(path)}; }

inline json chain_json(const SimplicialComplex& k, const Chain& c) {
  json simplices = json::array();
  for (std::size_t i : c.members) simplices.push_back(k.labels_of(k.simplex(c.dimension, i)));
  return json{{"dim", c.dimension}, {"simplices", simplices}};
}

inline void print_chain(std::ostream& out, const SimplicialComplex& k, const Chain& c) {
  for (std::size_t i : c.members) {
    auto labels = k.labels_of(k.simplex(c.dimension, i));
    for (std::size_t j = 0; j < labels.size(); ++j) out << (j ? " " : "") << labels[j];
    out << '\n';
  }
}

inline json decomposition_json(const NiceTreeDecomposition& ntd) {
  return json{{"width", ntd.width()},
              {"nodes", ntd.node_count()},
              {"leaf", ntd.count(NodeKind::Leaf)},
              {"introduce", ntd.count(NodeKind::Introduce)},
              {"forget", ntd.count(NodeKind::Forget)},
              {"join", ntd.count(NodeKind::Join)}};
}

/// The user's decomposition (labels in the file) made nice, or min-fill.
inline NiceTreeDecomposition decomposition_for(const SimplicialComplex& k,
                                               const std::optional<Loaded>& td_file) {
  if (!td_file) return default_nice_decomposition(k);
  TreeDecomposition td = io::td_from_labels(k, io::parse_td(td_file->text).td);
  return make_nice(skeleton_graph(k), td);
}

inline double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

inline json hasse_report_json(const ExpansionReport& r) {
  auto rational = [](const std::optional<Rational>& q) -> json {
    return q ? json(to_string(*q)) : json(nullptr);
  };
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{{"name", c.name},
                          {"relation", c.relation},
                          {"lhs", to_string(c.lhs)},
                          {"rhs", to_string(c.rhs)},
                          {"holds", c.holds}});
  return json{{"vertices", r.vertex_count},
              {"edges", r.edge_count},
              {"min_degree", r.min_degree},
              {"max_degree", r.max_degree},
              {"diameter", r.diameter ? json(*r.diameter) : json(nullptr)},
              {"harmonic_mean", rational(r.harmonic_mean)},
              {"edge_expansion", rational(r.edge_expansion)},
              {"vertex_expansion", rational(r.vertex_expansion)},
              {"treewidth", r.treewidth ? json(*r.treewidth) : json(nullptr)},
              {"checks", checks}};
}

}  // namespace detail

/**
 * Runs one command line (without the program name). Reports go to `out`,
 * diagnostics to `err`. Returns the process exit code.
 */
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal bounded and homologous chains over tree decompositions", "tdchain"};
  app.require_subcommand(1);

  std::string complex_path, chain_path, other_path, td_path, weights_path, output_path;
  std::string strategy = "min-fill";
  bool as_json = false, exact_expansion = false;
  int hasse_dim = 1;
  std::size_t delta_n = 0, tw_limit = 16, exact_limit = 10;
  std::uint64_t max_chains = OracleBudget{}.max_chains;
  std::uint64_t seed = 1;
  std::size_t gen_vertices = 8, gen_simplices = 14, strip_length = 0;
  int gen_dim = 2;

  auto add_complex = [&](CLI::App* s) {
    s->add_option("--complex", complex_path, "complex file (.cplx)")->required();
  };
  auto add_json = [&](CLI::App* s) { s->add_flag("--json", as_json, "emit a JSON report"); };
  auto add_td = [&](CLI::App* s) { s->add_option("--td", td_path, "skeleton decomposition (.td)"); };
  auto add_weights = [&](CLI::App* s) { s->add_option("--weights", weights_path, "weights (.w)"); };

  auto* obcp = app.add_subcommand("solve-obcp", "minimum chain with a given boundary");
  add_complex(obcp);
  obcp->add_option("--boundary", chain_path, "boundary chain (.chain)")->required();
  add_td(obcp);
  add_weights(obcp);
  add_json(obcp);

  auto* ohcp = app.add_subcommand("solve-ohcp", "minimum chain homologous to a given one");
  add_complex(ohcp);
  ohcp->add_option("--chain", chain_path, "input chain (.chain)")->required();
  add_td(ohcp);
  add_weights(ohcp);
  add_json(ohcp);

  auto* homologous = app.add_subcommand("test-homologous", "are two chains homologous");
  add_complex(homologous);
  homologous->add_option("--chain", chain_path, "first chain (.chain)")->required();
  homologous->add_option("--other", other_path, "second chain (.chain)")->required();
  add_td(homologous);
  add_json(homologous);

  auto* null_homologous = app.add_subcommand("test-null-homologous", "is a chain a boundary");
  add_complex(null_homologous);
  null_homologous->add_option("--chain", chain_path, "chain (.chain)")->required();
  add_td(null_homologous);
  add_json(null_homologous);

  auto* build_td = app.add_subcommand("build-decomposition", "decompose the 1-skeleton");
  add_complex(build_td);
  build_td->add_option("--strategy", strategy, "min-fill, min-degree or exact")
      ->check(CLI::IsMember({"min-fill", "min-degree", "exact"}));
  build_td->add_option("--exact-limit", exact_limit, "largest graph for the exact strategy");
  build_td->add_option("-o,--output", output_path, "write the decomposition here");
  add_json(build_td);

  auto* hasse_td = app.add_subcommand("build-hasse-td", "decompose a Hasse level from a skeleton decomposition");
  add_complex(hasse_td);
  hasse_td->add_option("--td", td_path, "skeleton decomposition (.td)")->required();
  hasse_td->add_option("-d", hasse_dim, "level")->required()->check(CLI::PositiveNumber);
  hasse_td->add_option("-o,--output", output_path, "output decomposition (.td)")->required();
  add_json(hasse_td);

  auto* hasse_stats = app.add_subcommand("hasse-stats", "degree, diameter and expansion of a Hasse level");
  auto* hs_complex = hasse_stats->add_option("--complex", complex_path, "complex file (.cplx)");
  auto* hs_delta = hasse_stats->add_option("--delta", delta_n, "use the full complex on N vertices");
  hs_complex->excludes(hs_delta);
  hasse_stats->add_option("-d", hasse_dim, "level")->required()->check(CLI::PositiveNumber);
  hasse_stats->add_flag("--exact-expansion", exact_expansion, "brute-force expansions and treewidth");
  hasse_stats->add_option("--tw-limit", tw_limit, "largest graph for exact treewidth");
  add_json(hasse_stats);

  auto* oracle = app.add_subcommand("oracle", "exhaustive reference solvers");
  oracle->require_subcommand(1);
  auto* oracle_obcp = oracle->add_subcommand("obcp", "exhaustive bounded chain");
  add_complex(oracle_obcp);
  oracle_obcp->add_option("--boundary", chain_path, "boundary chain (.chain)")->required();
  add_weights(oracle_obcp);
  add_json(oracle_obcp);
  auto* oracle_ohcp = oracle->add_subcommand("ohcp", "exhaustive homologous chain");
  add_complex(oracle_ohcp);
  oracle_ohcp->add_option("--chain", chain_path, "input chain (.chain)")->required();
  add_weights(oracle_ohcp);
  add_json(oracle_ohcp);
  auto* oracle_tw = oracle->add_subcommand("tw", "exact treewidth of the 1-skeleton");
  add_complex(oracle_tw);
  oracle_tw->add_option("--tw-limit", tw_limit, "largest graph accepted");
  add_json(oracle_tw);
  for (auto* s : {oracle_obcp, oracle_ohcp})
    s->add_option("--max-chains", max_chains, "largest number of chains enumerated");

  auto* generate = app.add_subcommand("generate", "write a random complex and target chain");
  generate->add_option("--seed", seed, "random seed");
  generate->add_option("--vertices", gen_vertices, "most vertices")->check(CLI::Range(1, 24));
  generate->add_option("--dim", gen_dim, "dimension d of the chains solved for")->check(CLI::Range(1, 6));
  generate->add_option("--simplices", gen_simplices, "most d-simplices");
  generate->add_option("--strip", strip_length, "triangulated strip on N vertices instead");
  generate->add_option("-o,--output", output_path, "output prefix; writes PREFIX.cplx and PREFIX.chain")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  const auto start = std::chrono::steady_clock::now();
  json report;
  auto emit = [&](const std::function<void()>& plain) {
    if (as_json) {
      report["wall_time_ms"] = detail::elapsed_ms(start);
      out << report.dump(2) << '\n';
    } else {
      plain();
    }
  };

  try {
    std::optional<detail::Loaded> td_file;
    if (!td_path.empty()) td_file = detail::load(td_path);

    if (app.got_subcommand(obcp) || app.got_subcommand(ohcp) || app.got_subcommand(homologous) ||
        app.got_subcommand(null_homologous)) {
      const auto cplx = detail::load(complex_path);
      const auto first = detail::load(chain_path);
      const SimplicialComplex k = io::parse_complex(cplx.text);
      const Chain b = io::parse_chain(first.text, k);
      const NiceTreeDecomposition ntd = detail::decomposition_for(k, td_file);
      SolveOptions opts;
      opts.decomposition = &ntd;
      opts.entry_budget = entry_budget_from_env();
      std::optional<WeightFunction> weights;
      report["inputs"] = json{{"complex", io::digest(cplx.text)}, {"chain", io::digest(first.text)}};
      if (td_file) report["inputs"]["td"] = io::digest(td_file->text);
      report["decomposition"] = detail::decomposition_json(ntd);

      if (app.got_subcommand(obcp) || app.got_subcommand(ohcp)) {
        const bool bounded = app.got_subcommand(obcp);
        if (!weights_path.empty()) {
          const auto wf = detail::load(weights_path);
          weights = io::parse_weights(wf.text, k, bounded ? b.dimension + 1 : b.dimension);
          opts.weights = &*weights;
          report["inputs"]["weights"] = io::digest(wf.text);
        }
        if (bounded) {
          ObcpSolution sol = solve_obcp(k, b, opts);
          report["command"] = "solve-obcp";
          report["status"] = sol.solved() ? "solved" : "infeasible";
          report["weight"] = sol.solved() ? json(sol.weight) : json(nullptr);
          report["chain"] = sol.solved() ? detail::chain_json(k, sol.chain) : json(nullptr);
          report["peak_table_entries"] = sol.stats.peak_entries;
          report["total_table_entries"] = sol.stats.total_entries;
          emit([&] {
            if (!sol.solved()) {
              out << "infeasible\n";
              return;
            }
            out << "weight " << format_weight(sol.weight) << '\n';
            detail::print_chain(out, k, sol.chain);
          });
          return sol.solved() ? kExitOk : kExitNegative;
        }
        OhcpSolution sol = solve_ohcp(k, b, opts);
        report["command"] = "solve-ohcp";
        report["status"] = "solved";
        report["weight"] = sol.weight;
        report["homologous"] = detail::chain_json(k, sol.homologous);
        report["witness"] = detail::chain_json(k, sol.witness);
        report["peak_table_entries"] = sol.stats.peak_entries;
        report["total_table_entries"] = sol.stats.total_entries;
        emit([&] {
          out << "weight " << format_weight(sol.weight) << '\n';
          out << "homologous chain\n";
          detail::print_chain(out, k, sol.homologous);
          out << "witness\n";
          detail::print_chain(out, k, sol.witness);
        });
        return kExitOk;
      }

      Chain h = Chain::empty(b.dimension);
      if (app.got_subcommand(homologous)) {
        const auto second = detail::load(other_path);
        h = io::parse_chain(second.text, k);
        if (h.dimension != b.dimension) throw DimensionError("the two chains differ in dimension");
        report["inputs"]["other"] = io::digest(second.text);
      }
      ObcpSolution sol = solve_obcp(k, chain_add(b, h), opts);
      report["command"] = app.got_subcommand(homologous) ? "test-homologous" : "test-null-homologous";
      report["status"] = sol.solved() ? "true" : "false";
      report["weight"] = nullptr;
      report["chain"] = sol.solved() ? detail::chain_json(k, sol.chain) : json(nullptr);
      report["peak_table_entries"] = sol.stats.peak_entries;
      report["total_table_entries"] = sol.stats.total_entries;
      emit([&] { out << (sol.solved() ? "true" : "false") << '\n'; });
      return sol.solved() ? kExitOk : kExitNegative;
    }

    if (app.got_subcommand(build_td)) {
      const auto cplx = detail::load(complex_path);
      const SimplicialComplex k = io::parse_complex(cplx.text);
      const UndirectedGraph g = skeleton_graph(k);
      DecompositionStrategy s = strategy == "min-degree" ? DecompositionStrategy::MinDegree
                                : strategy == "exact"    ? DecompositionStrategy::ExactSmall
                                                         : DecompositionStrategy::MinFill;
      TreeDecomposition td = build_decomposition(g, s, exact_limit);
      const std::string text = io::serialize_complex_td(k, td);
      if (!output_path.empty()) io::write_file(output_path, text);
      report["command"] = "build-decomposition";
      report["inputs"] = json{{"complex", io::digest(cplx.text)}};
      report["strategy"] = strategy;
      report["width"] = td.width();
      report["nodes"] = td.node_count();
      emit([&] {
        if (output_path.empty())
          out << text;
        else
          out << "width " << td.width() << ", " << td.node_count() << " bags\n";
      });
      return kExitOk;
    }

    if (app.got_subcommand(hasse_td)) {
      const auto cplx = detail::load(complex_path);
      const SimplicialComplex k = io::parse_complex(cplx.text);
      const TreeDecomposition td = io::td_from_labels(k, io::parse_td(td_file->text).td);
      const TreeDecomposition out_td = hasse_td_from_skeleton(k, td, hasse_dim);
      const UndirectedGraph hasse = hasse_level(k, hasse_dim);
      io::write_file(output_path, io::serialize_td(out_td, hasse.vertex_count()));
      const std::size_t bound = binomial(td.max_bag_size(), static_cast<std::size_t>(hasse_dim)) + 1;
      report["command"] = "build-hasse-td";
      report["inputs"] = json{{"complex", io::digest(cplx.text)}, {"td", io::digest(td_file->text)}};
      report["skeleton_max_bag"] = td.max_bag_size();
      report["max_bag"] = out_td.max_bag_size();
      report["bag_bound"] = bound;
      report["nodes"] = out_td.node_count();
      report["valid"] = validate_decomposition(hasse, out_td).ok();
      emit([&] {
        out << "max bag " << out_td.max_bag_size() << " (bound " << bound << "), "
            << out_td.node_count() << " bags\n";
      });
      return kExitOk;
    }

    if (app.got_subcommand(hasse_stats)) {
      std::optional<HasseContext> context;
      SimplicialComplex k;
      report["inputs"] = json::object();
      if (delta_n > 0) {
        k = simplex_delta(delta_n);
        context = HasseContext{delta_n, hasse_dim};
        report["inputs"]["delta"] = delta_n;
      } else if (!complex_path.empty()) {
        const auto cplx = detail::load(complex_path);
        k = io::parse_complex(cplx.text);
        report["inputs"]["complex"] = io::digest(cplx.text);
      } else {
        throw MalformedInput("hasse-stats needs --complex or --delta");
      }
      if (hasse_dim > k.dimension())
        throw DimensionError("complex has no " + std::to_string(hasse_dim) + "-simplices");
      const UndirectedGraph g = hasse_level(k, hasse_dim);
      ReportBudget budget;
      budget.measure_expansion = exact_expansion;
      budget.max_tw_vertices = exact_expansion ? tw_limit : 0;
      ExpansionReport r = bound_report(g, context, budget);
      const TreeDecomposition skeleton_td = build_decomposition(skeleton_graph(k), DecompositionStrategy::MinFill);
      const TreeDecomposition h_td = hasse_td_from_skeleton(k, skeleton_td, hasse_dim);
      report["command"] = "hasse-stats";
      report["level"] = hasse_dim;
      report["graph"] = detail::hasse_report_json(r);
      report["hasse_td_width"] = h_td.width();
      report["violations"] = r.any_violation();
      emit([&] {
        out << "vertices " << r.vertex_count << ", edges " << r.edge_count << '\n';
        out << "degree " << r.min_degree << ".." << r.max_degree << '\n';
        out << "diameter " << (r.diameter ? std::to_string(*r.diameter) : "inf") << '\n';
        if (r.harmonic_mean) out << "harmonic mean " << to_string(*r.harmonic_mean) << '\n';
        if (r.edge_expansion) out << "edge expansion " << to_string(*r.edge_expansion) << '\n';
        if (r.vertex_expansion) out << "vertex expansion " << to_string(*r.vertex_expansion) << '\n';
        if (r.treewidth) out << "treewidth " << *r.treewidth << '\n';
        out << "decomposition width " << h_td.width() << '\n';
        for (const auto& c : r.checks)
          out << (c.holds ? "ok   " : "FAIL ") << c.name << ": " << to_string(c.lhs) << ' '
              << c.relation << ' ' << to_string(c.rhs) << '\n';
      });
      return kExitOk;
    }

    if (app.got_subcommand(oracle)) {
      const auto cplx = detail::load(complex_path);
      const SimplicialComplex k = io::parse_complex(cplx.text);
      report["inputs"] = json{{"complex", io::digest(cplx.text)}};
      if (oracle->got_subcommand(oracle_tw)) {
        int tw = brute_force_treewidth(skeleton_graph(k), OracleBudget{max_chains, tw_limit});
        report["command"] = "oracle tw";
        report["treewidth"] = tw;
        emit([&] { out << "treewidth " << tw << '\n'; });
        return kExitOk;
      }
      const auto first = detail::load(chain_path);
      const Chain b = io::parse_chain(first.text, k);
      report["inputs"]["chain"] = io::digest(first.text);
      const bool bounded = oracle->got_subcommand(oracle_obcp);
      std::optional<WeightFunction> weights;
      if (!weights_path.empty()) {
        const auto wf = detail::load(weights_path);
        weights = io::parse_weights(wf.text, k, bounded ? b.dimension + 1 : b.dimension);
        report["inputs"]["weights"] = io::digest(wf.text);
      }
      const WeightFunction* w = weights ? &*weights : nullptr;
      OracleBudget budget{max_chains, tw_limit};
      if (bounded) {
        ObcpSolution sol = brute_force_obcp(k, b, w, budget);
        report["command"] = "oracle obcp";
        report["status"] = sol.solved() ? "solved" : "infeasible";
        report["weight"] = sol.solved() ? json(sol.weight) : json(nullptr);
        report["chain"] = sol.solved() ? detail::chain_json(k, sol.chain) : json(nullptr);
        emit([&] {
          if (!sol.solved()) {
            out << "infeasible\n";
            return;
          }
          out << "weight " << format_weight(sol.weight) << '\n';
          detail::print_chain(out, k, sol.chain);
        });
        return sol.solved() ? kExitOk : kExitNegative;
      }
      OhcpSolution sol = brute_force_ohcp(k, b, w, budget);
      report["command"] = "oracle ohcp";
      report["status"] = "solved";
      report["weight"] = sol.weight;
      report["homologous"] = detail::chain_json(k, sol.homologous);
      report["witness"] = detail::chain_json(k, sol.witness);
      emit([&] {
        out << "weight " << format_weight(sol.weight) << '\n';
        out << "homologous chain\n";
        detail::print_chain(out, k, sol.homologous);
        out << "witness\n";
        detail::print_chain(out, k, sol.witness);
      });
      return kExitOk;
    }

    if (app.got_subcommand(generate)) {
      gen::Rng rng(seed);
      SimplicialComplex k;
      Chain b;
      if (strip_length > 0) {
        k = gen::triangulated_strip(strip_length);
        Chain all = Chain::empty(2);
        for (std::size_t i = 0; i < k.count(2); ++i) all.members.push_back(i);
        b = boundary(k, all);
      } else {
        gen::ComplexShape shape;
        shape.max_vertices = std::max<std::size_t>(gen_vertices, static_cast<std::size_t>(gen_dim) + 1);
        shape.dimension = gen_dim;
        shape.max_top_simplices = gen_simplices;
        k = gen::random_complex(rng, shape);
        b = gen::random_target(rng, k, gen_dim);
      }
      io::write_file(output_path + ".cplx", io::serialize_complex(k));
      io::write_file(output_path + ".chain", io::serialize_chain(k, b));
      out << "wrote " << output_path << ".cplx and " << output_path << ".chain\n";
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace tdchain::cli
