// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numeric>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "support.hpp"
#include "tdchain/cli.hpp"

using namespace tdchain;
using namespace testing_support;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Instance {
  int d;
  SimplicialComplex k;
  Chain b;
  Chain other;
};

/// The shared random family: <= 8 vertices, <= 14 d-simplices, d in {1, 2, 3}.
const std::vector<Instance>& family() {
  static const std::vector<Instance> all = [] {
    std::vector<Instance> out;
    gen::Rng rng(20240601);
    for (int i = 0; i < 150; ++i) {
      const int d = 1 + i % 3;
      SimplicialComplex k = gen::random_complex(rng, shape_for(d));
      Chain b = gen::random_target(rng, k, d);
      Chain h = gen::random_target(rng, k, d);
      out.push_back({d, std::move(k), std::move(b), std::move(h)});
    }
    return out;
  }();
  return all;
}

bool within_family(const Instance& in) {
  return in.k.vertex_count() <= 8 && in.k.count(in.d) <= 14;
}

Outcome oracle_obcp() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t infeasible = 0;
  for (std::size_t i = 0; i < family().size(); ++i) {
    const Instance& in = family()[i];
    o.require(within_family(in), "instance " + std::to_string(i) + " outside the family");
    ObcpSolution dp = solve_obcp(in.k, in.b);
    ObcpSolution ex = brute_force_obcp(in.k, in.b);
    o.require(dp.solved() == ex.solved(), "feasibility differs on instance " + std::to_string(i));
    if (dp.solved() && ex.solved())
      o.require(dp.weight == ex.weight, "weight differs on instance " + std::to_string(i));
    infeasible += !ex.solved();
  }
  const double secs = seconds_since(start);
  o.require(secs <= 60.0, "took " + std::to_string(secs) + " s");
  if (o.pass)
    o.detail = std::to_string(family().size()) + " instances (" + std::to_string(infeasible) +
               " infeasible), " + std::to_string(secs) + " s";
  return o;
}

Outcome oracle_ohcp() {
  Outcome o;
  for (std::size_t i = 0; i < family().size(); ++i) {
    const Instance& in = family()[i];
    OhcpSolution dp = solve_ohcp(in.k, in.b);
    OhcpSolution ex = brute_force_ohcp(in.k, in.b);
    o.require(dp.weight == ex.weight, "weight differs on instance " + std::to_string(i));
    o.require(dp.homologous == chain_add(in.b, boundary_or_empty(in.k, dp.witness)),
              "h != b + boundary(c) on instance " + std::to_string(i));
  }
  if (o.pass) o.detail = std::to_string(family().size()) + " instances";
  return o;
}

Outcome witness_soundness() {
  Outcome o;
  std::size_t solved = 0;
  for (std::size_t i = 0; i < family().size(); ++i) {
    const Instance& in = family()[i];
    ObcpSolution a = solve_obcp(in.k, in.b);
    if (a.solved()) {
      ++solved;
      o.require(boundary_or_empty(in.k, a.chain) == in.b, "boundary(c) != b on instance " + std::to_string(i));
      o.require(chain_weight(a.chain) == a.weight, "OBCP weight mismatch on instance " + std::to_string(i));
    }
    OhcpSolution h = solve_ohcp(in.k, in.b);
    ++solved;
    o.require(chain_add(in.b, h.homologous) == boundary_or_empty(in.k, h.witness),
              "b + h != boundary(c) on instance " + std::to_string(i));
    o.require(chain_weight(h.homologous) == h.weight, "OHCP weight mismatch on instance " + std::to_string(i));
  }
  if (o.pass) o.detail = std::to_string(solved) + " solved runs checked";
  return o;
}

Outcome named_fixtures() {
  Outcome o;
  SimplicialComplex oct = fixture("octahedron.cplx");
  Chain equator = fixture_chain(oct, "octahedron_equator.chain");
  ObcpSolution oct_b = solve_obcp(oct, equator);
  o.require(oct_b.solved() && oct_b.weight == 4.0, "octahedron OBCP is not 4");
  o.require(brute_force_obcp(oct, equator).weight == 4.0, "oracle disagrees on octahedron OBCP");
  o.require(solve_ohcp(oct, equator).weight == 0.0, "octahedron OHCP is not 0");
  o.require(brute_force_ohcp(oct, equator).weight == 0.0, "oracle disagrees on octahedron OHCP");

  SimplicialComplex ann = fixture("annulus.cplx");
  Chain outer = fixture_chain(ann, "annulus_outer.chain");
  o.require(solve_ohcp(ann, outer).weight == 3.0, "annulus OHCP is not 3");
  o.require(brute_force_ohcp(ann, outer).weight == 3.0, "oracle disagrees on annulus OHCP");
  o.require(!is_null_homologous(ann, outer), "annulus outer cycle reported null-homologous");
  o.require(!brute_force_obcp(ann, outer).solved(), "oracle finds a chain bounded by the outer cycle");

  SimplicialComplex tri = fixture("triangle.cplx");
  Chain rim = fixture_chain(tri, "triangle_boundary.chain");
  ObcpSolution t = solve_obcp(tri, rim);
  o.require(t.solved() && t.weight == 1.0, "triangle OBCP is not 1");
  o.require(brute_force_obcp(tri, rim).weight == 1.0, "oracle disagrees on triangle");
  if (o.pass) o.detail = "octahedron 4/0, annulus 3/not null-homologous, triangle 1";
  return o;
}

Outcome homology_tests() {
  Outcome o;
  std::size_t yes = 0;
  for (std::size_t i = 0; i < family().size(); ++i) {
    const Instance& in = family()[i];
    const bool dp = is_homologous(in.k, in.b, in.other);
    const bool ex = brute_force_obcp(in.k, chain_add(in.b, in.other)).solved();
    o.require(dp == ex, "homology test differs on instance " + std::to_string(i));
    yes += dp;
  }
  if (o.pass)
    o.detail = std::to_string(family().size()) + " pairs, " + std::to_string(yes) + " homologous";
  return o;
}

Outcome table_bound() {
  Outcome o;
  std::size_t nodes = 0;
  auto check = [&](const TableStats& s, std::size_t i) {
    const std::size_t exponent = std::min<std::size_t>(s.face_bound, 63);
    for (std::size_t t = 0; t < s.node_entries.size(); ++t) {
      ++nodes;
      o.require(s.node_entries[t] <= (std::uint64_t{1} << exponent),
                "node " + std::to_string(t) + " of instance " + std::to_string(i) + " too large");
    }
  };
  for (std::size_t i = 0; i < family().size(); ++i) {
    const Instance& in = family()[i];
    check(solve_obcp(in.k, in.b).stats, i);
    check(solve_ohcp(in.k, in.b).stats, i);
  }
  if (o.pass) o.detail = std::to_string(nodes) + " node tables within 2^C(s,d)";
  return o;
}

Outcome hasse_construction() {
  Outcome o;
  gen::Rng rng(77);
  std::size_t cases = 0;
  for (int i = 0; i < 60; ++i) {
    const int d = 1 + i % 3;
    SimplicialComplex k = gen::random_complex(rng, shape_for(d));
    TreeDecomposition td = random_decomposition(rng, skeleton_graph(k));
    o.require(validate_decomposition(skeleton_graph(k), td).ok(), "random skeleton decomposition invalid");
    TreeDecomposition h = hasse_td_from_skeleton(k, td, d);
    ValidationReport r = validate_decomposition(hasse_level(k, d), h);
    o.require(r.is_tree && r.vertex_coverage && r.edge_coverage && r.connectivity,
              "case " + std::to_string(i) + ": " + r.witness);
    o.require(h.max_bag_size() <= binomial(td.max_bag_size(), static_cast<std::size_t>(d)) + 1,
              "case " + std::to_string(i) + " exceeds C(s,d)+1");
    ++cases;
  }
  if (o.pass) o.detail = std::to_string(cases) + " decompositions valid and within C(s,d)+1";
  return o;
}

Outcome expansion_inequalities() {
  Outcome o;
  const std::vector<std::string> required{
      "diameter <= 2d + 2", "edge_expansion >= 1/4",
      "vertex_expansion >= edge_expansion / max_degree",
      "treewidth >= edge_expansion * |V| / (4 * max_degree)"};
  std::ostringstream summary;
  for (auto [n, d] : std::vector<std::pair<std::size_t, int>>{{3, 1}, {4, 1}, {5, 1}, {5, 2}}) {
    ReportBudget budget;
    budget.max_tw_vertices = 20;
    ExpansionReport r = bound_report(hasse_level(simplex_delta(n), d), HasseContext{n, d}, budget);
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(d) + ")";
    for (const auto& name : required) {
      auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const auto& c) { return c.name == name; });
      o.require(it != r.checks.end(), tag + " did not evaluate " + name);
      if (it != r.checks.end())
        o.require(it->holds, tag + " violates " + name + ": " + to_string(it->lhs) + " vs " + to_string(it->rhs));
    }
    summary << tag << " EE=" << (r.edge_expansion ? to_string(*r.edge_expansion) : "?")
            << " tw=" << (r.treewidth ? std::to_string(*r.treewidth) : "?") << "; ";
  }
  if (o.pass) o.detail = summary.str();
  return o;
}

Outcome strip_scaling() {
  Outcome o;
  const std::vector<std::size_t> sizes{100, 300, 1000, 3000, 10000};
  std::vector<double> xs, ys;
  std::ostringstream summary;
  for (std::size_t n : sizes) {
    SimplicialComplex k = gen::triangulated_strip(n);
    Chain all = Chain::empty(2);
    for (std::size_t i = 0; i < k.count(2); ++i) all.members.push_back(i);
    Chain b = boundary(k, all);
    double best = 1e300;
    for (int rep = 0; rep < (n <= 1000 ? 5 : 2); ++rep) {
      const auto start = Clock::now();
      ObcpSolution sol = solve_obcp(k, b);
      best = std::min(best, seconds_since(start));
      o.require(sol.solved() && sol.weight == static_cast<double>(n - 2),
                "strip " + std::to_string(n) + " gave the wrong weight");
    }
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(std::max(best, 1e-6)));
    summary << n << ":" << best << "s ";
    if (n == sizes.back()) o.require(best <= 60.0, "largest strip took " + std::to_string(best) + " s");
  }
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  const double slope = sxy / sxx;
  o.require(slope < 2.0, "log-log slope " + std::to_string(slope));
  if (o.pass) o.detail = "slope " + std::to_string(slope) + "; " + summary.str();
  return o;
}

Outcome round_trip_and_determinism() {
  Outcome o;
  gen::Rng rng(99);
  for (int i = 0; i < 100; ++i) {
    const int d = 1 + i % 3;
    SimplicialComplex k = gen::random_complex(rng, shape_for(d));
    const std::string text = io::serialize_complex(k);
    SimplicialComplex back = io::parse_complex(text);
    o.require(back == k && io::serialize_complex(back) == text, "complex round trip failed");
    Chain c = gen::random_chain(rng, k, d - 1);
    const std::string ctext = io::serialize_chain(k, c);
    o.require(io::parse_chain(ctext, back) == c, "chain round trip failed");
    o.require(io::serialize_chain(back, io::parse_chain(ctext, back)) == ctext, "chain text changed");
    TreeDecomposition td = random_decomposition(rng, skeleton_graph(k));
    const std::string ttext = io::serialize_complex_td(k, td);
    TreeDecomposition tback = io::td_from_labels(k, io::parse_td(ttext).td);
    o.require(tback == td && io::serialize_complex_td(k, tback) == ttext, "decomposition round trip failed");
  }

  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("tdchain_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto report = [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    cli::run(args, out, err);
    cli::json j = cli::json::parse(out.str());
    j.erase("wall_time_ms");
    return j.dump();
  };
  std::vector<std::vector<std::string>> runs{
      {"solve-obcp", "--complex", data_path("octahedron.cplx"), "--boundary",
       data_path("octahedron_equator.chain"), "--json"},
      {"solve-ohcp", "--complex", data_path("annulus.cplx"), "--chain", data_path("annulus_outer.chain"),
       "--json"}};
  for (int seed = 0; seed < 10; ++seed) {
    const std::string prefix = (dir / ("g" + std::to_string(seed))).string();
    std::ostringstream out, err;
    cli::run({"generate", "--seed", std::to_string(seed), "--dim", std::to_string(1 + seed % 3), "-o", prefix},
             out, err);
    runs.push_back({"solve-obcp", "--complex", prefix + ".cplx", "--boundary", prefix + ".chain", "--json"});
    runs.push_back({"solve-ohcp", "--complex", prefix + ".cplx", "--chain", prefix + ".chain", "--json"});
  }
  for (const auto& args : runs) o.require(report(args) == report(args), "reports differ for " + args[0]);
  fs::remove_all(dir);
  if (o.pass) o.detail = "300 round trips, " + std::to_string(runs.size()) + " repeated CLI runs identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle equivalence, bounded chains", oracle_obcp},
      {"oracle equivalence, homologous chains", oracle_ohcp},
      {"witness soundness", witness_soundness},
      {"named fixtures", named_fixtures},
      {"homology test agrees with oracle feasibility", homology_tests},
      {"table size bound", table_bound},
      {"Hasse decomposition from skeleton decomposition", hasse_construction},
      {"expansion inequalities on full-complex Hasse levels", expansion_inequalities},
      {"strip scaling", strip_scaling},
      {"round trip and determinism", round_trip_and_determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
              << "): " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
