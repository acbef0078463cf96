// Copyright 2026 The matchcf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "matchcf/contfrac.hpp"
#include "matchcf/corpus.hpp"
#include "matchcf/errors.hpp"
#include "matchcf/graph.hpp"
#include "matchcf/hl.hpp"
#include "matchcf/matching.hpp"
#include "matchcf/path_tree.hpp"
#include "matchcf/polynomial.hpp"

namespace {

using matchcf::ComplexRational;
using matchcf::Error;
using matchcf::Rational;
using matchcf::Region;
using matchcf::VerificationReport;
using matchcf::WeightedGraph;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitInputError = 2;
constexpr int kExitLimit = 3;

WeightedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(matchcf::ErrorCode::invalid_argument, "cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return WeightedGraph::parse(buf.str());
}

std::vector<ComplexRational> parse_assignment(const std::string& text, int n) {
  std::vector<ComplexRational> values;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    const auto from = token.find_first_not_of(" \t");
    const auto to = token.find_last_not_of(" \t");
    if (from == std::string::npos) {
      throw Error(matchcf::ErrorCode::invalid_argument, "empty coordinate in '" + text + "'");
    }
    values.push_back(matchcf::parse_complex_rational(token.substr(from, to - from + 1)));
  }
  if (static_cast<int>(values.size()) != n) {
    throw Error(matchcf::ErrorCode::arity_mismatch,
                "assignment has " + std::to_string(values.size()) + " coordinates, graph has " +
                    std::to_string(n));
  }
  return values;
}

Region region_from_name(const std::string& name, const WeightedGraph& g) {
  if (name == "halfplane") return Region::right_half_plane();
  if (name == "disk") return Region::outside_disk_for(g);
  throw Error(matchcf::ErrorCode::invalid_argument,
              "region must be 'halfplane' or 'disk', got '" + name + "'");
}

ordered_json poly_json(const matchcf::SparsePolynomial& p) {
  ordered_json terms = ordered_json::array();
  for (const auto& [mono, coeff] : p.terms()) {
    ordered_json term;
    term["coeff"] = matchcf::fraction_string(coeff);
    term["exponents"] = mono;
    terms.push_back(std::move(term));
  }
  ordered_json out;
  out["var_count"] = p.var_count();
  out["terms"] = std::move(terms);
  return out;
}

struct CommonFlags {
  std::string graph_path;
  std::string output = "";
  bool timing = false;
  bool serial = false;
};

int run_mu(const CommonFlags& flags, bool univariate) {
  const WeightedGraph g = load_graph(flags.graph_path);
  const matchcf::SparsePolynomial mu = matchcf::matching_poly(g);
  if (univariate) {
    const matchcf::UnivariatePoly uni = mu.specialize_univariate();
    if (flags.output == "json") {
      ordered_json out;
      out["univariate"] = ordered_json::array();
      for (const Rational& c : uni.coeffs) out["univariate"].push_back(matchcf::rational_string(c));
      std::cout << out.dump(2) << "\n";
    } else {
      std::string line = "[";
      for (std::size_t d = 0; d < uni.coeffs.size(); ++d) {
        if (d) line += ", ";
        line += matchcf::rational_string(uni.coeffs[d]);
      }
      std::cout << line << "]\n";
    }
    return kExitOk;
  }
  if (flags.output == "json") {
    std::cout << poly_json(mu).dump(2) << "\n";
  } else {
    std::cout << mu.to_string() << "\n";
  }
  return kExitOk;
}

int run_pathtree(const CommonFlags& flags, int root, std::size_t node_cap) {
  const WeightedGraph g = load_graph(flags.graph_path);
  const matchcf::RootedTree t = matchcf::path_tree(g, root, node_cap);
  std::cerr << t.node_count() << " nodes\n";
  if (flags.output == "json") {
    ordered_json nodes = ordered_json::array();
    for (int id = 0; id < t.node_count(); ++id) {
      const matchcf::TreeNode& node = t.node(id);
      ordered_json entry;
      entry["id"] = id;
      entry["path"] = t.path_string(id);
      entry["label"] = node.label;
      if (node.parent >= 0) {
        entry["parent"] = node.parent;
        entry["weight"] = matchcf::fraction_string(node.edge_weight);
      } else {
        entry["parent"] = nullptr;
        entry["weight"] = nullptr;
      }
      entry["children"] = node.children;
      nodes.push_back(std::move(entry));
    }
    ordered_json out;
    out["root"] = 0;
    out["node_count"] = t.node_count();
    out["nodes"] = std::move(nodes);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << t.to_dot();
  }
  return kExitOk;
}

int run_cf(const CommonFlags& flags, int root, const std::string& at, bool use_tree,
           std::size_t node_cap) {
  const WeightedGraph g = load_graph(flags.graph_path);
  const std::vector<ComplexRational> a = parse_assignment(at, g.var_count());
  matchcf::CFPair pair;
  if (use_tree) {
    const matchcf::RootedTree t = matchcf::path_tree(g, root, node_cap);
    pair = matchcf::tree_cf_eval(t, a);
  } else {
    pair = matchcf::graph_cf_eval(g, root, a);
  }
  const bool pole = pair.den.is_zero();
  std::string alpha;
  if (!pole) alpha = matchcf::complex_string(pair.num * pair.den.inverse());
  if (flags.output == "json") {
    ordered_json out;
    out["num"] = matchcf::complex_string(pair.num);
    out["den"] = matchcf::complex_string(pair.den);
    if (pole) {
      out["alpha"] = nullptr;
    } else {
      out["alpha"] = alpha;
    }
    out["method"] = use_tree ? "tree" : "graph";
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "num = " << matchcf::complex_string(pair.num) << "\n";
    std::cout << "den = " << matchcf::complex_string(pair.den) << "\n";
    std::cout << "alpha = " << (pole ? "pole" : alpha) << "\n";
  }
  return kExitOk;
}

int run_bound(const CommonFlags& flags) {
  const WeightedGraph g = load_graph(flags.graph_path);
  const Rational b = matchcf::bound_B(g);
  if (flags.output == "json") {
    ordered_json out;
    out["bound_b"] = matchcf::rational_string(b);
    out["four_b"] = matchcf::rational_string(b * 4);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << matchcf::rational_string(b) << "\n";
  }
  return kExitOk;
}

int finish_verify(const VerificationReport& report, bool timing) {
  std::cout << report.to_json(timing) << "\n";
  return report.ok() ? kExitOk : kExitFalsified;
}

int run_verify_godsil(const CommonFlags& flags, int root, bool all_roots,
                      std::size_t node_cap, bool modular) {
  const auto start = std::chrono::steady_clock::now();
  const WeightedGraph g = load_graph(flags.graph_path);
  matchcf::GodsilOptions options;
  options.node_cap = node_cap;
  options.modular_points = modular;

  std::vector<int> roots;
  if (all_roots) {
    g.vertices().for_each([&](int v) { roots.push_back(v); });
  } else {
    roots.push_back(root);
  }

  VerificationReport report;
  report.property = "godsil";
  report.graph_hash = matchcf::graph_hash(g);
  report.samples = roots.size();
  ordered_json methods = ordered_json::object();
  for (int r : roots) {
    const matchcf::GodsilResult res = matchcf::verify_godsil(g, r, options);
    const std::string method = matchcf::godsil_method_name(res.method);
    methods[method] = methods.value(method, 0) + 1;
    if (!res.ok) {
      report.failures.push_back(matchcf::Failure{
          "root=" + std::to_string(r),
          "identity violated (" + method + ", " + std::to_string(res.tree_nodes) + " tree nodes)"});
    }
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();

  // Same shape as VerificationReport::to_json plus the method tally, so the
  // point-check fallback on large trees is visible in the report.
  ordered_json j;
  j["property"] = report.property;
  j["graph_hash"] = report.graph_hash;
  j["region"] = report.region;
  j["samples"] = report.samples;
  j["seed"] = report.seed;
  j["failures"] = ordered_json::array();
  for (const matchcf::Failure& f : report.failures) {
    j["failures"].push_back({{"point", f.point}, {"value", f.value}});
  }
  j["methods"] = std::move(methods);
  if (flags.timing) j["elapsed_ms"] = report.elapsed_ms;
  std::cout << j.dump(2) << "\n";
  return report.ok() ? kExitOk : kExitFalsified;
}

int run_verify_region(const CommonFlags& flags, const std::string& property,
                      const std::string& region_name, std::uint64_t samples,
                      std::uint64_t seed) {
  const WeightedGraph g = load_graph(flags.graph_path);
  const Region region = region_from_name(region_name, g);
  const matchcf::Exec exec = flags.serial ? matchcf::Exec::serial : matchcf::Exec::parallel;
  const VerificationReport report =
      property == "zerofree" ? matchcf::verify_zero_free(g, region, samples, seed, exec)
                             : matchcf::check_mapping_lemma(g, region, samples, seed, exec);
  return finish_verify(report, flags.timing);
}

int run_verify_roots(const CommonFlags& flags, double tol) {
  const WeightedGraph g = load_graph(flags.graph_path);
  const VerificationReport report = matchcf::check_root_bound(g, tol);
  if (report.ok()) {
    // Boundary-tight cases (for instance one edge: roots at exactly the disk
    // radius) are worth a note since they show the bound cannot shrink.
    const matchcf::UnivariatePoly uni =
        matchcf::matching_poly(g).specialize_univariate();
    const double four_b = 4.0 * matchcf::bound_B(g).get_d();
    if (uni.degree() >= 1) {
      int tight = 0;
      for (const matchcf::Root& r : matchcf::univariate_roots(uni, 1000, tol)) {
        const double norm2 = r.re * r.re + r.im * r.im;
        if (std::abs(norm2 - four_b) <= tol) ++tight;
      }
      if (tight > 0) {
        std::cerr << "note: " << tight << " root(s) exactly on the disk boundary\n";
      }
    }
  }
  return finish_verify(report, flags.timing);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matching polynomials, path trees, and zero-free region checks"};
  app.require_subcommand(1);

  CommonFlags flags;
  bool univariate = false;
  int root = 0;
  std::size_t node_cap = matchcf::kDefaultNodeCap;
  std::string at;
  bool use_tree = false;
  std::string region_name;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  bool modular = false;

  auto add_graph_arg = [&](CLI::App* cmd) {
    cmd->add_option("graph", flags.graph_path, "graph file")->required();
    cmd->add_option("--output", flags.output, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--timing", flags.timing, "include elapsed_ms in JSON reports");
  };

  CLI::App* mu = app.add_subcommand("mu", "print the matching polynomial");
  add_graph_arg(mu);
  mu->add_flag("--univariate", univariate, "print the coefficients with all x_i := x");

  CLI::App* pathtree = app.add_subcommand("pathtree", "print the path tree as DOT");
  add_graph_arg(pathtree);
  pathtree->add_option("--root", root, "root vertex")->required();
  pathtree->add_option("--node-cap", node_cap, "abort above this many tree nodes");

  CLI::App* cf = app.add_subcommand("cf", "evaluate the continued fraction pair");
  add_graph_arg(cf);
  cf->add_option("--root", root, "root vertex")->required();
  cf->add_option("--at", at, "comma-separated values, one per vertex")->required();
  cf->add_flag("--tree", use_tree, "evaluate over the path tree instead of the graph");
  cf->add_option("--node-cap", node_cap, "abort above this many tree nodes");

  CLI::App* bound = app.add_subcommand("bound", "print the edge-weight bound B");
  add_graph_arg(bound);

  CLI::App* verify = app.add_subcommand("verify", "verification checks");
  verify->require_subcommand(1);

  CLI::App* godsil = verify->add_subcommand("godsil", "path-tree identity");
  add_graph_arg(godsil);
  CLI::Option* godsil_root = godsil->add_option("--root", root, "single root to check");
  godsil->add_option("--node-cap", node_cap, "abort above this many tree nodes");
  godsil->add_flag("--modular", modular, "use the modular point check on large trees");

  CLI::App* zerofree = verify->add_subcommand("zerofree", "region zero-freeness");
  add_graph_arg(zerofree);
  zerofree->add_option("--region", region_name, "halfplane or disk")->required();
  zerofree->add_option("--samples", samples, "sample count");
  zerofree->add_option("--seed", seed, "RNG seed");
  zerofree->add_flag("--serial", flags.serial, "disable the parallel sweep");

  CLI::App* mapping = verify->add_subcommand("mapping", "region mapping of f_{j,A}");
  add_graph_arg(mapping);
  mapping->add_option("--region", region_name, "halfplane or disk")->required();
  mapping->add_option("--samples", samples, "sample count");
  mapping->add_option("--seed", seed, "RNG seed");
  mapping->add_flag("--serial", flags.serial, "disable the parallel sweep");

  CLI::App* roots = verify->add_subcommand("roots", "univariate root bound");
  add_graph_arg(roots);
  roots->add_option("--tol", tol, "residual and bound tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // CLI11's own exit codes are in the 100s; fold every usage error to 2
    // and keep --help/--version at 0.
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (mu->parsed()) return run_mu(flags, univariate);
    if (pathtree->parsed()) return run_pathtree(flags, root, node_cap);
    if (cf->parsed()) return run_cf(flags, root, at, use_tree, node_cap);
    if (bound->parsed()) return run_bound(flags);
    if (godsil->parsed()) {
      return run_verify_godsil(flags, root, godsil_root->count() == 0, node_cap, modular);
    }
    if (zerofree->parsed()) return run_verify_region(flags, "zerofree", region_name, samples, seed);
    if (mapping->parsed()) return run_verify_region(flags, "mapping", region_name, samples, seed);
    if (roots->parsed()) return run_verify_roots(flags, tol);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_limit() ? kExitLimit : kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
