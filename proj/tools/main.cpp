// Copyright 2026 The Grassflow Authors
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

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "grassflow/berezin.hpp"
#include "grassflow/checkers.hpp"
#include "grassflow/digraph.hpp"
#include "grassflow/enumerate.hpp"
#include "grassflow/errors.hpp"
#include "grassflow/fuzz.hpp"
#include "grassflow/io.hpp"
#include "grassflow/matrix.hpp"

namespace gf = grassflow;

namespace {

std::string render_edges(const std::vector<int>& edge_ids) {
  std::string out;
  for (std::size_t k = 0; k < edge_ids.size(); ++k) {
    if (k > 0) out += ".";
    out += "e" + std::to_string(edge_ids[k]);
  }
  return out;
}

std::string render_path(const gf::Path& p) {
  if (p.trivial()) return "v" + std::to_string(p.anchor);
  return render_edges(p.edge_ids);
}

std::string render_cycles(const std::vector<gf::Cycle>& cycles) {
  std::string out;
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    if (k > 0) out += " ";
    out += render_edges(cycles[k].edge_ids);
  }
  return out;
}

std::string render_paths(const std::vector<gf::Path>& paths) {
  std::string out;
  for (std::size_t k = 0; k < paths.size(); ++k) {
    if (k > 0) out += " ";
    out += render_path(paths[k]);
  }
  return out;
}

struct CheckArgs {
  std::string graph_path;
  std::string identity;
  std::string a_list, b_list, i_list, j_list;
  std::string query_path;
  std::string format = "text";
  long long max_items = 1'000'000;
};

int run_check(const CLI::App& cmd, const CheckArgs& args) {
  gf::Query q;
  if (!args.query_path.empty())
    q = gf::parse_query(gf::read_file(args.query_path));
  if (cmd.count("--A")) q.A = gf::parse_index_list(args.a_list);
  if (cmd.count("--B")) q.B = gf::parse_index_list(args.b_list);
  if (cmd.count("--I")) q.I = gf::parse_index_list(args.i_list);
  if (cmd.count("--J")) q.J = gf::parse_index_list(args.j_list);

  const gf::Digraph g = gf::parse_graph(gf::read_file(args.graph_path));
  const gf::EnumLimits limits{args.max_items};

  if (args.identity == "paths-lemma") {
    const gf::PathsLemmaReport rep =
        gf::verify_paths_lemma(g, q.A, q.B, limits);
    const char* verdict = rep.equal ? "equal" : "not-equal";
    if (args.format == "record") {
      nlohmann::json rec = {{"identity", args.identity},
                            {"lhs", rep.lhs.str()},
                            {"rhs", rep.rhs.str()},
                            {"verdict", verdict}};
      std::cout << rec.dump() << "\n";
    } else {
      std::cout << "identity: " << args.identity << "\n"
                << "lhs: " << rep.lhs.str() << "\n"
                << "rhs: " << rep.rhs.str() << "\n"
                << "verdict: " << verdict << "\n";
    }
    return rep.equal ? 0 : 1;
  }

  gf::IdentityReport rep;
  if (args.identity == "lgv")
    rep = gf::check_lgv(g, q.A, q.B, limits);
  else if (args.identity == "stembridge-free")
    rep = gf::check_stembridge_free(g, q.A, q.I, limits);
  else if (args.identity == "stembridge-mixed")
    rep = gf::check_stembridge_mixed(g, q.A, q.B, q.I, limits);
  else if (args.identity == "general")
    rep = gf::check_general(g, q.A, q.B, q.I, q.J, limits);
  else
    rep = gf::check_corollary(g, q.A, q.B, q.I, q.J, limits);

  const char* verdict = rep.equal ? "equal" : "not-equal";
  if (args.format == "record") {
    nlohmann::json rec = {{"identity", args.identity},
                          {"lhs", rep.lhs.str()},
                          {"rhs_numerator", rep.rhs_numerator.str()},
                          {"rhs_denominator", rep.rhs_denominator.str()},
                          {"flows", rep.flow_count},
                          {"cycle_collections", rep.cycle_collection_count},
                          {"verdict", verdict}};
    std::cout << rec.dump() << "\n";
  } else {
    std::cout << "identity: " << args.identity << "\n"
              << "lhs: " << rep.lhs.str() << "\n"
              << "rhs_numerator: " << rep.rhs_numerator.str() << "\n"
              << "rhs_denominator: " << rep.rhs_denominator.str() << "\n"
              << "flows: " << rep.flow_count << "\n"
              << "cycle_collections: " << rep.cycle_collection_count << "\n"
              << "verdict: " << verdict << "\n";
  }
  return rep.equal ? 0 : 1;
}

struct EnumArgs {
  std::string graph_path;
  std::string family = "flows";
  std::string a_list, b_list, i_list, j_list;
  long long max_items = 1'000'000;
};

int run_enumerate(const CLI::App& cmd, const EnumArgs& args) {
  const gf::Digraph g = gf::parse_graph(gf::read_file(args.graph_path));
  const gf::EnumLimits limits{args.max_items};
  gf::IndexSet A, B, I, J;
  if (cmd.count("--A")) A = gf::parse_index_list(args.a_list);
  if (cmd.count("--B")) B = gf::parse_index_list(args.b_list);
  if (cmd.count("--I")) I = gf::parse_index_list(args.i_list);
  if (cmd.count("--J")) J = gf::parse_index_list(args.j_list);

  if (args.family == "cycles" ||
      (args.family == "flows" && A.empty() && B.empty())) {
    const std::vector<gf::CycleCollection> items =
        gf::enumerate_cycle_collections(g, gf::IndexSet{}, limits);
    gf::Rational total(0);
    for (const gf::CycleCollection& col : items) {
      const gf::Rational w = gf::collection_weight(g, col);
      const int sgn = gf::collection_sign(col);
      total += sgn < 0 ? -w : w;
      std::cout << "collection cycles=[" << render_cycles(col.cycles)
                << "] sign=" << (sgn < 0 ? "-1" : "+1")
                << " weight=" << w.str() << " running=" << total.str()
                << "\n";
    }
    std::cout << "items: " << items.size() << "\n";
    std::cout << "total: " << total.str() << "\n";
    return 0;
  }

  std::vector<gf::Flow> flows;
  if (args.family == "flows")
    flows = gf::enumerate_flows(g, A, B, limits);
  else if (args.family == "flows-free")
    flows = gf::enumerate_flows_free(g, A, I, limits);
  else if (args.family == "flows-mixed")
    flows = gf::enumerate_flows_mixed(g, A, B, I, limits);
  else
    flows = gf::enumerate_flows_general(g, A, B, I, J, limits);

  gf::Rational total(0);
  for (const gf::Flow& f : flows) {
    const gf::Rational w = gf::flow_weight(g, f);
    const int sgn = gf::flow_sign(f);
    total += sgn < 0 ? -w : w;
    std::cout << "flow paths=[" << render_paths(f.paths) << "] cycles=["
              << render_cycles(f.cycles.cycles) << "] sign="
              << (sgn < 0 ? "-1" : "+1") << " weight=" << w.str()
              << " running=" << total.str() << "\n";
  }
  std::cout << "items: " << flows.size() << "\n";
  std::cout << "total: " << total.str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rational engine for flow identities on weighted "
               "digraphs"};
  app.require_subcommand(1);

  CheckArgs ca;
  CLI::App* check = app.add_subcommand(
      "check", "evaluate both sides of one identity independently");
  check->add_option("--graph", ca.graph_path, "graph JSON file")->required();
  check->add_option("--identity", ca.identity, "identity to check")
      ->required()
      ->check(CLI::IsMember({"lgv", "stembridge-free", "stembridge-mixed",
                             "general", "corollary", "paths-lemma"}));
  check->add_option("--A", ca.a_list, "source vertices, e.g. 1,2");
  check->add_option("--B", ca.b_list, "target vertices");
  check->add_option("--I", ca.i_list, "free endpoint window");
  check->add_option("--J", ca.j_list, "second endpoint window");
  check->add_option("--query", ca.query_path, "JSON file with A/B/I/J");
  check->add_option("--format", ca.format, "text or record")
      ->check(CLI::IsMember({"text", "record"}));
  check->add_option("--max-items", ca.max_items, "enumeration ceiling");

  EnumArgs ea;
  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "list cycle collections or flows with signs and weights");
  enumerate->add_option("--graph", ea.graph_path, "graph JSON file")
      ->required();
  enumerate->add_option("--family", ea.family, "what to enumerate")
      ->check(CLI::IsMember(
          {"cycles", "flows", "flows-free", "flows-mixed", "flows-general"}));
  enumerate->add_option("--A", ea.a_list, "source vertices");
  enumerate->add_option("--B", ea.b_list, "target vertices");
  enumerate->add_option("--I", ea.i_list, "free endpoint window");
  enumerate->add_option("--J", ea.j_list, "second endpoint window");
  enumerate->add_option("--max-items", ea.max_items, "enumeration ceiling");

  std::string matrix_path;
  std::string method = "combinatorial";
  CLI::App* pfaffian = app.add_subcommand(
      "pfaffian", "pfaffian of a skew-symmetric rational matrix");
  pfaffian->add_option("--matrix", matrix_path, "matrix JSON file")
      ->required();
  pfaffian->add_option("--method", method, "evaluation route")
      ->check(CLI::IsMember({"combinatorial", "elimination", "berezin"}));

  gf::FuzzConfig fc;
  CLI::App* fuzz = app.add_subcommand(
      "fuzz", "randomized cross-checking of one identity");
  fuzz->add_option("--identity", fc.identity, "identity to fuzz")
      ->check(CLI::IsMember({"lgv", "stembridge-free", "stembridge-mixed",
                             "general", "corollary", "paths-lemma"}));
  fuzz->add_option("--seed", fc.seed, "base seed");
  fuzz->add_option("--count", fc.count, "number of instances");
  fuzz->add_option("--max-n", fc.max_n, "largest vertex count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check(*check, ca);
    if (enumerate->parsed()) return run_enumerate(*enumerate, ea);
    if (pfaffian->parsed()) {
      const gf::Matrix m =
          gf::parse_matrix(gf::read_file(matrix_path));
      gf::Rational value;
      if (method == "combinatorial")
        value = gf::pfaffian_combinatorial(m);
      else if (method == "elimination")
        value = gf::pfaffian_elimination(m);
      else
        value = gf::pfaffian_via_integral(m);
      std::cout << value.str() << "\n";
      return 0;
    }
    const gf::FuzzResult res = gf::run_fuzz(fc);
    std::cout << gf::fuzz_summary(fc, res);
    return res.failures == 0 ? 0 : 1;
  } catch (const gf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
