// Copyright 2026 The cubicplane Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cubicplane/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "cubicplane/errors.hpp"
#include "cubicplane/examples.hpp"
#include "cubicplane/lattice.hpp"
#include "cubicplane/repfile.hpp"
#include "cubicplane/report.hpp"
#include "cubicplane/spin.hpp"

namespace cubicplane {

namespace {

const char* b(bool v) { return v ? "true" : "false"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string points(const std::vector<Point>& pts) {
  std::string s = "[";
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? "; " : "") + point_to_string(pts[i]);
  return s + "]";
}

int cmd_analyze(const std::string& file, const std::string& field, bool json, std::ostream& out) {
  std::optional<Field> override_field;
  if (!field.empty()) override_field = parse_field(field);
  SymDetRep rep = parse_rep_file(read_file(file), override_field);
  AnalysisReport r = analyze(rep);
  out << format_report(r, json);
  return r.consistent() ? exit_code::kOk : exit_code::kInconsistent;
}

int cmd_oracle(const std::string& file, std::uint32_t prime, unsigned threads, std::ostream& out) {
  SymDetRep rep = parse_rep_file(read_file(file), Field::prime(prime));
  const MultiPoly fourfold = derived_equations(rep).fourfold;
  std::vector<Point> brute = brute_force_oracle(fourfold, threads);
  out << "field = " << field_spec(rep.field()) << "\n";
  out << "oracle_count = " << brute.size() << "\n";
  out << "oracle_points = " << points(brute) << "\n";
  AnalysisReport r = analyze(rep);
  const bool match = brute == r.sx.points;
  out << "assembly_count = " << r.sx.points.size() << "\n";
  out << "assembly_points = " << points(r.sx.points) << "\n";
  out << "oracle_matches_assembly = " << b(match) << "\n";
  return match && r.consistent() ? exit_code::kOk : exit_code::kInconsistent;
}

int cmd_example(const std::string& name, const std::vector<std::string>& raw_params, const std::string& emit,
                std::ostream& out) {
  Params params;
  for (const auto& kv : raw_params) {
    const std::size_t eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw std::invalid_argument("--param expects KEY=VALUE, got '" + kv + "'");
    params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  NamedExample ex = build_example(name, params);
  if (!emit.empty()) {
    std::ofstream f(emit, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write " + emit);
    std::string comment = "example " + ex.name;
    for (const auto& [k, v] : ex.params) comment += " " + k + "=" + v;
    f << format_rep_file(ex.rep, comment);
  }
  AnalysisReport r = analyze(ex.rep);
  const Highlights h = highlights(r);
  out << format_report(r);
  out << "example = " << ex.name << "\n";
  for (const auto& n : ex.notes) out << "note = " << n << "\n";
  out << "highlights = " << format_highlights(h) << "\n";
  bool ok = r.consistent();
  if (ex.expected) {
    out << "expected_highlights = " << format_highlights(*ex.expected) << "\n";
    out << "highlights_match = " << b(h == *ex.expected) << "\n";
    ok = ok && h == *ex.expected;
  } else {
    out << "highlights_match = unchecked\n";
  }
  return ok ? exit_code::kOk : exit_code::kInconsistent;
}

int cmd_spin(const std::string& text, int k, bool all, std::ostream& out) {
  std::vector<Component> config = parse_config(text);
  DualGraph g;
  try {
    g = build_dual_graph(config, true);
  } catch (const std::invalid_argument& e) {
    throw MathRejection("not a nodal plane sextic in general position", e.what());
  }
  const GraphStats st = graph_stats(g);
  const ThetaCounts tc = theta_counts(g.arithmetic_genus());
  const ConfigPredicates pr = config_predicates(config);
  std::vector<SpinSubsetReport> subsets = spin_subsets(g, k, all);

  out << "config = " << config_to_string(config) << "\n";
  out << "vertices = " << g.vertices.size() << "\n";
  out << "edges = " << g.edge_count() << "\n";
  out << "arithmetic_genus = " << g.arithmetic_genus() << "\n";
  out << "is_even = " << b(st.is_even) << "\n";
  out << "b1 = " << st.b1 << "\n";
  out << "theta_total = " << tc.total << "\n";
  out << "theta_even = " << tc.even << "\n";
  out << "theta_odd = " << tc.odd << "\n";
  out << "satisfies_prop41i = " << b(pr.satisfies_prop41i) << "\n";
  out << "in_remark41_list = " << b(pr.in_remark41_list) << "\n";
  out << "listed_in_remark41 = " << b(pr.listed_in_remark41) << "\n";
  out << "all_components_rational = " << b(pr.all_components_rational) << "\n";
  out << "k = " << k << "\n";
  out << "witness_search = " << (all ? "all" : "first") << "\n";
  out << "witness_count = " << subsets.size() << "\n";
  out << "is_even_residual_witness = " << b(!subsets.empty()) << "\n";
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const auto& s = subsets[i];
    std::string removed = "[", vg = "[", cg = "[";
    for (std::size_t j = 0; j < s.removed.size(); ++j) {
      const auto [x, y] = g.edges[s.removed[j]];
      removed += (j ? "; " : "") + std::string("(") + std::to_string(x) + "," + std::to_string(y) + ")";
    }
    for (std::size_t j = 0; j < s.vertex_genera.size(); ++j) vg += (j ? " " : "") + std::to_string(s.vertex_genera[j]);
    for (std::size_t j = 0; j < s.connected_genera.size(); ++j)
      cg += (j ? " " : "") + std::to_string(s.connected_genera[j]);
    out << "witness[" << i << "] = removed " << removed << "] component_genera " << vg << "] piece_genera " << cg
        << "] genus_one_component " << b(s.has_genus_one_component) << "\n";
  }
  return exit_code::kOk;
}

int cmd_lattice(int m, std::ostream& out) {
  Ns2Report r = ns2_gram(m);
  out << "m = " << r.m << "\n";
  out << "class_count = " << r.class_count << "\n";
  out << "gram_size = " << r.gram.size() << "\n";
  for (std::size_t i = 0; i < r.gram.size(); ++i) {
    out << "gram[" << i << "] =";
    for (long v : r.gram[i]) out << " " << v;
    out << "\n";
  }
  out << "ns2_det = " << r.det.get_str() << "\n";
  out << "ns2_rank = " << r.rank << "\n";
  out << "ns2_rank_lower_bound = " << r.rank_lower_bound << "\n";
  return exit_code::kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cubic fourfolds containing a plane and their discriminant sextics"};
  app.name("cubicplane");
  app.require_subcommand(1);

  std::string file, field, emit, name, text;
  bool json = false, all = false;
  std::uint32_t prime = 0;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::string> params;
  int k = 10, couples = 0;

  auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis of a rep file");
  analyze_cmd->add_option("file", file, "Rep file")->required();
  analyze_cmd->add_option("--field", field, "Override the field: rational or fp:Q");
  analyze_cmd->add_flag("--json", json, "Emit one JSON object instead of key = value lines");

  auto* oracle_cmd = app.add_subcommand("oracle", "Enumerate Sing(X) over F_Q and compare with the assembly");
  oracle_cmd->add_option("file", file, "Rep file")->required();
  oracle_cmd->add_option("--prime", prime, "Prime Q")->required();
  oracle_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));

  auto* example_cmd = app.add_subcommand("example", "Build and analyze a named example");
  example_cmd->add_option("name", name, "Example name")->required();
  example_cmd->add_option("--param", params, "Parameter KEY=VALUE (repeatable)");
  example_cmd->add_option("--emit", emit, "Write the rep file here");

  auto* spin_cmd = app.add_subcommand("spin", "Dual graph and even-residual node subsets");
  spin_cmd->add_option("--config", text, "Components, e.g. lines=6 or line=1,quintic=1:nodes=5")->required();
  spin_cmd->add_option("--k", k, "Number of nodes to remove")->check(CLI::NonNegativeNumber);
  spin_cmd->add_flag("--all", all, "Enumerate every witness");

  auto* lattice_cmd = app.add_subcommand("lattice", "Gram matrix of the plane classes");
  lattice_cmd->add_option("--couples", couples, "Number of couples m")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(file, field, json, out);
    if (*oracle_cmd) return cmd_oracle(file, prime, threads, out);
    if (*example_cmd) return cmd_example(name, params, emit, out);
    if (*spin_cmd) return cmd_spin(text, k, all, out);
    if (*lattice_cmd) return cmd_lattice(couples, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const MathRejection& e) {
    err << "rejected: " << e.what() << "\n";
    return exit_code::kRejected;
  } catch (const PositiveDimensional& e) {
    err << "rejected: positive-dimensional locus: " << e.what() << "\n";
    return exit_code::kRejected;
  } catch (const ConsistencyError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return exit_code::kInconsistent;
  } catch (const std::domain_error& e) {
    err << "error: unsupported field: " << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_code::kInconsistent;
  }
  return exit_code::kUsage;
}

}  // namespace cubicplane
