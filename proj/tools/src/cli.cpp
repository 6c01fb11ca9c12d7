// Copyright 2026 The qfound Authors
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

#include "qfound/cli.hpp"

#include <exception>
#include <filesystem>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "format.hpp"
#include "qfound/mixed_state.hpp"
#include "qfound/ptable.hpp"
#include "qfound/ptable_io.hpp"

namespace qfound::cli {

namespace {

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const TableTooLarge& e) {
    err << "error: " << e.what() << " (raise --frame-cap)\n";
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInput;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"qfound: checks for probability tables, entropy, collapse and sphere geometry"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "qfound 0.1.0");

  TablesOptions tables;
  auto* c_tables = app.add_subcommand("tables", "Recompute the N = 2 entropy tables");
  c_tables->add_flag("--bits", tables.bits, "Report in bits instead of nats");
  c_tables->add_option("--format", tables.format, "text | csv | object")
      ->check(CLI::IsMember({"text", "csv", "object"}))
      ->capture_default_str();
  c_tables->add_option("--out", tables.out, "Output path (default stdout)");
  c_tables->add_option("--nodes", tables.nodes, "Gauss-Legendre nodes")
      ->check(CLI::Range(2, 1024))
      ->capture_default_str();

  CheckOptions check;
  auto* c_check = app.add_subcommand("check", "Run the axiom validators on a table file");
  c_check->add_option("path", check.path, "Table file")->required();
  c_check->add_option("--eps", check.eps, "Tolerance")->capture_default_str();
  c_check->add_option("--model", check.model, "Metric law to compare: crqm | hv")
      ->check(CLI::IsMember({"crqm", "hv", "hidden-variable"}));
  c_check->add_flag("--tolerate", check.tolerate, "Accept asymmetric tables");
  c_check->add_flag("--summary", check.summary, "Print one aggregate line");
  c_check->add_option("--frame-cap", check.frame_cap, "Element cap for frame enumeration")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  c_check->add_option("--frames", check.frames,
                      "largest: check only maximal orthogonal sets of the largest size; all: every one")
      ->check(CLI::IsMember({"largest", "all"}))
      ->capture_default_str();
  c_check->add_option("--base", check.base,
                      "Check the midpoint axiom only among the first K elements (0 = all)")
      ->capture_default_str();
  c_check->add_option("--format", check.format, "text | object")
      ->check(CLI::IsMember({"text", "object"}))
      ->capture_default_str();

  auto* c_demo = app.add_subcommand("demo", "Run a demonstration");
  c_demo->require_subcommand(1);

  TvnOptions tvn;
  auto* d_tvn = c_demo->add_subcommand("tvn", "Entropy reduction by an intermediate measurement");
  d_tvn->add_option("--p", tvn.p, "Pass probability a(b)")->capture_default_str();
  d_tvn->add_option("--ring", tvn.ring, "R | C | H")->capture_default_str();

  ZenoOptions zeno;
  auto* d_zeno = c_demo->add_subcommand("zeno", "Collapse chain survival against its lower bound");
  d_zeno->add_option("--tau", zeno.tau, "Time between measurements")->capture_default_str();
  d_zeno->add_option("--steps", zeno.steps, "Number of measurements")->capture_default_str();
  d_zeno->add_option("--hamiltonian", zeno.hamiltonian, "Operator file (default: random)");
  d_zeno->add_option("--dim", zeno.dim, "Dimension of the random Hamiltonian")
      ->capture_default_str();
  d_zeno->add_option("--seed", zeno.seed, "Seed")->capture_default_str();
  d_zeno->add_flag("--stochastic", zeno.stochastic, "Also sample collapse trajectories");
  d_zeno->add_option("--samples", zeno.samples, "Trajectories for --stochastic")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  d_zeno->add_option("--out", zeno.out, "CSV path for k,p_k,bound_k");

  Axiom5Options a5;
  auto* d_a5 = c_demo->add_subcommand("axiom5", "Uniformity of qubit purities");
  d_a5->add_option("--ring", a5.ring, "R | C | H")->capture_default_str();
  d_a5->add_option("--samples", a5.samples, "Samples (>= 1000)")->capture_default_str();
  d_a5->add_option("--seed", a5.seed, "Seed")->capture_default_str();

  AdjunctionOptions adj;
  auto* d_adj = c_demo->add_subcommand("adjunction", "Circle built by antipodes and midpoints");
  d_adj->add_option("--theta0", adj.theta0, "Initial separation in (0, pi)")->capture_default_str();
  d_adj->add_option("--depth", adj.depth, "Midpoint rounds")->capture_default_str();
  d_adj->add_option("--rank", adj.rank, "Sphere rank")->capture_default_str();
  d_adj->add_option("--eps", adj.eps, "Tolerance")->capture_default_str();
  d_adj->add_option("--frame-cap", adj.frame_cap, "Element cap for frame enumeration")
      ->capture_default_str();
  d_adj->add_option("--out", adj.out, "CSV path for the sphere points");
  d_adj->add_option("--table-out", adj.table_out, "Table file path");

  GenerateOptions gen;
  auto* c_gen = app.add_subcommand("generate", "Write a model table file");
  c_gen->add_option("kind", gen.kind, "skeleton | crqm | hv | circle | midpoints")
      ->required()
      ->check(CLI::IsMember({"skeleton", "crqm", "hv", "circle", "midpoints"}));
  c_gen->add_option("--rank", gen.rank, "Rank (skeleton, hv, circle)")->capture_default_str();
  c_gen->add_option("--ring", gen.ring, "R | C | H (crqm, midpoints)")->capture_default_str();
  c_gen->add_option("--dim", gen.dim, "Dimension (crqm)")->capture_default_str();
  c_gen->add_option("--count", gen.count, "Sampled states (crqm, midpoints)")
      ->capture_default_str();
  c_gen->add_option("--samples", gen.samples, "Monte-Carlo samples (hv)")->capture_default_str();
  c_gen->add_option("--seed", gen.seed, "Seed")->capture_default_str();
  c_gen->add_option("--workers", gen.workers, "Sampling threads (hv)")->capture_default_str();
  c_gen->add_option("--theta0", gen.theta0, "Initial separation (circle)")->capture_default_str();
  c_gen->add_option("--depth", gen.depth, "Midpoint rounds (circle)")->capture_default_str();
  c_gen->add_option("--out", gen.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kExitPass : kExitInput;
  }

  if (c_tables->parsed()) return guarded(err, [&] { return cmd_tables(tables, out); });
  if (c_check->parsed()) return guarded(err, [&] { return cmd_check(check, out); });
  if (d_tvn->parsed()) return guarded(err, [&] { return cmd_demo_tvn(tvn, out); });
  if (d_zeno->parsed()) return guarded(err, [&] { return cmd_demo_zeno(zeno, out); });
  if (d_a5->parsed()) return guarded(err, [&] { return cmd_demo_axiom5(a5, out); });
  if (d_adj->parsed()) return guarded(err, [&] { return cmd_demo_adjunction(adj, out); });
  if (c_gen->parsed()) {
    return guarded(err, [&] {
      err << "# generate " << gen.kind << " seed=" << gen.seed << '\n';
      return cmd_generate(gen, out);
    });
  }
  return kExitInput;
}

}  // namespace qfound::cli
