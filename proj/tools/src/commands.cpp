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

#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "format.hpp"
#include "qfound/cli.hpp"
#include "qfound/dynamics.hpp"
#include "qfound/entropy.hpp"
#include "qfound/geometry.hpp"
#include "qfound/models.hpp"
#include "qfound/ptable.hpp"
#include "qfound/ptable_io.hpp"

namespace qfound::cli {

namespace {

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

// Second basis direction of the ring used by the demos, so that complex and
// quaternionic runs exercise their imaginary units.
Quaternion demo_phase(Ring ring) {
  switch (ring) {
    case Ring::R: return 1.0;
    case Ring::C: return Quaternion::i();
    case Ring::H: return Quaternion::j();
  }
  return 1.0;
}

}  // namespace

int cmd_tables(const TablesOptions& o, std::ostream& out) {
  if (o.format != "text" && o.format != "csv" && o.format != "object") {
    throw InputError("unknown format '" + o.format + "'");
  }
  const auto t = entropy::compute_tables(o.nodes);
  const double unit = o.bits ? std::numbers::ln2 : 1.0;
  const char* unit_name = o.bits ? "bits" : "nats";
  using Ref = entropy::ReferenceTables;

  Sink sink(o.out, out);
  auto& os = sink.stream();
  if (o.format == "csv") {
    os << "rank,model,value\n";
    for (std::size_t k = 0; k < 3; ++k) {
      const int rank = rank_of(entropy::EntropyTables::rings[k]);
      os << rank << ",von_neumann," << full(t.von_neumann[k] / unit) << '\n';
      os << rank << ",information," << full(t.information[k].value / unit) << '\n';
      os << rank << ",skeleton," << full(t.skeleton[k] / unit) << '\n';
      os << rank << ",difference," << full(t.difference[k] / unit) << '\n';
    }
    return kExitPass;
  }
  if (o.format == "object") {
    nlohmann::json doc;
    doc["units"] = unit_name;
    doc["quadrature_nodes"] = o.nodes;
    auto& rows = doc["rows"] = nlohmann::json::array();
    for (std::size_t k = 0; k < 3; ++k) {
      const Ring ring = entropy::EntropyTables::rings[k];
      rows.push_back({{"ring", std::string(to_string(ring))},
                      {"rank", rank_of(ring)},
                      {"von_neumann", t.von_neumann[k] / unit},
                      {"information", t.information[k].value / unit},
                      {"information_method", std::string(entropy::to_string(t.information[k].method))},
                      {"skeleton", t.skeleton[k] / unit},
                      {"skeleton_method", "exact-frames"},
                      {"difference", t.difference[k] / unit},
                      {"reference_information", Ref::information[k] / unit},
                      {"reference_skeleton", Ref::skeleton[k] / unit},
                      {"reference_difference", Ref::difference[k] / unit}});
    }
    os << doc.dump(2) << '\n';
    return kExitPass;
  }

  os << "pure-state entropy, N = 2 (" << unit_name << ")\n";
  os << "ring  rank  von_neumann  information  method      reference  residual\n";
  for (std::size_t k = 0; k < 3; ++k) {
    const Ring ring = entropy::EntropyTables::rings[k];
    const double info = t.information[k].value / unit;
    const double ref = Ref::information[k] / unit;
    os << pad(std::string(to_string(ring)), 6) << pad(std::to_string(rank_of(ring)), 6)
       << pad(f6(t.von_neumann[k] / unit), 13) << pad(f6(info), 13)
       << pad(std::string(entropy::to_string(t.information[k].method)), 12) << pad(f6(ref), 11)
       << sci(std::abs(info - ref)) << '\n';
  }
  os << '\n';
  os << "information entropy of skeletons, N = 2 (" << unit_name << ")\n";
  os << "ring  rank  information  skeleton  method        difference  reference  residual\n";
  for (std::size_t k = 0; k < 3; ++k) {
    const Ring ring = entropy::EntropyTables::rings[k];
    const double diff = t.difference[k] / unit;
    const double ref = Ref::difference[k] / unit;
    os << pad(std::string(to_string(ring)), 6) << pad(std::to_string(rank_of(ring)), 6)
       << pad(f6(t.information[k].value / unit), 13) << pad(f6(t.skeleton[k] / unit), 10)
       << pad("exact-frames", 14) << pad(f6(diff), 12) << pad(f6(ref), 11)
       << sci(std::abs(diff - ref)) << '\n';
  }
  return kExitPass;
}

int cmd_check(const CheckOptions& o, std::ostream& out) {
  if (o.frames != "largest" && o.frames != "all") {
    throw InputError("--frames must be 'largest' or 'all'");
  }
  if (o.format != "text" && o.format != "object") {
    throw InputError("check supports --format text or object");
  }
  if (!(o.eps > 0.0)) throw InputError("--eps must be positive");
  std::optional<MetricModel> model;
  if (!o.model.empty()) model = parse_metric_model(o.model);

  const PTable t = load_ptable(o.path, LoadOptions{o.tolerate});
  if (o.base > t.size()) {
    throw InputError("--base " + std::to_string(o.base) + " exceeds the table size " +
                     std::to_string(t.size()));
  }

  std::vector<VerificationReport> reports;
  reports.push_back(check_axiom_one(t, o.eps));
  reports.push_back(check_axiom_two(t));

  const auto frames = enumerate_frames(t, o.eps, o.frame_cap);
  const auto checked = o.frames == "all" ? frames : largest_frames(frames);
  auto three = check_axiom_three(t, checked, o.eps);
  if (checked.size() != frames.size()) {
    three.note(std::to_string(frames.size() - checked.size()) +
               " smaller maximal orthogonal sets treated as fragments and not checked");
  }
  reports.push_back(three);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < o.base; ++a)
    for (std::size_t b = 0; b < o.base; ++b)
      if (a != b) pairs.emplace_back(a, b);
  if (o.base > 0 && pairs.empty()) pairs.emplace_back(0, 0);  // a single element: nothing to check
  const auto four = check_axiom_four(t, o.eps, pairs);
  if (model) reports.push_back(metric_consistency(t, *model, o.eps));

  bool failed = four.status() == AxiomFourStatus::Fail;
  for (const auto& r : reports) failed = failed || !r.passed();

  if (o.format == "object") {
    nlohmann::json doc;
    doc["path"] = o.path;
    doc["eps"] = o.eps;
    doc["elements"] = t.size();
    doc["passed"] = !failed;
    auto& fs = doc["frames"] = nlohmann::json::array();
    for (const auto& f : frames) {
      std::vector<std::string> names;
      for (auto i : f.indices) names.push_back(t.label(i));
      fs.push_back(names);
    }
    auto& rs = doc["reports"] = nlohmann::json::array();
    for (const auto& r : reports) rs.push_back(to_json(r));
    auto j4 = to_json(four.report);
    j4["status"] = std::string(to_string(four.status()));
    j4["skipped"] = four.skipped;
    auto& ps = j4["pairs"] = nlohmann::json::array();
    for (const auto& p : four.pairs) {
      nlohmann::json jp{{"a", t.label(p.a)},
                        {"b", t.label(p.b)},
                        {"lambda", p.lambda},
                        {"outcome", std::string(to_string(p.outcome))},
                        {"residual", p.residual}};
      if (p.witness) jp["witness"] = {t.label(p.witness->first), t.label(p.witness->second)};
      ps.push_back(jp);
    }
    rs.push_back(j4);
    out << doc.dump(2) << '\n';
    return failed ? kExitFail : kExitPass;
  }

  if (o.summary) {
    std::size_t passed = 0;
    for (const auto& r : reports) passed += r.passed() ? 1 : 0;
    passed += four.status() == AxiomFourStatus::Pass ? 1 : 0;
    out << "summary " << (failed ? "FAIL" : "PASS") << " elements=" << t.size()
        << " frames=" << frames.size() << " checks=" << reports.size() + 1
        << " passed=" << passed << " axiom_four=" << to_string(four.status())
        << " witnessed=" << four.count(AxiomFourOutcome::Witnessed)
        << " no_candidate=" << four.count(AxiomFourOutcome::NoCandidate)
        << " contradicted=" << four.count(AxiomFourOutcome::Contradicted) << '\n';
    return failed ? kExitFail : kExitPass;
  }

  out << "check " << o.path << " elements=" << t.size() << " eps=" << o.eps << '\n';
  print_report(out, reports[0]);
  print_report(out, reports[1]);
  out << "frames count=" << frames.size() << " checked=" << checked.size() << '\n';
  for (const auto& f : frames) {
    out << "  {";
    for (std::size_t k = 0; k < f.indices.size(); ++k) {
      out << (k ? ", " : "") << t.label(f.indices[k]);
    }
    out << "}\n";
  }
  print_report(out, reports[2]);
  out << "axiom_four " << to_string(four.status()) << " pairs=" << four.pairs.size()
      << " witnessed=" << four.count(AxiomFourOutcome::Witnessed)
      << " no_candidate=" << four.count(AxiomFourOutcome::NoCandidate)
      << " contradicted=" << four.count(AxiomFourOutcome::Contradicted)
      << " skipped=" << four.skipped << '\n';
  for (const auto& p : four.pairs) {
    if (p.outcome == AxiomFourOutcome::Witnessed) continue;
    out << "  (" << t.label(p.a) << ", " << t.label(p.b) << ") lambda=" << f6(p.lambda) << ' '
        << to_string(p.outcome);
    if (p.outcome == AxiomFourOutcome::Contradicted) out << " residual=" << f6(p.residual);
    out << '\n';
  }
  if (model) print_report(out, reports.back());
  out << (failed ? "FAIL" : "PASS");
  if (!failed && four.status() == AxiomFourStatus::Incomplete) out << " (axiom four incomplete)";
  out << '\n';
  return failed ? kExitFail : kExitPass;
}

int cmd_demo_tvn(const TvnOptions& o, std::ostream& out) {
  const Ring ring = parse_ring(o.ring);
  if (!(o.p > 0.0 && o.p < 1.0)) throw InputError("--p must lie strictly between 0 and 1");
  const auto a = StateVector::basis(ring, 2, 0);
  const auto b = StateVector(ring, {std::sqrt(o.p), std::sqrt(1.0 - o.p) * demo_phase(ring)});
  const auto r = dynamics::tvn_compare(a, b);
  out << "demo tvn ring=" << to_string(ring) << " p=" << f6(r.p) << '\n';
  out << "intermediate frame " << (r.used_antipode ? "c(a,b')" : "c(a,b)") << '\n';
  out << "H(F_b a) = " << f6(r.h_direct) << '\n';
  out << "H(F_b F_x a) = " << f6(r.h_intermediate) << '\n';
  out << f6(r.h_direct) << " -> " << f6(r.h_intermediate) << ' '
      << (r.report.passed() ? "PASS" : "FAIL") << '\n';
  return r.report.passed() ? kExitPass : kExitFail;
}

int cmd_demo_zeno(const ZenoOptions& o, std::ostream& out) {
  if (!(o.tau > 0.0)) throw InputError("--tau must be positive");
  if (o.steps == 0) throw InputError("--steps must be >= 1");
  Eigen::MatrixXcd h;
  Eigen::VectorXcd initial;
  std::string source;
  if (!o.hamiltonian.empty()) {
    auto op = load_operator(o.hamiltonian);
    h = std::move(op.h);
    if (op.initial) {
      initial = *op.initial;
    } else {
      initial = Eigen::VectorXcd::Zero(h.rows());
      initial(0) = 1.0;
    }
    source = o.hamiltonian;
  } else {
    if (o.dim < 2) throw InputError("--dim must be >= 2");
    auto rng = make_engine(o.seed);
    h = dynamics::random_hermitian(o.dim, rng);
    initial = Eigen::VectorXcd::Zero(h.rows());
    initial(0) = 1.0;
    source = "random dim=" + std::to_string(o.dim);
  }

  const auto run = dynamics::zeno_chain(h, initial, o.tau, o.steps);
  out << "demo zeno H=" << source << " seed=" << o.seed << " tau=" << f6(o.tau)
      << " steps=" << o.steps << '\n';
  out << "dispersion = " << f6(run.dispersion) << '\n';
  out << "tau*dispersion = " << f6(o.tau * run.dispersion)
      << (run.in_regime ? " (in regime)" : " (outside regime)") << '\n';
  out << "p_n = " << f6(run.survival.back()) << '\n';
  out << "bound_n = " << f6(run.bound.back()) << '\n';
  out << "asymptote = " << f6(run.asymptote) << '\n';
  out << "watchdog = " << f6(dynamics::watchdog_survival(h, initial, o.tau, o.steps)) << '\n';
  bool ok = run.report.passed();
  if (o.stochastic) {
    const auto s = dynamics::zeno_stochastic(h, initial, o.tau, o.steps, o.samples, o.seed);
    const bool consistent = s.fraction >= run.survival.back() - 3.0 * s.standard_error;
    out << "stochastic fraction = " << f6(s.fraction) << " +- " << f6(s.standard_error)
        << " over " << s.trajectories << " trajectories"
        << (consistent ? "" : " (below p_n by more than 3 standard errors)") << '\n';
    ok = ok && consistent;
  }
  print_report(out, run.report);

  if (!o.out.empty()) {
    Sink sink(o.out, out);
    auto& os = sink.stream();
    os << "k,p_k,bound_k\n";
    for (std::size_t k = 0; k <= o.steps; ++k) {
      os << k << ',' << full(run.survival[k]) << ',' << full(run.bound[k]) << '\n';
    }
  }
  return ok ? kExitPass : kExitFail;
}

int cmd_demo_axiom5(const Axiom5Options& o, std::ostream& out) {
  const Ring ring = parse_ring(o.ring);
  if (o.samples < 1000) throw InputError("--samples must be >= 1000");
  const auto r = entropy::axiom_five_test(ring, o.samples, o.seed);
  out << "demo axiom5 ring=" << to_string(ring) << " samples=" << o.samples << " seed=" << o.seed
      << '\n';
  out << "uniform: sqrt(n) D = " << f6(r.uniform.scaled) << " threshold " << f6(entropy::kKsThreshold)
      << ' ' << (r.uniform.passed ? "PASS" : "FAIL") << '\n';
  out << "density (1-d^2)^" << f6(r.exponent) << ": sqrt(n) D = " << f6(r.density.scaled) << ' '
      << (r.density.passed ? "PASS" : "FAIL") << '\n';
  print_report(out, r.report);
  return r.report.passed() ? kExitPass : kExitFail;
}

int cmd_demo_adjunction(const AdjunctionOptions& o, std::ostream& out) {
  const auto m = geometry::build_circle_by_adjunction(o.theta0, o.depth, o.rank);
  out << "demo adjunction theta0=" << f6(o.theta0) << " depth=" << o.depth << " rank=" << o.rank
      << " points=" << m.table.size() << " mesh=" << f6(m.mesh()) << '\n';
  std::vector<VerificationReport> reports;
  reports.push_back(geometry::check_proper_mapping(m, o.eps));
  reports.push_back(check_axiom_three(m.table, o.eps, o.frame_cap));
  const auto four = check_axiom_four(m.table, o.eps);
  bool ok = four.status() != AxiomFourStatus::Fail;
  for (const auto& r : reports) {
    print_report(out, r);
    ok = ok && r.passed();
  }
  out << "axiom_four " << to_string(four.status())
      << " witnessed=" << four.count(AxiomFourOutcome::Witnessed)
      << " no_candidate=" << four.count(AxiomFourOutcome::NoCandidate)
      << " contradicted=" << four.count(AxiomFourOutcome::Contradicted) << '\n';
  if (!m.ring_backed) out << "note: rank " << o.rank << " has no division ring behind it\n";
  out << (ok ? "PASS" : "FAIL") << '\n';

  if (!o.out.empty()) {
    Sink sink(o.out, out);
    geometry::write_csv(sink.stream(), m);
  }
  if (!o.table_out.empty()) {
    Sink sink(o.table_out, out);
    sink.stream() << serialize_ptable(m.table);
  }
  return ok ? kExitPass : kExitFail;
}

namespace {

PTable midpoint_table(Ring ring, std::size_t count, std::uint64_t seed) {
  if (count < 2) throw InputError("--count must be >= 2");
  auto rng = make_engine(seed);
  std::vector<StateVector> vs;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < count; ++i) {
    vs.push_back(sample_uniform_state(ring, 2, rng));
    labels.push_back("s" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const auto mid = dynamics::tvn_midpoint(vs[i], vs[j]);
      const std::string tag = "(s" + std::to_string(i + 1) + ",s" + std::to_string(j + 1) + ")";
      vs.push_back(mid.c);
      labels.push_back("c" + tag);
      vs.push_back(mid.c_prime);
      labels.push_back("c'" + tag);
    }
  }
  return models::born_table(vs, labels);
}

}  // namespace

int cmd_generate(const GenerateOptions& o, std::ostream& out) {
  PTable t;
  if (o.kind == "skeleton") {
    t = models::skeleton_table(o.rank);
  } else if (o.kind == "crqm") {
    t = models::crqm_table(parse_ring(o.ring), o.dim, o.count, o.seed).table;
  } else if (o.kind == "hv") {
    t = models::hv_skeleton_simulate(o.rank, o.samples, o.seed, o.workers);
  } else if (o.kind == "circle") {
    t = geometry::build_circle_by_adjunction(o.theta0, o.depth, o.rank).table;
  } else if (o.kind == "midpoints") {
    t = midpoint_table(parse_ring(o.ring), o.count, o.seed);
  } else {
    throw InputError("unknown generator '" + o.kind + "'");
  }
  Sink sink(o.out, out);
  sink.stream() << serialize_ptable(t);
  return kExitPass;
}

}  // namespace qfound::cli
