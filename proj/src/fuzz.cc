// Copyright 2026 The snc Authors
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


#include "snc/fuzz.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>
#include <variant>

#include "snc/degenerate.h"
#include "snc/errors.h"
#include "snc/matching.h"
#include "snc/oracle.h"

namespace snc {
namespace {

using Coverage = std::map<std::string, std::size_t>;

struct Instance {
  const OrientedGraph& g;
  const std::optional<PartitionSpec>& partition;
  const WitnessOptions& opts;
};

struct Outcome {
  enum class Kind { kSkip, kHold, kFail };
  Kind kind;
  std::string detail;
};

Outcome Skip() { return {Outcome::Kind::kSkip, {}}; }
Outcome Hold() { return {Outcome::Kind::kHold, {}}; }
Outcome Fail(std::string detail) { return {Outcome::Kind::kFail, std::move(detail)}; }
Outcome Expect(bool ok, const std::string& detail) { return ok ? Hold() : Fail(detail); }

struct Property {
  PropertyInfo info;
  std::function<Outcome(const Instance&, Coverage&)> check;
};

std::string V(VertexId v) { return std::to_string(v); }

bool Matching(const OrientedGraph& g) {
  return g.size() > 0 && missing_edges_form_matching(g);
}

bool WithinSolver(const Instance& in, std::size_t n) {
  return n <= in.opts.solver.exact_limit;
}

Completion ZeroCompletion(const OrientedGraph& g, const DeltaDecomposition& d) {
  return safe_completion(g, std::vector<bool>(free_choice_edges(d, g).size(), false));
}

Outcome OracleAgreement(const Instance& in, Coverage&) {
  oracle_counts(in.g);
  return Hold();
}

Outcome HavetThomasse(const Instance& in, Coverage&) {
  if (!in.g.is_tournament() || in.g.size() == 0 || !WithinSolver(in, in.g.size()))
    return Skip();
  const VertexId d = compute_median_order(in.g, in.opts.solver).feed();
  return Expect(oracle_all_witnesses(in.g).contains(d),
                "feed vertex " + V(d) + " of the median order is not a witness");
}

// Counts R facts directly, independent of build_delta's own bookkeeping.
Outcome DeltaDegree(const Instance& in, Coverage&) {
  if (!Matching(in.g)) return Skip();
  const std::vector<MissingEdge> nodes = missing_edges(in.g);
  std::vector<std::size_t> out(nodes.size(), 0), inc(nodes.size(), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (i == j) continue;
      const MissingPair p{nodes[i].lo, nodes[i].hi};
      const MissingPair q{nodes[j].lo, nodes[j].hi};
      if (relation_R(in.g, p, q) || relation_R(in.g, p, q.reversed()) ||
          relation_R(in.g, p.reversed(), q) ||
          relation_R(in.g, p.reversed(), q.reversed())) {
        ++out[i];
        ++inc[j];
      }
    }
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (out[i] > 1 || inc[i] > 1)
      return Fail("missing edge {" + V(nodes[i].lo) + "," + V(nodes[i].hi) +
                  "} has Delta in-degree " + std::to_string(inc[i]) +
                  " and out-degree " + std::to_string(out[i]));
  build_delta(in.g);
  return Hold();
}

Outcome SpecialCycles(const Instance& in, Coverage&) {
  if (!Matching(in.g)) return Skip();
  const DeltaDecomposition d = build_delta(in.g);
  for (const std::vector<std::size_t>& cycle : d.cycles) {
    const GammaReport gr = gamma(in.g, d, cycle.front());
    const SpecialCycleReport sc = verify_special_cycle(in.g, gr.special_cycle);
    if (sc.length % 2 != 0 || sc.length != gr.vertices.size())
      return Fail("special cycle of odd length or not spanning Gamma");
    if (!is_module(in.g, gr.vertices)) return Fail("Gamma is not a module");
    if (snc_on_gamma(in.g, d, cycle.front()) != gr.vertices.size() / 2 - 1)
      return Fail("Gamma counts differ from |Gamma|/2 - 1");
  }
  return Hold();
}

Outcome DuallyForced(const Instance& in, Coverage&) {
  if (!Matching(in.g)) return Skip();
  const DeltaDecomposition d = build_delta(in.g);
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    if (forced_status(in.g, d.nodes[i]).kind == ForcedStatus::Kind::kDual &&
        d.in_arc[i] == kNoNode)
      return Fail("dually forced edge {" + V(d.nodes[i].lo) + "," +
                  V(d.nodes[i].hi) + "} has no Delta in-neighbour");
  return Hold();
}

Outcome Strategy(const Instance& in, Coverage&) {
  if (!Matching(in.g)) return Skip();
  const DeltaDecomposition d = build_delta(in.g);
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    if (forced_status(in.g, d.nodes[i]).singly() &&
        (d.in_arc[i] != kNoNode || d.on_cycle(i)))
      return Fail("singly forced edge {" + V(d.nodes[i].lo) + "," +
                  V(d.nodes[i].hi) + "} does not start a path");
  return Hold();
}

Outcome SafeCompletionValid(const Instance& in, Coverage&) {
  if (!Matching(in.g)) return Skip();
  const DeltaDecomposition d = build_delta(in.g);
  const std::size_t k = free_choice_edges(d, in.g).size();
  for (bool bit : {false, true}) {
    const Completion t = safe_completion(in.g, std::vector<bool>(k, bit));
    if (!t.tournament().is_tournament() || !is_safe_completion(in.g, t))
      return Fail(std::string("constant-") + (bit ? "1" : "0") +
                  " completion is not a safe tournament completion");
  }
  return Hold();
}

Outcome GoodVertices(const Instance& in, Coverage&) {
  if (!Matching(in.g)) return Skip();
  const Completion t = ZeroCompletion(in.g, build_delta(in.g));
  for (VertexId v = 0; v < in.g.size(); ++v) {
    const VertexSet extra =
        second_out_neighborhood(t.tournament(), v) - second_out_neighborhood(in.g, v);
    const std::vector<SpecialInNeighbor> special = special_in_neighbors(t, v);
    for (VertexId x : extra)
      if (std::none_of(special.begin(), special.end(),
                       [x](const SpecialInNeighbor& s) { return s.vertex == x; }))
        return Fail("vertex " + V(x) + " enters N++(" + V(v) +
                    ") in the completion without being a special in-neighbour");
  }
  return Hold();
}

Outcome UniqueTypeOne(const Instance& in, Coverage&) {
  if (!Matching(in.g)) return Skip();
  const Completion t = ZeroCompletion(in.g, build_delta(in.g));
  for (VertexId v = 0; v < in.g.size(); ++v) {
    const auto s = special_in_neighbors(t, v);
    const auto ones = std::count_if(s.begin(), s.end(),
                                    [](const SpecialInNeighbor& x) { return x.type_one; });
    if (ones > 1)
      return Fail("vertex " + V(v) + " has " + std::to_string(ones) +
                  " type-I special in-neighbours");
  }
  return Hold();
}

Outcome FeedCycle(const Instance& in, Coverage&) {
  if (!Matching(in.g)) return Skip();
  const DeltaDecomposition d = build_delta(in.g);
  const Completion t = ZeroCompletion(in.g, d);
  for (const std::vector<std::size_t>& cycle : d.cycles) {
    const VertexSet block = gamma(in.g, d, cycle.front()).vertices;
    for (VertexId v : block) {
      const VertexSet in_t = second_out_neighborhood(t.tournament(), v) - block;
      const VertexSet in_g = second_out_neighborhood(in.g, v) - block;
      if (!in_t.is_subset_of(in_g))
        return Fail("N++ of " + V(v) + " outside its Gamma grows in the completion");
    }
  }
  return Hold();
}

Outcome FAcyclic(const Instance& in, Coverage&) {
  if (!Matching(in.g)) return Skip();
  const std::vector<VertexId> order = relation_F_order(in.g, build_delta(in.g));
  return Expect(order.size() == in.g.size(), "F order does not cover all vertices");
}

Outcome UnforcedIsolated(const Instance& in, Coverage&) {
  if (!Matching(in.g) || !WithinSolver(in, in.g.size())) return Skip();
  const SafeCompletionChoice best = max_value_safe_completion(
      in.g, {in.opts.free_choice_limit, in.opts.solver});
  const MedianOrder l = compute_median_order(best.completion.tournament(), in.opts.solver);
  return Expect(check_no_unforced_isolated_reverse(best.completion, l, build_delta(in.g)),
                "maximum safe completion has a backward unforced isolated edge");
}

Outcome MatchingWitnesses(const Instance& in, Coverage& cov) {
  if (!Matching(in.g) || !WithinSolver(in, in.g.size())) return Skip();
  const VertexSet all = oracle_all_witnesses(in.g);
  const std::vector<WitnessReport> reports = witness_matching(in.g, in.opts);
  if (reports.empty()) return Fail("I(feed) is empty");
  ++cov[std::string(proof_path_name(reports.front().proof_path))];
  for (const WitnessReport& r : reports)
    if (!r.verified || !all.contains(r.vertex))
      return Fail("vertex " + V(r.vertex) + " of I(feed) is not a witness");
  return Hold();
}

Outcome TwoWitnesses(const Instance& in, Coverage& cov) {
  if (!Matching(in.g) || !find_sinks(in.g).empty() || !WithinSolver(in, in.g.size()))
    return Skip();
  const VertexSet all = oracle_all_witnesses(in.g);
  const auto [a, b] = two_witnesses_matching(in.g, in.opts);
  ++cov[std::string(proof_path_name(b.proof_path))];
  return Expect(a.vertex != b.vertex && all.contains(a.vertex) && all.contains(b.vertex),
                "two-witness pipeline returned " + V(a.vertex) + " and " + V(b.vertex));
}

Outcome StarWitness(const Instance& in, Coverage& cov) {
  const MissingStructure s = classify_missing_structure(in.g);
  const auto* star = std::get_if<MatchingPlusStar>(&s);
  if (!star || !find_sinks(in.g).empty()) return Skip();
  const WitnessReport r = witness_matching_plus_star(in.g, std::nullopt, in.opts);
  ++cov[std::string(proof_path_name(r.proof_path))];
  if (r.vertex == star->center) return Fail("witness is the star center");
  std::vector<VertexId> original;
  const OrientedGraph g = in.g.without_vertex(star->center, &original);
  const auto pos = std::find(original.begin(), original.end(), r.vertex) - original.begin();
  return Expect(oracle_all_witnesses(in.g).contains(r.vertex) &&
                    oracle_all_witnesses(g).contains(static_cast<VertexId>(pos)),
                "witness " + V(r.vertex) + " fails in H or in H - z");
}

Outcome EdgeBound(const Instance& in, Coverage&) {
  if (in.g.size() == 0 ||
      !std::holds_alternative<DegeneracyCertificate>(two_degeneracy_certificate(in.g)))
    return Skip();
  check_edge_bound(in.g);
  return Hold();
}

Outcome DegenerateWitness(const Instance& in, Coverage& cov) {
  if (!in.partition) return Skip();
  try {
    validate_partition(in.g, in.partition->a_set, in.partition->b_set);
  } catch (const InputError&) {
    return Skip();
  }
  const WitnessReport r = witness_degenerate(in.g, in.partition->a_set, in.partition->b_set);
  ++cov[std::string(proof_path_name(r.proof_path))];
  return Expect(oracle_all_witnesses(in.g).contains(r.vertex),
                "degenerate witness " + V(r.vertex) + " fails the oracle");
}

Outcome LoneWitnessIsSink(const Instance& in, Coverage&) {
  if (in.g.size() == 0) return Skip();
  const VertexSet w = oracle_all_witnesses(in.g);
  if (w.size() != 1) return Hold();
  const VertexId v = *w.begin();
  return Expect(in.g.out_degree(v) == 0, "lone witness " + V(v) + " is not a sink");
}

Outcome SinklessTwoWitnesses(const Instance& in, Coverage&) {
  if (in.g.size() == 0 || !find_sinks(in.g).empty()) return Skip();
  const std::size_t k = oracle_all_witnesses(in.g).size();
  return Expect(k >= 2, "sinkless graph with " + std::to_string(k) + " witnesses");
}

const std::vector<Property>& Registry() {
  static const std::vector<Property> registry = {
      {{"oracle-agreement", false}, OracleAgreement},
      {{"havet-thomasse", false}, HavetThomasse},
      {{"delta-degree", false}, DeltaDegree},
      {{"special-cycles", false}, SpecialCycles},
      {{"dually-forced", false}, DuallyForced},
      {{"singly-forced-path-start", false}, Strategy},
      {{"safe-completion", false}, SafeCompletionValid},
      {{"good-vertices", false}, GoodVertices},
      {{"unique-type-one", false}, UniqueTypeOne},
      {{"gamma-second-neighbourhood", false}, FeedCycle},
      {{"f-acyclic", false}, FAcyclic},
      {{"unforced-isolated", false}, UnforcedIsolated},
      {{"matching-witnesses", false}, MatchingWitnesses},
      {{"two-witnesses", false}, TwoWitnesses},
      {{"star-witness", false}, StarWitness},
      {{"edge-bound", false}, EdgeBound},
      {{"degenerate-witness", false}, DegenerateWitness},
      {{"lone-witness-is-sink", true}, LoneWitnessIsSink},
      {{"sinkless-two-witnesses", true}, SinklessTwoWitnesses},
  };
  return registry;
}

Outcome Run(const Property& p, const Instance& in, Coverage& cov) {
  try {
    return p.check(in, cov);
  } catch (const CapabilityError&) {
    return Skip();
  } catch (const std::exception& e) {
    return Fail(e.what());
  }
}

std::optional<PartitionSpec> Restrict(const std::optional<PartitionSpec>& p,
                                      const std::vector<VertexId>& original) {
  if (!p) return std::nullopt;
  PartitionSpec out{VertexSet(original.size()), VertexSet(original.size())};
  for (VertexId v = 0; v < original.size(); ++v)
    (p->a_set.contains(original[v]) ? out.a_set : out.b_set).insert(v);
  return out;
}

bool Fails(const Property& p, const OrientedGraph& g,
           const std::optional<PartitionSpec>& part, const WitnessOptions& opts) {
  Coverage scratch;
  return Run(p, Instance{g, part, opts}, scratch).kind == Outcome::Kind::kFail;
}

struct TrialResult {
  std::vector<FuzzViolation> violations;
  Coverage coverage;
  Coverage checks;
};

TrialResult RunTrial(const FuzzConfig& config, std::size_t index) {
  const InstanceClass cls = config.classes[index % config.classes.size()];
  const std::uint64_t seed = derive_seed(config.master_seed, index);
  Rng rng(seed);
  std::size_t lo = config.n_min;
  if (cls == InstanceClass::kTournamentMinusStar ||
      cls == InstanceClass::kTournamentMinusMatchingPlusStar)
    lo = std::max<std::size_t>(lo, 3);
  const std::size_t n = rng.between(lo, std::max(lo, config.n_max));
  const GeneratedInstance inst = generate(cls, n, rng.next());
  const Instance in{inst.graph, inst.partition, config.witness};

  TrialResult result;
  for (const Property& p : Registry()) {
    const Outcome o = Run(p, in, result.coverage);
    if (o.kind == Outcome::Kind::kSkip) continue;
    ++result.checks[p.info.name];
    if (o.kind != Outcome::Kind::kFail) continue;
    FuzzViolation v{index, seed, cls, p.info.name, o.detail, p.info.conjecture,
                    format_edge_list(inst.graph),
                    inst.partition ? format_partition(*inst.partition) : "", ""};
    if (config.shrink)
      v.shrunk = format_edge_list(shrink_instance(
          inst.graph, inst.partition,
          [&](const OrientedGraph& h, const std::optional<PartitionSpec>& q) {
            return Fails(p, h, q, config.witness);
          }));
    result.violations.push_back(std::move(v));
  }
  return result;
}

}  // namespace

bool FuzzReport::potential_refutation() const {
  return std::any_of(violations.begin(), violations.end(),
                     [](const FuzzViolation& v) { return v.potential_refutation; });
}

void validate_fuzz_config(const FuzzConfig& c) {
  if (c.classes.empty()) throw InputError("fuzz needs at least one class");
  if (c.n_min == 0 || c.n_min > c.n_max)
    throw InputError("fuzz size range must satisfy 1 <= n_min <= n_max");
  if (c.jobs == 0) throw InputError("jobs must be positive");
  for (InstanceClass cls : c.classes)
    if (cls != InstanceClass::kDegeneratePartition &&
        c.n_max > c.witness.solver.exact_limit)
      throw InputError("n_max " + std::to_string(c.n_max) +
                       " exceeds the exact median-order limit for class " +
                       std::string(class_name(cls)));
}

FuzzReport fuzz(const FuzzConfig& config) {
  validate_fuzz_config(config);
  std::vector<TrialResult> results(config.trials);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  const auto worker = [&] {
    for (std::size_t i = next++; i < config.trials; i = next++) {
      try {
        results[i] = RunTrial(config, i);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t j = 1; j < std::min(config.jobs, config.trials); ++j)
      pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  FuzzReport report;
  report.trials_run = config.trials;
  for (TrialResult& r : results) {
    for (FuzzViolation& v : r.violations) report.violations.push_back(std::move(v));
    for (const auto& [k, c] : r.coverage) report.branch_coverage[k] += c;
    for (const auto& [k, c] : r.checks) report.property_checks[k] += c;
  }
  return report;
}

OrientedGraph shrink_instance(OrientedGraph g, std::optional<PartitionSpec> part,
                              const InstancePredicate& still_fails) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = static_cast<VertexId>(g.size()); v-- > 0 && g.size() > 1;) {
      std::vector<VertexId> original;
      OrientedGraph h = g.without_vertex(v, &original);
      std::optional<PartitionSpec> q = Restrict(part, original);
      if (still_fails(h, q)) {
        g = std::move(h);
        part = std::move(q);
        changed = true;
      }
    }
    for (const Arc& a : g.arcs()) {
      OrientedGraph h = g.with_arc_removed(a.from, a.to);
      if (still_fails(h, part)) {
        g = std::move(h);
        changed = true;
        break;
      }
    }
  }
  return g;
}

const std::vector<PropertyInfo>& fuzz_properties() {
  static const std::vector<PropertyInfo> infos = [] {
    std::vector<PropertyInfo> out;
    for (const Property& p : Registry()) out.push_back(p.info);
    return out;
  }();
  return infos;
}

std::optional<std::string> check_property(const std::string& name,
                                          const OrientedGraph& g,
                                          const std::optional<PartitionSpec>& partition,
                                          const WitnessOptions& opts) {
  for (const Property& p : Registry()) {
    if (p.info.name != name) continue;
    Coverage scratch;
    const Outcome o = Run(p, Instance{g, partition, opts}, scratch);
    if (o.kind == Outcome::Kind::kFail) return o.detail;
    return std::nullopt;
  }
  throw InputError("unknown property '" + name + "'");
}

std::string format_fuzz_report(const FuzzReport& report) {
  std::ostringstream out;
  std::size_t refutations = 0;
  for (const FuzzViolation& v : report.violations) refutations += v.potential_refutation;
  out << "trials=" << report.trials_run << " violations=" << report.violations.size()
      << " potential_refutations=" << refutations << '\n';
  for (const auto& [tag, count] : report.branch_coverage)
    out << "coverage " << tag << ' ' << count << '\n';
  for (const auto& [name, count] : report.property_checks)
    out << "checked " << name << ' ' << count << '\n';
  for (const FuzzViolation& v : report.violations) {
    out << "violation trial=" << v.trial << " seed=" << v.seed
        << " class=" << class_name(v.cls) << " property=" << v.property
        << (v.potential_refutation ? " potential-refutation" : "")
        << " detail=\"" << v.detail << "\"\n";
    out << "instance:\n" << v.instance;
    if (!v.partition.empty()) out << "partition:\n" << v.partition;
    if (!v.shrunk.empty()) out << "shrunk:\n" << v.shrunk;
    out << "end\n";
  }
  return out.str();
}

}  // namespace snc
