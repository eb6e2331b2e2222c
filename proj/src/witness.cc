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


#include "snc/witness.h"

#include <sstream>
#include <variant>

#include "snc/degenerate.h"
#include "snc/errors.h"
#include "snc/matching.h"
#include "snc/oracle.h"

namespace snc {
namespace {

std::string Bits(const std::vector<bool>& choices) {
  std::string s;
  for (bool b : choices) s += b ? '1' : '0';
  return s.empty() ? "-" : s;
}

// Orders and sets of a relabelled subgraph, printed in the ids of the graph
// it came from.
struct IdMap {
  const std::vector<VertexId>* original = nullptr;

  VertexId operator()(VertexId v) const {
    return original ? (*original)[v] : v;
  }
  std::string seq(std::span<const VertexId> s) const {
    std::ostringstream out;
    for (std::size_t i = 0; i < s.size(); ++i)
      out << (i ? " " : "") << (*this)(s[i]);
    return out.str();
  }
  std::string set(const VertexSet& s) const {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (VertexId v : s) {
      out << (first ? "" : ",") << (*this)(v);
      first = false;
    }
    out << '}';
    return out.str();
  }
};

[[noreturn]] void Veto(const OrientedGraph& g, VertexId v,
                       const OracleCounts& c, std::string_view stage) {
  std::ostringstream msg;
  msg << stage << ": vertex " << v << " has |N+|=" << c.out_size
      << " > |N++|=" << c.second_size;
  throw InvariantViolation(msg.str(), format_edge_list(g));
}

WitnessReport Verified(const OrientedGraph& g, VertexId v, ProofPath path,
                       std::vector<std::string> trace,
                       std::string_view stage) {
  const OracleCounts c = oracle_counts(g)[v];
  if (!c.large()) Veto(g, v, c, stage);
  return {v, c.out_size, c.second_size, true, path, std::move(trace)};
}

}  // namespace

std::string_view proof_path_name(ProofPath p) {
  switch (p) {
    case ProofPath::kSink: return "sink";
    case ProofPath::kMainPrime: return "mainthm-prime";
    case ProofPath::kMainBlock: return "mainthm-block";
    case ProofPath::kFinalPeriodic: return "finalthm-periodic";
    case ProofPath::kFinalStable: return "finalthm-stable";
    case ProofPath::kBruteForce: return "brute-force-fallback";
  }
  return "unknown";
}

std::vector<WitnessReport> witness_matching(const OrientedGraph& g,
                                            const WitnessOptions& opts) {
  if (!std::holds_alternative<PureMatching>(classify_missing_structure(g)))
    throw InputError("missing edges do not form a matching");
  const DeltaDecomposition delta = build_delta(g);
  const std::vector<bool> choices(free_choice_edges(delta, g).size(), false);
  const Completion t = safe_completion(g, choices);
  const MedianOrder l = compute_median_order(t.tournament(), opts.solver);
  const VertexId d = l.feed();
  const VertexHome home = vertex_home(g, delta, d);

  std::vector<std::string> trace;
  trace.push_back("choices=" + Bits(choices));
  trace.push_back("median order=" + IdMap{}.seq(l.ordering().sequence()) +
                  " value=" + std::to_string(l.value()));
  trace.push_back("feed=" + std::to_string(d) +
                  " I(feed)=" + IdMap{}.set(home.block));
  if (home.prime) {
    bool type_one = false;
    for (const SpecialInNeighbor& s : special_in_neighbors(t, d))
      type_one = type_one || s.type_one;
    trace.push_back(type_one ? "prime feed with a type-I special in-neighbour"
                             : "prime feed without type-I special in-neighbours");
  }

  const ProofPath path = home.prime ? ProofPath::kMainPrime : ProofPath::kMainBlock;
  const std::vector<OracleCounts> counts = oracle_counts(g);
  std::vector<WitnessReport> out;
  for (VertexId v : home.block) {
    if (!counts[v].large()) Veto(g, v, counts[v], "matching pipeline");
    out.push_back({v, counts[v].out_size, counts[v].second_size, true, path,
                   trace});
  }
  return out;
}

WitnessReport witness_matching_plus_star(const OrientedGraph& h,
                                         std::optional<VertexId> center,
                                         const WitnessOptions& opts) {
  if (!center) {
    const MissingStructure s = classify_missing_structure(h);
    if (std::holds_alternative<OtherStructure>(s))
      throw InputError("missing edges are not a matching plus a star");
  }
  const VertexSet sinks = find_sinks(h);
  if (!sinks.empty())
    return Verified(h, *sinks.begin(), ProofPath::kSink, {"sink"}, "sink");

  const VertexId z = center ? *center : canonical_star_center(h);
  check_vertex(h, z);
  std::vector<VertexId> original;
  const OrientedGraph g = h.without_vertex(z, &original);
  if (!missing_edges_form_matching(g))
    throw PreconditionError("deleting vertex " + std::to_string(z) +
                            " does not leave a tournament missing a matching");
  const IdMap ids{&original};

  const DeltaDecomposition delta = build_delta(g);
  const SafeCompletionChoice best = max_value_safe_completion(
      g, {opts.free_choice_limit, opts.solver});
  const OrientedGraph& t = best.completion.tournament();
  const ModulePartition p = home_partition(g, delta);
  const MedianOrder l =
      good_median_order(t, p, compute_median_order(t, opts.solver));
  const SedimentOutcome sed = sediment_iterate(t, p, l, opts.sediment_steps);

  std::vector<std::string> trace;
  trace.push_back("center=" + std::to_string(z));
  trace.push_back("choices=" + Bits(best.choices) +
                  " value=" + std::to_string(best.value));
  for (std::size_t q = 0; q < sed.history.size(); ++q)
    trace.push_back("sed " + std::to_string(q) + ": " +
                    ids.seq(sed.history[q].ordering().sequence()));

  VertexId w = 0;
  ProofPath path = ProofPath::kFinalStable;
  if (sed.stable()) {
    w = sed.fixpoint().feed();
    trace.push_back("stable at step " + std::to_string(sed.steps()));
  } else {
    trace.push_back("periodic from step " + std::to_string(sed.period_start));
    path = ProofPath::kFinalPeriodic;
    // Lowest out-neighbour of z, in the ids of g.
    const VertexId u_h = *h.out(z).begin();
    const VertexId u = u_h < z ? u_h : u_h - 1;
    bool found = false;
    for (std::size_t q = 0; q < sed.history.size() && !found; ++q) {
      const VertexId d = sed.history[q].feed();
      const VertexSet in_d = t.in(d) - second_out_neighborhood(t, d);
      if (p.block_set(p.block_of(d)).contains(u)) {
        w = u;
        found = true;
        trace.push_back("u=" + std::to_string(u_h) + " lies in I(d_" +
                        std::to_string(q) + ")");
      } else if (in_d.contains(u)) {
        w = d;
        found = true;
        trace.push_back("u=" + std::to_string(u_h) + " is an in-neighbour of d_" +
                        std::to_string(q) + "=" + std::to_string(ids(d)) +
                        " outside its N++");
      }
    }
    if (!found)
      throw InvariantViolation(
          "out-neighbour " + std::to_string(u_h) +
              " of the center is in N+ or N++ of every feed in the orbit",
          format_edge_list(h));
  }

  const OracleCounts in_g = oracle_counts(g)[w];
  if (!in_g.large()) Veto(h, ids(w), in_g, "matching-plus-star pipeline (H - z)");
  return Verified(h, ids(w), path, std::move(trace),
                  "matching-plus-star pipeline");
}

std::pair<WitnessReport, WitnessReport> two_witnesses_matching(
    const OrientedGraph& h, const WitnessOptions& opts) {
  if (!std::holds_alternative<PureMatching>(classify_missing_structure(h)))
    throw InputError("missing edges do not form a matching");
  if (!find_sinks(h).empty())
    throw PreconditionError("graph has a sink");
  WitnessReport first = witness_matching(h, opts).front();
  WitnessReport second = witness_matching_plus_star(h, first.vertex, opts);
  if (second.vertex == first.vertex)
    throw InvariantViolation("second witness equals the first",
                             format_edge_list(h));
  return {std::move(first), std::move(second)};
}

WitnessReport witness_degenerate(const OrientedGraph& g, const VertexSet& a_set,
                                 const VertexSet& b_set) {
  validate_partition(g, a_set, b_set);
  const std::vector<OracleCounts> counts = oracle_counts(g);
  for (VertexId v = 0; v < g.size(); ++v)
    if (counts[v].large())
      return {v, counts[v].out_size, counts[v].second_size, true,
              ProofPath::kBruteForce, {"scan by vertex index"}};
  throw CounterexampleFound(
      "no vertex has a large second neighbourhood in a 2-degenerate + "
      "independent partition instance",
      format_edge_list(g));
}

std::string format_witness(const WitnessReport& r, const LabelTable& labels,
                           bool verbose) {
  std::ostringstream out;
  out << "witness " << labels.name(r.vertex) << " out=" << r.out_size
      << " second=" << r.second_size << " path=" << proof_path_name(r.proof_path)
      << " verified=" << (r.verified ? "yes" : "no") << '\n';
  if (verbose)
    for (const std::string& line : r.trace) out << "  " << line << '\n';
  return out.str();
}

}  // namespace snc
