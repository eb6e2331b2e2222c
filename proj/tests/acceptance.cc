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


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Ground truth (second neighbourhoods, median values) is
// recomputed here from has_arc alone.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "snc/cli.h"
#include "snc/degenerate.h"
#include "snc/errors.h"
#include "snc/fuzz.h"
#include "snc/generators.h"
#include "snc/graph.h"
#include "snc/matching.h"
#include "snc/median_order.h"
#include "snc/oracle.h"
#include "snc/witness.h"

namespace snc {
namespace {

struct Verdict {
  bool pass = true;
  std::string summary;
  std::vector<std::string> failures;

  void Require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

// |N+(v)| and |N++(v)| from has_arc only.
std::pair<std::size_t, std::size_t> Counts(const OrientedGraph& g, VertexId v) {
  const std::size_t n = g.size();
  std::size_t out = 0, second = 0;
  for (VertexId w = 0; w < n; ++w) {
    if (w == v) continue;
    if (g.has_arc(v, w)) {
      ++out;
      continue;
    }
    for (VertexId x = 0; x < n; ++x)
      if (g.has_arc(v, x) && g.has_arc(x, w)) {
        ++second;
        break;
      }
  }
  return {out, second};
}

bool Large(const OrientedGraph& g, VertexId v) {
  const auto [out, second] = Counts(g, v);
  return second >= out;
}

std::vector<VertexId> AllLarge(const OrientedGraph& g) {
  std::vector<VertexId> r;
  for (VertexId v = 0; v < g.size(); ++v)
    if (Large(g, v)) r.push_back(v);
  return r;
}

bool HasSink(const OrientedGraph& g) {
  for (VertexId v = 0; v < g.size(); ++v)
    if (g.out_degree(v) == 0) return true;
  return false;
}

std::int64_t BruteMedianValue(const OrientedGraph& t) {
  std::vector<VertexId> p(t.size());
  std::iota(p.begin(), p.end(), VertexId{0});
  std::int64_t best = 0;
  do {
    std::int64_t v = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) v += t.has_arc(p[i], p[j]);
    best = std::max(best, v);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

std::string G(const OrientedGraph& g) {
  std::string s = format_edge_list(g);
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

// Replaces vertex `s` of `q` by the module `m`; m's vertex 0 keeps id s, the
// rest take ids q.size() onward.
OrientedGraph Substitute(const OrientedGraph& q, VertexId s, const OrientedGraph& m) {
  const std::size_t n = q.size() + m.size() - 1;
  auto id = [&](VertexId i) { return i == 0 ? s : static_cast<VertexId>(q.size() + i - 1); };
  std::vector<Arc> arcs;
  for (const Arc& a : q.arcs()) {
    if (a.from != s && a.to != s) {
      arcs.push_back(a);
      continue;
    }
    for (VertexId i = 0; i < m.size(); ++i)
      arcs.push_back(a.from == s ? Arc{id(i), a.to} : Arc{a.from, id(i)});
  }
  for (const Arc& a : m.arcs()) arcs.push_back({id(a.from), id(a.to)});
  return OrientedGraph(n, arcs);
}

OrientedGraph FourCycleModule() {
  const std::vector<Arc> arcs = {{0, 2}, {2, 1}, {1, 3}, {3, 0}};
  return OrientedGraph(4, arcs);
}

OrientedGraph EightCycleModule() {
  std::vector<Arc> arcs;
  for (VertexId i = 0; i < 8; ++i)
    for (VertexId k = 1; k <= 3; ++k) arcs.push_back({i, static_cast<VertexId>((i + k) % 8)});
  return OrientedGraph(8, arcs);
}

// Tournaments missing a matching that contain a special cycle: a four- or
// eight-vertex special cycle substituted for a fully adjacent vertex of a
// random instance, keeping n <= n_max.
std::vector<OrientedGraph> PlantedCycles(std::size_t count, std::size_t n_max,
                                         std::uint64_t seed) {
  std::vector<OrientedGraph> out;
  Rng rng(seed);
  for (std::uint64_t i = 0; out.size() < count; ++i) {
    const bool eight = n_max >= 10 && rng.below(4) == 0;
    const OrientedGraph m = eight ? EightCycleModule() : FourCycleModule();
    const std::size_t qn = rng.between(2, n_max - m.size() + 1);
    const OrientedGraph q =
        generate(InstanceClass::kTournamentMinusMatching, qn, derive_seed(seed, i)).graph;
    std::vector<VertexId> full;
    for (VertexId v = 0; v < qn; ++v)
      if (q.out_degree(v) + q.in(v).size() == qn - 1) full.push_back(v);
    if (full.empty()) continue;
    out.push_back(Substitute(q, full[rng.below(full.size())], m));
  }
  return out;
}

// Instance corpora shared by several criteria.
struct Corpus {
  std::vector<OrientedGraph> matching;
  std::vector<OrientedGraph> planted;
  std::vector<OrientedGraph> star;
};

Verdict Figure2() {
  Verdict v;
  const OrientedGraph g = figure2_instance();
  const std::vector<VertexId> expected = {0, 2};
  v.Require(AllLarge(g) == expected, "independent witnesses differ from {a,c}");
  const VertexSet w = oracle_all_witnesses(g);
  v.Require(std::vector<VertexId>(w.begin(), w.end()) == expected,
            "oracle_all_witnesses differs from {a,c}");
  v.Require(find_sinks(g).empty(), "figure 2 instance has a sink");
  const auto [a, b] = two_witnesses_matching(g);
  std::vector<VertexId> pair = {a.vertex, b.vertex};
  std::sort(pair.begin(), pair.end());
  v.Require(pair == expected && a.verified && b.verified, "two-witness pipeline pair");
  v.summary = "witnesses={a,c} sinks={} pair={" + std::string(figure2_labels().name(pair[0])) +
              "," + std::string(figure2_labels().name(pair[1])) + "}";
  return v;
}

Verdict FeedVertexSuite() {
  Verdict v;
  constexpr std::size_t kTrials = 1500;
  Rng sizes(101);
  for (std::size_t i = 0; i < kTrials; ++i) {
    Rng rng(derive_seed(102, i));
    const OrientedGraph t = random_tournament(sizes.between(3, 10), rng);
    const VertexId d = compute_median_order(t).feed();
    v.Require(Large(t, d), "feed " + std::to_string(d) + " not large in " + G(t));
  }
  v.summary = std::to_string(kTrials) + " tournaments, n in [3,10]";
  return v;
}

Verdict MatchingWitnessSuite(const Corpus& c) {
  Verdict v;
  std::map<std::string, std::size_t> paths;
  std::size_t checked = 0;
  auto run = [&](const OrientedGraph& g) {
    const std::vector<WitnessReport> reports = witness_matching(g);
    v.Require(!reports.empty(), "empty I(feed) in " + G(g));
    ++paths[std::string(proof_path_name(reports.front().proof_path))];
    for (const WitnessReport& r : reports) {
      ++checked;
      v.Require(r.verified && Large(g, r.vertex),
                "vertex " + std::to_string(r.vertex) + " of I(feed) fails in " + G(g));
    }
  };
  for (const OrientedGraph& g : c.matching) run(g);
  for (const OrientedGraph& g : c.planted) run(g);
  v.Require(paths["mainthm-block"] > 0, "no instance took the block path");
  v.summary = std::to_string(c.matching.size() + c.planted.size()) + " instances, " +
              std::to_string(checked) + " witnesses, prime=" +
              std::to_string(paths["mainthm-prime"]) +
              " block=" + std::to_string(paths["mainthm-block"]);
  return v;
}

Verdict TwoWitnesses(const Corpus& c) {
  Verdict v;
  std::size_t used = 0;
  for (const std::vector<OrientedGraph>* set : {&c.matching, &c.planted})
    for (const OrientedGraph& g : *set) {
      if (HasSink(g)) continue;
      ++used;
      const auto [a, b] = two_witnesses_matching(g);
      v.Require(a.vertex != b.vertex && Large(g, a.vertex) && Large(g, b.vertex),
                "two-witness pipeline fails on " + G(g));
    }
  v.Require(used >= 500, "only " + std::to_string(used) + " sinkless instances");
  v.summary = std::to_string(used) + " sinkless instances";
  return v;
}

Verdict StarWitnessSuite(const Corpus& c) {
  Verdict v;
  std::map<std::string, std::size_t> paths;
  for (const OrientedGraph& h : c.star) {
    const VertexId z = canonical_star_center(h);
    const WitnessReport r = witness_matching_plus_star(h);
    ++paths[std::string(proof_path_name(r.proof_path))];
    const OrientedGraph g = h.without_vertex(z);
    const VertexId in_g = r.vertex < z ? r.vertex : r.vertex - 1;
    v.Require(r.vertex != z && Large(h, r.vertex) && Large(g, in_g),
              "witness " + std::to_string(r.vertex) + " fails on " + G(h));
  }
  v.Require(c.star.size() >= 500, "too few star instances");
  v.Require(paths["finalthm-stable"] > 0 && paths["finalthm-periodic"] > 0,
            "sedimentation coverage lacks a branch");
  v.summary = std::to_string(c.star.size()) + " sinkless instances, stable=" +
              std::to_string(paths["finalthm-stable"]) +
              " periodic=" + std::to_string(paths["finalthm-periodic"]);
  return v;
}

Verdict Structural(const Corpus& c) {
  Verdict v;
  static const std::vector<std::string> kProps = {
      "delta-degree",  "special-cycles",          "gamma-second-neighbourhood",
      "dually-forced", "singly-forced-path-start", "safe-completion",
      "good-vertices", "unique-type-one",          "f-acyclic",
      "unforced-isolated"};
  std::size_t instances = 0, cycles = 0;
  auto run = [&](const OrientedGraph& g) {
    ++instances;
    cycles += build_delta(g).cycles.size();
    for (const std::string& p : kProps)
      if (const auto fail = check_property(p, g, std::nullopt))
        v.Require(false, p + ": " + *fail + " on " + G(g));
  };
  for (const OrientedGraph& g : c.matching) run(g);
  for (const OrientedGraph& g : c.planted) run(g);
  for (const OrientedGraph& h : c.star) run(h.without_vertex(canonical_star_center(h)));
  v.Require(cycles > 0, "no Delta cycle in the corpus");
  v.summary = std::to_string(instances) + " instances x " + std::to_string(kProps.size()) +
              " lemmas, " + std::to_string(cycles) + " Delta cycles";
  return v;
}

Verdict Sedimentation() {
  Verdict v;
  constexpr std::size_t kTriples = 600;
  Rng rng(701);
  std::size_t periodic = 0;
  for (std::size_t i = 0; i < kTriples; ++i) {
    std::vector<std::size_t> sizes;
    for (std::size_t k = rng.between(1, 5), total = 0; sizes.size() < k;) {
      const std::size_t s = rng.between(1, 3);
      if (total + s > 10) break;
      sizes.push_back(s);
      total += s;
    }
    const ModularTournament mt = random_modular_tournament(sizes, derive_seed(702, i));
    const OrientedGraph& t = mt.tournament;
    const MedianOrder good = good_median_order(t, mt.partition, compute_median_order(t));
    v.Require(is_good_ordering(mt.partition, good.ordering()), "good order not good");
    const MedianOrder sed = sediment(t, mt.partition, good);
    const std::int64_t optimum = median_value(t);
    if (t.size() <= 8)
      v.Require(optimum == BruteMedianValue(t), "DP optimum differs on " + G(t));
    certify_median_order(t, sed.ordering());
    std::int64_t value = 0;
    for (std::size_t a = 0; a < sed.size(); ++a)
      for (std::size_t b = a + 1; b < sed.size(); ++b) value += t.has_arc(sed[a], sed[b]);
    v.Require(value == optimum && sed.value() == optimum,
              "Sed is not a median order of " + G(t));
    v.Require(is_good_ordering(mt.partition, sed.ordering()),
              "Sed breaks a block of " + G(t));
    periodic += !sediment_iterate(t, mt.partition, good, 10000).stable();
  }
  const std::vector<Arc> c3 = {{0, 1}, {1, 2}, {2, 0}};
  const OrientedGraph t(3, c3);
  const SedimentOutcome orbit = sediment_iterate(
      t, ModulePartition::Singletons(3), certify_median_order(t, Ordering({0, 1, 2})), 10);
  std::vector<std::vector<VertexId>> seen;
  for (const MedianOrder& l : orbit.history)
    seen.push_back(l.ordering().sequence());
  const std::vector<std::vector<VertexId>> expected = {{0, 1, 2}, {2, 0, 1}, {1, 2, 0}};
  v.Require(!orbit.stable() && orbit.period_start == 0 && seen == expected &&
                sediment(t, ModulePartition::Singletons(3), orbit.history.back()) ==
                    orbit.history.front(),
            "3-cycle orbit differs from (a,b,c)->(c,a,b)->(b,c,a)->(a,b,c)");
  v.summary = std::to_string(kTriples) + " triples (" + std::to_string(periodic) +
              " periodic), 3-cycle orbit exact";
  return v;
}

Verdict ExactSolver() {
  Verdict v;
  constexpr std::size_t kCorpus = 240;
  Rng sizes(801);
  for (std::size_t i = 0; i < kCorpus; ++i) {
    Rng rng(derive_seed(802, i));
    const OrientedGraph t = random_tournament(sizes.between(1, 8), rng);
    v.Require(median_value(t) == BruteMedianValue(t), "DP value differs on " + G(t));
  }
  v.summary = std::to_string(kCorpus) + " tournaments, n in [1,8]";
  return v;
}

Verdict Degenerate() {
  Verdict v;
  constexpr std::size_t kGraphs = 600, kPartitions = 600;
  Rng rng(901);
  for (std::size_t i = 0; i < kGraphs; ++i) {
    const std::size_t n = rng.between(2, 14);
    const OrientedGraph g = random_two_degenerate(n, rng, rng.coin());
    bool low = false;
    for (VertexId x = 0; x < n; ++x) low |= g.out_degree(x) <= 1;
    v.Require(g.arc_count() <= 2 * n - 3 && low, "edge bound fails on " + G(g));
    const EdgeBoundReport r = check_edge_bound(g);
    v.Require(r.arcs == g.arc_count() && g.out_degree(r.low_out_vertex) <= 1,
              "check_edge_bound report on " + G(g));
  }
  for (std::size_t i = 0; i < kPartitions; ++i) {
    const GeneratedInstance gi =
        generate_degenerate(rng.between(1, 10), rng.between(0, 5), derive_seed(902, i));
    const PartitionSpec& p = *gi.partition;
    validate_partition(gi.graph, p.a_set, p.b_set);
    const WitnessReport r = witness_degenerate(gi.graph, p.a_set, p.b_set);
    v.Require(Large(gi.graph, r.vertex), "degenerate witness fails on " + G(gi.graph));
  }
  v.summary = std::to_string(kGraphs) + " 2-degenerate graphs, " +
              std::to_string(kPartitions) + " (A,B) partitions";
  return v;
}

Verdict ConjectureProbes() {
  Verdict v;
  FuzzConfig config;
  config.classes.assign(all_classes().begin(), all_classes().end());
  config.trials = 2000;
  config.master_seed = 1001;
  config.jobs = std::max(1u, std::thread::hardware_concurrency());
  const FuzzReport report = fuzz(config);
  std::size_t probes = 0;
  for (const FuzzViolation& f : report.violations) {
    if (f.potential_refutation) {
      ++probes;
      v.Require(!f.instance.empty(), "refutation artifact lost its instance");
    } else {
      v.Require(false, "property " + f.property + " failed: " + f.detail);
    }
  }
  v.Require(report.trials_run == config.trials, "not every trial ran");
  v.Require(probes == 0 || fuzz_exit_code(report) == kExitRefutation,
            "refutation candidates without exit code 4");
  v.summary = std::to_string(report.trials_run) + " mixed trials, " +
              std::to_string(probes) + " potential refutations";
  return v;
}

Corpus BuildCorpus() {
  Corpus c;
  Rng sizes(301);
  for (std::uint64_t i = 0; c.matching.size() < 1200; ++i)
    c.matching.push_back(generate(InstanceClass::kTournamentMinusMatching,
                                  sizes.between(4, 10), derive_seed(302, i))
                             .graph);
  c.planted = PlantedCycles(150, 10, 303);
  WitnessOptions opts;
  for (std::uint64_t i = 0; c.star.size() < 600; ++i) {
    const OrientedGraph h = generate(InstanceClass::kTournamentMinusMatchingPlusStar,
                                     sizes.between(4, 9), derive_seed(501, i))
                                .graph;
    if (HasSink(h)) continue;
    const OrientedGraph g = h.without_vertex(canonical_star_center(h));
    if (free_choice_edges(build_delta(g), g).size() > opts.free_choice_limit) continue;
    c.star.push_back(h);
  }
  return c;
}

int Main() {
  using Clock = std::chrono::steady_clock;
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Verdict()> run;
  };
  const Corpus corpus = BuildCorpus();
  const std::vector<Criterion> criteria = {
      {1, "figure-2", 1, Figure2},
      {2, "feed-vertex", 30, FeedVertexSuite},
      {3, "matching-witnesses", 120, [&] { return MatchingWitnessSuite(corpus); }},
      {4, "two-witnesses", 0, [&] { return TwoWitnesses(corpus); }},
      {5, "matching-plus-star", 0, [&] { return StarWitnessSuite(corpus); }},
      {6, "structural-lemmas", 0, [&] { return Structural(corpus); }},
      {7, "sedimentation", 0, Sedimentation},
      {8, "exact-solver", 0, ExactSolver},
      {9, "degenerate", 0, Degenerate},
      {10, "conjecture-probes", 0, ConjectureProbes},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.Require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.budget_s > 0)
      v.Require(secs < c.budget_s, "took " + std::to_string(secs) + " s");
    std::printf("%s %2d %-20s %s (%.2f s)\n", v.pass ? "PASS" : "FAIL", c.id, c.name,
                v.summary.c_str(), secs);
    for (const std::string& f : v.failures) std::printf("     %s\n", f.c_str());
    failed += !v.pass;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace snc

int main() { return snc::Main(); }
