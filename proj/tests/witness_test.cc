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

#include <gtest/gtest.h>

#include <set>

#include "instances.h"
#include "snc/errors.h"
#include "snc/generators.h"
#include "snc/oracle.h"

namespace snc {
namespace {

using testing::FourCycle;
using testing::FromArcs;
using testing::Figure2;
using testing::ThreeCycle;
using testing::Transitive;

std::set<VertexId> Vertices(const std::vector<WitnessReport>& reports) {
  std::set<VertexId> out;
  for (const WitnessReport& r : reports) out.insert(r.vertex);
  return out;
}

// Directly from the definition: walks of length two that are not arcs.
bool LargeByCount(const OrientedGraph& g, VertexId v) {
  std::set<VertexId> second;
  for (VertexId u = 0; u < g.size(); ++u)
    if (g.has_arc(v, u))
      for (VertexId w = 0; w < g.size(); ++w)
        if (g.has_arc(u, w) && w != v && !g.has_arc(v, w)) second.insert(w);
  return second.size() >= g.out_degree(v);
}

TEST(WitnessMatchingTest, Figure2) {
  const std::vector<WitnessReport> r = witness_matching(Figure2());
  ASSERT_FALSE(r.empty());
  for (const WitnessReport& w : r) {
    EXPECT_TRUE(w.vertex == 0 || w.vertex == 2);
    EXPECT_TRUE(w.verified);
  }
}

TEST(WitnessMatchingTest, ThreeCycleReturnsFeed) {
  const std::vector<WitnessReport> r = witness_matching(ThreeCycle());
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].vertex, compute_median_order(ThreeCycle()).feed());
  EXPECT_EQ(r[0].proof_path, ProofPath::kMainPrime);
  EXPECT_EQ(r[0].out_size, 1u);
  EXPECT_EQ(r[0].second_size, 1u);
}

TEST(WitnessMatchingTest, FourCycleReturnsGamma) {
  const std::vector<WitnessReport> r = witness_matching(FourCycle());
  EXPECT_EQ(Vertices(r), (std::set<VertexId>{0, 1, 2, 3}));
  for (const WitnessReport& w : r) {
    EXPECT_EQ(w.proof_path, ProofPath::kMainBlock);
    EXPECT_EQ(w.out_size, 1u);
    EXPECT_EQ(w.second_size, 1u);
  }
}

TEST(WitnessMatchingTest, RejectsOtherStructures) {
  EXPECT_THROW(witness_matching(OrientedGraph(3)), InputError);
}

TEST(WitnessMatchingTest, EveryReportPassesDefinition) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const OrientedGraph g =
        generate(InstanceClass::kTournamentMinusMatching, 3 + seed % 7, seed).graph;
    for (const WitnessReport& r : witness_matching(g))
      EXPECT_TRUE(LargeByCount(g, r.vertex)) << format_edge_list(g);
  }
}

TEST(StarWitnessTest, TriangleWithStarCenter) {
  // a=0, b=1, c=2, z=3; missing {z,a}, {z,b}.
  const OrientedGraph h = FromArcs(4, {{0, 1}, {1, 2}, {2, 0}, {3, 2}});
  const WitnessReport r = witness_matching_plus_star(h);
  EXPECT_EQ(r.vertex, 2u);
  EXPECT_EQ(r.out_size, 1u);
  EXPECT_EQ(r.second_size, 1u);
  EXPECT_TRUE(r.verified);
}

TEST(StarWitnessTest, SinkShortCircuits) {
  const WitnessReport r = witness_matching_plus_star(Transitive(4));
  EXPECT_EQ(r.vertex, 3u);
  EXPECT_EQ(r.proof_path, ProofPath::kSink);
}

TEST(StarWitnessTest, Figure2WithCanonicalCenter) {
  const OrientedGraph h = Figure2();
  const VertexId z = canonical_star_center(h);
  const WitnessReport r = witness_matching_plus_star(h);
  EXPECT_NE(r.vertex, z);
  EXPECT_TRUE(oracle_all_witnesses(h).contains(r.vertex));
}

TEST(StarWitnessTest, PeriodicOrbitWithUnmovedOutNeighbour) {
  // The center's out-neighbour keeps position 0 through a period-3 orbit.
  const OrientedGraph h = FromArcs(
      5, {{0, 4}, {1, 0}, {1, 4}, {2, 1}, {3, 0}, {3, 2}, {4, 2}, {4, 3}});
  const WitnessReport r = witness_matching_plus_star(h, VertexId{2});
  EXPECT_EQ(r.proof_path, ProofPath::kFinalPeriodic);
  EXPECT_NE(r.vertex, 2u);
  EXPECT_TRUE(LargeByCount(h, r.vertex));
}

TEST(StarWitnessTest, Preconditions) {
  // Two disjoint stars: not a matching plus one star.
  const OrientedGraph other = FromArcs(6, {{0, 3}, {1, 4}, {2, 5}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_THROW(witness_matching_plus_star(other), InputError);
  // Sinkless; after deleting 4 the missing edges {0,1}, {0,2} share 0.
  const OrientedGraph star = FromArcs(
      5, {{1, 2}, {2, 3}, {3, 1}, {3, 0}, {0, 4}, {4, 1}, {4, 2}, {4, 3}});
  EXPECT_THROW(witness_matching_plus_star(star, VertexId{4}), PreconditionError);
  EXPECT_THROW(witness_matching_plus_star(Figure2(), VertexId{9}), InputError);
}

TEST(StarWitnessTest, FuzzedInstancesAvoidCenterAndHoldInBothGraphs) {
  std::set<ProofPath> seen;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const OrientedGraph h =
        generate(InstanceClass::kTournamentMinusMatchingPlusStar, 4 + seed % 6, seed).graph;
    if (!find_sinks(h).empty()) continue;
    const VertexId z = canonical_star_center(h);
    const WitnessReport r = witness_matching_plus_star(h);
    seen.insert(r.proof_path);
    ASSERT_NE(r.vertex, z);
    EXPECT_TRUE(LargeByCount(h, r.vertex));
    std::vector<VertexId> original;
    const OrientedGraph g = h.without_vertex(z, &original);
    const VertexId w = static_cast<VertexId>(
        std::find(original.begin(), original.end(), r.vertex) - original.begin());
    EXPECT_TRUE(LargeByCount(g, w));
  }
  EXPECT_TRUE(seen.contains(ProofPath::kFinalStable));
}

TEST(TwoWitnessesTest, Figure2IsExactlyAC) {
  const auto [first, second] = two_witnesses_matching(Figure2());
  EXPECT_EQ((std::set<VertexId>{first.vertex, second.vertex}),
            (std::set<VertexId>{0, 2}));
}

TEST(TwoWitnessesTest, SmallTournaments) {
  const auto [a, b] = two_witnesses_matching(ThreeCycle());
  EXPECT_NE(a.vertex, b.vertex);
  // Rotational tournament on five vertices: i -> i+1, i+2.
  std::vector<Arc> arcs;
  for (VertexId i = 0; i < 5; ++i) {
    arcs.push_back({i, static_cast<VertexId>((i + 1) % 5)});
    arcs.push_back({i, static_cast<VertexId>((i + 2) % 5)});
  }
  const OrientedGraph five(5, arcs);
  const auto [c, d] = two_witnesses_matching(five);
  EXPECT_NE(c.vertex, d.vertex);
  EXPECT_TRUE(LargeByCount(five, c.vertex));
  EXPECT_TRUE(LargeByCount(five, d.vertex));
}

TEST(TwoWitnessesTest, Preconditions) {
  EXPECT_THROW(two_witnesses_matching(Transitive(3)), PreconditionError);
  EXPECT_THROW(two_witnesses_matching(OrientedGraph(3)), InputError);
}

TEST(DegenerateWitnessTest, Examples) {
  std::vector<Arc> cycle;
  for (VertexId i = 0; i < 5; ++i) cycle.push_back({i, static_cast<VertexId>((i + 1) % 5)});
  const OrientedGraph c5(5, cycle);
  const WitnessReport r = witness_degenerate(c5, c5.all_vertices(), VertexSet(5));
  EXPECT_EQ(r.proof_path, ProofPath::kBruteForce);
  EXPECT_EQ(r.out_size, 1u);
  EXPECT_EQ(r.second_size, 1u);

  const OrientedGraph empty(4);
  EXPECT_EQ(witness_degenerate(empty, VertexSet(4), empty.all_vertices()).vertex, 0u);

  const OrientedGraph star = FromArcs(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  const WitnessReport leaf =
      witness_degenerate(star, VertexSet(5, {0}), VertexSet(5, {1, 2, 3, 4}));
  EXPECT_EQ(leaf.vertex, 1u);
  EXPECT_EQ(star.out_degree(leaf.vertex), 0u);

  EXPECT_THROW(witness_degenerate(star, VertexSet(5), star.all_vertices()), InputError);
}

TEST(FormatWitnessTest, SummaryAndTrace) {
  const auto [a, b] = two_witnesses_matching(Figure2());
  const std::string line = format_witness(a, figure2_labels(), false);
  EXPECT_EQ(line.find("witness "), 0u);
  EXPECT_NE(line.find("verified=yes"), std::string::npos);
  EXPECT_EQ(std::count(line.begin(), line.end(), '\n'), 1);
  const std::string verbose = format_witness(b, figure2_labels(), true);
  EXPECT_NE(verbose.find("  center="), std::string::npos);
}

TEST(ProofPathTest, Names) {
  EXPECT_EQ(proof_path_name(ProofPath::kSink), "sink");
  EXPECT_EQ(proof_path_name(ProofPath::kFinalPeriodic), "finalthm-periodic");
  EXPECT_EQ(proof_path_name(ProofPath::kBruteForce), "brute-force-fallback");
}

}  // namespace
}  // namespace snc
