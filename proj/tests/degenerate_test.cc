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


#include "snc/degenerate.h"

#include <gtest/gtest.h>

#include "instances.h"
#include "snc/errors.h"
#include "snc/generators.h"

namespace snc {
namespace {

using testing::FromArcs;

OrientedGraph DirectedCycle(std::size_t n) {
  std::vector<Arc> arcs;
  for (VertexId i = 0; i < n; ++i) arcs.push_back({i, static_cast<VertexId>((i + 1) % n)});
  return OrientedGraph(n, arcs);
}

OrientedGraph CompleteUnderlying(std::size_t n) { return testing::Transitive(n); }

// Exhaustive reference: every nonempty vertex subset has a vertex of degree
// at most two inside it.
bool BruteTwoDegenerate(const OrientedGraph& g) {
  const std::size_t n = g.size();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool has_low = false;
    for (VertexId v = 0; v < n && !has_low; ++v) {
      if (!((mask >> v) & 1)) continue;
      std::size_t d = 0;
      for (VertexId u = 0; u < n; ++u)
        if (((mask >> u) & 1) && g.adjacent(u, v)) ++d;
      has_low = d <= 2;
    }
    if (!has_low) return false;
  }
  return true;
}

TEST(DegeneracyTest, Examples) {
  const OrientedGraph path = FromArcs(3, {{0, 1}, {1, 2}});
  const auto p = two_degeneracy_certificate(path);
  ASSERT_TRUE(std::holds_alternative<DegeneracyCertificate>(p));
  EXPECT_TRUE(check_degeneracy_certificate(path, std::get<DegeneracyCertificate>(p)));

  const auto k4 = two_degeneracy_certificate(CompleteUnderlying(4));
  ASSERT_TRUE(std::holds_alternative<DegeneracyRefusal>(k4));
  EXPECT_EQ(std::get<DegeneracyRefusal>(k4).stuck, VertexSet::Full(4));

  const auto c5 = two_degeneracy_certificate(DirectedCycle(5));
  ASSERT_TRUE(std::holds_alternative<DegeneracyCertificate>(c5));
  for (std::size_t d : std::get<DegeneracyCertificate>(c5).degrees_at_removal)
    EXPECT_LE(d, 2u);
}

TEST(DegeneracyTest, ReplayRejectsTamperedCertificates) {
  const OrientedGraph c5 = DirectedCycle(5);
  DegeneracyCertificate c = std::get<DegeneracyCertificate>(two_degeneracy_certificate(c5));
  EXPECT_TRUE(check_degeneracy_certificate(c5, c));
  c.degrees_at_removal[0] = 1;
  EXPECT_FALSE(check_degeneracy_certificate(c5, c));
  const DegeneracyCertificate bogus{{0, 1, 2, 3}, {3, 2, 1, 0}};
  EXPECT_FALSE(check_degeneracy_certificate(CompleteUnderlying(4), bogus));
}

TEST(DegeneracyTest, AgreesWithExhaustiveCheck) {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng.between(1, 8);
    std::vector<Arc> arcs;
    const std::uint64_t density = rng.between(1, 4);
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        if (rng.below(5) < density) arcs.push_back(rng.coin() ? Arc{u, v} : Arc{v, u});
    const OrientedGraph g(n, arcs);
    const auto r = two_degeneracy_certificate(g);
    EXPECT_EQ(std::holds_alternative<DegeneracyCertificate>(r), BruteTwoDegenerate(g));
    if (const auto* c = std::get_if<DegeneracyCertificate>(&r))
      EXPECT_TRUE(check_degeneracy_certificate(g, *c));
  }
}

TEST(EdgeBoundTest, Examples) {
  const EdgeBoundReport path = check_edge_bound(FromArcs(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(path.arcs, 2u);
  EXPECT_EQ(path.bound, 3u);
  EXPECT_LE(FromArcs(3, {{0, 1}, {1, 2}}).out_degree(path.low_out_vertex), 1u);

  const EdgeBoundReport cycle = check_edge_bound(DirectedCycle(5));
  EXPECT_EQ(cycle.arcs, 5u);
  EXPECT_EQ(cycle.bound, 7u);

  Rng rng(3);
  const OrientedGraph tight = random_two_degenerate(5, rng, true);
  const EdgeBoundReport r = check_edge_bound(tight);
  EXPECT_EQ(r.arcs, 7u);
  EXPECT_EQ(r.arcs, r.bound);

  EXPECT_THROW(check_edge_bound(CompleteUnderlying(4)), PreconditionError);
  EXPECT_THROW(check_edge_bound(OrientedGraph(0)), PreconditionError);
}

TEST(EdgeBoundTest, GrownGraphs) {
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = rng.between(2, 14);
    const OrientedGraph g = random_two_degenerate(n, rng, trial % 2 == 0);
    const EdgeBoundReport r = check_edge_bound(g);
    EXPECT_LE(g.arc_count(), 2 * n - 3);
    EXPECT_LE(g.out_degree(r.low_out_vertex), 1u);
  }
}

TEST(ValidatePartitionTest, Examples) {
  const OrientedGraph empty(4);
  const PartitionInstance e = validate_partition(empty, VertexSet(4), empty.all_vertices());
  EXPECT_EQ(e.min_outdegree, 0u);

  const OrientedGraph c5 = DirectedCycle(5);
  EXPECT_EQ(validate_partition(c5, c5.all_vertices(), VertexSet(5)).min_outdegree, 1u);

  EXPECT_THROW(validate_partition(c5, VertexSet(5, {0, 3, 4}), VertexSet(5, {1, 2})),
               InputError);
  EXPECT_THROW(validate_partition(c5, VertexSet(5, {0, 1}), VertexSet(5, {1, 3})),
               InputError);
  EXPECT_THROW(validate_partition(c5, VertexSet(5, {0, 1}), VertexSet(5, {3})),
               InputError);
  const OrientedGraph k4 = CompleteUnderlying(4);
  EXPECT_THROW(validate_partition(k4, k4.all_vertices(), VertexSet(4)), InputError);
}

TEST(ValidatePartitionTest, EquivalentToSubChecks) {
  Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng.between(1, 8);
    std::vector<Arc> arcs;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        if (rng.below(3) == 0) arcs.push_back(rng.coin() ? Arc{u, v} : Arc{v, u});
    const OrientedGraph g(n, arcs);
    VertexSet a(n), b(n);
    for (VertexId v = 0; v < n; ++v) (rng.coin() ? a : b).insert(v);
    bool independent = true;
    for (const Arc& e : arcs) independent = independent && !(b.contains(e.from) && b.contains(e.to));
    const bool degenerate = BruteTwoDegenerate(g.induced(a));
    bool valid = true;
    try {
      validate_partition(g, a, b);
    } catch (const InputError&) {
      valid = false;
    }
    EXPECT_EQ(valid, independent && degenerate);
  }
}

TEST(FindPartitionTest, Examples) {
  const auto c5 = find_partition(DirectedCycle(5));
  ASSERT_TRUE(c5.has_value());
  EXPECT_EQ(c5->a_set, VertexSet::Full(5));

  const auto empty = find_partition(OrientedGraph(4));
  ASSERT_TRUE(empty.has_value());
  validate_partition(OrientedGraph(4), empty->a_set, empty->b_set);

  EXPECT_FALSE(find_partition(CompleteUnderlying(8)).has_value());
  EXPECT_THROW(find_partition(OrientedGraph(21)), CapabilityError);
  EXPECT_THROW(find_partition(OrientedGraph(6), 5), CapabilityError);
}

TEST(FindPartitionTest, FindsPlantedPartitions) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const GeneratedInstance inst = generate_degenerate(4 + seed % 5, seed % 4, seed);
    const auto found = find_partition(inst.graph);
    ASSERT_TRUE(found.has_value());
    validate_partition(inst.graph, found->a_set, found->b_set);
  }
}

}  // namespace
}  // namespace snc
