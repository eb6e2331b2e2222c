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

#include <gtest/gtest.h>

#include <set>
#include <variant>

#include "instances.h"
#include "snc/degenerate.h"
#include "snc/errors.h"
#include "snc/generators.h"
#include "snc/oracle.h"

namespace snc {
namespace {

using testing::Figure2;
using testing::ThreeCycle;
using testing::Transitive;

TEST(OracleTest, Examples) {
  EXPECT_EQ(oracle_all_witnesses(Figure2()), VertexSet(6, {0, 2}));
  EXPECT_EQ(oracle_all_witnesses(ThreeCycle()), VertexSet::Full(3));
  for (std::size_t n = 1; n <= 6; ++n)
    EXPECT_EQ(oracle_all_witnesses(Transitive(n)),
              VertexSet(n, {static_cast<VertexId>(n - 1)}));
}

TEST(OracleTest, CountsMatchFigure2) {
  const std::vector<OracleCounts> c = oracle_counts(Figure2());
  // a -> z -> {b, d, x}.
  EXPECT_EQ(c[0].out_size, 1u);
  EXPECT_EQ(c[0].second_size, 3u);
  // x -> {a, b, c, d}; their out-neighbours outside that set: z.
  EXPECT_EQ(c[4].out_size, 4u);
  EXPECT_EQ(c[4].second_size, 1u);
}

TEST(OracleTest, AgreesOnRandomOrientedGraphs) {
  Rng rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng.between(1, 12);
    std::vector<Arc> arcs;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        if (rng.coin()) arcs.push_back(rng.coin() ? Arc{u, v} : Arc{v, u});
    EXPECT_NO_THROW(oracle_counts(OrientedGraph(n, arcs)));
  }
}

TEST(Figure2Test, Instance) {
  const OrientedGraph g = figure2_instance();
  EXPECT_EQ(g, Figure2());
  EXPECT_EQ(g.arc_count(), 13u);
  EXPECT_EQ(missing_edges(g), (std::vector<MissingEdge>{{0, 2}, {1, 3}}));
  EXPECT_TRUE(find_sinks(g).empty());
  EXPECT_EQ(figure2_labels().name(5), "z");
}

TEST(GeneratorTest, ClassShapes) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    EXPECT_EQ(generate(InstanceClass::kTournament, 5, seed).graph.arc_count(), 10u);
    const OrientedGraph m = generate(InstanceClass::kTournamentMinusMatching, 6, seed).graph;
    for (VertexId v = 0; v < 6; ++v) EXPECT_LE(non_neighbors(m, v).size(), 1u);

    const OrientedGraph s = generate(InstanceClass::kTournamentMinusStar, 6, seed).graph;
    const MissingStructure ss = classify_missing_structure(s);
    ASSERT_TRUE(std::holds_alternative<MatchingPlusStar>(ss));
    EXPECT_TRUE(std::get<MatchingPlusStar>(ss).matching.empty());

    const OrientedGraph ms =
        generate(InstanceClass::kTournamentMinusMatchingPlusStar, 7, seed).graph;
    EXPECT_FALSE(std::holds_alternative<OtherStructure>(classify_missing_structure(ms)));

    const GeneratedInstance d = generate_degenerate(5, 3, seed);
    ASSERT_TRUE(d.partition.has_value());
    EXPECT_EQ(d.partition->b_set.size(), 3u);
    EXPECT_NO_THROW(validate_partition(d.graph, d.partition->a_set, d.partition->b_set));
    const GeneratedInstance dc = generate(InstanceClass::kDegeneratePartition, 8, seed);
    EXPECT_NO_THROW(validate_partition(dc.graph, dc.partition->a_set, dc.partition->b_set));
  }
}

TEST(GeneratorTest, Reproducible) {
  for (InstanceClass c : all_classes()) {
    EXPECT_EQ(generate(c, 8, 42).graph, generate(c, 8, 42).graph) << class_name(c);
    EXPECT_EQ(format_edge_list(generate(c, 8, 42).graph),
              format_edge_list(generate(c, 8, 42).graph));
  }
  EXPECT_NE(generate(InstanceClass::kTournament, 8, 1).graph,
            generate(InstanceClass::kTournament, 8, 2).graph);
}

TEST(GeneratorTest, InfeasibleParameters) {
  EXPECT_THROW(generate(InstanceClass::kTournament, 0, 1), InputError);
  EXPECT_THROW(generate(InstanceClass::kTournamentMinusStar, 2, 1), InputError);
  EXPECT_THROW(generate_degenerate(0, 0, 1), InputError);
  EXPECT_THROW(parse_class("kings"), InputError);
  for (InstanceClass c : all_classes()) EXPECT_EQ(parse_class(class_name(c)), c);
}

TEST(GeneratorTest, RngBoundsAndSeeds) {
  Rng rng(9);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_LT(rng.below(7), 7u);
    const std::size_t x = rng.between(3, 5);
    EXPECT_GE(x, 3u);
    EXPECT_LE(x, 5u);
  }
  std::set<std::uint64_t> seeds;
  for (std::uint64_t i = 0; i < 1000; ++i) seeds.insert(derive_seed(123, i));
  EXPECT_EQ(seeds.size(), 1000u);
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
}

TEST(GeneratorTest, ModularTournamentBlocksAreModules) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::vector<std::size_t> sizes = {1 + seed % 3, 2, 1, 3};
    const ModularTournament mt = random_modular_tournament(sizes, seed);
    EXPECT_TRUE(mt.tournament.is_tournament());
    EXPECT_EQ(mt.partition.block_count(), 4u);
    EXPECT_NO_THROW(mt.partition.check_modules(mt.tournament));
  }
}

TEST(FuzzTest, ZeroTrialsIsEmpty) {
  FuzzConfig c;
  c.trials = 0;
  const FuzzReport r = fuzz(c);
  EXPECT_EQ(r.trials_run, 0u);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.branch_coverage.empty());
}

TEST(FuzzTest, MixedClassesHoldAndAreDeterministic) {
  FuzzConfig c;
  c.classes.assign(all_classes().begin(), all_classes().end());
  c.n_min = 3;
  c.n_max = 8;
  c.trials = 400;
  const FuzzReport serial = fuzz(c);
  EXPECT_TRUE(serial.ok()) << format_fuzz_report(serial);
  EXPECT_EQ(serial.property_checks.at("oracle-agreement"), 400u);
  EXPECT_GT(serial.property_checks.at("star-witness"), 0u);
  c.jobs = 3;
  EXPECT_EQ(format_fuzz_report(fuzz(c)), format_fuzz_report(serial));
}

TEST(FuzzTest, ConfigValidation) {
  FuzzConfig c;
  c.classes.clear();
  EXPECT_THROW(fuzz(c), InputError);
  c = FuzzConfig{};
  c.n_min = 7;
  c.n_max = 5;
  EXPECT_THROW(fuzz(c), InputError);
  c = FuzzConfig{};
  c.n_max = 40;
  EXPECT_THROW(fuzz(c), InputError);
  c.classes = {InstanceClass::kDegeneratePartition};
  c.trials = 2;
  EXPECT_NO_THROW(fuzz(c));
}

TEST(FuzzTest, RegistryNamesAreUnique) {
  std::set<std::string> names;
  std::size_t conjectures = 0;
  for (const PropertyInfo& p : fuzz_properties()) {
    EXPECT_TRUE(names.insert(p.name).second) << p.name;
    conjectures += p.conjecture;
  }
  EXPECT_EQ(conjectures, 2u);
  EXPECT_THROW(check_property("no-such-property", Figure2(), std::nullopt), InputError);
}

TEST(FuzzTest, CheckPropertyOnKnownInstances) {
  for (const PropertyInfo& p : fuzz_properties()) {
    EXPECT_EQ(check_property(p.name, Figure2(), std::nullopt), std::nullopt) << p.name;
    EXPECT_EQ(check_property(p.name, testing::DoubledFourCycle(), std::nullopt),
              std::nullopt)
        << p.name;
  }
}

TEST(ShrinkTest, ReducesToMinimalTriangle) {
  const auto has_triangle = [](const OrientedGraph& g, const std::optional<PartitionSpec>&) {
    for (const Arc& a : g.arcs())
      for (VertexId w = 0; w < g.size(); ++w)
        if (g.has_arc(a.to, w) && g.has_arc(w, a.from)) return true;
    return false;
  };
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const OrientedGraph g = generate(InstanceClass::kTournament, 8, seed).graph;
    if (!has_triangle(g, std::nullopt)) continue;
    const OrientedGraph s = shrink_instance(g, std::nullopt, has_triangle);
    EXPECT_TRUE(has_triangle(s, std::nullopt));
    EXPECT_EQ(s.size(), 3u);
    EXPECT_EQ(s.arc_count(), 3u);
  }
}

TEST(ShrinkTest, KeepsPartitionAligned) {
  const GeneratedInstance inst = generate_degenerate(5, 3, 4);
  std::size_t calls = 0;
  const auto b_nonempty = [&](const OrientedGraph& g, const std::optional<PartitionSpec>& p) {
    ++calls;
    EXPECT_TRUE(p.has_value());
    EXPECT_EQ(p->a_set.universe(), g.size());
    return !p->b_set.empty();
  };
  const OrientedGraph s = shrink_instance(inst.graph, inst.partition, b_nonempty);
  EXPECT_EQ(s.size(), 1u);
  EXPECT_GT(calls, 0u);
}

TEST(FormatFuzzReportTest, ViolationRecords) {
  FuzzReport r;
  r.trials_run = 1;
  r.violations.push_back({0, 7, InstanceClass::kTournament, "lone-witness-is-sink", "x",
                          true, "1 0\n", "", "1 0\n"});
  EXPECT_TRUE(r.potential_refutation());
  const std::string text = format_fuzz_report(r);
  EXPECT_NE(text.find("trials=1 violations=1 potential_refutations=1\n"), std::string::npos);
  EXPECT_NE(text.find("property=lone-witness-is-sink potential-refutation"),
            std::string::npos);
  EXPECT_NE(text.find("instance:\n1 0\nshrunk:\n1 0\nend\n"), std::string::npos);
}

}  // namespace
}  // namespace snc
