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


// Seeded instance generators. Every generator is a pure function of its
// arguments and the seed, with bounded draws written out by hand so that the
// same seed gives the same graph on every standard library.

#ifndef SNC_GENERATORS_H_
#define SNC_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "snc/graph.h"
#include "snc/io.h"
#include "snc/median_order.h"

namespace snc {

enum class InstanceClass {
  kTournament,
  kTournamentMinusMatching,
  kTournamentMinusStar,
  kTournamentMinusMatchingPlusStar,
  kDegeneratePartition,
};

std::string_view class_name(InstanceClass c);
// Inverse of class_name; throws InputError on an unknown name.
InstanceClass parse_class(std::string_view name);
std::span<const InstanceClass> all_classes();

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(below(hi - lo + 1));
  }
  bool coin() { return (next() >> 63) != 0; }
  std::vector<VertexId> permutation(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

// Seed of trial `index` under `master`; independent of evaluation order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// The six-vertex instance a=0, b=1, c=2, d=3, x=4, z=5 missing {a,c} and
// {b,d}, with no sink and exactly two witnesses.
OrientedGraph figure2_instance();
LabelTable figure2_labels();

OrientedGraph random_tournament(std::size_t n, Rng& rng);

struct GeneratedInstance {
  InstanceClass cls;
  OrientedGraph graph;
  // Degenerate class only.
  std::optional<PartitionSpec> partition;
};

// Throws InputError when n is too small for the class (n = 0 for every
// class, n < 3 for the star classes).
GeneratedInstance generate(InstanceClass cls, std::size_t n, std::uint64_t seed);

// A grown by attaching each new vertex to at most two earlier ones, B an
// independent set with random arcs to and from A; ids shuffled.
GeneratedInstance generate_degenerate(std::size_t n_a, std::size_t n_b,
                                      std::uint64_t seed);

// Random orientation of a graph grown by degree-<=2 attachment. With
// `maximal`, every vertex after the first two attaches to exactly two.
OrientedGraph random_two_degenerate(std::size_t n, Rng& rng, bool maximal);

struct ModularTournament {
  OrientedGraph tournament;
  ModulePartition partition;
};

// Random tournaments substituted into the vertices of a random quotient
// tournament, one block per entry of `block_sizes`; ids shuffled.
ModularTournament random_modular_tournament(
    std::span<const std::size_t> block_sizes, std::uint64_t seed);

}  // namespace snc

#endif  // SNC_GENERATORS_H_
