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


// 2-degeneracy of the underlying undirected graph, the arc bound it implies,
// and (A, B) partitions with B independent and A inducing a 2-degenerate
// graph.

#ifndef SNC_DEGENERATE_H_
#define SNC_DEGENERATE_H_

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "snc/graph.h"
#include "snc/io.h"

namespace snc {

struct DegeneracyCertificate {
  // Elimination order and each vertex's degree among those still present
  // when it was removed.
  std::vector<VertexId> ordering;
  std::vector<std::size_t> degrees_at_removal;
};

struct DegeneracyRefusal {
  // The vertices left when every remaining degree exceeded two.
  VertexSet stuck;
};

using DegeneracyResult = std::variant<DegeneracyCertificate, DegeneracyRefusal>;

// Greedy minimum-degree elimination on the underlying graph; ties go to the
// smallest index.
DegeneracyResult two_degeneracy_certificate(const OrientedGraph& g);

// Replays a certificate against `g`.
bool check_degeneracy_certificate(const OrientedGraph& g,
                                  const DegeneracyCertificate& c);

struct EdgeBoundReport {
  std::size_t arcs;
  // 2n - 3; zero when n < 2, where the bound is not stated.
  std::size_t bound;
  VertexId low_out_vertex;
};

// Requires a 2-degenerate graph with at least one vertex (PreconditionError
// otherwise). Throws InvariantViolation if |E| > 2n - 3 or no vertex has
// out-degree at most one.
EdgeBoundReport check_edge_bound(const OrientedGraph& g);

struct PartitionInstance {
  OrientedGraph graph;
  VertexSet a_set;
  VertexSet b_set;
  std::size_t min_outdegree;
};

// Throws InputError naming the first violated condition.
PartitionInstance validate_partition(const OrientedGraph& g,
                                     const VertexSet& a_set,
                                     const VertexSet& b_set);

inline constexpr std::size_t kDefaultPartitionLimit = 20;

// Tries every B in increasing bitmask order. Throws CapabilityError when
// g.size() exceeds `exhaustive_limit`.
std::optional<PartitionSpec> find_partition(
    const OrientedGraph& g, std::size_t exhaustive_limit = kDefaultPartitionLimit);

}  // namespace snc

#endif  // SNC_DEGENERATE_H_
