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


// Brute-force reference for second out-neighbourhoods, written against a
// dense boolean adjacency matrix so that it shares no code with the
// set-based routines in graph.h.

#ifndef SNC_ORACLE_H_
#define SNC_ORACLE_H_

#include <cstddef>
#include <vector>

#include "snc/graph.h"

namespace snc {

struct OracleCounts {
  std::size_t out_size;
  std::size_t second_size;

  bool large() const { return second_size >= out_size; }
};

// Per-vertex |N+| and |N++| from the squared adjacency matrix. Throws
// InvariantViolation if any vertex disagrees with second_out_neighborhood.
std::vector<OracleCounts> oracle_counts(const OrientedGraph& g);

// Vertices with a large second neighbourhood, cross-checked as above.
VertexSet oracle_all_witnesses(const OrientedGraph& g);

}  // namespace snc

#endif  // SNC_ORACLE_H_
