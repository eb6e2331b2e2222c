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


#include "snc/oracle.h"

#include <sstream>

#include "snc/errors.h"
#include "snc/io.h"

namespace snc {
namespace {

using Matrix = std::vector<std::vector<char>>;

Matrix Adjacency(const OrientedGraph& g) {
  const std::size_t n = g.size();
  Matrix m(n, std::vector<char>(n, 0));
  for (const Arc& a : g.arcs()) m[a.from][a.to] = 1;
  return m;
}

// reach[v][w] = 1 iff some walk v -> u -> w exists.
Matrix Square(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix r(n, std::vector<char>(n, 0));
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u = 0; u < n; ++u) {
      if (!m[v][u]) continue;
      for (std::size_t w = 0; w < n; ++w) r[v][w] |= m[u][w];
    }
  return r;
}

}  // namespace

std::vector<OracleCounts> oracle_counts(const OrientedGraph& g) {
  const Matrix m = Adjacency(g);
  const Matrix two = Square(m);
  const std::size_t n = g.size();
  std::vector<OracleCounts> counts(n);
  for (std::size_t v = 0; v < n; ++v) {
    VertexSet second(n);
    std::size_t out = 0;
    for (std::size_t w = 0; w < n; ++w) {
      out += m[v][w] ? 1 : 0;
      if (w != v && !m[v][w] && two[v][w]) second.insert(static_cast<VertexId>(w));
    }
    const VertexId id = static_cast<VertexId>(v);
    if (second != second_out_neighborhood(g, id) || out != g.out_degree(id)) {
      std::ostringstream msg;
      msg << "oracle disagrees with set-based N++ at vertex " << v;
      throw InvariantViolation(msg.str(), format_edge_list(g));
    }
    counts[v] = {out, second.size()};
  }
  return counts;
}

VertexSet oracle_all_witnesses(const OrientedGraph& g) {
  const std::vector<OracleCounts> counts = oracle_counts(g);
  VertexSet result(g.size());
  for (std::size_t v = 0; v < counts.size(); ++v)
    if (counts[v].large()) result.insert(static_cast<VertexId>(v));
  return result;
}

}  // namespace snc
