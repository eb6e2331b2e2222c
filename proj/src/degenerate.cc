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

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "snc/errors.h"

namespace snc {
namespace {

// Undirected adjacency restricted to `alive`, as bitsets.
std::vector<VertexSet> Underlying(const OrientedGraph& g) {
  std::vector<VertexSet> adj(g.size());
  for (VertexId v = 0; v < g.size(); ++v) {
    adj[v] = g.out(v);
    adj[v] |= g.in(v);
  }
  return adj;
}

DegeneracyResult Eliminate(const std::vector<VertexSet>& adj, VertexSet alive) {
  DegeneracyCertificate cert;
  while (!alive.empty()) {
    VertexId best = 0;
    std::size_t best_degree = SIZE_MAX;
    for (VertexId v : alive) {
      const std::size_t d = (adj[v] & alive).size();
      if (d < best_degree) {
        best = v;
        best_degree = d;
      }
    }
    if (best_degree > 2) return DegeneracyRefusal{alive};
    cert.ordering.push_back(best);
    cert.degrees_at_removal.push_back(best_degree);
    alive.erase(best);
  }
  return cert;
}

bool IsTwoDegenerate(const std::vector<VertexSet>& adj, const VertexSet& s) {
  return std::holds_alternative<DegeneracyCertificate>(Eliminate(adj, s));
}

std::string Describe(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (VertexId v : s) {
    out << (first ? "" : ",") << v;
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace

DegeneracyResult two_degeneracy_certificate(const OrientedGraph& g) {
  return Eliminate(Underlying(g), g.all_vertices());
}

bool check_degeneracy_certificate(const OrientedGraph& g,
                                  const DegeneracyCertificate& c) {
  if (c.ordering.size() != g.size() ||
      c.degrees_at_removal.size() != g.size())
    return false;
  const std::vector<VertexSet> adj = Underlying(g);
  VertexSet alive = g.all_vertices();
  for (std::size_t k = 0; k < c.ordering.size(); ++k) {
    const VertexId v = c.ordering[k];
    if (v >= g.size() || !alive.contains(v)) return false;
    const std::size_t d = (adj[v] & alive).size();
    if (d != c.degrees_at_removal[k] || d > 2) return false;
    alive.erase(v);
  }
  return true;
}

EdgeBoundReport check_edge_bound(const OrientedGraph& g) {
  if (g.size() == 0) throw PreconditionError("graph has no vertices");
  if (!std::holds_alternative<DegeneracyCertificate>(
          two_degeneracy_certificate(g)))
    throw PreconditionError("graph is not 2-degenerate");
  const std::size_t n = g.size();
  EdgeBoundReport r{g.arc_count(), n >= 2 ? 2 * n - 3 : 0, 0};
  if (n >= 2 && r.arcs > r.bound) {
    std::ostringstream msg;
    msg << "2-degenerate graph has " << r.arcs << " arcs, bound " << r.bound;
    throw InvariantViolation(msg.str());
  }
  for (VertexId v = 0; v < n; ++v)
    if (g.out_degree(v) <= 1) {
      r.low_out_vertex = v;
      return r;
    }
  throw InvariantViolation("2-degenerate graph has no vertex of out-degree <= 1");
}

PartitionInstance validate_partition(const OrientedGraph& g,
                                     const VertexSet& a_set,
                                     const VertexSet& b_set) {
  const std::size_t n = g.size();
  if (a_set.universe() != n || b_set.universe() != n)
    throw InputError("partition sets do not match the graph size");
  if (!(a_set & b_set).empty())
    throw InputError("A and B share " + Describe(a_set & b_set));
  if ((a_set | b_set) != g.all_vertices()) {
    VertexSet missed = g.all_vertices();
    missed -= a_set;
    missed -= b_set;
    throw InputError("A and B do not cover " + Describe(missed));
  }
  for (VertexId v : b_set) {
    const VertexSet clash = g.out(v) & b_set;
    if (!clash.empty()) {
      std::ostringstream msg;
      msg << "B is not independent: arc " << v << "->" << *clash.begin();
      throw InputError(msg.str());
    }
  }
  const DegeneracyResult r = Eliminate(Underlying(g), a_set);
  if (const auto* refusal = std::get_if<DegeneracyRefusal>(&r))
    throw InputError("A is not 2-degenerate: every vertex of " +
                     Describe(refusal->stuck) + " has degree > 2 in it");
  std::size_t min_out = SIZE_MAX;
  for (VertexId v = 0; v < n; ++v) min_out = std::min(min_out, g.out_degree(v));
  return {g, a_set, b_set, n == 0 ? 0 : min_out};
}

std::optional<PartitionSpec> find_partition(const OrientedGraph& g,
                                            std::size_t exhaustive_limit) {
  const std::size_t n = g.size();
  if (n > exhaustive_limit) {
    std::ostringstream msg;
    msg << "partition search over " << n << " vertices exceeds limit "
        << exhaustive_limit << "; supply the partition";
    throw CapabilityError(msg.str());
  }
  if (n >= 32) throw CapabilityError("partition search supports n < 32");
  const std::vector<VertexSet> adj = Underlying(g);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet b(n);
    bool independent = true;
    for (VertexId v = 0; v < n && independent; ++v) {
      if (!((mask >> v) & 1)) continue;
      independent = (adj[v] & b).empty();
      b.insert(v);
    }
    if (!independent) continue;
    VertexSet a = g.all_vertices();
    a -= b;
    if (IsTwoDegenerate(adj, a)) return PartitionSpec{a, b};
  }
  return std::nullopt;
}

}  // namespace snc
