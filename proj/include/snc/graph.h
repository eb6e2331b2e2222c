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

// Oriented graphs (no loops, no digons), neighborhoods, second
// neighborhoods, modules and the shape of the missing-edge set.

#ifndef SNC_GRAPH_H_
#define SNC_GRAPH_H_

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "snc/vertex_set.h"

namespace snc {

struct Arc {
  VertexId from;
  VertexId to;

  auto operator<=>(const Arc&) const = default;
};

// Unordered pair, normalized so that `lo < hi`.
struct MissingEdge {
  VertexId lo;
  VertexId hi;

  static MissingEdge Of(VertexId u, VertexId v) {
    return u < v ? MissingEdge{u, v} : MissingEdge{v, u};
  }
  bool touches(VertexId v) const { return lo == v || hi == v; }
  VertexId other(VertexId v) const { return v == lo ? hi : lo; }

  auto operator<=>(const MissingEdge&) const = default;
};

class OrientedGraph {
 public:
  OrientedGraph() = default;
  // Edgeless graph on `n` vertices.
  explicit OrientedGraph(std::size_t n);
  // Throws InputError on out-of-range endpoints, loops, digons or repeated
  // arcs.
  OrientedGraph(std::size_t n, std::span<const Arc> arcs);

  std::size_t size() const { return out_.size(); }
  std::size_t arc_count() const { return arc_count_; }

  bool has_arc(VertexId u, VertexId v) const { return out_[u].contains(v); }
  bool adjacent(VertexId u, VertexId v) const {
    return has_arc(u, v) || has_arc(v, u);
  }
  const VertexSet& out(VertexId v) const { return out_[v]; }
  const VertexSet& in(VertexId v) const { return in_[v]; }
  std::size_t out_degree(VertexId v) const { return out_[v].size(); }

  // Arcs in lexicographic order.
  std::vector<Arc> arcs() const;
  bool is_tournament() const;
  VertexSet all_vertices() const { return VertexSet::Full(size()); }

  // Copy with the arc u->v replaced by v->u. Throws if u->v is absent.
  OrientedGraph with_arc_reversed(VertexId u, VertexId v) const;
  // Copy with extra arcs; same validation as the constructor.
  OrientedGraph with_arcs_added(std::span<const Arc> extra) const;
  // Copy with the arc u->v deleted.
  OrientedGraph with_arc_removed(VertexId u, VertexId v) const;
  // Subgraph induced by `keep`, relabelled densely in increasing index
  // order. `original[i]` is the old id of new vertex i.
  OrientedGraph induced(const VertexSet& keep,
                        std::vector<VertexId>* original = nullptr) const;
  OrientedGraph without_vertex(VertexId z,
                               std::vector<VertexId>* original = nullptr) const;

  bool operator==(const OrientedGraph& o) const { return out_ == o.out_; }

 private:
  void AddArc(VertexId u, VertexId v);

  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
  std::size_t arc_count_ = 0;
};

// Throws InputError unless v < g.size().
void check_vertex(const OrientedGraph& g, VertexId v);

VertexSet second_out_neighborhood(const OrientedGraph& g, VertexId v);
bool has_large_second_neighborhood(const OrientedGraph& g, VertexId v);

struct NeighborhoodReport {
  VertexId vertex;
  VertexSet out;
  VertexSet second_out;
  bool is_witness;
};
NeighborhoodReport neighborhood_report(const OrientedGraph& g, VertexId v);

VertexSet find_sinks(const OrientedGraph& g);

// All non-adjacent pairs in lexicographic order.
std::vector<MissingEdge> missing_edges(const OrientedGraph& g);

// Missing edges at `v`.
std::vector<VertexId> non_neighbors(const OrientedGraph& g, VertexId v);

bool is_module(const OrientedGraph& g, const VertexSet& s);

struct PureMatching {
  std::vector<MissingEdge> matching;
};
struct MatchingPlusStar {
  std::vector<MissingEdge> matching;
  VertexId center;
  std::vector<VertexId> leaves;
};
struct OtherStructure {};

using MissingStructure =
    std::variant<PureMatching, MatchingPlusStar, OtherStructure>;

// Exact decomposition of the missing edges. A star center is chosen among
// vertices of missing-degree >= 2 by maximum missing-degree, then smallest
// index; a matching is always reported as PureMatching.
MissingStructure classify_missing_structure(const OrientedGraph& g);

bool missing_edges_form_matching(const OrientedGraph& g);

// The vertex that the pipelines delete when a graph is treated as
// matching-plus-star: the star center if any, otherwise the vertex of
// largest missing-degree (smallest index on ties), otherwise 0.
VertexId canonical_star_center(const OrientedGraph& g);

}  // namespace snc

#endif  // SNC_GRAPH_H_
