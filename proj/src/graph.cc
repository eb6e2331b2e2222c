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

#include "snc/graph.h"

#include <algorithm>
#include <string>

#include "snc/errors.h"

namespace snc {

OrientedGraph::OrientedGraph(std::size_t n)
    : out_(n, VertexSet(n)), in_(n, VertexSet(n)) {}

OrientedGraph::OrientedGraph(std::size_t n, std::span<const Arc> arcs)
    : OrientedGraph(n) {
  for (const Arc& a : arcs) AddArc(a.from, a.to);
}

void OrientedGraph::AddArc(VertexId u, VertexId v) {
  const std::string arc = std::to_string(u) + "->" + std::to_string(v);
  if (u >= size() || v >= size())
    throw InputError("arc " + arc + " has an endpoint outside [0, " +
                     std::to_string(size()) + ")");
  if (u == v) throw InputError("loop " + arc + " is not allowed");
  if (out_[v].contains(u))
    throw InputError("digon: both " + arc + " and its reverse are present");
  if (out_[u].contains(v)) throw InputError("repeated arc " + arc);
  out_[u].insert(v);
  in_[v].insert(u);
  ++arc_count_;
}

std::vector<Arc> OrientedGraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (VertexId u = 0; u < size(); ++u)
    for (VertexId v : out_[u]) result.push_back({u, v});
  return result;
}

bool OrientedGraph::is_tournament() const {
  const std::size_t n = size();
  return arc_count_ == n * (n - (n > 0 ? 1 : 0)) / 2;
}

OrientedGraph OrientedGraph::with_arc_reversed(VertexId u, VertexId v) const {
  if (u >= size() || v >= size() || !has_arc(u, v))
    throw PreconditionError("cannot reverse absent arc " + std::to_string(u) +
                            "->" + std::to_string(v));
  OrientedGraph g = *this;
  g.out_[u].erase(v);
  g.in_[v].erase(u);
  g.out_[v].insert(u);
  g.in_[u].insert(v);
  return g;
}

OrientedGraph OrientedGraph::with_arcs_added(std::span<const Arc> extra) const {
  OrientedGraph g = *this;
  for (const Arc& a : extra) g.AddArc(a.from, a.to);
  return g;
}

OrientedGraph OrientedGraph::with_arc_removed(VertexId u, VertexId v) const {
  if (u >= size() || v >= size() || !has_arc(u, v))
    throw PreconditionError("cannot remove absent arc " + std::to_string(u) +
                            "->" + std::to_string(v));
  OrientedGraph g = *this;
  g.out_[u].erase(v);
  g.in_[v].erase(u);
  --g.arc_count_;
  return g;
}

OrientedGraph OrientedGraph::induced(const VertexSet& keep,
                                     std::vector<VertexId>* original) const {
  std::vector<VertexId> old_of = keep.to_vector();
  std::vector<VertexId> new_of(size(), 0);
  for (VertexId i = 0; i < old_of.size(); ++i) new_of[old_of[i]] = i;
  std::vector<Arc> arcs;
  for (VertexId u : old_of)
    for (VertexId v : out_[u])
      if (keep.contains(v)) arcs.push_back({new_of[u], new_of[v]});
  if (original != nullptr) *original = old_of;
  return OrientedGraph(old_of.size(), arcs);
}

OrientedGraph OrientedGraph::without_vertex(
    VertexId z, std::vector<VertexId>* original) const {
  check_vertex(*this, z);
  VertexSet keep = all_vertices();
  keep.erase(z);
  return induced(keep, original);
}

void check_vertex(const OrientedGraph& g, VertexId v) {
  if (v >= g.size())
    throw InputError("vertex " + std::to_string(v) + " is outside [0, " +
                     std::to_string(g.size()) + ")");
}

VertexSet second_out_neighborhood(const OrientedGraph& g, VertexId v) {
  check_vertex(g, v);
  VertexSet reach(g.size());
  for (VertexId w : g.out(v)) reach |= g.out(w);
  reach -= g.out(v);
  reach.erase(v);
  return reach;
}

bool has_large_second_neighborhood(const OrientedGraph& g, VertexId v) {
  return second_out_neighborhood(g, v).size() >= g.out_degree(v);
}

NeighborhoodReport neighborhood_report(const OrientedGraph& g, VertexId v) {
  VertexSet second = second_out_neighborhood(g, v);
  const bool witness = second.size() >= g.out_degree(v);
  return {v, g.out(v), std::move(second), witness};
}

VertexSet find_sinks(const OrientedGraph& g) {
  VertexSet sinks(g.size());
  for (VertexId v = 0; v < g.size(); ++v)
    if (g.out(v).empty()) sinks.insert(v);
  return sinks;
}

std::vector<MissingEdge> missing_edges(const OrientedGraph& g) {
  std::vector<MissingEdge> result;
  for (VertexId u = 0; u < g.size(); ++u)
    for (VertexId v = u + 1; v < g.size(); ++v)
      if (!g.adjacent(u, v)) result.push_back({u, v});
  return result;
}

std::vector<VertexId> non_neighbors(const OrientedGraph& g, VertexId v) {
  check_vertex(g, v);
  VertexSet rest = g.all_vertices() - g.out(v) - g.in(v);
  rest.erase(v);
  return rest.to_vector();
}

bool is_module(const OrientedGraph& g, const VertexSet& s) {
  auto it = s.begin();
  if (it == s.end()) return true;
  const VertexId first = *it;
  const VertexSet out = g.out(first) - s;
  const VertexSet in = g.in(first) - s;
  for (++it; it != s.end(); ++it) {
    if (g.out(*it) - s != out || g.in(*it) - s != in) return false;
  }
  return true;
}

namespace {

bool IsMatching(const std::vector<MissingEdge>& edges, std::size_t n) {
  std::vector<bool> used(n, false);
  for (const MissingEdge& e : edges) {
    if (used[e.lo] || used[e.hi]) return false;
    used[e.lo] = used[e.hi] = true;
  }
  return true;
}

std::vector<std::size_t> MissingDegrees(const std::vector<MissingEdge>& edges,
                                        std::size_t n) {
  std::vector<std::size_t> deg(n, 0);
  for (const MissingEdge& e : edges) {
    ++deg[e.lo];
    ++deg[e.hi];
  }
  return deg;
}

}  // namespace

bool missing_edges_form_matching(const OrientedGraph& g) {
  return IsMatching(missing_edges(g), g.size());
}

MissingStructure classify_missing_structure(const OrientedGraph& g) {
  const std::vector<MissingEdge> edges = missing_edges(g);
  if (IsMatching(edges, g.size())) return PureMatching{edges};

  const std::vector<std::size_t> deg = MissingDegrees(edges, g.size());
  std::vector<VertexId> candidates;
  for (VertexId v = 0; v < g.size(); ++v)
    if (deg[v] >= 2) candidates.push_back(v);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](VertexId a, VertexId b) { return deg[a] > deg[b]; });

  for (VertexId center : candidates) {
    std::vector<MissingEdge> rest;
    std::vector<VertexId> leaves;
    for (const MissingEdge& e : edges) {
      if (e.touches(center))
        leaves.push_back(e.other(center));
      else
        rest.push_back(e);
    }
    if (IsMatching(rest, g.size())) {
      std::sort(leaves.begin(), leaves.end());
      return MatchingPlusStar{std::move(rest), center, std::move(leaves)};
    }
  }
  return OtherStructure{};
}

VertexId canonical_star_center(const OrientedGraph& g) {
  const MissingStructure s = classify_missing_structure(g);
  if (const auto* star = std::get_if<MatchingPlusStar>(&s)) return star->center;
  if (g.size() == 0) throw InputError("graph has no vertices");
  const std::vector<std::size_t> deg = MissingDegrees(missing_edges(g), g.size());
  return static_cast<VertexId>(
      std::max_element(deg.begin(), deg.end()) - deg.begin());
}

}  // namespace snc
