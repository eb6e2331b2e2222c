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


#include "snc/matching.h"

#include <algorithm>
#include <sstream>

#include "snc/errors.h"

namespace snc {
namespace {

std::string PairText(VertexId u, VertexId v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

void RequireMissing(const OrientedGraph& g, VertexId u, VertexId v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v || g.adjacent(u, v))
    throw InputError(PairText(u, v) + " is not a missing edge");
}

// Some w with x ->> w -> y.
bool ForcedTowards(const OrientedGraph& g, VertexId x, VertexId y) {
  for (VertexId w : g.out(x))
    if (g.has_arc(w, y) && is_special(g, x, w)) return true;
  return false;
}

bool RHolds(const OrientedGraph& g, const SpecialArcSet& special,
            MissingPair ab, MissingPair cd) {
  return g.has_arc(ab.a, cd.a) && special.contains(cd.a, ab.b) &&
         g.has_arc(ab.b, cd.b) && special.contains(cd.b, ab.a);
}

MissingPair Oriented(MissingEdge e) { return {e.lo, e.hi}; }

// Orientation of the target of `arc` given the orientation of its source.
MissingPair Propagate(const DeltaArc& arc, MissingPair source) {
  return source == arc.source ? arc.target : arc.target.reversed();
}

bool Prime(const DeltaDecomposition& delta, VertexId u) {
  const std::size_t node = delta.node_at[u];
  return node == kNoNode || !delta.on_cycle(node);
}

VertexSet GammaVertices(const DeltaDecomposition& delta, std::size_t cycle,
                        std::size_t n) {
  VertexSet s(n);
  for (std::size_t node : delta.cycles[cycle]) {
    s.insert(delta.nodes[node].lo);
    s.insert(delta.nodes[node].hi);
  }
  return s;
}

// Shared state for building safe completions of one graph.
class SafeCompletionBuilder {
 public:
  explicit SafeCompletionBuilder(const OrientedGraph& g)
      : g_(g), delta_(build_delta(g)), free_(free_choice_edges(delta_, g)) {
    for (const MissingEdge& e : delta_.nodes)
      status_.push_back(forced_status(g, e));
  }

  const DeltaDecomposition& delta() const { return delta_; }
  std::size_t free_count() const { return free_.size(); }

  Completion Build(const std::vector<bool>& choices) const {
    if (choices.size() != free_.size())
      throw InputError("expected " + std::to_string(free_.size()) +
                       " free choice(s), got " +
                       std::to_string(choices.size()));
    std::vector<std::optional<MissingPair>> orient(delta_.nodes.size());
    std::size_t next = 0;
    auto choose = [&](std::size_t node) {
      const MissingPair p = Oriented(delta_.nodes[node]);
      return choices[next++] ? p.reversed() : p;
    };
    for (const auto& path : delta_.paths) {
      const std::size_t start = path.front();
      if (status_[start].singly()) {
        const Arc d = status_[start].direction;
        orient[start] = MissingPair{d.from, d.to};
      } else {
        orient[start] = choose(start);
      }
      for (std::size_t k = 1; k < path.size(); ++k) {
        const DeltaArc& arc = delta_.arcs[delta_.in_arc[path[k]]];
        orient[path[k]] = Propagate(arc, *orient[path[k - 1]]);
      }
    }
    for (const auto& cycle : delta_.cycles)
      for (std::size_t node : cycle) orient[node] = choose(node);

    std::vector<Arc> dashed;
    for (const auto& o : orient) dashed.push_back({o->a, o->b});
    return Completion(g_, dashed);
  }

  bool IsSafe(const Completion& t) const {
    for (std::size_t node = 0; node < delta_.nodes.size(); ++node) {
      const Arc d = status_[node].direction;
      if (status_[node].singly() && !t.is_dashed(d.from, d.to)) return false;
    }
    for (const DeltaArc& arc : delta_.arcs) {
      if (delta_.on_cycle(arc.to)) continue;
      for (MissingPair src : {arc.source, arc.source.reversed()}) {
        const MissingPair dst = Propagate(arc, src);
        if (t.is_dashed(src.a, src.b) && !t.is_dashed(dst.a, dst.b))
          return false;
      }
    }
    return true;
  }

 private:
  const OrientedGraph& g_;
  DeltaDecomposition delta_;
  std::vector<MissingEdge> free_;
  std::vector<ForcedStatus> status_;
};

}  // namespace

void require_matching(const OrientedGraph& g) {
  for (VertexId v = 0; v < g.size(); ++v) {
    const auto others = non_neighbors(g, v);
    if (others.size() > 1)
      throw InputError("missing edges do not form a matching: vertex " +
                       std::to_string(v) + " has " +
                       std::to_string(others.size()) + " non-neighbours");
  }
}

std::vector<Arc> SpecialArcSet::arcs() const {
  std::vector<Arc> out;
  for (VertexId x = 0; x < heads_.size(); ++x)
    for (VertexId y : heads_[x]) out.push_back({x, y});
  return out;
}

bool is_special(const OrientedGraph& g, VertexId x, VertexId y) {
  check_vertex(g, x);
  check_vertex(g, y);
  return g.has_arc(x, y) && !second_out_neighborhood(g, y).contains(x);
}

SpecialArcSet special_arcs(const OrientedGraph& g) {
  require_matching(g);
  std::vector<VertexSet> heads(g.size(), VertexSet(g.size()));
  for (VertexId y = 0; y < g.size(); ++y) {
    const VertexSet second = second_out_neighborhood(g, y);
    for (VertexId x : g.in(y))
      if (!second.contains(x)) heads[x].insert(y);
  }
  return SpecialArcSet(std::move(heads));
}

SpecialCycleReport verify_special_cycle(const OrientedGraph& g,
                                        std::span<const VertexId> cycle) {
  const std::size_t k = cycle.size();
  if (k < 4)
    throw PreconditionError("special cycles have at least 4 vertices, got " +
                            std::to_string(k));
  VertexSet members(g.size());
  for (VertexId v : cycle) {
    check_vertex(g, v);
    if (members.contains(v))
      throw PreconditionError("cycle repeats vertex " + std::to_string(v));
    members.insert(v);
  }
  for (std::size_t i = 0; i < k; ++i) {
    const VertexId x = cycle[i];
    const VertexId y = cycle[(i + 1) % k];
    if (!is_special(g, x, y))
      throw PreconditionError(std::to_string(x) + "->" + std::to_string(y) +
                              " is not a special arc");
  }
  const std::string instance = format_edge_list(g);
  if (k % 2 != 0)
    throw InvariantViolation(
        "special cycle of odd length " + std::to_string(k), instance);
  SpecialCycleReport report{k, {}};
  for (std::size_t i = 0; i < k / 2; ++i) {
    const VertexId x = cycle[i];
    const VertexId y = cycle[i + k / 2];
    if (g.adjacent(x, y))
      throw InvariantViolation("antipodal vertices " + std::to_string(x) +
                                   " and " + std::to_string(y) +
                                   " of a special cycle are adjacent",
                               instance);
    report.antipodal.push_back(MissingEdge::Of(x, y));
  }
  if (!is_module(g, members))
    throw InvariantViolation("special cycle vertex set is not a module",
                             instance);
  return report;
}

bool relation_R(const OrientedGraph& g, MissingPair ab, MissingPair cd) {
  RequireMissing(g, ab.a, ab.b);
  RequireMissing(g, cd.a, cd.b);
  if (MissingEdge::Of(ab.a, ab.b) == MissingEdge::Of(cd.a, cd.b))
    throw InputError("relation R needs two distinct missing edges");
  return g.has_arc(ab.a, cd.a) && is_special(g, cd.a, ab.b) &&
         g.has_arc(ab.b, cd.b) && is_special(g, cd.b, ab.a);
}

std::size_t DeltaDecomposition::node_index(MissingEdge e) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), e);
  if (it == nodes.end() || *it != e)
    throw InputError(PairText(e.lo, e.hi) + " is not a node of Delta");
  return static_cast<std::size_t>(it - nodes.begin());
}

std::size_t DeltaDecomposition::successor(std::size_t node) const {
  return out_arc[node] == kNoNode ? kNoNode : arcs[out_arc[node]].to;
}

std::size_t DeltaDecomposition::predecessor(std::size_t node) const {
  return in_arc[node] == kNoNode ? kNoNode : arcs[in_arc[node]].from;
}

DeltaDecomposition build_delta(const OrientedGraph& g) {
  const SpecialArcSet special = special_arcs(g);
  DeltaDecomposition d;
  d.nodes = missing_edges(g);
  const std::size_t m = d.nodes.size();
  d.out_arc.assign(m, kNoNode);
  d.in_arc.assign(m, kNoNode);
  d.cycle_of.assign(m, kNoNode);
  d.node_at.assign(g.size(), kNoNode);
  for (std::size_t i = 0; i < m; ++i) {
    d.node_at[d.nodes[i].lo] = i;
    d.node_at[d.nodes[i].hi] = i;
  }

  for (std::size_t i = 0; i < m; ++i) {
    const MissingPair src = Oriented(d.nodes[i]);
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      for (MissingPair dst : {Oriented(d.nodes[j]), Oriented(d.nodes[j]).reversed()}) {
        if (!RHolds(g, special, src, dst)) continue;
        if (d.out_arc[i] != kNoNode || d.in_arc[j] != kNoNode)
          throw InvariantViolation(
              "Delta node has two out- or in-arcs at " +
                  PairText(d.nodes[i].lo, d.nodes[i].hi) + " -> " +
                  PairText(d.nodes[j].lo, d.nodes[j].hi),
              format_edge_list(g));
        d.out_arc[i] = d.in_arc[j] = d.arcs.size();
        d.arcs.push_back({i, j, src, dst});
      }
    }
  }

  std::vector<bool> seen(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (d.in_arc[i] != kNoNode) continue;
    std::vector<std::size_t> path;
    for (std::size_t v = i; v != kNoNode; v = d.successor(v)) {
      path.push_back(v);
      seen[v] = true;
    }
    d.paths.push_back(std::move(path));
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t v = i; !seen[v]; v = d.successor(v)) {
      cycle.push_back(v);
      seen[v] = true;
      d.cycle_of[v] = d.cycles.size();
    }
    d.cycles.push_back(std::move(cycle));
  }
  return d;
}

std::string format_delta(const DeltaDecomposition& delta,
                         const LabelTable& labels) {
  auto name = [&](VertexId v) { return labels.name(v); };
  auto node = [&](std::size_t i) {
    return "{" + name(delta.nodes[i].lo) + "," + name(delta.nodes[i].hi) + "}";
  };
  std::ostringstream out;
  for (std::size_t i = 0; i < delta.nodes.size(); ++i)
    out << "node " << node(i) << '\n';
  for (const DeltaArc& arc : delta.arcs) {
    const MissingPair s = arc.source;
    const MissingPair t = arc.target;
    out << "arc " << node(arc.from) << " -> " << node(arc.to) << " via "
        << name(s.a) << "->" << name(t.a) << "->>" << name(s.b) << "->"
        << name(t.b) << "->>" << name(s.a) << '\n';
  }
  out << "PATHS:\n";
  for (const auto& path : delta.paths) {
    for (std::size_t k = 0; k < path.size(); ++k)
      out << (k ? " " : "") << node(path[k]);
    out << '\n';
  }
  out << "CYCLES:\n";
  for (const auto& cycle : delta.cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k)
      out << (k ? " " : "") << node(cycle[k]);
    out << '\n';
  }
  return out.str();
}

GammaReport gamma(const OrientedGraph& g, const DeltaDecomposition& delta,
                  std::size_t node) {
  if (node >= delta.nodes.size())
    throw InputError("Delta has no node " + std::to_string(node));
  if (!delta.on_cycle(node))
    throw PreconditionError(
        PairText(delta.nodes[node].lo, delta.nodes[node].hi) +
        " lies on a path of Delta, not a cycle");
  const std::size_t c = delta.cycle_of[node];
  const auto& cycle = delta.cycles[c];
  GammaReport report{GammaVertices(delta, c, g.size()), {}};

  // Each R fact (a,b) R (c,d) gives c ->> b and d ->> a, so every vertex of
  // Gamma gets exactly one special successor; they must chain into a single
  // cycle through all of Gamma.
  std::vector<VertexId> next(g.size(), 0);
  MissingPair orient = Oriented(delta.nodes[cycle.front()]);
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    const DeltaArc& arc = delta.arcs[delta.out_arc[cycle[k]]];
    const MissingPair target = Propagate(arc, orient);
    next[target.a] = orient.b;
    next[target.b] = orient.a;
    orient = target;
  }
  const VertexId start = *report.vertices.begin();
  VertexId v = start;
  do {
    report.special_cycle.push_back(v);
    v = next[v];
  } while (v != start && report.special_cycle.size() <= report.vertices.size());
  if (report.special_cycle.size() != report.vertices.size())
    throw InvariantViolation("no special cycle spans Gamma of the Delta cycle "
                             "through " +
                                 PairText(delta.nodes[node].lo,
                                          delta.nodes[node].hi),
                             format_edge_list(g));
  verify_special_cycle(g, report.special_cycle);
  return report;
}

std::size_t snc_on_gamma(const OrientedGraph& g,
                         const DeltaDecomposition& delta, std::size_t node) {
  const GammaReport gr = gamma(g, delta, node);
  const std::size_t common = gr.vertices.size() / 2 - 1;
  for (VertexId u : gr.vertices) {
    const std::size_t out = (g.out(u) & gr.vertices).size();
    const std::size_t second =
        (second_out_neighborhood(g, u) & gr.vertices).size();
    if (out != second || out != common)
      throw InvariantViolation(
          "vertex " + std::to_string(u) + " has " + std::to_string(out) +
              " out-neighbours but " + std::to_string(second) +
              " second out-neighbours inside Gamma",
          format_edge_list(g));
  }
  return common;
}

ForcedStatus forced_status(const OrientedGraph& g, MissingEdge e) {
  RequireMissing(g, e.lo, e.hi);
  const bool up = ForcedTowards(g, e.lo, e.hi);
  const bool down = ForcedTowards(g, e.hi, e.lo);
  if (up && down) return {ForcedStatus::Kind::kDual, {e.lo, e.hi}};
  if (up) return {ForcedStatus::Kind::kSingly, {e.lo, e.hi}};
  if (down) return {ForcedStatus::Kind::kSingly, {e.hi, e.lo}};
  return {ForcedStatus::Kind::kUnforced, {e.lo, e.hi}};
}

Completion::Completion(OrientedGraph base, std::span<const Arc> dashed)
    : base_(std::move(base)),
      dashed_out_(base_.size(), VertexSet(base_.size())) {
  const std::vector<MissingEdge> missing = missing_edges(base_);
  std::vector<std::optional<Arc>> slot(missing.size());
  for (const Arc& a : dashed) {
    check_vertex(base_, a.from);
    check_vertex(base_, a.to);
    const MissingEdge e = MissingEdge::Of(a.from, a.to);
    auto it = std::lower_bound(missing.begin(), missing.end(), e);
    if (a.from == a.to || it == missing.end() || *it != e)
      throw InputError(PairText(a.from, a.to) + " is not a missing edge");
    auto& s = slot[static_cast<std::size_t>(it - missing.begin())];
    if (s) throw InputError(PairText(a.from, a.to) + " is oriented twice");
    s = a;
  }
  for (std::size_t i = 0; i < missing.size(); ++i) {
    if (!slot[i])
      throw InputError("missing edge " + PairText(missing[i].lo, missing[i].hi) +
                       " is not oriented");
    dashed_.push_back(*slot[i]);
    dashed_out_[slot[i]->from].insert(slot[i]->to);
  }
  tournament_ = base_.with_arcs_added(dashed_);
}

Completion Completion::FromTournament(OrientedGraph base,
                                      const OrientedGraph& tournament) {
  if (tournament.size() != base.size() || !tournament.is_tournament())
    throw InputError("completion must be a tournament on the same vertices");
  for (const Arc& a : base.arcs())
    if (!tournament.has_arc(a.from, a.to))
      throw InputError("completion drops arc " + std::to_string(a.from) +
                       "->" + std::to_string(a.to));
  std::vector<Arc> dashed;
  for (const MissingEdge& e : missing_edges(base))
    dashed.push_back(tournament.has_arc(e.lo, e.hi) ? Arc{e.lo, e.hi}
                                                    : Arc{e.hi, e.lo});
  return Completion(std::move(base), dashed);
}

bool Completion::is_dashed(VertexId u, VertexId v) const {
  return dashed_out_[u].contains(v);
}

std::vector<MissingEdge> free_choice_edges(const DeltaDecomposition& delta,
                                           const OrientedGraph& g) {
  std::vector<MissingEdge> free;
  for (const auto& path : delta.paths)
    if (!forced_status(g, delta.nodes[path.front()]).singly())
      free.push_back(delta.nodes[path.front()]);
  for (const auto& cycle : delta.cycles)
    for (std::size_t node : cycle) free.push_back(delta.nodes[node]);
  return free;
}

Completion safe_completion(const OrientedGraph& g,
                           const std::vector<bool>& choices) {
  const SafeCompletionBuilder builder(g);
  Completion t = builder.Build(choices);
  if (!builder.IsSafe(t))
    throw InvariantViolation("safe-completion strategy produced an unsafe "
                             "completion",
                             format_edge_list(g));
  return t;
}

bool is_safe_completion(const OrientedGraph& g, const Completion& t) {
  if (!(t.base() == g))
    throw InputError("completion does not extend the given graph");
  return SafeCompletionBuilder(g).IsSafe(t);
}

SafeCompletionChoice max_value_safe_completion(
    const OrientedGraph& g, const MaxSafeCompletionOptions& opts) {
  const SafeCompletionBuilder builder(g);
  const std::size_t k = builder.free_count();
  if (k > opts.free_choice_limit || k >= 63)
    throw CapabilityError(std::to_string(k) +
                          " free choices exceed the enumeration limit of " +
                          std::to_string(opts.free_choice_limit));
  std::optional<SafeCompletionChoice> best;
  // Masks in increasing order visit choice vectors lexicographically, with
  // choices[0] as the most significant bit.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<bool> choices(k);
    for (std::size_t b = 0; b < k; ++b) choices[b] = (mask >> (k - 1 - b)) & 1;
    Completion t = builder.Build(choices);
    if (!builder.IsSafe(t))
      throw InvariantViolation("safe-completion strategy produced an unsafe "
                               "completion",
                               format_edge_list(g));
    const std::int64_t value = median_value(t.tournament(), opts.solver);
    if (!best || value > best->value)
      best = SafeCompletionChoice{std::move(t), std::move(choices), value};
  }
  return std::move(*best);
}

std::vector<SpecialInNeighbor> special_in_neighbors(const Completion& t,
                                                    VertexId v) {
  const OrientedGraph& g = t.base();
  const OrientedGraph& tt = t.tournament();
  check_vertex(g, v);
  const VertexSet second = second_out_neighborhood(tt, v);
  std::vector<SpecialInNeighbor> out;
  for (VertexId b : g.in(v)) {
    if (!second.contains(b) || !is_special(g, b, v)) continue;
    SpecialInNeighbor s{b, false, false};
    for (VertexId a : g.out(v))
      if (t.is_dashed(a, b)) s.type_one = true;
    for (VertexId a = 0; a < g.size(); ++a)
      if (t.is_dashed(v, a) && g.has_arc(a, b)) s.type_two = true;
    out.push_back(s);
  }
  return out;
}

VertexHome vertex_home(const OrientedGraph& g, const DeltaDecomposition& delta,
                       VertexId u) {
  check_vertex(g, u);
  VertexHome home{u, VertexSet(g.size(), {u}), true};
  if (!Prime(delta, u)) {
    home.block = gamma(g, delta, delta.node_at[u]).vertices;
    home.prime = false;
  }
  const std::size_t out = (g.out(u) & home.block).size();
  const std::size_t second = (second_out_neighborhood(g, u) & home.block).size();
  if (out != second)
    throw InvariantViolation("vertex " + std::to_string(u) + " has " +
                                 std::to_string(out) + " vs " +
                                 std::to_string(second) +
                                 " first/second out-neighbours inside I(u)",
                             format_edge_list(g));
  return home;
}

ModulePartition home_partition(const OrientedGraph& g,
                               const DeltaDecomposition& delta) {
  std::vector<std::vector<VertexId>> blocks;
  std::vector<bool> placed(g.size(), false);
  for (VertexId u = 0; u < g.size(); ++u) {
    if (placed[u]) continue;
    VertexSet block(g.size(), {u});
    if (!Prime(delta, u))
      block = GammaVertices(delta, delta.cycle_of[delta.node_at[u]], g.size());
    if (!is_module(g, block))
      throw InvariantViolation("I(" + std::to_string(u) + ") is not a module",
                               format_edge_list(g));
    for (VertexId v : block) placed[v] = true;
    blocks.push_back(block.to_vector());
  }
  return ModulePartition(std::move(blocks), g.size());
}

bool relation_F(const OrientedGraph& g, const DeltaDecomposition& delta,
                VertexId x, VertexId y) {
  check_vertex(g, x);
  check_vertex(g, y);
  if (!Prime(delta, x) || delta.node_at[x] == kNoNode) return false;
  const VertexId partner = delta.nodes[delta.node_at[x]].other(x);
  if (!g.has_arc(y, partner) || !is_special(g, x, y)) return false;
  const ForcedStatus s = forced_status(g, MissingEdge::Of(x, partner));
  return s.singly() && s.direction.from == x;
}

std::vector<VertexId> relation_F_order(const OrientedGraph& g,
                                       const DeltaDecomposition& delta) {
  const std::size_t n = g.size();
  std::vector<std::vector<VertexId>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (VertexId x = 0; x < n; ++x)
    for (VertexId y : g.out(x))
      if (relation_F(g, delta, x, y)) {
        succ[x].push_back(y);
        ++indegree[y];
      }
  std::vector<VertexId> order;
  for (VertexId v = 0; v < n; ++v)
    if (indegree[v] == 0) order.push_back(v);
  for (std::size_t k = 0; k < order.size(); ++k)
    for (VertexId y : succ[order[k]])
      if (--indegree[y] == 0) order.push_back(y);
  if (order.size() != n) {
    std::string stuck;
    for (VertexId v = 0; v < n; ++v)
      if (indegree[v] > 0) stuck += " " + std::to_string(v);
    throw InvariantViolation("relation F has a cycle among" + stuck,
                             format_edge_list(g));
  }
  return order;
}

ReverseSpecialArcReport analyze_reverse_special_arc(const Completion& t,
                                                    const MedianOrder& l,
                                                    Arc arc) {
  const OrientedGraph& g = t.base();
  const OrientedGraph& tt = t.tournament();
  if (l.size() != g.size())
    throw InputError("ordering size does not match the completion");
  if (order_value(tt, l.ordering()) != l.value())
    throw PreconditionError("ordering is not certified for this completion");
  if (!is_special(g, arc.from, arc.to))
    throw PreconditionError(std::to_string(arc.from) + "->" +
                            std::to_string(arc.to) + " is not a special arc");
  const std::size_t i = l.ordering().position(arc.to);
  const std::size_t j = l.ordering().position(arc.from);
  if (i > j)
    throw PreconditionError("special arc " + std::to_string(arc.from) + "->" +
                            std::to_string(arc.to) + " is forward");
  ReverseSpecialArcReport report{i, j, {}, {}, std::nullopt};
  const VertexId xi = l[i];
  const VertexId xj = l[j];
  for (std::size_t k = i + 1; k < j; ++k) {
    const VertexId xk = l[k];
    if (t.is_dashed(xi, xk) && g.has_arc(xk, xj)) report.dashed_out.push_back(k);
    if (g.has_arc(xi, xk) && t.is_dashed(xk, xj)) report.dashed_in.push_back(k);
  }
  const bool one = !report.dashed_out.empty();
  const bool two = !report.dashed_in.empty();
  if (!one && !two)
    throw InvariantViolation("reverse special arc " + std::to_string(arc.from) +
                                 "->" + std::to_string(arc.to) +
                                 " has neither dashed pattern in its interval",
                             format_edge_list(tt));
  if (one != two) {
    try {
      report.moved = move_vertex(tt, l, i, j, Endpoint::kLeft);
    } catch (const PreconditionError& e) {
      throw InvariantViolation(
          std::string("moving x_i past x_j failed: ") + e.what(),
          format_edge_list(tt));
    }
  }
  return report;
}

bool check_no_unforced_isolated_reverse(const Completion& t,
                                        const MedianOrder& l,
                                        const DeltaDecomposition& delta) {
  for (const Arc& a : t.dashed()) {
    if (l.ordering().position(a.from) < l.ordering().position(a.to)) continue;
    const std::size_t node = delta.node_index(MissingEdge::Of(a.from, a.to));
    const bool isolated =
        delta.in_arc[node] == kNoNode && delta.out_arc[node] == kNoNode;
    if (isolated && forced_status(t.base(), delta.nodes[node]).kind ==
                        ForcedStatus::Kind::kUnforced)
      return false;
  }
  return true;
}

}  // namespace snc
