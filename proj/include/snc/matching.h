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


// Structure of oriented graphs whose missing edges form a matching: special
// arcs, the relation R and its digraph Delta(G), forced missing edges, safe
// completions, special in-neighbours, prime vertices and the relation F.
//
// Throughout, x ->> y denotes a special arc of the base graph G: an arc x->y
// with x outside N++(y). A dashed arc x ~> y is the orientation a completion
// gives to the missing edge {x, y}.

#ifndef SNC_MATCHING_H_
#define SNC_MATCHING_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "snc/graph.h"
#include "snc/io.h"
#include "snc/median_order.h"

namespace snc {

// Throws InputError unless the missing edges of `g` form a matching.
void require_matching(const OrientedGraph& g);

class SpecialArcSet {
 public:
  explicit SpecialArcSet(std::vector<VertexSet> heads)
      : heads_(std::move(heads)) {}

  bool contains(VertexId x, VertexId y) const { return heads_[x].contains(y); }
  // Heads of the special arcs leaving x.
  const VertexSet& from(VertexId x) const { return heads_[x]; }
  std::vector<Arc> arcs() const;

 private:
  std::vector<VertexSet> heads_;
};

bool is_special(const OrientedGraph& g, VertexId x, VertexId y);
SpecialArcSet special_arcs(const OrientedGraph& g);

struct SpecialCycleReport {
  std::size_t length;
  // {a_i, a_{i+k/2}} for i < k/2.
  std::vector<MissingEdge> antipodal;
};

// `cycle` lists a_0, ..., a_{k-1} with a_i ->> a_{i+1}. Throws
// PreconditionError if that fails or k < 4, InvariantViolation if the cycle
// is odd, lacks an antipodal missing edge, or is not a module.
SpecialCycleReport verify_special_cycle(const OrientedGraph& g,
                                        std::span<const VertexId> cycle);

// An ordered missing pair (a, b).
struct MissingPair {
  VertexId a;
  VertexId b;

  MissingPair reversed() const { return {b, a}; }
  bool operator==(const MissingPair&) const = default;
};

// (a,b) R (c,d) iff a -> c ->> b -> d ->> a. Throws InputError unless both
// pairs are distinct missing edges.
bool relation_R(const OrientedGraph& g, MissingPair ab, MissingPair cd);

inline constexpr std::size_t kNoNode = std::numeric_limits<std::size_t>::max();

struct DeltaArc {
  std::size_t from;
  std::size_t to;
  // The R fact behind the arc: source R target, source oriented lo -> hi.
  MissingPair source;
  MissingPair target;
};

struct DeltaDecomposition {
  // Missing edges, sorted; node i is nodes[i].
  std::vector<MissingEdge> nodes;
  std::vector<DeltaArc> arcs;
  // Index into `arcs` of the arc leaving / entering each node, or kNoNode.
  std::vector<std::size_t> out_arc;
  std::vector<std::size_t> in_arc;
  // Paths start at a node without in-arc, listed by start node. Cycles are
  // listed by smallest node and start there.
  std::vector<std::vector<std::size_t>> paths;
  std::vector<std::vector<std::size_t>> cycles;
  // Cycle index of each node, or kNoNode for path nodes.
  std::vector<std::size_t> cycle_of;
  // Node containing each vertex, or kNoNode.
  std::vector<std::size_t> node_at;

  std::size_t node_index(MissingEdge e) const;
  std::size_t successor(std::size_t node) const;
  std::size_t predecessor(std::size_t node) const;
  bool on_cycle(std::size_t node) const { return cycle_of[node] != kNoNode; }
};

// Throws InvariantViolation if a node gets two in- or out-arcs.
DeltaDecomposition build_delta(const OrientedGraph& g);

// Structured text: nodes, arcs with their R 4-cycle, then PATHS: and CYCLES:.
std::string format_delta(const DeltaDecomposition& delta,
                         const LabelTable& labels);

struct GammaReport {
  VertexSet vertices;
  // A special cycle through exactly `vertices`.
  std::vector<VertexId> special_cycle;
};

// Gamma of the cycle through `node`. Throws PreconditionError for a path
// node and InvariantViolation if no special cycle spans Gamma or Gamma is not
// a module.
GammaReport gamma(const OrientedGraph& g, const DeltaDecomposition& delta,
                  std::size_t node);

// Checks |N+(u) ∩ Gamma| == |N++(u) ∩ Gamma| for every u in Gamma of the
// cycle through `node` and returns the common value.
std::size_t snc_on_gamma(const OrientedGraph& g,
                         const DeltaDecomposition& delta, std::size_t node);

struct ForcedStatus {
  enum class Kind { kUnforced, kSingly, kDual };

  Kind kind;
  // Direction of a singly-forced edge.
  Arc direction;

  bool singly() const { return kind == Kind::kSingly; }
};

// x ~> y is forced when some w has x ->> w -> y.
ForcedStatus forced_status(const OrientedGraph& g, MissingEdge e);

class Completion {
 public:
  // Orients the missing edges of `base` as listed in `dashed`, which must
  // cover each exactly once.
  Completion(OrientedGraph base, std::span<const Arc> dashed);
  // Throws InputError unless `tournament` is a tournament containing `base`.
  static Completion FromTournament(OrientedGraph base,
                                   const OrientedGraph& tournament);

  const OrientedGraph& base() const { return base_; }
  const OrientedGraph& tournament() const { return tournament_; }
  // Orientation of each missing edge of the base, in missing_edges order.
  const std::vector<Arc>& dashed() const { return dashed_; }
  bool is_dashed(VertexId u, VertexId v) const;

 private:
  OrientedGraph base_;
  OrientedGraph tournament_;
  std::vector<Arc> dashed_;
  std::vector<VertexSet> dashed_out_;
};

// Missing edges the safe-completion strategy leaves free, in choice-vector
// order: non-singly-forced path starts by node index, then cycle nodes cycle
// by cycle.
std::vector<MissingEdge> free_choice_edges(const DeltaDecomposition& delta,
                                           const OrientedGraph& g);

// choices[k] == false orients the k-th free edge lo ~> hi. Throws InputError
// on a wrong-length vector.
Completion safe_completion(const OrientedGraph& g,
                           const std::vector<bool>& choices);

bool is_safe_completion(const OrientedGraph& g, const Completion& t);

struct MaxSafeCompletionOptions {
  std::size_t free_choice_limit = 16;
  SolverOptions solver;
};

struct SafeCompletionChoice {
  Completion completion;
  std::vector<bool> choices;
  std::int64_t value;
};

// Maximum median-order value over all safe completions; ties go to the
// lexicographically smallest choice vector. Throws CapabilityError above the
// free-choice limit.
SafeCompletionChoice max_value_safe_completion(
    const OrientedGraph& g, const MaxSafeCompletionOptions& opts = {});

struct SpecialInNeighbor {
  VertexId vertex;
  bool type_one;
  bool type_two;
};

// Every b with b ->> v in the base and b in N++_T(v).
std::vector<SpecialInNeighbor> special_in_neighbors(const Completion& t,
                                                    VertexId v);

struct VertexHome {
  VertexId vertex;
  VertexSet block;
  bool prime;
};

// I(u): Gamma of the Delta cycle containing u's missing edge, else {u}.
VertexHome vertex_home(const OrientedGraph& g, const DeltaDecomposition& delta,
                       VertexId u);

// The partition {I(u)}, blocks ordered by smallest member.
ModulePartition home_partition(const OrientedGraph& g,
                               const DeltaDecomposition& delta);

// x F y iff x is prime, x ->> y, and y -> x' for the non-neighbour x' of x
// with {x, x'} singly forced towards x'.
bool relation_F(const OrientedGraph& g, const DeltaDecomposition& delta,
                VertexId x, VertexId y);

// Topological order of F; throws InvariantViolation if F has a cycle.
std::vector<VertexId> relation_F_order(const OrientedGraph& g,
                                       const DeltaDecomposition& delta);

struct ReverseSpecialArcReport {
  std::size_t i;
  std::size_t j;
  // Positions k with x_i ~> x_k -> x_j, and l with x_i -> x_l ~> x_j.
  std::vector<std::size_t> dashed_out;
  std::vector<std::size_t> dashed_in;
  // x_i moved to just after x_j, present when exactly one condition holds.
  std::optional<MedianOrder> moved;
};

// `arc` is x_j ->> x_i with i < j in `l`. Throws PreconditionError if the arc
// is not special in the base or not backward, InvariantViolation if neither
// condition holds.
ReverseSpecialArcReport analyze_reverse_special_arc(const Completion& t,
                                                    const MedianOrder& l,
                                                    Arc arc);

// False iff some backward dashed arc x_j ~> x_i has an unforced missing edge
// that is isolated in Delta.
bool check_no_unforced_isolated_reverse(const Completion& t,
                                        const MedianOrder& l,
                                        const DeltaDecomposition& delta);

}  // namespace snc

#endif  // SNC_MATCHING_H_
