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

// Median orders of tournaments: orderings maximizing the number of forward
// arcs. The feed vertex of an ordering is its last vertex.
//
// Positions in this API are 0-based: for an ordering (x_0, ..., x_{n-1}),
// an "interval" [i, j] means the vertices x_i, ..., x_j.

#ifndef SNC_MEDIAN_ORDER_H_
#define SNC_MEDIAN_ORDER_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "snc/graph.h"

namespace snc {

struct SolverOptions {
  // Largest tournament solved exactly by the subset dynamic program.
  std::size_t exact_limit = 18;
};

// Hard cap on `SolverOptions::exact_limit`: the DP table has 2^n entries.
inline constexpr std::size_t kMaxExactLimit = 26;

class Ordering {
 public:
  Ordering() = default;
  // Throws InputError unless `sequence` is a permutation of [0, n).
  Ordering(std::vector<VertexId> sequence, std::size_t n);
  explicit Ordering(std::vector<VertexId> sequence);

  const std::vector<VertexId>& sequence() const { return seq_; }
  std::size_t size() const { return seq_.size(); }
  VertexId operator[](std::size_t i) const { return seq_[i]; }
  VertexId feed() const { return seq_.back(); }
  std::size_t position(VertexId v) const { return pos_[v]; }

  bool operator==(const Ordering& o) const { return seq_ == o.seq_; }

 private:
  std::vector<VertexId> seq_;
  std::vector<std::size_t> pos_;
};

struct OrderingHash {
  std::size_t operator()(const Ordering& l) const;
};

// Number of arcs (x_i, x_j) of `t` with i < j.
std::int64_t order_value(const OrientedGraph& t, const Ordering& l);

// An ordering whose value is certified equal to the tournament's optimum.
class MedianOrder {
 public:
  const Ordering& ordering() const { return ordering_; }
  std::int64_t value() const { return value_; }
  VertexId feed() const { return ordering_.feed(); }
  std::size_t size() const { return ordering_.size(); }
  VertexId operator[](std::size_t i) const { return ordering_[i]; }

  // Throws InvariantViolation unless order_value(t, l) == optimum.
  static MedianOrder Certify(const OrientedGraph& t, Ordering l,
                             std::int64_t optimum);

  bool operator==(const MedianOrder& o) const {
    return ordering_ == o.ordering_;
  }

 private:
  MedianOrder(Ordering l, std::int64_t value)
      : ordering_(std::move(l)), value_(value) {}

  Ordering ordering_;
  std::int64_t value_ = 0;
};

// Maximum forward-arc count over all orderings of tournament `t`.
// Throws InputError if `t` is not a tournament, CapabilityError above the
// exact limit.
std::int64_t median_value(const OrientedGraph& t, const SolverOptions& opts = {});

// The lexicographically smallest (by vertex index) optimal ordering.
MedianOrder compute_median_order(const OrientedGraph& t,
                                 const SolverOptions& opts = {});

// Checks `l` against the exact optimum.
MedianOrder certify_median_order(const OrientedGraph& t, const Ordering& l,
                                 const SolverOptions& opts = {});

// Insertion followed by single-vertex moves until no move improves. The
// result is a local optimum only; nothing proved about median orders
// applies to it.
Ordering heuristic_order(const OrientedGraph& t);

// Both halves of the feedback property on the interval [i, j], i < j.
bool check_feedback_property(const OrientedGraph& t, const Ordering& l,
                             std::size_t i, std::size_t j);

enum class Endpoint {
  // Move x_i to just after x_j.
  kLeft,
  // Move x_j to just before x_i.
  kRight,
};

// Rearranges the interval [i, j] when the moved endpoint has equally many
// out- and in-neighbors in the rest of the interval; otherwise throws
// PreconditionError. i == j is the identity.
MedianOrder move_vertex(const OrientedGraph& t, const MedianOrder& l,
                        std::size_t i, std::size_t j, Endpoint which);

struct ReversedTournament {
  OrientedGraph tournament;
  MedianOrder order;
};

// Reverses the backward arc `arc` (its head precedes its tail in `l`). The
// same ordering stays a median order of the new tournament.
ReversedTournament reverse_arc_keeps_order(const OrientedGraph& t,
                                           const MedianOrder& l, Arc arc,
                                           const SolverOptions& opts = {});

class ModulePartition {
 public:
  // Throws InputError unless the blocks are nonempty, disjoint and cover
  // [0, n).
  ModulePartition(std::vector<std::vector<VertexId>> blocks, std::size_t n);

  static ModulePartition Singletons(std::size_t n);
  static ModulePartition Whole(std::size_t n);

  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<VertexId>& block(std::size_t b) const { return blocks_[b]; }
  const std::vector<std::vector<VertexId>>& blocks() const { return blocks_; }
  std::size_t block_of(VertexId v) const { return block_of_[v]; }
  VertexSet block_set(std::size_t b) const;
  std::size_t universe() const { return block_of_.size(); }

  // Throws InputError naming the first block that is not a module of `g`.
  void check_modules(const OrientedGraph& g) const;

 private:
  std::vector<std::vector<VertexId>> blocks_;
  std::vector<std::size_t> block_of_;
};

// True iff every block occupies consecutive positions.
bool is_good_ordering(const ModulePartition& p, const Ordering& l);

enum class CompactSide {
  // x_i moves right, next to x_j.
  kRight,
  // x_j moves left, next to x_i.
  kLeft,
};

// Brings two members of a block together when nothing between them belongs
// to the block. Requires i < j - 1.
MedianOrder compact_module_fragment(const OrientedGraph& t,
                                    const MedianOrder& l,
                                    const ModulePartition& p, std::size_t i,
                                    std::size_t j, CompactSide side);

// Repeated right-compaction until every block is consecutive. Keeps the feed
// vertex.
MedianOrder good_median_order(const OrientedGraph& t, const ModulePartition& p,
                              const MedianOrder& l);

// One sedimentation step of a good median order.
MedianOrder sediment(const OrientedGraph& t, const ModulePartition& p,
                     const MedianOrder& l);

struct SedimentOutcome {
  enum class Kind { kStable, kPeriodic };

  Kind kind;
  // Stable: Sed^0 .. Sed^q with Sed^{q+1} == Sed^q.
  // Periodic: Sed^0 .. Sed^{m-1}; Sed^m equals history[period_start].
  std::vector<MedianOrder> history;
  std::size_t period_start = 0;

  bool stable() const { return kind == Kind::kStable; }
  const MedianOrder& fixpoint() const { return history.back(); }
  std::size_t steps() const { return history.size() - 1; }
};

// Iterates sedimentation until a fixed point or a repeated ordering. Throws
// ResourceError (listing the history) after `max_steps` steps.
SedimentOutcome sediment_iterate(const OrientedGraph& t,
                                 const ModulePartition& p,
                                 const MedianOrder& l, std::size_t max_steps);

struct FeedReport {
  VertexId feed;
  std::size_t out_size;
  std::size_t second_size;
  std::vector<VertexId> block;
  // Per member v of the feed's block: |N+(v) - I| and |N++(v) - I|.
  std::vector<std::size_t> block_out_outside;
  std::vector<std::size_t> block_second_outside;
};

// Measures the feed-vertex inequalities; throws InvariantViolation if either
// fails.
FeedReport feed_vertex_property(const OrientedGraph& t, const MedianOrder& l,
                                const ModulePartition& p);

std::string format_sediment_outcome(const SedimentOutcome& outcome);

}  // namespace snc

#endif  // SNC_MEDIAN_ORDER_H_
