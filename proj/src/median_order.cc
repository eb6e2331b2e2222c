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

#include "snc/median_order.h"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

#include "snc/errors.h"
#include "snc/io.h"

namespace snc {
namespace {

void RequireTournament(const OrientedGraph& t) {
  if (!t.is_tournament())
    throw InputError("expected a tournament: " +
                     std::to_string(missing_edges(t).size()) +
                     " pair(s) are non-adjacent");
}

void RequireSameSize(const OrientedGraph& t, const Ordering& l) {
  if (l.size() != t.size())
    throw InputError("ordering has " + std::to_string(l.size()) +
                     " vertices, tournament has " + std::to_string(t.size()));
}

std::string SequenceText(const Ordering& l) {
  return format_sequence(l.sequence(), LabelTable());
}

// Out- and in-neighbors of `v` among positions [lo, hi] of `l`.
std::pair<std::size_t, std::size_t> CountInInterval(const OrientedGraph& t,
                                                    const Ordering& l,
                                                    VertexId v, std::size_t lo,
                                                    std::size_t hi) {
  std::size_t out = 0;
  std::size_t in = 0;
  for (std::size_t p = lo; p <= hi; ++p) {
    const VertexId w = l[p];
    if (w == v) continue;
    if (t.has_arc(v, w)) ++out;
    if (t.has_arc(w, v)) ++in;
  }
  return {out, in};
}

std::vector<VertexId> MoveWithin(const std::vector<VertexId>& seq,
                                 std::size_t from, std::size_t to) {
  std::vector<VertexId> out = seq;
  const VertexId v = out[from];
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(from));
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(to), v);
  return out;
}

// Suffix table: best[S] is the largest number of forward arcs inside S over
// all orderings of S.
std::vector<std::uint16_t> SubsetTable(const OrientedGraph& t,
                                       std::vector<std::uint32_t>* out_masks) {
  const std::size_t n = t.size();
  std::vector<std::uint32_t> out(n, 0);
  for (VertexId v = 0; v < n; ++v)
    for (VertexId w : t.out(v)) out[v] |= std::uint32_t{1} << w;
  std::vector<std::uint16_t> best(std::size_t{1} << n, 0);
  for (std::uint32_t s = 1; s < best.size(); ++s) {
    std::uint16_t top = 0;
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const std::uint32_t others = s & ~(std::uint32_t{1} << v);
      const auto cand = static_cast<std::uint16_t>(
          std::popcount(out[v] & others) + best[others]);
      top = std::max(top, cand);
    }
    best[s] = top;
  }
  if (out_masks != nullptr) *out_masks = std::move(out);
  return best;
}

void CheckExactCapability(const OrientedGraph& t, const SolverOptions& opts) {
  const std::size_t limit = std::min(opts.exact_limit, kMaxExactLimit);
  if (t.size() > limit)
    throw CapabilityError(
        "tournament has " + std::to_string(t.size()) +
        " vertices, above the exact median-order limit of " +
        std::to_string(limit) +
        "; use heuristic mode (results are not certified)");
}

}  // namespace

Ordering::Ordering(std::vector<VertexId> sequence, std::size_t n)
    : seq_(std::move(sequence)), pos_(n, n) {
  if (seq_.size() != n)
    throw InputError("ordering lists " + std::to_string(seq_.size()) +
                     " vertices, expected " + std::to_string(n));
  for (std::size_t i = 0; i < seq_.size(); ++i) {
    const VertexId v = seq_[i];
    if (v >= n) throw InputError("ordering names vertex " + std::to_string(v) +
                                 " outside [0, " + std::to_string(n) + ")");
    if (pos_[v] != n)
      throw InputError("ordering repeats vertex " + std::to_string(v));
    pos_[v] = i;
  }
}

Ordering::Ordering(std::vector<VertexId> sequence)
    : Ordering(sequence, sequence.size()) {}

std::size_t OrderingHash::operator()(const Ordering& l) const {
  std::size_t h = 1469598103934665603ULL;
  for (VertexId v : l.sequence()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h;
}

std::int64_t order_value(const OrientedGraph& t, const Ordering& l) {
  RequireSameSize(t, l);
  std::int64_t value = 0;
  for (const Arc& a : t.arcs())
    if (l.position(a.from) < l.position(a.to)) ++value;
  return value;
}

MedianOrder MedianOrder::Certify(const OrientedGraph& t, Ordering l,
                                 std::int64_t optimum) {
  const std::int64_t value = order_value(t, l);
  if (value != optimum)
    throw InvariantViolation("ordering (" + SequenceText(l) + ") has value " +
                                 std::to_string(value) +
                                 ", expected the optimum " +
                                 std::to_string(optimum),
                             format_edge_list(t));
  return MedianOrder(std::move(l), value);
}

std::int64_t median_value(const OrientedGraph& t, const SolverOptions& opts) {
  RequireTournament(t);
  CheckExactCapability(t, opts);
  if (t.size() == 0) return 0;
  return SubsetTable(t, nullptr).back();
}

MedianOrder compute_median_order(const OrientedGraph& t,
                                 const SolverOptions& opts) {
  RequireTournament(t);
  CheckExactCapability(t, opts);
  const std::size_t n = t.size();
  if (n == 0) return MedianOrder::Certify(t, Ordering({}, 0), 0);

  std::vector<std::uint32_t> out;
  const std::vector<std::uint16_t> best = SubsetTable(t, &out);
  std::vector<VertexId> seq;
  seq.reserve(n);
  std::uint32_t s = static_cast<std::uint32_t>(best.size() - 1);
  while (s != 0) {
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const std::uint32_t others = s & ~(std::uint32_t{1} << v);
      if (std::popcount(out[v] & others) + best[others] == best[s]) {
        seq.push_back(static_cast<VertexId>(v));
        s = others;
        break;
      }
    }
  }
  return MedianOrder::Certify(t, Ordering(std::move(seq), n), best.back());
}

MedianOrder certify_median_order(const OrientedGraph& t, const Ordering& l,
                                 const SolverOptions& opts) {
  return MedianOrder::Certify(t, l, median_value(t, opts));
}

Ordering heuristic_order(const OrientedGraph& t) {
  RequireTournament(t);
  const std::size_t n = t.size();
  std::vector<VertexId> seq;
  for (VertexId v = 0; v < n; ++v) {
    // Gain of inserting v at each slot, left to right.
    std::size_t best_slot = 0;
    std::int64_t gain = 0;
    for (VertexId w : seq)
      if (t.has_arc(w, v)) ++gain;
    std::int64_t best_gain = gain;
    for (std::size_t slot = 1; slot <= seq.size(); ++slot) {
      const VertexId w = seq[slot - 1];
      gain += t.has_arc(v, w) ? 1 : -1;
      if (gain > best_gain) {
        best_gain = gain;
        best_slot = slot;
      }
    }
    seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(best_slot), v);
  }

  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t from = 0; from < n && !improved; ++from) {
      const VertexId v = seq[from];
      // Delta of moving v to each target, scanning outward from `from`.
      std::int64_t delta = 0;
      for (std::size_t to = from + 1; to < n; ++to) {
        delta += t.has_arc(seq[to], v) ? 1 : -1;
        if (delta > 0) {
          seq = MoveWithin(seq, from, to);
          improved = true;
          break;
        }
      }
      if (improved) break;
      delta = 0;
      for (std::size_t to = from; to-- > 0;) {
        delta += t.has_arc(v, seq[to]) ? 1 : -1;
        if (delta > 0) {
          seq = MoveWithin(seq, from, to);
          improved = true;
          break;
        }
      }
    }
  }
  return Ordering(std::move(seq), n);
}

bool check_feedback_property(const OrientedGraph& t, const Ordering& l,
                             std::size_t i, std::size_t j) {
  RequireSameSize(t, l);
  if (!(i < j && j < l.size()))
    throw InputError("feedback interval [" + std::to_string(i) + ", " +
                     std::to_string(j) + "] is invalid for " +
                     std::to_string(l.size()) + " vertices");
  const auto [out_i, in_i] = CountInInterval(t, l, l[i], i + 1, j);
  const auto [out_j, in_j] = CountInInterval(t, l, l[j], i, j - 1);
  return out_i >= in_i && out_j <= in_j;
}

MedianOrder move_vertex(const OrientedGraph& t, const MedianOrder& l,
                        std::size_t i, std::size_t j, Endpoint which) {
  RequireSameSize(t, l.ordering());
  if (i > j || j >= l.size())
    throw InputError("interval [" + std::to_string(i) + ", " +
                     std::to_string(j) + "] is invalid");
  if (i == j) return l;
  const Ordering& ord = l.ordering();
  std::vector<VertexId> seq;
  if (which == Endpoint::kLeft) {
    const auto [out, in] = CountInInterval(t, ord, ord[i], i + 1, j);
    if (out != in)
      throw PreconditionError(
          "moving x_i past x_j needs |N+| == |N-| inside the interval, got " +
          std::to_string(out) + " vs " + std::to_string(in));
    seq = MoveWithin(ord.sequence(), i, j);
  } else {
    const auto [out, in] = CountInInterval(t, ord, ord[j], i, j - 1);
    if (out != in)
      throw PreconditionError(
          "moving x_j before x_i needs |N+| == |N-| inside the interval, got " +
          std::to_string(out) + " vs " + std::to_string(in));
    seq = MoveWithin(ord.sequence(), j, i);
  }
  return MedianOrder::Certify(t, Ordering(std::move(seq), t.size()), l.value());
}

ReversedTournament reverse_arc_keeps_order(const OrientedGraph& t,
                                           const MedianOrder& l, Arc arc,
                                           const SolverOptions& opts) {
  RequireSameSize(t, l.ordering());
  check_vertex(t, arc.from);
  check_vertex(t, arc.to);
  if (!t.has_arc(arc.from, arc.to))
    throw PreconditionError("arc " + std::to_string(arc.from) + "->" +
                            std::to_string(arc.to) + " is not in the tournament");
  if (l.ordering().position(arc.from) < l.ordering().position(arc.to))
    throw PreconditionError("arc " + std::to_string(arc.from) + "->" +
                            std::to_string(arc.to) +
                            " is forward in the ordering");
  OrientedGraph reversed = t.with_arc_reversed(arc.from, arc.to);
  // One more forward arc than before; any better ordering of the new
  // tournament would have beaten `l` in the old one.
  std::int64_t optimum = l.value() + 1;
  if (reversed.size() <= std::min(opts.exact_limit, kMaxExactLimit))
    optimum = median_value(reversed, opts);
  MedianOrder order = MedianOrder::Certify(reversed, l.ordering(), optimum);
  return {std::move(reversed), std::move(order)};
}

ModulePartition::ModulePartition(std::vector<std::vector<VertexId>> blocks,
                                 std::size_t n)
    : blocks_(std::move(blocks)), block_of_(n, blocks_.size()) {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].empty()) throw InputError("partition has an empty block");
    for (VertexId v : blocks_[b]) {
      if (v >= n)
        throw InputError("partition names vertex " + std::to_string(v) +
                         " outside [0, " + std::to_string(n) + ")");
      if (block_of_[v] != blocks_.size())
        throw InputError("vertex " + std::to_string(v) +
                         " appears in two blocks");
      block_of_[v] = b;
    }
  }
  for (VertexId v = 0; v < n; ++v)
    if (block_of_[v] == blocks_.size())
      throw InputError("vertex " + std::to_string(v) + " is in no block");
}

ModulePartition ModulePartition::Singletons(std::size_t n) {
  std::vector<std::vector<VertexId>> blocks;
  for (VertexId v = 0; v < n; ++v) blocks.push_back({v});
  return ModulePartition(std::move(blocks), n);
}

ModulePartition ModulePartition::Whole(std::size_t n) {
  std::vector<VertexId> all;
  for (VertexId v = 0; v < n; ++v) all.push_back(v);
  if (all.empty()) return ModulePartition({}, 0);
  return ModulePartition({all}, n);
}

VertexSet ModulePartition::block_set(std::size_t b) const {
  VertexSet s(universe());
  for (VertexId v : blocks_[b]) s.insert(v);
  return s;
}

void ModulePartition::check_modules(const OrientedGraph& g) const {
  if (g.size() != universe())
    throw InputError("partition covers " + std::to_string(universe()) +
                     " vertices, graph has " + std::to_string(g.size()));
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    if (!is_module(g, block_set(b)))
      throw InputError("block " +
                       format_sequence(blocks_[b], LabelTable()) +
                       " is not a module");
}

bool is_good_ordering(const ModulePartition& p, const Ordering& l) {
  std::vector<bool> closed(p.block_count(), false);
  for (std::size_t i = 0; i < l.size(); ++i) {
    const std::size_t b = p.block_of(l[i]);
    if (closed[b]) return false;
    if (i + 1 == l.size() || p.block_of(l[i + 1]) != b) closed[b] = true;
  }
  return true;
}

MedianOrder compact_module_fragment(const OrientedGraph& t,
                                    const MedianOrder& l,
                                    const ModulePartition& p, std::size_t i,
                                    std::size_t j, CompactSide side) {
  RequireSameSize(t, l.ordering());
  const Ordering& ord = l.ordering();
  if (!(i + 1 < j && j < ord.size()))
    throw PreconditionError("compaction needs positions i < j - 1, got " +
                            std::to_string(i) + " and " + std::to_string(j));
  const std::size_t b = p.block_of(ord[i]);
  if (p.block_of(ord[j]) != b)
    throw PreconditionError("x_i and x_j lie in different blocks");
  for (std::size_t k = i + 1; k < j; ++k)
    if (p.block_of(ord[k]) == b)
      throw PreconditionError("a vertex of the block lies between x_i and x_j");
  if (!is_module(t, p.block_set(b)))
    throw PreconditionError("the block of x_i is not a module");
  std::vector<VertexId> seq = side == CompactSide::kRight
                                  ? MoveWithin(ord.sequence(), i, j - 1)
                                  : MoveWithin(ord.sequence(), j, i + 1);
  return MedianOrder::Certify(t, Ordering(std::move(seq), t.size()), l.value());
}

MedianOrder good_median_order(const OrientedGraph& t, const ModulePartition& p,
                              const MedianOrder& l) {
  RequireSameSize(t, l.ordering());
  p.check_modules(t);
  MedianOrder current = l;
  for (;;) {
    // Leftmost gap between two consecutive members of one block.
    const Ordering& ord = current.ordering();
    std::vector<std::size_t> last_seen(p.block_count(), ord.size());
    std::size_t gap_i = ord.size();
    std::size_t gap_j = ord.size();
    for (std::size_t k = 0; k < ord.size(); ++k) {
      const std::size_t b = p.block_of(ord[k]);
      if (last_seen[b] != ord.size() && last_seen[b] + 1 < k) {
        gap_i = last_seen[b];
        gap_j = k;
        break;
      }
      last_seen[b] = k;
    }
    if (gap_i == ord.size()) return current;
    current = compact_module_fragment(t, current, p, gap_i, gap_j,
                                      CompactSide::kRight);
  }
}

MedianOrder sediment(const OrientedGraph& t, const ModulePartition& p,
                     const MedianOrder& l) {
  RequireSameSize(t, l.ordering());
  const Ordering& ord = l.ordering();
  if (!is_good_ordering(p, ord))
    throw PreconditionError("sedimentation needs a good median order; (" +
                            SequenceText(ord) +
                            ") splits a block of the partition");
  const VertexId feed = ord.feed();
  const VertexSet block = p.block_set(p.block_of(feed));
  const VertexSet second = second_out_neighborhood(t, feed);
  const std::size_t out_outside = (t.out(feed) - block).size();
  const std::size_t second_outside = (second - block).size();
  if (out_outside > second_outside)
    throw InvariantViolation(
        "feed vertex " + std::to_string(feed) + " has |N+ - I| = " +
            std::to_string(out_outside) + " > |N++ - I| = " +
            std::to_string(second_outside) + " in a median order",
        format_edge_list(t));
  if (out_outside < second_outside) return l;

  std::vector<VertexId> front;
  std::vector<VertexId> back;
  std::vector<VertexId> middle;
  for (VertexId v : ord.sequence()) {
    if (block.contains(v))
      middle.push_back(v);
    else if (t.has_arc(v, feed) && !second.contains(v))
      front.push_back(v);
    else
      back.push_back(v);
  }
  front.insert(front.end(), middle.begin(), middle.end());
  front.insert(front.end(), back.begin(), back.end());
  MedianOrder next =
      MedianOrder::Certify(t, Ordering(std::move(front), t.size()), l.value());
  if (!is_good_ordering(p, next.ordering()))
    throw InvariantViolation("sedimentation split a block: (" +
                                 SequenceText(next.ordering()) + ")",
                             format_edge_list(t));
  return next;
}

SedimentOutcome sediment_iterate(const OrientedGraph& t,
                                 const ModulePartition& p,
                                 const MedianOrder& l, std::size_t max_steps) {
  std::unordered_map<Ordering, std::size_t, OrderingHash> seen;
  SedimentOutcome outcome{SedimentOutcome::Kind::kStable, {l}, 0};
  seen.emplace(l.ordering(), 0);
  for (std::size_t step = 0; step < max_steps; ++step) {
    MedianOrder next = sediment(t, p, outcome.history.back());
    if (next == outcome.history.back()) return outcome;
    if (auto it = seen.find(next.ordering()); it != seen.end()) {
      outcome.kind = SedimentOutcome::Kind::kPeriodic;
      outcome.period_start = it->second;
      return outcome;
    }
    seen.emplace(next.ordering(), outcome.history.size());
    outcome.history.push_back(std::move(next));
  }
  // One more application decides whether the last ordering is a fixed point.
  if (sediment(t, p, outcome.history.back()) == outcome.history.back())
    return outcome;
  std::string history;
  for (const MedianOrder& m : outcome.history)
    history += "\n  " + SequenceText(m.ordering());
  throw ResourceError("sedimentation undecided after " +
                      std::to_string(max_steps) + " steps; history:" + history);
}

FeedReport feed_vertex_property(const OrientedGraph& t, const MedianOrder& l,
                                const ModulePartition& p) {
  RequireSameSize(t, l.ordering());
  p.check_modules(t);
  const VertexId feed = l.feed();
  FeedReport report{feed, t.out_degree(feed),
                    second_out_neighborhood(t, feed).size(), {}, {}, {}};
  if (report.out_size > report.second_size)
    throw InvariantViolation("feed vertex " + std::to_string(feed) +
                                 " has |N+| > |N++| in a median order",
                             format_edge_list(t));
  const std::size_t b = p.block_of(feed);
  const VertexSet block = p.block_set(b);
  report.block = p.block(b);
  for (VertexId v : report.block) {
    const std::size_t out = (t.out(v) - block).size();
    const std::size_t second = (second_out_neighborhood(t, v) - block).size();
    report.block_out_outside.push_back(out);
    report.block_second_outside.push_back(second);
    if (out > second)
      throw InvariantViolation("vertex " + std::to_string(v) +
                                   " of the feed block has |N+ - I| > |N++ - I|",
                               format_edge_list(t));
  }
  return report;
}

std::string format_sediment_outcome(const SedimentOutcome& outcome) {
  std::ostringstream out;
  out << "outcome=" << (outcome.stable() ? "stable" : "periodic") << '\n';
  if (outcome.stable())
    out << "steps=" << outcome.steps() << '\n';
  else
    out << "period_start=" << outcome.period_start << '\n'
        << "period_length=" << outcome.history.size() - outcome.period_start
        << '\n';
  for (std::size_t q = 0; q < outcome.history.size(); ++q)
    out << "step=" << q << " feed=" << outcome.history[q].feed()
        << " order=" << SequenceText(outcome.history[q].ordering()) << '\n';
  out << "value=" << outcome.history.front().value() << '\n';
  return out.str();
}

}  // namespace snc
