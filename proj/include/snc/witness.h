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


// End-to-end witness pipelines. Each returns vertices with a large second
// neighbourhood, re-checked by the matrix oracle before they are returned.

#ifndef SNC_WITNESS_H_
#define SNC_WITNESS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "snc/graph.h"
#include "snc/io.h"
#include "snc/median_order.h"

namespace snc {

enum class ProofPath {
  kSink,
  kMainPrime,
  kMainBlock,
  kFinalPeriodic,
  kFinalStable,
  kBruteForce,
};

// "sink", "mainthm-prime", "mainthm-block", "finalthm-periodic",
// "finalthm-stable", "brute-force-fallback".
std::string_view proof_path_name(ProofPath p);

struct WitnessReport {
  VertexId vertex;
  // Sizes of N+ and N++ in the input graph.
  std::size_t out_size;
  std::size_t second_size;
  bool verified;
  ProofPath proof_path;
  // Human-readable steps; vertex ids are those of the input graph.
  std::vector<std::string> trace;
};

struct WitnessOptions {
  SolverOptions solver;
  std::size_t free_choice_limit = 16;
  std::size_t sediment_steps = 10000;
};

// Tournament missing a matching: completes with the all-zero safe
// completion, takes the feed vertex d of the exact median order and returns
// every vertex of I(d).
std::vector<WitnessReport> witness_matching(const OrientedGraph& g,
                                            const WitnessOptions& opts = {});

// H - z must be a tournament missing a matching. Without `center`, H must be
// missing a matching plus a star and z is canonical_star_center(H). The
// result is a vertex other than z, large in both H - z and H, unless H has a
// sink, which is returned instead.
WitnessReport witness_matching_plus_star(const OrientedGraph& h,
                                         std::optional<VertexId> center = {},
                                         const WitnessOptions& opts = {});

// Two distinct witnesses of a sinkless graph missing a matching.
std::pair<WitnessReport, WitnessReport> two_witnesses_matching(
    const OrientedGraph& h, const WitnessOptions& opts = {});

// First witness by vertex index once (A, B) is validated. Throws
// CounterexampleFound if there is none.
WitnessReport witness_degenerate(const OrientedGraph& g, const VertexSet& a_set,
                                 const VertexSet& b_set);

// One summary line, followed by the trace when `verbose`.
std::string format_witness(const WitnessReport& r, const LabelTable& labels,
                           bool verbose);

}  // namespace snc

#endif  // SNC_WITNESS_H_
