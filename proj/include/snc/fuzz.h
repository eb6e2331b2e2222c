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


// Property fuzzing over generated instances. Each trial draws one instance
// and runs every registered property that applies to it; failures are
// shrunk by greedy vertex and arc deletion.

#ifndef SNC_FUZZ_H_
#define SNC_FUZZ_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "snc/generators.h"
#include "snc/witness.h"

namespace snc {

inline constexpr std::uint64_t kDefaultSeed = 20260101;

struct FuzzConfig {
  // Assigned to trials round-robin by trial index.
  std::vector<InstanceClass> classes = {InstanceClass::kTournamentMinusMatching};
  std::size_t n_min = 4;
  std::size_t n_max = 9;
  std::size_t trials = 100;
  std::uint64_t master_seed = kDefaultSeed;
  std::size_t jobs = 1;
  bool shrink = true;
  WitnessOptions witness;
};

struct FuzzViolation {
  std::size_t trial;
  std::uint64_t seed;
  InstanceClass cls;
  std::string property;
  std::string detail;
  // Set for the open-conjecture probes; these are never treated as bugs.
  bool potential_refutation;
  // Edge lists; `partition` is empty outside the degenerate class.
  std::string instance;
  std::string partition;
  std::string shrunk;
};

struct FuzzReport {
  std::size_t trials_run = 0;
  std::vector<FuzzViolation> violations;
  // Proof-path tag -> number of pipeline runs that ended there.
  std::map<std::string, std::size_t> branch_coverage;
  // Property name -> number of instances it applied to.
  std::map<std::string, std::size_t> property_checks;

  bool ok() const { return violations.empty(); }
  bool potential_refutation() const;
};

// Throws InputError for an empty class list, n_min > n_max, or sizes the
// classes cannot produce.
void validate_fuzz_config(const FuzzConfig& config);

FuzzReport fuzz(const FuzzConfig& config);

struct PropertyInfo {
  std::string name;
  bool conjecture;
};
const std::vector<PropertyInfo>& fuzz_properties();

// Runs one named property on one instance; nullopt when it holds or does not
// apply. Throws InputError for an unknown name.
std::optional<std::string> check_property(
    const std::string& name, const OrientedGraph& g,
    const std::optional<PartitionSpec>& partition,
    const WitnessOptions& opts = {});

using InstancePredicate = std::function<bool(
    const OrientedGraph&, const std::optional<PartitionSpec>&)>;

// Greedy vertex then arc deletion, keeping each deletion after which
// `still_fails` holds; stops when no single deletion qualifies.
OrientedGraph shrink_instance(OrientedGraph g, std::optional<PartitionSpec> partition,
                              const InstancePredicate& still_fails);

// Line-oriented records: one `trials=` header, `coverage`/`checked` lines,
// then per violation a `violation` line followed by its edge lists.
std::string format_fuzz_report(const FuzzReport& report);

}  // namespace snc

#endif  // SNC_FUZZ_H_
