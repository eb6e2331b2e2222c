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


// Command-line front end. `run_cli` is the whole program minus process
// plumbing, so tests can drive it in-process.

#ifndef SNC_CLI_H_
#define SNC_CLI_H_

#include <exception>
#include <iosfwd>
#include <span>
#include <string>

#include "snc/fuzz.h"

namespace snc {

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,
  kExitCapability = 2,
  kExitInvariant = 3,
  kExitRefutation = 4,
};

// Exit code for an error escaping a command.
int exit_code_for(const std::exception& e);

// kExitRefutation if any conjecture probe failed, kExitInvariant for other
// violations, kExitOk otherwise.
int fuzz_exit_code(const FuzzReport& report);

// `args` excludes the program name. `in` is read when the input path is "-".
int run_cli(std::span<const std::string> args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace snc

#endif  // SNC_CLI_H_
