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

#ifndef SNC_ERRORS_H_
#define SNC_ERRORS_H_

#include <stdexcept>
#include <string>

namespace snc {

// Base of every error raised by the library. The CLI maps each subclass to a
// distinct exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad file, out-of-range vertex, loop/digon, wrong missing
// structure for the requested analysis.
class InputError : public Error {
 public:
  using Error::Error;
};

// A caller-side contract of a transformation does not hold (e.g. the arc to
// reverse is already forward). Reported like an input error.
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

// The instance is valid but exceeds a configured exact-computation limit.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

// An iteration budget ran out before a conclusive outcome.
class ResourceError : public CapabilityError {
 public:
  using CapabilityError::CapabilityError;
};

// A proved structural fact failed to hold on a concrete instance. Always a
// bug in this library (or in its oracle); carries the instance when known.
class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& what,
                              std::string instance = {})
      : Error(what), instance_(std::move(instance)) {}

  const std::string& instance() const { return instance_; }

 private:
  std::string instance_;
};

// A search guaranteed to succeed by a theorem came back empty.
class CounterexampleFound : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

}  // namespace snc

#endif  // SNC_ERRORS_H_
