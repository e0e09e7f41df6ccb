// Copyright 2026 The Parlab Authors
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

#ifndef PARLAB_CORE_ERRORS_H_
#define PARLAB_CORE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace parlab {

// Malformed configuration, instance file or transcript.
class SchemaError : public std::invalid_argument {
 public:
  explicit SchemaError(const std::string& what) : std::invalid_argument(what) {}
};

// A precondition or postcondition of an oracle contract did not hold.
class ContractViolation : public std::runtime_error {
 public:
  explicit ContractViolation(const std::string& what)
      : std::runtime_error(what) {}
};

// An iteration, query or sample budget ran out.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Process exit codes used by the command line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitSchema = 2;
inline constexpr int kExitContract = 3;
inline constexpr int kExitBudget = 4;

// Maps the active exception to an exit code. Must be called inside a catch.
int ExitCodeForCurrentException();

}  // namespace parlab

#endif  // PARLAB_CORE_ERRORS_H_
