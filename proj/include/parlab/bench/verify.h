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

#ifndef PARLAB_BENCH_VERIFY_H_
#define PARLAB_BENCH_VERIFY_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace parlab {

struct InvariantResult {
  std::string module;
  std::string invariant;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  // "all" or one of VerifyScopes().
  std::string scope = "all";
  // "chi" replaces the cutoff function with a discontinuous one.
  std::optional<std::string> fault;
  std::uint64_t seed = 0;
};

const std::vector<std::string>& VerifyScopes();

// Runs the property checks of the selected modules. Throws SchemaError on an
// unknown scope or fault.
std::vector<InvariantResult> VerifySuite(const VerifyOptions& options);

inline constexpr const char* kVerifyHeader = "module,invariant,passed,detail";
void WriteVerifyCsv(std::ostream& os, const std::vector<InvariantResult>& r);

}  // namespace parlab

#endif  // PARLAB_BENCH_VERIFY_H_
