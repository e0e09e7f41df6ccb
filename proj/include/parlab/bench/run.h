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

#ifndef PARLAB_BENCH_RUN_H_
#define PARLAB_BENCH_RUN_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>

#include "json.hpp"
#include "parlab/bench/config.h"
#include "parlab/smoothing/minimize.h"

namespace parlab {

struct RunOptions {
  std::filesystem::path out_dir = ".";
  std::size_t jobs = 1;
};

// Runs one solver on the configured instance. Unconstrained methods see the
// instance plus an exact ball penalty when its minimizer is not interior.
SolverResult SolveInstance(const InstanceSpec& instance,
                           const SolverSpec& solver, std::uint64_t seed);

// Executes the config, writes every artifact under options.out_dir and
// returns the report written to outputs.report. The report has keys mode,
// seed, config (resolved), metrics, ledger, artifacts and timing; everything
// except timing is reproducible bit for bit.
nlohmann::json RunConfig(const ExperimentConfig& config,
                         const RunOptions& options);

// Reads a game transcript and re-runs the win check, consistency replay and
// certificate.
nlohmann::json ReplayTranscriptFile(const std::filesystem::path& path);

}  // namespace parlab

#endif  // PARLAB_BENCH_RUN_H_
