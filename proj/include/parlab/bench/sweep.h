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

#ifndef PARLAB_BENCH_SWEEP_H_
#define PARLAB_BENCH_SWEEP_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "parlab/bench/config.h"

namespace parlab {

struct SweepCell {
  std::string method;
  std::size_t d = 0;
  double eps = 0.0;
  std::uint64_t seed = 0;
  bool operator==(const SweepCell&) const = default;
};

struct SweepRow {
  SweepCell cell;
  std::string status = "ok";  // or the error message of a failed cell
  std::uint64_t depth = 0;
  std::uint64_t work = 0;
  double gap = 0.0;
  double seconds = 0.0;
};

struct SweepSlope {
  std::string method;
  std::size_t d = 0;
  std::optional<double> slope;  // unset with fewer than two usable eps values
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<SweepSlope> slopes;
  std::size_t failures = 0;
};

// Cartesian product of the grids in method, d, eps, seed order, with repeated
// cells dropped.
std::vector<SweepCell> ExpandSweep(const SweepSpec& spec,
                                   std::uint64_t default_seed);
std::vector<SweepCell> DeduplicateCells(const std::vector<SweepCell>& cells);

// Least-squares slope of log(y) against log(x).
double FitLogLogSlope(const std::vector<double>& x,
                      const std::vector<double>& y);

// Runs every cell on `instance` (with d taken from the cell) using `solver`
// (with eps taken from the cell). Up to `jobs` cells run concurrently; a
// failing cell is recorded and the sweep continues. Slopes fit depth against
// 1/eps per (method, d), using the geometric mean over seeds.
SweepResult RunSweep(const std::vector<SweepCell>& cells,
                     const InstanceSpec& instance, const SolverSpec& solver,
                     std::size_t jobs);

inline constexpr const char* kSweepHeader =
    "method,d,eps,seed,depth,work,gap,status";
void WriteSweepCsv(std::ostream& os, const SweepResult& result);
nlohmann::json SweepSlopesJson(const SweepResult& result);

}  // namespace parlab

#endif  // PARLAB_BENCH_SWEEP_H_
