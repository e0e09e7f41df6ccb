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

#ifndef PARLAB_BENCH_CONFIG_H_
#define PARLAB_BENCH_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "parlab/core/objective.h"
#include "parlab/smoothing/plan.h"

namespace parlab {

enum class Mode { kSolve, kGame, kBench, kVerify };
const char* ModeName(Mode mode);

struct InstanceSpec {
  // distance | nemirovski | shielded | linear | quadratic
  std::string kind = "distance";
  std::size_t d = 20;
  std::size_t N = 4;
  double gamma = 0.0;        // nemirovski
  double anchor_norm = 0.5;  // distance, quadratic: norm of the minimizer
  std::optional<double> C;   // shielded; default from Q = 100, rho = 0.1
  double delta_wall = 0.25;  // shielded
  std::optional<std::uint64_t> seed;  // defaults to the top-level seed
};

struct SolverSpec {
  // highly-parallel | subgradient | drs
  std::string method = "highly-parallel";
  double eps = 0.1;
  double L = 1.0;
  double R = 1.0;
  double nu = 0.1;
  SmoothingConstants constants = DefaultSolverConstants();
  std::optional<std::size_t> drs_batch;

  static SmoothingConstants DefaultSolverConstants();
};

struct GameSpec {
  std::size_t d = 500;
  std::size_t N = 5;
  std::size_t Q = 100;
  double rho = 0.1;
  // random-ball | subgradient-descent | coordinate-probe | external
  std::string strategy = "random-ball";
  nlohmann::json strategy_options = nlohmann::json::object();
  std::optional<double> C;
  std::optional<double> fallback_delta = 0.25;
  std::size_t games = 1;  // game i uses seed + i
  bool write_transcripts = false;  // always written when games == 1
};

struct SweepSpec {
  std::vector<std::string> methods = {"subgradient", "drs", "highly-parallel"};
  std::vector<std::size_t> d_grid = {400};
  std::vector<double> eps_grid = {0.2, 0.1, 0.05};
  std::vector<std::uint64_t> seeds;  // defaults to {seed}
};

struct VerifySpec {
  std::string scope = "all";
  std::optional<std::string> fault;  // "chi" corrupts the cutoff function
};

struct OutputSpec {
  std::string report = "report.json";
  std::string trace = "trace.csv";
  std::string framework_trace = "framework.csv";
  std::string plan = "plan.json";
  std::string transcript = "transcript.jsonl";
  std::string games = "games.csv";
  std::string table = "sweep.csv";
  std::string checks = "verify.csv";
};

struct ExperimentConfig {
  Mode mode = Mode::kSolve;
  std::uint64_t seed = 0;
  InstanceSpec instance;
  SolverSpec solver;
  GameSpec game;
  SweepSpec sweep;
  VerifySpec verify;
  OutputSpec outputs;
};

// Validates and parses a config. Unknown keys, wrong types and a missing
// seed raise SchemaError naming the key path, e.g. "config.solver.eps".
ExperimentConfig ParseConfig(const nlohmann::json& j);
ExperimentConfig LoadConfig(const std::filesystem::path& path);

// Fully resolved config; ParseConfig(ConfigToJson(c)) reproduces c.
nlohmann::json ConfigToJson(const ExperimentConfig& config);

// The objective described by `spec`, with `seed` replacing spec.seed when
// the latter is unset.
std::shared_ptr<const Objective> MakeObjective(const InstanceSpec& spec,
                                               std::uint64_t seed);

}  // namespace parlab

#endif  // PARLAB_BENCH_CONFIG_H_
