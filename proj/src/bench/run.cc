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

#include "parlab/bench/run.h"

#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include "parlab/accel/trace_csv.h"
#include "parlab/bench/sweep.h"
#include "parlab/bench/verify.h"
#include "parlab/core/errors.h"
#include "parlab/game/strategies.h"
#include "parlab/game/transcript.h"

namespace parlab {
namespace {

using nlohmann::json;

std::ofstream OpenOutput(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

void WriteJson(const std::filesystem::path& path, const json& j) {
  std::ofstream out = OpenOutput(path);
  out << j.dump(2) << '\n';
}

json NullableDouble(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

bool NeedsBallPenalty(const InstanceSpec& instance) {
  return instance.kind == "nemirovski" || instance.kind == "shielded" ||
         instance.kind == "linear";
}

json RunSolve(const ExperimentConfig& c, const std::filesystem::path& dir,
              json& artifacts, json& ledger) {
  const SolverResult r = SolveInstance(c.instance, c.solver, c.seed);
  {
    std::ofstream out = OpenOutput(dir / c.outputs.trace);
    WriteSolverTraceCsv(out, r.trace);
    artifacts.push_back(c.outputs.trace);
  }
  WriteJson(dir / c.outputs.plan, r.trace.plan);
  artifacts.push_back(c.outputs.plan);
  if (r.trace.framework) {
    std::ofstream out = OpenOutput(dir / c.outputs.framework_trace);
    WriteFrameworkTraceCsv(out, *r.trace.framework);
    artifacts.push_back(c.outputs.framework_trace);
  }
  ledger = {{"depth", r.trace.depth}, {"work", r.trace.work}};
  return {{"method", r.trace.method},
          {"value", r.value},
          {"gap", NullableDouble(r.gap)},
          {"gap_target", c.solver.eps},
          {"within_target", r.gap ? json(*r.gap <= c.solver.eps) : json(nullptr)},
          {"stop_reason", r.trace.stop_reason},
          {"outer_iterations", r.trace.records.size()},
          {"diagnostics", r.trace.diagnostics}};
}

json RunGames(const ExperimentConfig& c, const std::filesystem::path& dir,
              json& artifacts, json& ledger) {
  const GameSpec& g = c.game;
  GameConfig gc;
  gc.d = g.d;
  gc.N = g.N;
  gc.Q = g.Q;
  gc.rho = g.rho;
  gc.options.C = g.C;
  gc.options.fallback_delta = g.fallback_delta;

  std::size_t wins = 0;
  std::uint64_t depth = 0, work = 0;
  double worst_deviation = 0.0;
  double min_certificate = std::numeric_limits<double>::infinity();
  json params;
  json single;
  std::ofstream table;
  if (g.games > 1) {
    table = OpenOutput(dir / c.outputs.games);
    table << "game,seed,won,replay_deviation,certificate,depth,work,"
             "precondition_violations\n";
    table.precision(17);
    artifacts.push_back(c.outputs.games);
  }
  for (std::size_t i = 0; i < g.games; ++i) {
    gc.seed = c.seed + i;
    const auto strategy = MakeStrategy(g.strategy, gc.seed, g.strategy_options);
    const GameRun run = RunGame(*strategy, gc);
    const GameReport& rep = run.report;
    if (i == 0) params = rep.ToJson()["params"];
    depth += rep.ledger.depth;
    work += rep.ledger.work;
    if (rep.won) {
      ++wins;
      worst_deviation = std::max(worst_deviation, *rep.replay_deviation);
      min_certificate = std::min(min_certificate, *rep.certificate);
    }
    if (g.games == 1 || g.write_transcripts) {
      std::string name = c.outputs.transcript;
      if (g.games > 1) {
        const auto stem = std::filesystem::path(name).stem().string();
        name = stem + "_" + std::to_string(i) + ".jsonl";
      }
      std::ofstream out = OpenOutput(dir / name);
      WriteTranscriptJsonl(out, run.transcript);
      artifacts.push_back(name);
    }
    if (g.games == 1) {
      single = rep.ToJson();
    } else {
      table << i << ',' << gc.seed << ',' << (rep.won ? 1 : 0) << ',';
      if (rep.replay_deviation) table << *rep.replay_deviation;
      table << ',';
      if (rep.certificate) table << *rep.certificate;
      table << ',' << rep.ledger.depth << ',' << rep.ledger.work << ','
            << rep.precondition_violations << '\n';
    }
  }
  ledger = {{"depth", depth}, {"work", work}};
  if (g.games == 1) {
    single["strategy"] = g.strategy;
    return single;
  }
  return {{"strategy", g.strategy},
          {"games", g.games},
          {"wins", wins},
          {"win_rate", static_cast<double>(wins) / static_cast<double>(g.games)},
          {"max_replay_deviation", wins ? json(worst_deviation) : json(nullptr)},
          {"min_certificate", wins ? json(min_certificate) : json(nullptr)},
          {"certificate_target", 0.25 / std::sqrt(static_cast<double>(g.N))},
          {"params", params}};
}

json RunBench(const ExperimentConfig& c, const std::filesystem::path& dir,
              std::size_t jobs, json& artifacts, json& ledger) {
  const std::vector<SweepCell> cells = ExpandSweep(c.sweep, c.seed);
  const SweepResult result = RunSweep(cells, c.instance, c.solver, jobs);
  std::ofstream out = OpenOutput(dir / c.outputs.table);
  WriteSweepCsv(out, result);
  artifacts.push_back(c.outputs.table);
  std::uint64_t depth = 0, work = 0;
  for (const SweepRow& row : result.rows) {
    depth += row.depth;
    work += row.work;
  }
  ledger = {{"depth", depth}, {"work", work}};
  return {{"cells", result.rows.size()},
          {"failures", result.failures},
          {"slopes", SweepSlopesJson(result)}};
}

json RunVerify(const ExperimentConfig& c, const std::filesystem::path& dir,
               json& artifacts, json& ledger) {
  VerifyOptions options;
  options.scope = c.verify.scope;
  options.fault = c.verify.fault;
  options.seed = c.seed;
  const std::vector<InvariantResult> results = VerifySuite(options);
  std::ofstream out = OpenOutput(dir / c.outputs.checks);
  WriteVerifyCsv(out, results);
  artifacts.push_back(c.outputs.checks);
  ledger = json::object();
  std::size_t failed = 0;
  json first_failure = nullptr;
  for (const InvariantResult& r : results) {
    if (r.passed) continue;
    if (failed++ == 0) {
      first_failure = {{"module", r.module},
                       {"invariant", r.invariant},
                       {"detail", r.detail}};
    }
  }
  return {{"scope", c.verify.scope},
          {"checks", results.size()},
          {"failed", failed},
          {"passed", failed == 0},
          {"first_failure", first_failure}};
}

}  // namespace

SolverResult SolveInstance(const InstanceSpec& instance,
                           const SolverSpec& solver, std::uint64_t seed) {
  std::shared_ptr<const Objective> f = MakeObjective(instance, seed);
  const std::uint64_t solver_seed = MixKey(seed, 0x736f6c76ULL);
  if (solver.method == "subgradient") {
    return BaselineSubgradient(f, solver.R, solver.L, solver.eps);
  }
  if (NeedsBallPenalty(instance)) {
    f = std::make_shared<BallPenaltyObjective>(f, solver.R, solver.L);
  }
  if (solver.method == "drs") {
    DrsOptions options;
    options.batch = solver.drs_batch;
    options.r_factor = solver.constants.r_factor;
    return BaselineDrs(f, instance.d, solver.L, solver.R, solver.eps,
                       solver_seed, options);
  }
  if (solver.method == "highly-parallel") {
    return HighlyParallelMinimize(f, instance.d, solver.L, solver.R,
                                  solver.eps, solver.nu, solver_seed,
                                  solver.constants);
  }
  throw SchemaError("config.solver.method: unknown method '" + solver.method +
                    "'");
}

json RunConfig(const ExperimentConfig& config, const RunOptions& options) {
  std::filesystem::create_directories(options.out_dir);
  const auto t0 = std::chrono::steady_clock::now();
  json artifacts = json::array();
  json ledger = json::object();
  json metrics;
  switch (config.mode) {
    case Mode::kSolve:
      metrics = RunSolve(config, options.out_dir, artifacts, ledger);
      break;
    case Mode::kGame:
      metrics = RunGames(config, options.out_dir, artifacts, ledger);
      break;
    case Mode::kBench:
      metrics = RunBench(config, options.out_dir, options.jobs, artifacts, ledger);
      break;
    case Mode::kVerify:
      metrics = RunVerify(config, options.out_dir, artifacts, ledger);
      break;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  artifacts.push_back(config.outputs.report);
  json report = {{"mode", ModeName(config.mode)},
                 {"seed", config.seed},
                 {"config", ConfigToJson(config)},
                 {"metrics", metrics},
                 {"ledger", ledger},
                 {"artifacts", artifacts},
                 {"timing", {{"wall_clock_seconds", seconds}}}};
  WriteJson(options.out_dir / config.outputs.report, report);
  return report;
}

json ReplayTranscriptFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read transcript " + path.string());
  const GameTranscript transcript = ReadTranscriptJsonl(in);
  std::uint64_t work = 0;
  for (const RoundRecord& r : transcript.rounds) work += r.queries.size();
  LedgerSnapshot ledger;
  ledger.depth = transcript.rounds.size();
  ledger.work = work;
  json out = AnalyzeTranscript(transcript, ledger).ToJson();
  out["transcript"] = path.string();
  return out;
}

}  // namespace parlab
