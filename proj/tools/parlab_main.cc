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

#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "parlab/bench/config.h"
#include "parlab/bench/run.h"
#include "parlab/core/errors.h"

namespace {

struct CommonFlags {
  std::string config;
  std::string out = "out";
  std::optional<std::uint64_t> seed;
  std::size_t jobs = 1;
};

void AddCommonFlags(CLI::App* app, CommonFlags& flags) {
  app->add_option("--config", flags.config, "Experiment config (JSON)");
  app->add_option("--out", flags.out, "Output directory")->capture_default_str();
  app->add_option("--seed", flags.seed, "Overrides the config seed");
  app->add_option("--jobs", flags.jobs, "Concurrent sweep cells")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

int RunMode(parlab::Mode mode, const CommonFlags& flags) {
  parlab::ExperimentConfig config;
  if (!flags.config.empty()) {
    config = parlab::LoadConfig(flags.config);
  } else if (!flags.seed) {
    throw parlab::SchemaError("config.seed: required (pass --config or --seed)");
  }
  config.mode = mode;
  if (flags.seed) config.seed = *flags.seed;
  parlab::RunOptions options;
  options.out_dir = flags.out;
  options.jobs = flags.jobs;
  const nlohmann::json report = parlab::RunConfig(config, options);
  std::cout << report["metrics"].dump(2) << '\n';
  if (mode == parlab::Mode::kVerify && !report["metrics"]["passed"].get<bool>()) {
    const auto& first = report["metrics"]["first_failure"];
    std::cerr << "verify: failed invariant '" << first["invariant"].get<std::string>()
              << "' in " << first["module"].get<std::string>() << ": "
              << first["detail"].get<std::string>() << '\n';
    return parlab::kExitFailure;
  }
  return parlab::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parallel-oracle convex optimization laboratory"};
  app.require_subcommand(1);

  CommonFlags flags;
  struct Sub {
    const char* name;
    const char* help;
    parlab::Mode mode;
  };
  const Sub subs[] = {
      {"solve", "Run one solver on one instance", parlab::Mode::kSolve},
      {"game", "Play the resampling game", parlab::Mode::kGame},
      {"bench", "Sweep solvers over d and eps grids", parlab::Mode::kBench},
      {"verify", "Run the property checks", parlab::Mode::kVerify},
  };
  std::optional<parlab::Mode> chosen;
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    AddCommonFlags(sub, flags);
    sub->callback([&chosen, mode = s.mode] { chosen = mode; });
  }

  std::string transcript;
  std::string replay_out;
  CLI::App* replay = app.add_subcommand(
      "replay", "Re-check a game transcript (JSONL)");
  replay->add_option("transcript", transcript, "Transcript file")->required();
  replay->add_option("--out", replay_out, "Write the result JSON here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (chosen) return RunMode(*chosen, flags);
    const nlohmann::json result = parlab::ReplayTranscriptFile(transcript);
    if (!replay_out.empty()) {
      std::filesystem::create_directories(
          std::filesystem::path(replay_out).parent_path().empty()
              ? "."
              : std::filesystem::path(replay_out).parent_path());
      std::ofstream(replay_out) << result.dump(2) << '\n';
    }
    std::cout << result.dump(2) << '\n';
    if (!result["won"].get<bool>()) {
      std::cerr << "replay: transcript is lost, consistency replay rejected\n";
      return parlab::kExitContract;
    }
    return parlab::kExitOk;
  } catch (...) {
    const int code = parlab::ExitCodeForCurrentException();
    try {
      throw;
    } catch (const std::exception& e) {
      std::cerr << "parlab: " << e.what() << '\n';
    } catch (...) {
      std::cerr << "parlab: unknown error\n";
    }
    return code;
  }
}
