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

#include "parlab/game/strategies.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "parlab/core/errors.h"
#include "parlab/core/linalg.h"
#include "parlab/instances/lowerbound_params.h"

namespace parlab {

RandomBallStrategy::RandomBallStrategy(std::uint64_t seed)
    : rng_(seed, MixKey(0x706c6179ULL, 1)) {}

std::vector<Vec> RandomBallStrategy::Propose(
    std::size_t, std::size_t Q, std::size_t d,
    const std::vector<RoundRecord>&) {
  std::vector<Vec> out;
  out.reserve(Q);
  for (std::size_t i = 0; i < Q; ++i) out.push_back(rng_.BallPoint(d, 1.0));
  return out;
}

SubgradientDescentStrategy::SubgradientDescentStrategy(std::uint64_t seed,
                                                       double initial_step,
                                                       double step_ratio)
    : rng_(seed, MixKey(0x706c6179ULL, 2)),
      initial_step_(initial_step),
      step_ratio_(step_ratio) {
  if (!(initial_step > 0.0) || !(step_ratio > 0.0 && step_ratio < 1.0)) {
    throw std::invalid_argument("subgradient steps must be positive, ratio < 1");
  }
}

std::vector<Vec> SubgradientDescentStrategy::Propose(
    std::size_t, std::size_t Q, std::size_t d,
    const std::vector<RoundRecord>& history) {
  const Vec* best = nullptr;
  const Vec* best_grad = nullptr;
  double best_value = std::numeric_limits<double>::infinity();
  for (const RoundRecord& r : history) {
    for (std::size_t i = 0; i < r.queries.size(); ++i) {
      if (r.values[i] < best_value) {
        best_value = r.values[i];
        best = &r.queries[i];
        best_grad = &r.gradients[i];
      }
    }
  }
  const Vec origin = Zeros(d);
  const Vec& center = best ? *best : origin;
  std::vector<Vec> out{center};
  const double gnorm = best_grad ? Norm(*best_grad) : 0.0;
  double step = initial_step_;
  for (std::size_t k = 1; k < Q; ++k, step *= step_ratio_) {
    Vec x = gnorm > 0.0 ? Combine(1.0, center, -step / gnorm, *best_grad)
                        : Combine(1.0, center, step, rng_.UnitVector(d));
    ProjectBall(x, 1.0);
    out.push_back(std::move(x));
  }
  return out;
}

CoordinateProbeStrategy::CoordinateProbeStrategy(double scale) : scale_(scale) {
  if (!(scale > 0.0 && scale <= 1.0)) {
    throw std::invalid_argument("coordinate probe scale must lie in (0, 1]");
  }
}

std::vector<Vec> CoordinateProbeStrategy::Propose(
    std::size_t, std::size_t Q, std::size_t d,
    const std::vector<RoundRecord>&) {
  std::vector<Vec> out;
  out.reserve(Q);
  for (std::size_t i = 0; i < Q; ++i) {
    Vec x = Zeros(d);
    x[next_coordinate_] = (i % 2 == 0) ? scale_ : -scale_;
    out.push_back(std::move(x));
    if (i % 2 == 1) next_coordinate_ = (next_coordinate_ + 1) % d;
  }
  if (Q % 2 == 1) next_coordinate_ = (next_coordinate_ + 1) % d;
  return out;
}

ExternalStrategy::ExternalStrategy(std::vector<std::vector<Vec>> rounds)
    : rounds_(std::move(rounds)) {}

ExternalStrategy::ExternalStrategy(Callback callback)
    : callback_(std::move(callback)) {}

std::vector<Vec> ExternalStrategy::Propose(
    std::size_t t, std::size_t, std::size_t,
    const std::vector<RoundRecord>& history) {
  if (callback_) return callback_(t, history);
  if (t > rounds_.size()) return {};
  return rounds_[t - 1];
}

std::unique_ptr<PlayerStrategy> MakeStrategy(const std::string& kind,
                                             std::uint64_t seed,
                                             const nlohmann::json& options) {
  const auto number = [&](const char* key, double fallback) {
    return options.is_object() && options.contains(key)
               ? options.at(key).get<double>()
               : fallback;
  };
  if (kind == "random-ball") return std::make_unique<RandomBallStrategy>(seed);
  if (kind == "subgradient-descent") {
    return std::make_unique<SubgradientDescentStrategy>(
        seed, number("initial_step", 0.5), number("step_ratio", 0.7));
  }
  if (kind == "coordinate-probe") {
    return std::make_unique<CoordinateProbeStrategy>(number("scale", 0.5));
  }
  if (kind == "external") {
    std::vector<std::vector<Vec>> rounds;
    if (options.is_object() && options.contains("rounds")) {
      rounds = options.at("rounds").get<std::vector<std::vector<Vec>>>();
    }
    return std::make_unique<ExternalStrategy>(std::move(rounds));
  }
  throw SchemaError("unknown strategy kind '" + kind + "'");
}

GameRun RunGame(PlayerStrategy& strategy, const GameConfig& config) {
  const LowerBoundParams params = DeriveLowerBoundParams(
      config.d, config.N, static_cast<double>(config.Q), config.rho,
      config.options);
  GameState state(params, config.seed, config.Q);
  while (!state.finished()) {
    const std::size_t t = state.next_round();
    const std::vector<Vec> queries = strategy.Propose(
        t, config.Q, config.d, state.transcript().rounds);
    state.Round(queries);
  }
  GameRun run;
  run.transcript = state.transcript();
  run.report = AnalyzeTranscript(run.transcript, state.ledger().Snapshot());
  return run;
}

}  // namespace parlab
