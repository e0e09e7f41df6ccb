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

#ifndef PARLAB_GAME_STRATEGIES_H_
#define PARLAB_GAME_STRATEGIES_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "parlab/core/rng.h"
#include "parlab/game/game.h"

namespace parlab {

// Query side of the game. Propose is called once per round with the rounds
// played so far and must return at most Q points in the unit ball.
class PlayerStrategy {
 public:
  virtual ~PlayerStrategy() = default;
  virtual std::string kind() const = 0;
  virtual std::vector<Vec> Propose(std::size_t t, std::size_t Q, std::size_t d,
                                   const std::vector<RoundRecord>& history) = 0;
};

// Q independent uniform points in the unit ball.
class RandomBallStrategy final : public PlayerStrategy {
 public:
  explicit RandomBallStrategy(std::uint64_t seed);
  std::string kind() const override { return "random-ball"; }
  std::vector<Vec> Propose(std::size_t t, std::size_t Q, std::size_t d,
                           const std::vector<RoundRecord>& history) override;

 private:
  RngStream rng_;
};

// Moves to the best point answered so far, then queries it together with
// steps along its negative gradient on a geometric step grid. Where the
// gradient vanishes (and in round 1, from the origin) the steps go along
// random unit directions instead.
class SubgradientDescentStrategy final : public PlayerStrategy {
 public:
  explicit SubgradientDescentStrategy(std::uint64_t seed,
                                      double initial_step = 0.5,
                                      double step_ratio = 0.7);
  std::string kind() const override { return "subgradient-descent"; }
  std::vector<Vec> Propose(std::size_t t, std::size_t Q, std::size_t d,
                           const std::vector<RoundRecord>& history) override;

 private:
  RngStream rng_;
  double initial_step_;
  double step_ratio_;
};

// Signed coordinate directions +-scale e_j, cycling through coordinates.
class CoordinateProbeStrategy final : public PlayerStrategy {
 public:
  explicit CoordinateProbeStrategy(double scale = 0.5);
  std::string kind() const override { return "coordinate-probe"; }
  std::vector<Vec> Propose(std::size_t t, std::size_t Q, std::size_t d,
                           const std::vector<RoundRecord>& history) override;

 private:
  double scale_;
  std::size_t next_coordinate_ = 0;
};

// Queries supplied from outside, either as a fixed list per round or by a
// callback.
class ExternalStrategy final : public PlayerStrategy {
 public:
  using Callback = std::function<std::vector<Vec>(
      std::size_t t, const std::vector<RoundRecord>& history)>;
  explicit ExternalStrategy(std::vector<std::vector<Vec>> rounds);
  explicit ExternalStrategy(Callback callback);
  std::string kind() const override { return "external"; }
  std::vector<Vec> Propose(std::size_t t, std::size_t Q, std::size_t d,
                           const std::vector<RoundRecord>& history) override;

 private:
  std::vector<std::vector<Vec>> rounds_;
  Callback callback_;
};

// Builds a strategy from its kind name. `options` may carry "initial_step",
// "step_ratio", "scale" or "rounds" (external; arrays of points per round).
std::unique_ptr<PlayerStrategy> MakeStrategy(const std::string& kind,
                                             std::uint64_t seed,
                                             const nlohmann::json& options = {});

struct GameConfig {
  std::size_t d = 500;
  std::size_t N = 5;
  std::size_t Q = 100;
  double rho = 0.1;
  std::uint64_t seed = 0;
  LowerBoundOptions options;
};

struct GameRun {
  GameTranscript transcript;
  GameReport report;
};

// Derives the parameters, plays N rounds and analyzes the transcript.
GameRun RunGame(PlayerStrategy& strategy, const GameConfig& config);

}  // namespace parlab

#endif  // PARLAB_GAME_STRATEGIES_H_
