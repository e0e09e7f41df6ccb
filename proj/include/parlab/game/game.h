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

#ifndef PARLAB_GAME_GAME_H_
#define PARLAB_GAME_GAME_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "parlab/core/ledger.h"
#include "parlab/core/objective.h"
#include "parlab/instances/lowerbound_params.h"
#include "parlab/instances/shielded.h"

namespace parlab {

struct RoundRecord {
  std::size_t t = 0;  // 1-based
  std::vector<Vec> queries;
  std::vector<double> values;
  std::vector<Vec> gradients;
  std::vector<Branch> branches;
  // v_t^{(t)}, ..., v_t^{(N)}; the first entry is committed as v_t.
  std::vector<Vec> frame;
  std::string frame_digest;
  // Queries whose residual broke the cone condition; they were answered
  // with the full frame.
  std::vector<std::size_t> precondition_violations;
};

struct GameTranscript {
  LowerBoundParams params;
  std::uint64_t seed = 0;
  std::size_t Q = 0;
  std::vector<RoundRecord> rounds;
  std::vector<Vec> committed;  // v_1..v_N once the game is complete
};

// 64-bit FNV-1a digest of the frame's raw doubles, as 16 hex digits.
std::string FrameDigest(const std::vector<Vec>& frame);

// Adversary side of the game. Each round resamples the uncommitted part of
// the frame orthogonally to the committed vectors, commits its first vector,
// and answers the queries with the shielded function built from the current
// frame, using only the committed vectors in the wall.
class GameState {
 public:
  GameState(const LowerBoundParams& params, std::uint64_t seed, std::size_t Q);

  std::size_t next_round() const { return transcript_.rounds.size() + 1; }
  bool finished() const { return transcript_.rounds.size() == params_.N; }

  // Plays one round. Throws ContractViolation if the game is over or the
  // batch is too large or leaves the unit ball.
  std::vector<OracleAnswer> Round(std::span<const Vec> queries);

  const GameTranscript& transcript() const { return transcript_; }
  const DepthWorkLedger& ledger() const { return ledger_; }
  const std::vector<Vec>& committed() const { return committed_; }

 private:
  LowerBoundParams params_;
  std::uint64_t seed_;
  std::size_t Q_;
  std::vector<Vec> committed_;
  GameTranscript transcript_;
  DepthWorkLedger ledger_;
};

// Instance with the given vectors and the transcript's wall parameters.
ShieldedInstance GameInstance(const LowerBoundParams& params,
                              std::vector<Vec> vectors, std::uint64_t seed);

struct WinViolation {
  std::size_t t = 0;
  std::size_t query_index = 0;
  std::size_t s1 = 0;
  std::size_t s2 = 0;
};

struct WinCheck {
  bool won = true;
  std::optional<WinViolation> first_violation;
};

// For every round t, query x and frame vector v_{s1}^{(s2)} with s2 >= s1 >= t:
// |<x, v>| < cone_threshold * ||P x||, P the projection off v_1..v_{t-1}.
// Queries with P x = 0 reveal nothing new and count as satisfying it.
WinCheck WinEventCheck(const GameTranscript& transcript);

// Largest absolute difference between the recorded answers and the final
// function over values and gradient coordinates. Each query is re-evaluated
// with the known count its round used (t - 1, or N after a recorded
// precondition violation). Throws ContractViolation on
// a lost transcript.
double ConsistencyReplay(const GameTranscript& transcript);

// min over queries of f_final(x) + 1/sqrt(N). Throws on a lost transcript.
double GapCertificate(const GameTranscript& transcript);

struct GameReport {
  bool won = false;
  std::optional<WinViolation> first_violation;
  std::optional<double> replay_deviation;
  std::optional<double> certificate;
  double certificate_target = 0.0;  // 1 / (4 sqrt(N))
  LedgerSnapshot ledger;
  LowerBoundParams params;
  std::size_t precondition_violations = 0;
  nlohmann::json ToJson() const;
};

GameReport AnalyzeTranscript(const GameTranscript& transcript,
                             const LedgerSnapshot& ledger);

nlohmann::json LowerBoundParamsToJson(const LowerBoundParams& p);
LowerBoundParams LowerBoundParamsFromJson(const nlohmann::json& j);

}  // namespace parlab

#endif  // PARLAB_GAME_GAME_H_
