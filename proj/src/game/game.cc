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

#include "parlab/game/game.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <limits>
#include <string>

#include "parlab/core/errors.h"
#include "parlab/core/linalg.h"
#include "parlab/core/oracle.h"
#include "parlab/core/rng.h"
#include "parlab/instances/instance_json.h"

namespace parlab {
namespace {

constexpr std::uint64_t kFrameStreamLabel = 0x6672616d65ULL;  // "frame"
constexpr double kZeroResidual = 1e-12;

// Vectors of the round-t function: v_1..v_t followed by v_t^{(t+1)}..v_t^{(N)}.
std::vector<Vec> RoundVectors(const std::vector<Vec>& committed_before,
                              const std::vector<Vec>& frame) {
  std::vector<Vec> vectors = committed_before;
  vectors.insert(vectors.end(), frame.begin(), frame.end());
  return vectors;
}

std::vector<Vec> Prefix(const std::vector<Vec>& v, std::size_t count) {
  return std::vector<Vec>(v.begin(), v.begin() + count);
}

void RequireWon(const GameTranscript& transcript, const char* op) {
  const WinCheck check = WinEventCheck(transcript);
  if (!check.won) {
    const WinViolation& v = *check.first_violation;
    throw ContractViolation(std::string(op) +
                            ": transcript is lost (first violation at t=" +
                            std::to_string(v.t) + ", query " +
                            std::to_string(v.query_index) + ")");
  }
}

void RequireComplete(const GameTranscript& transcript) {
  if (transcript.rounds.size() != transcript.params.N ||
      transcript.committed.size() != transcript.params.N) {
    throw ContractViolation("game transcript is incomplete");
  }
}

}  // namespace

std::string FrameDigest(const std::vector<Vec>& frame) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const Vec& v : frame) {
    for (double x : v) {
      unsigned char bytes[sizeof(double)];
      std::memcpy(bytes, &x, sizeof(double));
      for (unsigned char b : bytes) {
        hash ^= b;
        hash *= 0x100000001b3ULL;
      }
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

ShieldedInstance GameInstance(const LowerBoundParams& params,
                              std::vector<Vec> vectors, std::uint64_t seed) {
  ShieldedInstance inst;
  inst.d = params.d;
  inst.C = params.C;
  inst.seed = seed;
  inst.wall.delta_wall = params.delta_wall;
  inst.wall.alpha_wall = params.alpha_wall;
  inst.wall.cone_threshold = params.cone_threshold;
  ValidateWallParams(inst.wall);
  inst.nemirovski.gamma = params.gamma;
  inst.nemirovski.vectors = std::move(vectors);
  return inst;
}

GameState::GameState(const LowerBoundParams& params, std::uint64_t seed,
                     std::size_t Q)
    : params_(params), seed_(seed), Q_(Q) {
  if (params.N == 0 || params.d < params.N) {
    throw std::invalid_argument("game needs 1 <= N <= d");
  }
  if (Q == 0) throw std::invalid_argument("game needs Q >= 1");
  transcript_.params = params;
  transcript_.seed = seed;
  transcript_.Q = Q;
}

std::vector<OracleAnswer> GameState::Round(std::span<const Vec> queries) {
  if (finished()) throw ContractViolation("game round exceeds N");
  ValidateBatch(queries, Q_, 1.0, params_.d);

  RoundRecord rec;
  rec.t = next_round();
  const std::size_t N = params_.N;
  RngStream rng(seed_, MixKey(kFrameStreamLabel, rec.t));
  rec.frame = OrthonormalComplementSample(committed_, N - rec.t + 1,
                                          params_.d, rng);
  rec.frame_digest = FrameDigest(rec.frame);

  const ShieldedInstance inst =
      GameInstance(params_, RoundVectors(committed_, rec.frame), seed_);
  const std::size_t known = rec.t - 1;
  std::vector<OracleAnswer> answers;
  answers.reserve(queries.size());
  for (std::size_t q = 0; q < queries.size(); ++q) {
    const Vec& x = queries[q];
    std::size_t use_known = known;
    if (!ReducedPreconditionHolds(inst, known, x)) {
      rec.precondition_violations.push_back(q);
      use_known = N;
    }
    ShieldedResult r = ShieldedEval(inst, use_known, x);
    rec.queries.push_back(x);
    rec.values.push_back(r.value);
    rec.gradients.push_back(r.gradient);
    rec.branches.push_back(r.branch);
    answers.push_back({r.value, std::move(r.gradient)});
  }
  ledger_.RecordBatch(queries.size());
  committed_.push_back(rec.frame.front());
  transcript_.rounds.push_back(std::move(rec));
  if (finished()) transcript_.committed = committed_;
  return answers;
}

WinCheck WinEventCheck(const GameTranscript& transcript) {
  RequireComplete(transcript);
  const std::size_t N = transcript.params.N;
  const double thr = transcript.params.cone_threshold;
  WinCheck out;
  for (std::size_t t = 1; t <= N; ++t) {
    const std::vector<Vec> known = Prefix(transcript.committed, t - 1);
    const RoundRecord& round = transcript.rounds[t - 1];
    for (std::size_t q = 0; q < round.queries.size(); ++q) {
      const Vec& x = round.queries[q];
      const double residual = Norm(ProjectComplement(known, x));
      if (residual <= kZeroResidual) continue;
      for (std::size_t s1 = t; s1 <= N; ++s1) {
        const std::vector<Vec>& frame = transcript.rounds[s1 - 1].frame;
        for (std::size_t s2 = s1; s2 <= N; ++s2) {
          if (!(std::abs(Dot(x, frame[s2 - s1])) < thr * residual)) {
            out.won = false;
            out.first_violation = WinViolation{t, q, s1, s2};
            return out;
          }
        }
      }
    }
  }
  return out;
}

double ConsistencyReplay(const GameTranscript& transcript) {
  RequireWon(transcript, "consistency replay");
  const ShieldedInstance final_inst = GameInstance(
      transcript.params, transcript.committed, transcript.seed);
  const std::size_t N = transcript.params.N;
  double worst = 0.0;
  for (const RoundRecord& round : transcript.rounds) {
    for (std::size_t q = 0; q < round.queries.size(); ++q) {
      // Same wall path as the round used, so only the resampled vectors differ.
      const bool violated =
          std::find(round.precondition_violations.begin(),
                    round.precondition_violations.end(),
                    q) != round.precondition_violations.end();
      const std::size_t known = violated ? N : round.t - 1;
      const ShieldedResult r = ShieldedEval(final_inst, known, round.queries[q]);
      worst = std::max(worst, std::abs(r.value - round.values[q]));
      const Vec& g = round.gradients[q];
      for (std::size_t i = 0; i < g.size(); ++i) {
        worst = std::max(worst, std::abs(r.gradient[i] - g[i]));
      }
    }
  }
  return worst;
}

double GapCertificate(const GameTranscript& transcript) {
  RequireWon(transcript, "gap certificate");
  const ShieldedInstance final_inst = GameInstance(
      transcript.params, transcript.committed, transcript.seed);
  const std::size_t N = transcript.params.N;
  double best = std::numeric_limits<double>::infinity();
  for (const RoundRecord& round : transcript.rounds) {
    for (const Vec& x : round.queries) {
      best = std::min(best, ShieldedEval(final_inst, N, x).value);
    }
  }
  return best + 1.0 / std::sqrt(static_cast<double>(N));
}

GameReport AnalyzeTranscript(const GameTranscript& transcript,
                             const LedgerSnapshot& ledger) {
  GameReport report;
  report.params = transcript.params;
  report.ledger = ledger;
  report.certificate_target =
      0.25 / std::sqrt(static_cast<double>(transcript.params.N));
  for (const RoundRecord& r : transcript.rounds) {
    report.precondition_violations += r.precondition_violations.size();
  }
  const WinCheck check = WinEventCheck(transcript);
  report.won = check.won;
  report.first_violation = check.first_violation;
  if (check.won) {
    report.replay_deviation = ConsistencyReplay(transcript);
    report.certificate = GapCertificate(transcript);
  }
  return report;
}

nlohmann::json LowerBoundParamsToJson(const LowerBoundParams& p) {
  return {{"d", p.d},
          {"N", p.N},
          {"Q", HexDouble(p.Q)},
          {"rho", HexDouble(p.rho)},
          {"C", HexDouble(p.C)},
          {"cone_threshold", HexDouble(p.cone_threshold)},
          {"delta_target", HexDouble(p.delta_target)},
          {"delta_wall", HexDouble(p.delta_wall)},
          {"alpha_wall", HexDouble(p.alpha_wall)},
          {"gamma", HexDouble(p.gamma)},
          {"delta_equation_solved", p.delta_equation_solved},
          {"theorem_condition_holds", p.theorem_condition_holds}};
}

LowerBoundParams LowerBoundParamsFromJson(const nlohmann::json& j) {
  try {
    LowerBoundParams p;
    p.d = j.at("d").get<std::size_t>();
    p.N = j.at("N").get<std::size_t>();
    p.Q = ParseHexDouble(j.at("Q").get<std::string>());
    p.rho = ParseHexDouble(j.at("rho").get<std::string>());
    p.C = ParseHexDouble(j.at("C").get<std::string>());
    p.cone_threshold = ParseHexDouble(j.at("cone_threshold").get<std::string>());
    p.delta_target = ParseHexDouble(j.at("delta_target").get<std::string>());
    p.delta_wall = ParseHexDouble(j.at("delta_wall").get<std::string>());
    p.alpha_wall = ParseHexDouble(j.at("alpha_wall").get<std::string>());
    p.gamma = ParseHexDouble(j.at("gamma").get<std::string>());
    p.delta_equation_solved = j.at("delta_equation_solved").get<bool>();
    p.theorem_condition_holds = j.at("theorem_condition_holds").get<bool>();
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("lower-bound params: ") + e.what());
  }
}

nlohmann::json GameReport::ToJson() const {
  nlohmann::json j;
  j["won"] = won;
  if (first_violation) {
    j["first_violation"] = {{"t", first_violation->t},
                            {"query_index", first_violation->query_index},
                            {"s1", first_violation->s1},
                            {"s2", first_violation->s2}};
  } else {
    j["first_violation"] = nullptr;
  }
  j["replay_deviation"] =
      replay_deviation ? nlohmann::json(*replay_deviation) : nullptr;
  j["certificate"] = certificate ? nlohmann::json(*certificate) : nullptr;
  j["certificate_target"] = certificate_target;
  j["certificate_asserted"] = params.theorem_condition_holds;
  j["depth"] = ledger.depth;
  j["work"] = ledger.work;
  j["precondition_violations"] = precondition_violations;
  j["params"] = {{"d", params.d},
                 {"N", params.N},
                 {"Q", params.Q},
                 {"rho", params.rho},
                 {"C", params.C},
                 {"cone_threshold", params.cone_threshold},
                 {"delta_target", params.delta_target},
                 {"delta_wall", params.delta_wall},
                 {"alpha_wall", params.alpha_wall},
                 {"gamma", params.gamma},
                 {"delta_equation_solved", params.delta_equation_solved},
                 {"theorem_condition_holds", params.theorem_condition_holds}};
  return j;
}

}  // namespace parlab
