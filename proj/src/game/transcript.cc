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

#include "parlab/game/transcript.h"

#include <string>

#include "parlab/core/errors.h"
#include "parlab/instances/instance_json.h"

namespace parlab {
namespace {

nlohmann::json HexRows(const std::vector<Vec>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const Vec& r : rows) out.push_back(HexVector(r));
  return out;
}

std::vector<Vec> ParseHexRows(const nlohmann::json& j) {
  std::vector<Vec> out;
  for (const auto& r : j) out.push_back(ParseHexVector(r));
  return out;
}

Branch ParseBranch(const std::string& s) {
  if (s == "wall") return Branch::kWall;
  if (s == "nemirovski") return Branch::kNemirovski;
  throw SchemaError("unknown branch '" + s + "'");
}

}  // namespace

void WriteTranscriptJsonl(std::ostream& os, const GameTranscript& transcript) {
  for (const RoundRecord& r : transcript.rounds) {
    nlohmann::json branches = nlohmann::json::array();
    for (Branch b : r.branches) branches.push_back(BranchName(b));
    const nlohmann::json rec = {
        {"t", r.t},
        {"queries", HexRows(r.queries)},
        {"values", HexVector(r.values)},
        {"gradients", HexRows(r.gradients)},
        {"branches", branches},
        {"frame", HexRows(r.frame)},
        {"frame_digest", r.frame_digest},
        {"precondition_violations", r.precondition_violations}};
    os << rec.dump() << '\n';
  }
  const nlohmann::json last = {{"final", true},
                               {"params", LowerBoundParamsToJson(transcript.params)},
                               {"seed", transcript.seed},
                               {"Q", transcript.Q},
                               {"committed", HexRows(transcript.committed)}};
  os << last.dump() << '\n';
}

GameTranscript ReadTranscriptJsonl(std::istream& is) {
  GameTranscript out;
  bool saw_final = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (saw_final) throw SchemaError("transcript has records after the final one");
    try {
      const nlohmann::json j = nlohmann::json::parse(line);
      if (j.contains("final")) {
        out.params = LowerBoundParamsFromJson(j.at("params"));
        out.seed = j.at("seed").get<std::uint64_t>();
        out.Q = j.at("Q").get<std::size_t>();
        out.committed = ParseHexRows(j.at("committed"));
        saw_final = true;
        continue;
      }
      RoundRecord r;
      r.t = j.at("t").get<std::size_t>();
      r.queries = ParseHexRows(j.at("queries"));
      r.values = ParseHexVector(j.at("values"));
      r.gradients = ParseHexRows(j.at("gradients"));
      for (const auto& b : j.at("branches")) {
        r.branches.push_back(ParseBranch(b.get<std::string>()));
      }
      r.frame = ParseHexRows(j.at("frame"));
      r.frame_digest = j.at("frame_digest").get<std::string>();
      r.precondition_violations =
          j.at("precondition_violations").get<std::vector<std::size_t>>();
      if (r.t != out.rounds.size() + 1) {
        throw SchemaError("round numbers are not consecutive");
      }
      if (r.values.size() != r.queries.size() ||
          r.gradients.size() != r.queries.size() ||
          r.branches.size() != r.queries.size()) {
        throw SchemaError("round " + std::to_string(r.t) +
                          " has mismatched answer counts");
      }
      if (FrameDigest(r.frame) != r.frame_digest) {
        throw SchemaError("frame digest mismatch in round " +
                          std::to_string(r.t));
      }
      out.rounds.push_back(std::move(r));
    } catch (const nlohmann::json::exception& e) {
      throw SchemaError("transcript line " + std::to_string(line_no) + ": " +
                        e.what());
    }
  }
  if (!saw_final) throw SchemaError("transcript lacks its final record");
  if (out.rounds.size() != out.params.N || out.committed.size() != out.params.N) {
    throw SchemaError("transcript round count does not match N");
  }
  return out;
}

}  // namespace parlab
