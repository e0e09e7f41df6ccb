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

#include "parlab/instances/instance_json.h"

#include <cstdio>
#include <cstdlib>
#include <string>

#include "parlab/core/errors.h"
#include "parlab/instances/wall.h"

namespace parlab {

std::string HexDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%a", v);
  return buf;
}

double ParseHexDouble(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') {
    throw SchemaError("not a floating-point literal: '" + s + "'");
  }
  return v;
}

nlohmann::json HexVector(VecView v) {
  nlohmann::json out = nlohmann::json::array();
  for (double x : v) out.push_back(HexDouble(x));
  return out;
}

Vec ParseHexVector(const nlohmann::json& j) {
  if (!j.is_array()) throw SchemaError("expected an array of hex floats");
  Vec out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_string()) throw SchemaError("expected a hex-float string");
    out.push_back(ParseHexDouble(e.get<std::string>()));
  }
  return out;
}

nlohmann::json InstanceToJson(const ShieldedInstance& inst) {
  nlohmann::json j;
  j["d"] = inst.d;
  j["N"] = inst.N();
  j["gamma"] = HexDouble(inst.nemirovski.gamma);
  j["delta_wall"] = HexDouble(inst.wall.delta_wall);
  j["alpha_wall"] = HexDouble(inst.wall.alpha_wall);
  j["C"] = HexDouble(inst.C);
  j["seed"] = inst.seed;
  Vec flat;
  flat.reserve(inst.N() * inst.d);
  for (const Vec& v : inst.nemirovski.vectors) {
    flat.insert(flat.end(), v.begin(), v.end());
  }
  j["vectors"] = HexVector(flat);
  return j;
}

namespace {

const nlohmann::json& Field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw SchemaError(std::string("instance: missing field '") + key + "'");
  }
  return j.at(key);
}

double HexField(const nlohmann::json& j, const char* key) {
  const auto& f = Field(j, key);
  if (f.is_string()) return ParseHexDouble(f.get<std::string>());
  if (f.is_number()) return f.get<double>();
  throw SchemaError(std::string("instance: field '") + key +
                    "' must be a number");
}

std::size_t CountField(const nlohmann::json& j, const char* key) {
  const auto& f = Field(j, key);
  if (!f.is_number_unsigned()) {
    throw SchemaError(std::string("instance: field '") + key +
                      "' must be a non-negative integer");
  }
  return f.get<std::size_t>();
}

}  // namespace

ShieldedInstance InstanceFromJson(const nlohmann::json& j) {
  static const char* kKeys[] = {"d",  "N",    "gamma",  "delta_wall",
                                "alpha_wall", "C", "seed", "vectors"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : kKeys) known = known || it.key() == k;
    if (!known) throw SchemaError("instance: unknown field '" + it.key() + "'");
  }
  ShieldedInstance inst;
  inst.d = CountField(j, "d");
  const std::size_t n = CountField(j, "N");
  inst.nemirovski.gamma = HexField(j, "gamma");
  inst.wall.delta_wall = HexField(j, "delta_wall");
  inst.wall.alpha_wall = HexField(j, "alpha_wall");
  inst.C = HexField(j, "C");
  const auto& seed = Field(j, "seed");
  if (!seed.is_number_unsigned()) throw SchemaError("instance: bad 'seed'");
  inst.seed = seed.get<std::uint64_t>();
  inst.wall.cone_threshold = ConeThreshold(inst.d, inst.C);
  const Vec flat = ParseHexVector(Field(j, "vectors"));
  if (flat.size() != n * inst.d) {
    throw SchemaError("instance: 'vectors' must hold N * d entries");
  }
  for (std::size_t i = 0; i < n; ++i) {
    inst.nemirovski.vectors.emplace_back(flat.begin() + i * inst.d,
                                         flat.begin() + (i + 1) * inst.d);
  }
  return inst;
}

}  // namespace parlab
