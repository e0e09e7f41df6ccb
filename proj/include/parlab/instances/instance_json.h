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

#ifndef PARLAB_INSTANCES_INSTANCE_JSON_H_
#define PARLAB_INSTANCES_INSTANCE_JSON_H_

#include <string>

#include "json.hpp"
#include "parlab/core/types.h"
#include "parlab/instances/shielded.h"

namespace parlab {

// Hex-float text ("%a") that parses back to the identical double.
std::string HexDouble(double v);
double ParseHexDouble(const std::string& s);

nlohmann::json HexVector(VecView v);
Vec ParseHexVector(const nlohmann::json& j);

// {d, N, gamma, delta_wall, alpha_wall, C, seed, vectors}. Scalars and the
// row-major vector block are hex floats, so a round trip is bit-exact.
nlohmann::json InstanceToJson(const ShieldedInstance& instance);
// Throws SchemaError on missing or malformed fields.
ShieldedInstance InstanceFromJson(const nlohmann::json& j);

}  // namespace parlab

#endif  // PARLAB_INSTANCES_INSTANCE_JSON_H_
