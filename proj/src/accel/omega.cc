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

#include "parlab/accel/omega.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace parlab {

OmegaSpec OmegaSpec::Power(double coefficient, double exponent) {
  if (!(coefficient > 0.0) || !(exponent > 0.0)) {
    throw std::invalid_argument("power omega needs positive coefficient and exponent");
  }
  return OmegaSpec(Kind::kPower, coefficient, exponent);
}

OmegaSpec OmegaSpec::Constant(double level) {
  if (!(level > 0.0)) throw std::invalid_argument("constant omega must be > 0");
  return OmegaSpec(Kind::kConstant, level, 0.0);
}

double OmegaSpec::operator()(double s) const {
  if (kind_ == Kind::kConstant) return coefficient_;
  if (exponent_ == 1.0) return coefficient_ * s;
  return coefficient_ * std::pow(s, exponent_);
}

double OmegaSpec::growth_gamma() const {
  return kind_ == Kind::kConstant ? 1.0 : std::max(exponent_, 1.0);
}

nlohmann::json OmegaSpec::ToJson() const {
  nlohmann::json j;
  j["kind"] = kind_ == Kind::kConstant ? "constant" : "power";
  j["coefficient"] = coefficient_;
  j["exponent"] = exponent_;
  j["growth_gamma"] = growth_gamma();
  return j;
}

}  // namespace parlab
