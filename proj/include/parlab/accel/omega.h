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

#ifndef PARLAB_ACCEL_OMEGA_H_
#define PARLAB_ACCEL_OMEGA_H_

#include <string>

#include "json.hpp"

namespace parlab {

// Regularization profile s -> omega(s) of a proximal step oracle.
class OmegaSpec {
 public:
  enum class Kind { kPower, kConstant };

  // omega(s) = coefficient * s^exponent with exponent > 0.
  static OmegaSpec Power(double coefficient, double exponent);
  // omega(s) = level.
  static OmegaSpec Constant(double level);

  double operator()(double s) const;
  // Smallest g >= 1 with omega'(s) <= g * omega(s) / s.
  double growth_gamma() const;

  Kind kind() const { return kind_; }
  double coefficient() const { return coefficient_; }
  double exponent() const { return exponent_; }

  nlohmann::json ToJson() const;

 private:
  OmegaSpec(Kind kind, double coefficient, double exponent)
      : kind_(kind), coefficient_(coefficient), exponent_(exponent) {}

  Kind kind_;
  double coefficient_;
  double exponent_;
};

}  // namespace parlab

#endif  // PARLAB_ACCEL_OMEGA_H_
