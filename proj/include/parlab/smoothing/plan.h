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

#ifndef PARLAB_SMOOTHING_PLAN_H_
#define PARLAB_SMOOTHING_PLAN_H_

#include <cstddef>
#include <optional>

#include "json.hpp"
#include "parlab/accel/omega.h"

namespace parlab {

// Constants the asymptotic analysis leaves open. Defaults are tuned for desk
// scale; Theory() returns the values the convergence proofs use.
struct SmoothingConstants {
  double r_factor = 1.0 / 3.0;   // r = r_factor * eps / (sqrt(d) L)
  double sample_constant = 1.0;  // multiplies the field sample-count formula
  // Unset values are derived from the convergence proofs.
  std::optional<double> c = 2.0;  // approximate-minimizer factor of the search
  std::optional<double> eps_oracle = 0.25;
  std::optional<std::size_t> sample_count;
  double iteration_cap_factor = 10.0;
  std::size_t K_max = 10000;

  static SmoothingConstants Theory();
  nlohmann::json ToJson() const;
};

struct SmoothingPlan {
  std::size_t d = 0;
  double L = 0.0;
  double R = 0.0;
  double eps = 0.0;
  double nu = 0.0;
  double r = 0.0;        // Gaussian radius
  int p = 1;             // exponent of omega
  double c = 0.0;
  double eps_prime = 0.0;
  double eps_oracle = 0.0;  // relative accuracy of each proximal step
  double eps_apx = 0.0;     // relative accuracy of each sampled field
  double r_tilde = 0.0;     // proximal trust radius
  double eta = 0.0;
  double nu_call = 0.0;     // failure probability per field
  std::size_t sample_count = 0;
  double gd_step = 0.0;
  std::size_t gd_iteration_cap = 0;
  std::size_t K_max = 0;
  OmegaSpec omega = OmegaSpec::Constant(1.0);
  SmoothingConstants constants;

  double trust_radius() const { return eta * r / 4.0; }
  nlohmann::json ToJson() const;
};

// 1 on |t| <= r^2/2, 0 on |t| >= r^2, linear in between.
double Chi(double t, double r);

// ceil(constant * (d ln d ln(1/eps_apx) + ln(1/nu_call)) / eps_apx^2).
std::size_t FieldSampleCount(std::size_t d, double eps_apx, double nu_call,
                             double constant);

// Throws std::invalid_argument unless 0 < eps < L R and 0 < nu < 1.
SmoothingPlan SmoothingParams(std::size_t d, double L, double R, double eps,
                              double nu,
                              const SmoothingConstants& constants = {});

// Field parameters for a standalone field with accuracy eps_apx.
double FieldEta(double eps_apx);

}  // namespace parlab

#endif  // PARLAB_SMOOTHING_PLAN_H_
