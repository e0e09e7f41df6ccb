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

#include "parlab/smoothing/plan.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace parlab {

SmoothingConstants SmoothingConstants::Theory() {
  SmoothingConstants k;
  k.sample_constant = 64.0;
  k.c.reset();
  k.eps_oracle.reset();
  k.sample_count.reset();
  return k;
}

nlohmann::json SmoothingConstants::ToJson() const {
  nlohmann::json j;
  j["r_factor"] = r_factor;
  j["sample_constant"] = sample_constant;
  j["c"] = c ? nlohmann::json(*c) : nlohmann::json(nullptr);
  j["eps_oracle"] = eps_oracle ? nlohmann::json(*eps_oracle) : nlohmann::json(nullptr);
  j["sample_count"] =
      sample_count ? nlohmann::json(*sample_count) : nlohmann::json(nullptr);
  j["iteration_cap_factor"] = iteration_cap_factor;
  j["K_max"] = K_max;
  return j;
}

nlohmann::json SmoothingPlan::ToJson() const {
  nlohmann::json j;
  j["d"] = d;
  j["L"] = L;
  j["R"] = R;
  j["eps"] = eps;
  j["nu"] = nu;
  j["r"] = r;
  j["r_tilde"] = r_tilde;
  j["p"] = p;
  j["c"] = c;
  j["eps_prime"] = eps_prime;
  j["eps_oracle"] = eps_oracle;
  j["eps_apx"] = eps_apx;
  j["eta"] = eta;
  j["nu_call"] = nu_call;
  j["sample_count"] = sample_count;
  j["gd_step"] = gd_step;
  j["gd_iteration_cap"] = gd_iteration_cap;
  j["K_max"] = K_max;
  j["omega"] = omega.ToJson();
  j["constants"] = constants.ToJson();
  return j;
}

double Chi(double t, double r) {
  const double r2 = r * r;
  const double at = std::abs(t);
  if (at >= r2) return 0.0;
  if (at <= 0.5 * r2) return 1.0;
  return 2.0 - 2.0 * at / r2;
}

std::size_t FieldSampleCount(std::size_t d, double eps_apx, double nu_call,
                             double constant) {
  const double dd = static_cast<double>(d);
  const double log_d = std::log(std::max(dd, 2.0));
  const double n = constant *
                   (dd * log_d * std::log(1.0 / eps_apx) + std::log(1.0 / nu_call)) /
                   (eps_apx * eps_apx);
  return static_cast<std::size_t>(std::ceil(std::max(n, 1.0)));
}

double FieldEta(double eps_apx) {
  return 1.0 / (2.0 * std::sqrt(std::log(10.0 / eps_apx)));
}

SmoothingPlan SmoothingParams(std::size_t d, double L, double R, double eps,
                              double nu, const SmoothingConstants& constants) {
  if (d == 0) throw std::invalid_argument("d must be positive");
  if (!(L > 0.0) || !(R > 0.0)) throw std::invalid_argument("L, R must be > 0");
  if (!(eps > 0.0) || !(eps < L * R)) {
    throw std::invalid_argument("eps must lie in (0, L R)");
  }
  if (!(nu > 0.0 && nu < 1.0)) throw std::invalid_argument("nu must lie in (0,1)");
  if (!(constants.r_factor > 0.0 && constants.r_factor < 0.5)) {
    throw std::invalid_argument("r_factor must lie in (0, 1/2)");
  }

  SmoothingPlan plan;
  plan.constants = constants;
  plan.d = d;
  plan.L = L;
  plan.R = R;
  plan.eps = eps;
  plan.nu = nu;
  const double dd = static_cast<double>(d);
  plan.r = constants.r_factor * eps / (std::sqrt(dd) * L);
  const double log_ratio = std::log(dd / (eps * eps));
  plan.p = std::max(1, static_cast<int>(std::lround((log_ratio / 3.0 - 4.0) / 3.0)));

  // Smoothing bias is at most r_factor * eps on each side.
  const double eps_smooth = eps * (1.0 - 2.0 * constants.r_factor);
  const double gamma = static_cast<double>(plan.p);
  const double c_theory =
      std::max(150.0 * gamma * gamma,
               64.0 / 81.0 * std::pow(std::max(0.0, log_ratio - 12.0), 2));
  plan.c = constants.c.value_or(c_theory);
  plan.eps_prime = eps_smooth / (9.0 * plan.c * (plan.c + 1.0));
  const double mu = 8.0;
  plan.eps_oracle = constants.eps_oracle.value_or(plan.eps_prime / (mu * R * L));
  if (!(plan.eps_oracle > 0.0 && plan.eps_oracle < 1.0)) {
    throw std::invalid_argument("eps_oracle must lie in (0, 1)");
  }
  plan.eps_apx = plan.eps_oracle / 6.0;
  plan.r_tilde = plan.r / (8.0 * std::sqrt(std::log(60.0 / plan.eps_oracle)));
  plan.eta = FieldEta(plan.eps_apx);
  plan.K_max = constants.K_max;
  plan.nu_call = nu / (2.0 * static_cast<double>(constants.K_max));
  plan.sample_count = constants.sample_count.value_or(FieldSampleCount(
      d, plan.eps_apx, plan.nu_call, constants.sample_constant));
  plan.omega = OmegaSpec::Power(4.0 * L / std::pow(plan.r_tilde, plan.p + 1),
                                static_cast<double>(plan.p));
  plan.gd_step = plan.r_tilde / (48.0 * plan.p * std::sqrt(dd) * L);
  plan.gd_iteration_cap = static_cast<std::size_t>(
      constants.iteration_cap_factor *
      std::ceil(plan.p * std::sqrt(dd) / (plan.eps_oracle * plan.eps_oracle)));
  return plan;
}

}  // namespace parlab
