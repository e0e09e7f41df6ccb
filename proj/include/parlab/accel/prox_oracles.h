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

#ifndef PARLAB_ACCEL_PROX_ORACLES_H_
#define PARLAB_ACCEL_PROX_ORACLES_H_

#include <cstddef>
#include <memory>

#include "parlab/accel/omega.h"
#include "parlab/core/objective.h"
#include "parlab/core/types.h"

namespace parlab {

// Approximate omega-proximal step oracle: each answer y at query x satisfies
// ||grad g(y) + omega(||y - x||) (y - x)|| <= alpha omega(||y - x||) ||y - x|| + delta.
class ProxOracle {
 public:
  virtual ~ProxOracle() = default;
  virtual Vec Query(VecView x) = 0;
  virtual double alpha() const = 0;
  virtual double delta() const = 0;
  virtual const OmegaSpec& omega() const = 0;
  std::size_t queries() const { return queries_; }

 protected:
  std::size_t queries_ = 0;
};

// Gradient oracle with ||answer - grad g(x)|| <= grad_delta.
class GradOracle {
 public:
  virtual ~GradOracle() = default;
  virtual Vec Query(VecView x) = 0;
  virtual double grad_delta() const = 0;
  std::size_t queries() const { return queries_; }

 protected:
  std::size_t queries_ = 0;
};

class ExactGradOracle final : public GradOracle {
 public:
  explicit ExactGradOracle(std::shared_ptr<const Objective> g);
  Vec Query(VecView x) override;
  double grad_delta() const override { return 0.0; }

 private:
  std::shared_ptr<const Objective> g_;
};

// Left-hand and right-hand sides of the proximal step contract at (x, y).
struct ProxContractCheck {
  double residual = 0.0;
  double bound = 0.0;
  bool holds(double slack = 0.0) const { return residual <= bound + slack; }
};
ProxContractCheck CheckProxContract(const Objective& g, VecView x, VecView y,
                                    double alpha, double delta,
                                    const OmegaSpec& omega);

// Minimizes g(y) + (kappa/2)||y - x||^2 by gradient descent with step
// 1/(L + kappa). Contract: alpha = 0, delta = rho (L + kappa), omega = kappa.
class ProximalPointOracle final : public ProxOracle {
 public:
  ProximalPointOracle(std::shared_ptr<const Objective> g, double smoothness,
                      double kappa, double rho,
                      std::size_t max_inner_iterations = 1000000);
  Vec Query(VecView x) override;
  double alpha() const override { return 0.0; }
  double delta() const override { return rho_ * (smoothness_ + kappa_); }
  const OmegaSpec& omega() const override { return omega_; }
  std::size_t inner_iterations() const { return inner_iterations_; }

 private:
  std::shared_ptr<const Objective> g_;
  double smoothness_;
  double kappa_;
  double rho_;
  std::size_t max_inner_;
  OmegaSpec omega_;
  std::size_t inner_iterations_ = 0;
};

// Minimizer of the order-p Taylor model of g at x plus
// ((L_p + L) / p!) ||y - x||^{p+1}, for p in {1, 2}. The p = 2 step solves
// the cubic-regularized Newton problem through its one-dimensional secular
// equation. Contract: alpha = 1 / ((1 + p)(1 + L / L_p)), delta = 0,
// omega(d) = ((L_p + L)(p + 1) / p!) d^{p-1}.
class TaylorDescentOracle final : public ProxOracle {
 public:
  TaylorDescentOracle(std::shared_ptr<const Objective> g, int p,
                      double derivative_lipschitz, double extra);
  Vec Query(VecView x) override;
  double alpha() const override { return alpha_; }
  double delta() const override { return 0.0; }
  const OmegaSpec& omega() const override { return omega_; }

 private:
  std::shared_ptr<const Objective> g_;
  int p_;
  double lp_;
  double extra_;
  double alpha_;
  OmegaSpec omega_;
};

}  // namespace parlab

#endif  // PARLAB_ACCEL_PROX_ORACLES_H_
