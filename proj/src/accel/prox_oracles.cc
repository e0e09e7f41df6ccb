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

#include "parlab/accel/prox_oracles.h"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "parlab/core/errors.h"
#include "parlab/core/linalg.h"

namespace parlab {

ExactGradOracle::ExactGradOracle(std::shared_ptr<const Objective> g)
    : g_(std::move(g)) {}

Vec ExactGradOracle::Query(VecView x) {
  ++queries_;
  return g_->Evaluate(x).gradient;
}

ProxContractCheck CheckProxContract(const Objective& g, VecView x, VecView y,
                                    double alpha, double delta,
                                    const OmegaSpec& omega) {
  const Vec step = Sub(y, x);
  const double s = Norm(step);
  Vec r = g.Evaluate(y).gradient;
  Axpy(omega(s), step, r);
  return {Norm(r), alpha * omega(s) * s + delta};
}

ProximalPointOracle::ProximalPointOracle(std::shared_ptr<const Objective> g,
                                         double smoothness, double kappa,
                                         double rho,
                                         std::size_t max_inner_iterations)
    : g_(std::move(g)),
      smoothness_(smoothness),
      kappa_(kappa),
      rho_(rho),
      max_inner_(max_inner_iterations),
      omega_(OmegaSpec::Constant(kappa)) {
  if (!(smoothness >= 0.0) || !(rho > 0.0)) {
    throw std::invalid_argument("proximal point oracle needs L >= 0, rho > 0");
  }
}

Vec ProximalPointOracle::Query(VecView x) {
  ++queries_;
  const double step = 1.0 / (smoothness_ + kappa_);
  const double grad_target = rho_ * (smoothness_ + kappa_);
  Vec y(x.begin(), x.end());
  for (std::size_t it = 0; it < max_inner_; ++it) {
    Vec grad = g_->Evaluate(y).gradient;
    for (std::size_t j = 0; j < y.size(); ++j) grad[j] += kappa_ * (y[j] - x[j]);
    const double gn = Norm(grad);
    // Strong convexity turns the gradient norm into a suboptimality bound.
    if (gn <= grad_target && gn * gn <= 2.0 * kappa_ * rho_) {
      inner_iterations_ += it;
      return y;
    }
    Axpy(-step, grad, y);
  }
  std::ostringstream msg;
  msg << "proximal point inner solve did not reach rho = " << rho_ << " within "
      << max_inner_ << " iterations";
  throw BudgetExceeded(msg.str());
}

TaylorDescentOracle::TaylorDescentOracle(std::shared_ptr<const Objective> g,
                                         int p, double derivative_lipschitz,
                                         double extra)
    : g_(std::move(g)),
      p_(p),
      lp_(derivative_lipschitz),
      extra_(extra),
      alpha_(0.0),
      omega_(OmegaSpec::Constant(1.0)) {
  if (p != 1 && p != 2) throw std::invalid_argument("Taylor order must be 1 or 2");
  if (!(lp_ > 0.0) || !(extra_ >= 0.0)) {
    throw std::invalid_argument("Taylor oracle needs L_p > 0 and L >= 0");
  }
  alpha_ = 1.0 / ((1.0 + p) * (1.0 + extra_ / lp_));
  const double factorial = p == 1 ? 1.0 : 2.0;
  const double coef = (lp_ + extra_) * (p + 1) / factorial;
  omega_ = p == 1 ? OmegaSpec::Constant(coef) : OmegaSpec::Power(coef, 1.0);
}

Vec TaylorDescentOracle::Query(VecView x) {
  ++queries_;
  const Vec grad = g_->Evaluate(x).gradient;
  Vec y(x.begin(), x.end());
  if (p_ == 1) {
    Axpy(-1.0 / omega_(0.0), grad, y);
    return y;
  }
  const auto hess = g_->Hessian(x);
  if (!hess) throw ContractViolation("second-order Taylor step needs a Hessian");
  const std::size_t d = x.size();
  Eigen::MatrixXd H(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) H(i, j) = hess->row(i)[j];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(H);
  if (eig.info() != Eigen::Success) {
    throw ContractViolation("Hessian eigendecomposition failed");
  }
  const Eigen::VectorXd lambda = eig.eigenvalues();
  const Eigen::VectorXd gq =
      eig.eigenvectors().transpose() * Eigen::Map<const Eigen::VectorXd>(grad.data(), d);
  const double M = omega_.coefficient();
  // Step h(r) = -(H + M r I)^{-1} grad; find r = ||h(r)||.
  auto step_norm = [&](double r) {
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      const double den = lambda[i] + M * r;
      s += gq[i] * gq[i] / (den * den);
    }
    return std::sqrt(s);
  };
  const double gn = gq.norm();
  if (gn == 0.0) return y;
  double lo = 0.0, hi = std::sqrt(gn / M);
  if (lambda.minCoeff() <= 0.0) lo = std::max(0.0, -lambda.minCoeff() / M);
  for (int it = 0; it < 300 && hi - lo > 1e-16 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (step_norm(mid) > mid) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double r = 0.5 * (lo + hi);
  Eigen::VectorXd coef(d);
  for (std::size_t i = 0; i < d; ++i) coef[i] = -gq[i] / (lambda[i] + M * r);
  const Eigen::VectorXd h = eig.eigenvectors() * coef;
  for (std::size_t i = 0; i < d; ++i) y[i] += h[i];
  return y;
}

}  // namespace parlab
