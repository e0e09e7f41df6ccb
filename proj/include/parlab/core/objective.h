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

#ifndef PARLAB_CORE_OBJECTIVE_H_
#define PARLAB_CORE_OBJECTIVE_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>

#include "parlab/core/types.h"

namespace parlab {

struct OracleAnswer {
  double value = 0.0;
  Vec gradient;
};

// A convex function with a first-order oracle. Implementations must be
// deterministic and thread-compatible (const evaluation).
class Objective {
 public:
  virtual ~Objective() = default;
  virtual std::size_t dim() const = 0;
  virtual OracleAnswer Evaluate(VecView x) const = 0;
  virtual double Value(VecView x) const { return Evaluate(x).value; }
  // Lipschitz constant of the function, if known.
  virtual double lipschitz() const = 0;
  // Minimum value and a minimizer, when known in closed form.
  virtual std::optional<double> optimal_value() const { return std::nullopt; }
  virtual std::optional<Vec> minimizer() const { return std::nullopt; }
  // Hessian as a row-major d x d matrix, for smooth objectives that have one.
  virtual std::optional<RowMatrix> Hessian(VecView) const {
    return std::nullopt;
  }
  virtual std::string name() const = 0;
};

// f(x) = scale * ||x - anchor||.
class DistanceObjective final : public Objective {
 public:
  DistanceObjective(Vec anchor, double scale = 1.0);
  std::size_t dim() const override { return anchor_.size(); }
  OracleAnswer Evaluate(VecView x) const override;
  double lipschitz() const override { return scale_; }
  std::optional<double> optimal_value() const override { return 0.0; }
  std::optional<Vec> minimizer() const override { return anchor_; }
  std::string name() const override { return "distance"; }

 private:
  Vec anchor_;
  double scale_;
};

// f(x) = <slope, x> + offset. Unbounded below; optimal_value is not set.
class LinearObjective final : public Objective {
 public:
  LinearObjective(Vec slope, double offset = 0.0);
  std::size_t dim() const override { return slope_.size(); }
  OracleAnswer Evaluate(VecView x) const override;
  double lipschitz() const override;
  std::string name() const override { return "linear"; }
  const Vec& slope() const { return slope_; }

 private:
  Vec slope_;
  double offset_;
};

// g(x) = (curvature / 2) * ||x - center||^2.
class QuadraticObjective final : public Objective {
 public:
  QuadraticObjective(Vec center, double curvature = 1.0);
  std::size_t dim() const override { return center_.size(); }
  OracleAnswer Evaluate(VecView x) const override;
  // Gradient Lipschitz constant.
  double lipschitz() const override { return curvature_; }
  std::optional<double> optimal_value() const override { return 0.0; }
  std::optional<Vec> minimizer() const override { return center_; }
  std::optional<RowMatrix> Hessian(VecView x) const override;
  std::string name() const override { return "quadratic"; }

 private:
  Vec center_;
  double curvature_;
};

// g(x) = 1/2 sum_j weight_j (x_j - center_j)^2.
class DiagonalQuadraticObjective final : public Objective {
 public:
  DiagonalQuadraticObjective(Vec center, Vec weights);
  std::size_t dim() const override { return center_.size(); }
  OracleAnswer Evaluate(VecView x) const override;
  double lipschitz() const override;
  std::optional<double> optimal_value() const override { return 0.0; }
  std::optional<Vec> minimizer() const override { return center_; }
  std::optional<RowMatrix> Hessian(VecView x) const override;
  std::string name() const override { return "diagonal-quadratic"; }

 private:
  Vec center_;
  Vec weights_;
};

// f(x) + weight * max(0, ||x|| - radius). Keeps an unconstrained solver near
// the unit ball when f alone would drift.
class BallPenaltyObjective final : public Objective {
 public:
  BallPenaltyObjective(std::shared_ptr<const Objective> inner, double radius,
                       double weight);
  std::size_t dim() const override { return inner_->dim(); }
  OracleAnswer Evaluate(VecView x) const override;
  double lipschitz() const override {
    return inner_->lipschitz() + weight_;
  }
  std::optional<double> optimal_value() const override {
    return inner_->optimal_value();
  }
  std::string name() const override { return inner_->name() + "+ball"; }

 private:
  std::shared_ptr<const Objective> inner_;
  double radius_;
  double weight_;
};

}  // namespace parlab

#endif  // PARLAB_CORE_OBJECTIVE_H_
