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

#include <cmath>
#include <limits>

#include "parlab/core/linalg.h"
#include "parlab/core/oracle.h"
#include "parlab/core/rng.h"
#include "parlab/smoothing/minimize.h"

namespace parlab {
namespace {

void Finish(const Objective& f, Vec x, const DepthWorkLedger& ledger,
            SolverResult& result) {
  result.x = std::move(x);
  result.value = f.Value(result.x);
  if (const auto fs = f.optimal_value()) result.gap = result.value - *fs;
  const LedgerSnapshot s = ledger.Snapshot();
  result.trace.depth = s.depth;
  result.trace.work = s.work;
}

double GapEstimate(const Objective& f, VecView x) {
  const double v = f.Value(x);
  const auto fs = f.optimal_value();
  return fs ? v - *fs : v;
}

}  // namespace

SolverResult BaselineSubgradient(std::shared_ptr<const Objective> f, double R,
                                 double L, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  const double ratio = L * R / eps;
  const std::size_t T = static_cast<std::size_t>(std::ceil(ratio * ratio));
  const double step = R / (L * std::sqrt(static_cast<double>(T)));
  const std::size_t d = f->dim();
  auto ledger = std::make_shared<DepthWorkLedger>();
  ParallelOracle oracle(f, 1, std::numeric_limits<double>::infinity(), ledger);

  SolverResult result;
  result.trace.method = "subgradient";
  result.trace.plan = {{"T", T}, {"step", step}, {"R", R}, {"L", L}, {"eps", eps}};
  Vec x(d, 0.0), sum(d, 0.0), avg(d);
  std::vector<Vec> batch(1);
  for (std::size_t t = 0; t < T; ++t) {
    Axpy(1.0, x, sum);
    batch[0] = x;
    const Vec g = oracle.SubmitBatch(batch)[0].gradient;
    Axpy(-step, g, x);
    ProjectBall(x, R);
    for (std::size_t j = 0; j < d; ++j) avg[j] = sum[j] / static_cast<double>(t + 1);
    const LedgerSnapshot s = ledger->Snapshot();
    result.trace.records.push_back(
        {t + 1, 0, s.depth, s.work, GapEstimate(*f, avg), Norm(g)});
  }
  result.trace.stop_reason = "iteration-limit";
  Finish(*f, avg, *ledger, result);
  return result;
}

SolverResult BaselineDrs(std::shared_ptr<const Objective> f, std::size_t d,
                         double L, double R, double eps, std::uint64_t seed,
                         const DrsOptions& options) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  const double r = options.r_factor * eps / (std::sqrt(static_cast<double>(d)) * L);
  const double beta = L / r;
  const double noise_ratio = 8.0 * R * L / eps;
  const std::size_t batch =
      options.batch.value_or(static_cast<std::size_t>(std::ceil(noise_ratio * noise_ratio)));
  const double eps_smooth = eps * (1.0 - 2.0 * options.r_factor);
  const std::size_t T = static_cast<std::size_t>(
      std::ceil(std::sqrt(2.0 * beta * R * R / eps_smooth)));
  auto ledger = std::make_shared<DepthWorkLedger>();
  ParallelOracle oracle(f, batch, std::numeric_limits<double>::infinity(), ledger);
  RngStream rng(seed, MixKey(0x647273ULL, 0));

  SolverResult result;
  result.trace.method = "drs";
  result.trace.plan = {{"r", r},       {"smoothness", beta}, {"batch", batch},
                       {"rounds", T},  {"R", R},             {"L", L},
                       {"eps", eps}};
  Vec x(d, 0.0), x_prev(d, 0.0), y(d, 0.0), grad(d);
  RowMatrix points(batch, d), grads;
  for (std::size_t t = 0; t < T; ++t) {
    for (std::size_t i = 0; i < batch; ++i) {
      MutVecView p = points.row(i);
      rng.FillNormal(p);
      for (std::size_t j = 0; j < d; ++j) p[j] = y[j] + r * p[j];
    }
    oracle.SubmitBatchGradients(points, grads);
    std::fill(grad.begin(), grad.end(), 0.0);
    for (std::size_t i = 0; i < batch; ++i) Axpy(1.0 / batch, grads.row(i), grad);
    x_prev = x;
    x = y;
    Axpy(-1.0 / beta, grad, x);
    ProjectBall(x, R);
    const double momentum = static_cast<double>(t) / static_cast<double>(t + 3);
    for (std::size_t j = 0; j < d; ++j) y[j] = x[j] + momentum * (x[j] - x_prev[j]);
    const LedgerSnapshot s = ledger->Snapshot();
    result.trace.records.push_back(
        {t + 1, 0, s.depth, s.work, GapEstimate(*f, x), Norm(grad)});
  }
  result.trace.stop_reason = "iteration-limit";
  Finish(*f, x, *ledger, result);
  return result;
}

}  // namespace parlab
