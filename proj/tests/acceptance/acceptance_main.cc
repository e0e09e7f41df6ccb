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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "json.hpp"
#include "parlab/accel/framework.h"
#include "parlab/accel/line_search.h"
#include "parlab/accel/prox_oracles.h"
#include "parlab/bench/config.h"
#include "parlab/bench/run.h"
#include "parlab/bench/sweep.h"
#include "parlab/core/linalg.h"
#include "parlab/core/objective.h"
#include "parlab/core/oracle.h"
#include "parlab/core/rng.h"
#include "parlab/game/strategies.h"
#include "parlab/instances/lowerbound_params.h"
#include "parlab/instances/shielded.h"
#include "parlab/instances/wall.h"
#include "parlab/smoothing/minimize.h"
#include "parlab/smoothing/plan.h"
#include "parlab/smoothing/prox_step.h"
#include "parlab/smoothing/vector_field.h"

namespace parlab {
namespace {

// Pinned tolerances.
constexpr double kCertificateSlack = 1e-8;
constexpr double kFieldAccuracy = 0.1;
constexpr int kFieldTrialsRequired = 95;
constexpr double kWallRelative = 0.05;
constexpr double kWallUnder = 1e-7;
constexpr double kWallAtMinimizer = 1e-6;
constexpr double kWinRate = 0.9;
constexpr double kReplayTolerance = 1e-7;
constexpr double kSolveTarget = 0.1;
constexpr double kFastSlopeMax = 1.7;
constexpr double kSubgradientSlopeMin = 1.8;

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::uint64_t Stream(std::uint64_t criterion) { return MixKey(0x616363ULL, criterion); }

// 1. Rate bound with the approximate proximal-point oracle.
struct RateRun {
  std::shared_ptr<QuadraticObjective> g;
  Vec star;
  FrameworkResult result;
};

RateRun MakeRateRun() {
  RngStream rng(1, Stream(1));
  const std::size_t d = 10;
  Vec star = rng.UnitVector(d);
  auto g = std::make_shared<QuadraticObjective>(star);
  ProximalPointOracle prox(g, 1.0, 1.0, 1e-10);
  ExactGradOracle grad(g);
  FrameworkParams p;
  p.dim = d;
  p.R = 1.0;
  p.epsilon = 1e-14;
  p.K_max = 200;
  p.stop_on_A_bound = false;
  return {g, star, FrameworkRun(prox, grad, p, g.get())};
}

Verdict FrameworkRate(const RateRun& run) {
  double worst = -std::numeric_limits<double>::infinity();
  std::size_t checked = 0, last_k = 0;
  for (const FrameworkRecord& r : run.result.trace.records) {
    last_k = r.k;
    if (r.k < 5 || r.k > 200) continue;
    ++checked;
    const double bound = 32.0 / (static_cast<double>(r.k) * r.k);
    worst = std::max(worst, r.gap / bound);
  }
  return {checked > 0 && worst <= 1.0,
          fmt::format("{} iterations checked (run ended at k = {} by {}), "
                      "max gap/bound = {:.3g}",
                      checked, last_k, run.result.trace.stop_reason, worst)};
}

// 2. Potential certificate on the same run.
Verdict PotentialCertificate(const RateRun& run) {
  const CertificateCheck c =
      ConvergenceCertificate(run.result.trace, *run.g, run.star, kCertificateSlack);
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < c.lhs.size(); ++j) margin = std::min(margin, c.rhs[j] - c.lhs[j]);
  return {c.holds && !c.lhs.empty(),
          fmt::format("{} records, min rhs - lhs = {:.3g}{}", c.lhs.size(), margin,
                      c.holds ? "" : fmt::format(", first failure k = {}", c.first_failure))};
}

// 3. Line-search bracket and query budget on random quadratics.
Verdict LineSearchContract() {
  RngStream rng(3, Stream(3));
  std::size_t bracketed = 0, minimizer = 0, bad_bracket = 0, over_budget = 0;
  std::size_t max_queries = 0;
  for (int inst = 0; inst < 100; ++inst) {
    const std::size_t d = 2 + inst % 9;
    Vec weights(d);
    for (double& w : weights) w = 0.2 + 1.8 * rng.Uniform();
    const Vec center = rng.BallPoint(d, 1.0);
    auto g = std::make_shared<DiagonalQuadraticObjective>(center, weights);
    const double kappa = std::exp(4.0 * rng.Uniform() - 2.0);
    ProximalPointOracle prox(g, 2.0, kappa, 1e-10);
    LineSearchParams p;
    p.epsilon = 1e-3;
    p.early_accept = inst % 2 == 0;
    const double a_lo = 1.0 / (2.0 * kappa), a_hi = 1.0 / p.epsilon;
    const double A = a_lo * std::pow(a_hi / a_lo, rng.Uniform());
    const Vec x1 = rng.BallPoint(d, 1.0), x2 = rng.BallPoint(d, 1.0);
    const LineSearchOutcome out = LineSearch(prox, x1, x2, A, p);
    max_queries = std::max(max_queries, out.prox_queries);
    if (out.prox_queries > out.query_budget) ++over_budget;
    if (out.kind == LineSearchKind::kBracketed) {
      ++bracketed;
      const double z = out.lambda * prox.omega()(Distance(out.y, out.x_tilde));
      if (!(z >= 0.5 && z <= 1.0)) ++bad_bracket;
    } else {
      ++minimizer;
    }
  }
  return {bad_bracket == 0 && over_budget == 0,
          fmt::format("{} bracketed, {} approximate-minimizer, {} outside [1/2, 1], "
                      "{} over budget, max queries {}",
                      bracketed, minimizer, bad_bracket, over_budget, max_queries)};
}

// 4. Uniform accuracy of the sampled field for a linear function.
Verdict FieldAccuracy() {
  const std::size_t d = 50;
  const double eps_apx = 0.1;
  const SmoothingPlan plan = SmoothingParams(d, 1.0, 1.0, 0.1, 0.1);
  const std::size_t n = FieldSampleCount(d, eps_apx, plan.nu_call, 1.0);
  const double eta = FieldEta(eps_apx);
  int good = 0;
  double worst_overall = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    RngStream rng(4 + trial, Stream(4));
    const Vec slope = rng.UnitVector(d);
    auto f = std::make_shared<LinearObjective>(slope);
    ParallelOracle oracle(f, n);
    const Vec c = rng.BallPoint(d, 1.0);
    const SampledVectorField field =
        SampledVectorField::Sample(oracle, c, plan.r, eta, n, rng);
    Vec out(d), scratch(n);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const Vec y = Add(c, rng.BallPoint(d, field.trust_radius()));
      field.EvalInto(y, out, scratch);
      worst = std::max(worst, Distance(out, slope));
    }
    worst_overall = std::max(worst_overall, worst);
    if (worst <= kFieldAccuracy) ++good;
  }
  return {good >= kFieldTrialsRequired,
          fmt::format("{}/100 trials within {} ({} samples per field), worst {:.4f}",
                      good, kFieldAccuracy, n, worst_overall)};
}

// 5. Gradient-descent proximal step against a Monte Carlo reference.
Verdict ProxStepOutput() {
  const std::size_t d = 50;
  RngStream rng(5, Stream(5));
  const Vec x0 = rng.BallPoint(d, 0.5);
  auto f = std::make_shared<DistanceObjective>(x0);
  SmoothingConstants k;
  k.eps_oracle = 0.1;
  k.sample_count = 50000;
  const SmoothingPlan plan = SmoothingParams(d, 1.0, 1.0, 0.1, 0.1, k);
  ParallelOracle oracle(f, plan.sample_count);
  bool ok = true;
  std::string detail;
  // Centers far from the kink and a few radii from it.
  for (double offset : {0.3, 0.05, 4 * plan.r}) {
    const Vec c = Add(x0, [&] { Vec u = rng.UnitVector(d); Scale(offset, u); return u; }());
    RngStream prng = rng.Derive(static_cast<std::uint64_t>(offset * 1e6));
    const ProxStepResult r = ProxStepGd(oracle, c, plan, prng);
    RngStream mc = rng.Derive(99);
    const McGradient ref = McGradientOracle(*f, r.y, plan.r, 1000000, mc);
    Vec residual = ref.estimate;
    Axpy(plan.omega(Distance(r.y, c)), Sub(r.y, c), residual);
    const double bound = plan.L * plan.eps_oracle + 3.0 * ref.standard_error;
    const bool in_ball = r.max_radius <= plan.r_tilde * (1.0 + 1e-12);
    ok = ok && in_ball && Norm(residual) <= bound;
    detail += fmt::format("[offset {:.3g}: residual {:.4f} <= {:.4f}, {} iterations, "
                          "max radius/r_tilde {:.3f}] ",
                          offset, Norm(residual), bound, r.iterations,
                          r.max_radius / plan.r_tilde);
  }
  return {ok, detail};
}

// 6. Closed-form wall against brute-force search.
Verdict WallEquivalence() {
  const double threshold = 0.45;
  const double C = threshold * threshold * 6.0 / std::log(6.0);
  const ShieldedInstance inst = MakeShieldedInstance(6, 3, C, 0.25, 6);
  const std::vector<Vec> known(inst.nemirovski.vectors.begin(),
                               inst.nemirovski.vectors.begin() + 2);
  RngStream rng(6, Stream(6));
  int tested = 0;
  double worst_rel = 0.0, worst_under = -std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < 1000 && tested < 20; ++trial) {
    const Vec x = rng.BallPoint(6, 1.0);
    if (!ReducedPreconditionHolds(inst, 2, x)) continue;
    ++tested;
    const double reduced = WallEvalReduced(known, inst.wall, x).value;
    RngStream bf_rng = rng.Derive(trial);
    const BruteForceWall bf =
        WallEvalBruteforce(inst.nemirovski.vectors, inst.wall, x, 1000000, bf_rng);
    worst_rel = std::max(worst_rel, std::abs(reduced - bf.value) / (1.0 + std::abs(reduced)));
    worst_under = std::max(worst_under, bf.value - reduced);
  }
  return {tested == 20 && worst_rel <= kWallRelative && worst_under <= kWallUnder,
          fmt::format("{} admissible points, max relative gap {:.4f}, "
                      "max brute-force excess {:.3g}",
                      tested, worst_rel, worst_under)};
}

// 7. Wall value at the minimizer of the max-of-linear part.
Verdict WallAtMinimizer() {
  const std::size_t d = 500, N = 5;
  const double C = ConstantForTarget(d, N, 0.46);
  LowerBoundOptions o;
  o.C = C;
  const LowerBoundParams p = DeriveLowerBoundParams(d, N, 100, 0.1, o);
  const double limit = -1.0 / std::sqrt(static_cast<double>(N)) + kWallAtMinimizer;
  double worst = -std::numeric_limits<double>::infinity();
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const ShieldedInstance inst = MakeShieldedInstance(p, seed);
    const Vec x_star = NemirovskiReferencePoint(inst.nemirovski);
    worst = std::max(worst, WallEvalReduced(inst.nemirovski.vectors, inst.wall, x_star).value);
  }
  return {p.delta_equation_solved && worst <= limit,
          fmt::format("C = {:.3g}, delta = {:.4f}, max value {:.6f} <= {:.6f}", C,
                      p.delta_wall, worst, limit)};
}

// 8. Game win rate and replay consistency.
Verdict GameConsistency() {
  GameConfig gc;
  gc.d = 500;
  gc.N = 5;
  gc.Q = 100;
  gc.rho = 0.1;
  gc.options.fallback_delta = 0.25;
  int wins = 0;
  double worst_dev = 0.0, min_cert = std::numeric_limits<double>::infinity();
  bool condition_false = true;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    gc.seed = seed;
    RandomBallStrategy player(seed);
    const GameRun run = RunGame(player, gc);
    condition_false = condition_false && !run.report.params.theorem_condition_holds;
    if (!run.report.won) continue;
    ++wins;
    worst_dev = std::max(worst_dev, *run.report.replay_deviation);
    min_cert = std::min(min_cert, *run.report.certificate);
  }
  const double rate = wins / 100.0;
  return {rate >= kWinRate && worst_dev <= kReplayTolerance && condition_false,
          fmt::format("win rate {:.2f}, max replay deviation {:.3g}, "
                      "theorem condition false: {}, min certificate {:.4f} "
                      "(reported; 1/(4 sqrt N) = {:.4f})",
                      rate, worst_dev, condition_false, min_cert, 0.25 / std::sqrt(5.0))};
}

// 9. End-to-end solve plus the depth trend.
Verdict EndToEnd() {
  RngStream rng(9, Stream(9));
  const std::size_t d = 20;
  auto f = std::make_shared<DistanceObjective>(rng.BallPoint(d, 1.0));
  const SolverResult solve = HighlyParallelMinimize(
      f, d, 1.0, 1.0, kSolveTarget, 0.1, 9, SolverSpec::DefaultSolverConstants());
  const double value = f->Value(solve.x);

  InstanceSpec inst;
  inst.kind = "distance";
  SolverSpec solver;
  solver.constants.sample_count = 250;
  std::vector<SweepCell> cells;
  for (const char* method : {"highly-parallel", "subgradient"}) {
    for (double eps : {0.2, 0.1, 0.05}) cells.push_back({method, 400, eps, 9});
  }
  const SweepResult sweep = RunSweep(cells, inst, solver, 1);
  std::optional<double> fast, sub;
  for (const SweepSlope& s : sweep.slopes) {
    if (s.method == "highly-parallel") fast = s.slope;
    if (s.method == "subgradient") sub = s.slope;
  }
  std::string depths;
  for (const SweepRow& r : sweep.rows) {
    depths += fmt::format(" {}@{}={}", r.cell.method, r.cell.eps, r.depth);
  }
  const bool trend = sweep.failures == 0 && fast && sub && *fast <= kFastSlopeMax &&
                     *sub >= kSubgradientSlopeMin;
  return {value <= kSolveTarget && trend,
          fmt::format("d=20: f(x) = {:.4f}, depth {}, work {}; d=400 slopes: "
                      "highly-parallel {:.3f}, subgradient {:.3f};{}",
                      value, solve.trace.depth, solve.trace.work, fast.value_or(NAN),
                      sub.value_or(NAN), depths)};
}

// 10. Re-running a resolved config reproduces the report.
Verdict Determinism() {
  const auto base = std::filesystem::temp_directory_path() / "parlab_acceptance";
  std::vector<nlohmann::json> configs = {
      nlohmann::json::parse(R"({"mode": "solve", "seed": 10,
        "instance": {"kind": "distance", "d": 10},
        "solver": {"method": "highly-parallel", "eps": 0.3}})"),
      nlohmann::json::parse(R"({"mode": "game", "seed": 10,
        "game": {"d": 500, "N": 5, "Q": 100, "games": 2}})"),
      nlohmann::json::parse(R"({"mode": "bench", "seed": 10,
        "instance": {"kind": "distance"},
        "sweep": {"methods": ["subgradient", "drs"], "d_grid": [10],
                  "eps_grid": [0.4, 0.3]}})")};
  int same = 0;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    nlohmann::json reports[2];
    for (int rep = 0; rep < 2; ++rep) {
      RunOptions o;
      o.out_dir = base / fmt::format("{}_{}", i, rep);
      std::filesystem::remove_all(o.out_dir);
      const ExperimentConfig c =
          rep == 0 ? ParseConfig(configs[i]) : ParseConfig(reports[0]["config"]);
      reports[rep] = RunConfig(c, o);
      reports[rep].erase("timing");
    }
    if (reports[0].dump() == reports[1].dump()) ++same;
  }
  std::filesystem::remove_all(base);
  return {same == static_cast<int>(configs.size()),
          fmt::format("{}/{} reports (solve, game, bench) identical on re-run", same,
                      configs.size())};
}

}  // namespace
}  // namespace parlab

int main() {
  using parlab::Verdict;
  const parlab::RateRun rate = parlab::MakeRateRun();
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"1 framework rate", [&] { return parlab::FrameworkRate(rate); }},
      {"2 potential certificate", [&] { return parlab::PotentialCertificate(rate); }},
      {"3 line-search contract", parlab::LineSearchContract},
      {"4 uniform field accuracy", parlab::FieldAccuracy},
      {"5 proximal step output", parlab::ProxStepOutput},
      {"6 wall formula equivalence", parlab::WallEquivalence},
      {"7 wall at the minimizer", parlab::WallAtMinimizer},
      {"8 game consistency", parlab::GameConsistency},
      {"9 end-to-end solver", parlab::EndToEnd},
      {"10 determinism", parlab::Determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %s (%.1fs): %s\n", v.pass ? "PASS" : "FAIL", name.c_str(), s,
                v.detail.c_str());
    std::fflush(stdout);
    if (!v.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
