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

#include "parlab/bench/verify.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "parlab/accel/framework.h"
#include "parlab/accel/line_search.h"
#include "parlab/accel/prox_oracles.h"
#include "parlab/accel/trace_csv.h"
#include "parlab/bench/config.h"
#include "parlab/bench/run.h"
#include "parlab/bench/sweep.h"
#include "parlab/core/errors.h"
#include "parlab/core/linalg.h"
#include "parlab/core/oracle.h"
#include "parlab/core/rng.h"
#include "parlab/game/strategies.h"
#include "parlab/instances/shielded.h"
#include "parlab/instances/sphere_box.h"
#include "parlab/instances/wall.h"
#include "parlab/simd/kernels.h"
#include "parlab/smoothing/minimize.h"
#include "parlab/smoothing/plan.h"
#include "parlab/smoothing/prox_step.h"
#include "parlab/smoothing/vector_field.h"

namespace parlab {
namespace {

class Recorder {
 public:
  explicit Recorder(std::vector<InvariantResult>& out) : out_(out) {}
  void Add(const std::string& module, const std::string& invariant,
           bool passed, const std::string& detail) {
    out_.push_back({module, invariant, passed, detail});
  }

 private:
  std::vector<InvariantResult>& out_;
};

std::string Fmt(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

// Cutoff with a jump at 3/4 r^2, used as the injected fault.
double CorruptChi(double t, double r) {
  return std::abs(t) <= 0.75 * r * r ? 1.0 : 0.0;
}

void VerifyOracleCore(Recorder& rec, std::uint64_t seed) {
  const std::string m = "oracle-core";
  RngStream rng(seed, MixKey(0x766572ULL, 1));

  // Ledger bounds after random batches.
  {
    const std::size_t Q = 7, d = 5;
    auto f = std::make_shared<DistanceObjective>(Zeros(d));
    ParallelOracle oracle(f, Q);
    bool ok = true;
    for (int b = 0; b < 50; ++b) {
      const std::size_t n = 1 + rng.NextU64() % Q;
      std::vector<Vec> pts;
      for (std::size_t i = 0; i < n; ++i) pts.push_back(rng.NormalVector(d));
      oracle.SubmitBatch(pts);
      const LedgerSnapshot s = oracle.ledger().Snapshot();
      ok = ok && s.work >= s.depth && s.work <= Q * s.depth;
    }
    rec.Add(m, "ledger depth <= work <= Q depth", ok, "50 random batches");
  }
  // Projection idempotence and Pythagoras.
  {
    const std::size_t d = 30;
    const std::vector<Vec> basis = OrthonormalComplementSample({}, 6, d, rng);
    double idem = 0.0, pyth = 0.0;
    for (int i = 0; i < 200; ++i) {
      const Vec x = rng.NormalVector(d);
      const Vec w = ProjectSpan(basis, x);
      idem = std::max(idem, Distance(ProjectSpan(basis, w), w));
      const double lhs = Dot(x, x);
      const Vec r = Sub(x, w);
      pyth = std::max(pyth, std::abs(lhs - Dot(w, w) - Dot(r, r)) / lhs);
    }
    rec.Add(m, "projection idempotence", idem <= 1e-12, "max " + Fmt(idem));
    rec.Add(m, "pythagoras", pyth <= 1e-9, "max relative " + Fmt(pyth));
  }
  // Sampled frames.
  {
    const std::size_t d = 40;
    RngStream a(seed, 77), b(seed, 77);
    const std::vector<Vec> base = OrthonormalComplementSample({}, 3, d, a);
    const std::vector<Vec> base2 = OrthonormalComplementSample({}, 3, d, b);
    const std::vector<Vec> frame = OrthonormalComplementSample(base, 5, d, a);
    std::vector<Vec> all = base;
    all.insert(all.end(), frame.begin(), frame.end());
    const double defect = OrthonormalityDefect(all);
    rec.Add(m, "sampled frames orthonormal and seed-deterministic",
            defect <= 1e-10 && base == base2, "defect " + Fmt(defect));
  }
  // SIMD kernels agree with the scalar reference.
  {
    const simd::KernelTable& s = simd::ScalarKernels();
    const simd::KernelTable& v =
        simd::CpuHasAvx2() ? simd::Avx2Kernels() : simd::Kernels();
    double worst = 0.0;
    for (std::size_t dim : {1u, 3u, 4u, 7u, 16u, 33u, 101u}) {
      const std::size_t rows = 9;
      const Vec a = rng.NormalVector(rows * dim), x = rng.NormalVector(dim);
      const Vec w = rng.NormalVector(rows);
      const double d1 = s.dot(a.data(), x.data(), dim);
      const double d2 = v.dot(a.data(), x.data(), dim);
      worst = std::max(worst, std::abs(d1 - d2) / (1.0 + std::abs(d1)));
      Vec o1(rows), o2(rows);
      s.row_dots(a.data(), rows, dim, x.data(), o1.data());
      v.row_dots(a.data(), rows, dim, x.data(), o2.data());
      for (std::size_t i = 0; i < rows; ++i) {
        worst = std::max(worst, std::abs(o1[i] - o2[i]) / (1.0 + std::abs(o1[i])));
      }
      Vec s1(dim), s2(dim);
      s.weighted_row_sum(a.data(), rows, dim, w.data(), s1.data());
      v.weighted_row_sum(a.data(), rows, dim, w.data(), s2.data());
      for (std::size_t i = 0; i < dim; ++i) {
        worst = std::max(worst, std::abs(s1[i] - s2[i]) / (1.0 + std::abs(s1[i])));
      }
    }
    rec.Add(m, "vector kernels match scalar reference", worst <= 1e-12,
            std::string(simd::CpuHasAvx2() ? "avx2" : "scalar") + " max relative " + Fmt(worst));
  }
}

void VerifyHardInstances(Recorder& rec, std::uint64_t seed) {
  const std::string m = "hard-instances";
  RngStream rng(seed, MixKey(0x766572ULL, 2));
  const std::size_t d = 40, N = 4;
  const ShieldedInstance inst = MakeShieldedInstance(d, N, 2.0, 0.25, seed);
  auto eval = [&](const Vec& x) { return ShieldedEval(inst, N, x); };

  double worst_convex = -1e300, worst_subgrad = -1e300;
  for (int i = 0; i < 1000; ++i) {
    const Vec x1 = rng.BallPoint(d, 1.0), x2 = rng.BallPoint(d, 1.0);
    const double th = rng.Uniform();
    const ShieldedResult r1 = eval(x1), r2 = eval(x2);
    const double mid = eval(Combine(th, x1, 1.0 - th, x2)).value;
    worst_convex = std::max(worst_convex, mid - th * r1.value - (1 - th) * r2.value);
    const double lin = r1.value + Dot(r1.gradient, Sub(x2, x1));
    worst_subgrad = std::max(worst_subgrad, lin - r2.value);
  }
  rec.Add(m, "convexity spot check", worst_convex <= 1e-7,
          "max excess " + Fmt(worst_convex));
  rec.Add(m, "subgradient inequality", worst_subgrad <= 1e-7,
          "max excess " + Fmt(worst_subgrad));

  double fd_err = 0.0;
  const double alpha = inst.wall.alpha_wall;
  for (int i = 0; i < 50; ++i) {
    Vec y = rng.UnitVector(d);
    Scale(0.25 + 0.75 * rng.Uniform(), y);
    const Vec g = WallBlockGradient(y, alpha);
    for (std::size_t j = 0; j < d; ++j) {
      Vec yp = y, ym = y;
      yp[j] += 1e-6;
      ym[j] -= 1e-6;
      const double fd = (WallBlock(yp, alpha) - WallBlock(ym, alpha)) / 2e-6;
      fd_err = std::max(fd_err, std::abs(fd - g[j]));
    }
  }
  rec.Add(m, "wall block gradient matches finite differences", fd_err <= 1e-4,
          "max error " + Fmt(fd_err));

  // Reduced wall with i known vectors versus two different completions.
  {
    const std::size_t i = 2;
    const std::vector<Vec> known(inst.nemirovski.vectors.begin(),
                                 inst.nemirovski.vectors.begin() + i);
    double worst = 0.0;
    std::size_t tested = 0;
    for (int trial = 0; trial < 200 && tested < 20; ++trial) {
      const Vec x = rng.BallPoint(d, 1.0);
      const WallEvaluation base = WallEvalReduced(known, inst.wall, x);
      bool admissible = true;
      std::vector<WallEvaluation> full;
      for (int c = 0; c < 2 && admissible; ++c) {
        std::vector<Vec> all = known;
        const std::vector<Vec> rest =
            OrthonormalComplementSample(known, N - i, d, rng);
        all.insert(all.end(), rest.begin(), rest.end());
        ShieldedInstance alt = inst;
        alt.nemirovski.vectors = all;
        admissible = ReducedPreconditionHolds(alt, i, x);
        full.push_back(WallEvalReduced(all, inst.wall, x));
      }
      if (!admissible) continue;
      ++tested;
      for (const WallEvaluation& f : full) {
        worst = std::max(worst, std::abs(f.value - base.value));
        worst = std::max(worst, Distance(f.gradient, base.gradient));
      }
    }
    rec.Add(m, "reduced wall ignores the unknown vectors",
            tested > 0 && worst < 1e-9,
            std::to_string(tested) + " points, max change " + Fmt(worst));
  }
  // Sphere-box maximization against a dense angular scan (two coordinates).
  {
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const Vec w = {rng.Normal(), rng.Normal()};
      const double a = 0.2 + 0.8 * rng.Uniform();
      const double t = a * (0.75 + 0.5 * rng.Uniform());
      const SphereBoxResult r = SphereBoxMax(w, a, t);
      double best = -std::numeric_limits<double>::infinity();
      auto consider = [&](double u0, double u1) {
        if (std::abs(u0) > t || std::abs(u1) > t) return;
        best = std::max(best, w[0] * u0 + w[1] * u1);
      };
      const int steps = 1000000;
      for (int k = 0; k < steps; ++k) {
        const double phi = 2.0 * std::numbers::pi * k / steps;
        consider(a * std::cos(phi), a * std::sin(phi));
      }
      // Arc endpoints where one coordinate sits on the box.
      const double other = std::sqrt(std::max(0.0, a * a - t * t));
      for (double s0 : {-1.0, 1.0}) {
        if (t > a) break;
        for (double s1 : {-1.0, 1.0}) {
          consider(s0 * t, s1 * other);
          consider(s0 * other, s1 * t);
        }
      }
      worst = std::max(worst, std::abs(best - r.value));
    }
    rec.Add(m, "sphere-box maximum matches dense scan", worst <= 1e-6,
            "max error " + Fmt(worst));
  }
  // Closed-form wall against Monte Carlo search on a small instance.
  {
    const ShieldedInstance small = MakeShieldedInstance(6, 3, 1.0, 0.25, seed);
    WallParams params = small.wall;
    params.cone_threshold = 0.45;
    const std::vector<Vec> known(small.nemirovski.vectors.begin(),
                                 small.nemirovski.vectors.begin() + 2);
    ShieldedInstance probe = small;
    probe.wall = params;
    double worst_rel = 0.0, worst_under = 0.0;
    std::size_t tested = 0;
    for (int trial = 0; trial < 200 && tested < 5; ++trial) {
      const Vec x = rng.BallPoint(6, 1.0);
      if (!ReducedPreconditionHolds(probe, 2, x)) continue;
      ++tested;
      const double reduced = WallEvalReduced(known, params, x).value;
      RngStream bf_rng = rng.Derive(trial);
      const BruteForceWall bf = WallEvalBruteforce(small.nemirovski.vectors,
                                                   params, x, 200000, bf_rng);
      worst_rel = std::max(worst_rel,
                           std::abs(reduced - bf.value) / (1.0 + std::abs(reduced)));
      worst_under = std::max(worst_under, bf.value - reduced);
    }
    rec.Add(m, "closed-form wall matches brute force",
            tested > 0 && worst_rel <= 0.05 && worst_under <= 1e-7,
            std::to_string(tested) + " points, relative gap " + Fmt(worst_rel));
  }
}

void VerifyGame(Recorder& rec, std::uint64_t seed) {
  const std::string m = "adversary-game";
  GameConfig gc;
  gc.d = 120;
  gc.N = 4;
  gc.Q = 25;
  gc.seed = seed;
  gc.options.fallback_delta = 0.25;
  RandomBallStrategy strategy(seed);
  const GameRun run = RunGame(strategy, gc);
  const GameTranscript& tr = run.transcript;

  double defect = 0.0;
  std::size_t work = 0;
  for (const RoundRecord& r : tr.rounds) {
    std::vector<Vec> all(tr.committed.begin(), tr.committed.begin() + (r.t - 1));
    all.insert(all.end(), r.frame.begin(), r.frame.end());
    defect = std::max(defect, OrthonormalityDefect(all));
    work += r.queries.size();
  }
  rec.Add(m, "frames orthonormal and orthogonal to committed vectors",
          defect <= 1e-10, "defect " + Fmt(defect));
  rec.Add(m, "depth equals N and work equals total queries",
          run.report.ledger.depth == gc.N && run.report.ledger.work == work,
          "depth " + std::to_string(run.report.ledger.depth) + ", work " +
              std::to_string(run.report.ledger.work));
  if (run.report.won) {
    rec.Add(m, "replay deviation under the win event",
            *run.report.replay_deviation <= 1e-7,
            "deviation " + Fmt(*run.report.replay_deviation));
    GameTranscript fewer = tr;
    RoundRecord& last = fewer.rounds.back();
    const std::size_t keep = last.queries.size() / 2;
    last.queries.resize(keep);
    last.values.resize(keep);
    last.gradients.resize(keep);
    last.branches.resize(keep);
    const double full = *run.report.certificate;
    const double reduced = GapCertificate(fewer);
    rec.Add(m, "certificate monotone in the query set", reduced >= full,
            Fmt(reduced) + " >= " + Fmt(full));
  } else {
    rec.Add(m, "replay deviation under the win event", false,
            "reference game was lost");
  }
}

void VerifyFramework(Recorder& rec, std::uint64_t seed) {
  const std::string m = "accel-framework";
  RngStream rng(seed, MixKey(0x766572ULL, 4));
  const std::size_t d = 10;
  Vec center = rng.UnitVector(d);
  auto g = std::make_shared<QuadraticObjective>(center);
  ProximalPointOracle prox(g, 1.0, 1.0, 1e-10);
  ExactGradOracle grad(g);
  FrameworkParams params;
  params.dim = d;
  params.R = 1.0;
  params.epsilon = 1e-8;
  params.K_max = 60;
  const FrameworkResult run = FrameworkRun(prox, grad, params, g.get());

  double remark = 0.0;
  for (const FrameworkRecord& r : run.trace.records) {
    if (r.lambda <= 0.0 || r.search_kind != LineSearchKind::kBracketed) continue;
    remark = std::max(remark, std::abs(r.lambda * r.A - r.a * r.a) / (r.a * r.a));
  }
  rec.Add(m, "step coefficient identity", remark <= 1e-10,
          "max relative " + Fmt(remark));
  rec.Add(m, "line-search queries within budget",
          run.trace.budget_overruns == 0,
          std::to_string(run.trace.budget_overruns) + " overruns in " +
              std::to_string(run.trace.records.size()) + " iterations");
  rec.Add(m, "iterates stay within the diameter bound",
          DiameterBoundsHold(run.trace, center), "");

  // Direct line searches on random quadratics.
  bool bracket_ok = true, invariants_ok = true;
  std::size_t bracketed = 0;
  for (int trial = 0; trial < 20; ++trial) {
    Vec weights(d);
    for (double& w : weights) w = 0.1 + rng.Uniform();
    auto q = std::make_shared<DiagonalQuadraticObjective>(rng.BallPoint(d, 1.0),
                                                          weights);
    ProximalPointOracle p(q, q->lipschitz(), 1.0, 1e-10);
    LineSearchParams lp;
    lp.epsilon = 1e-6;
    lp.c = 150.0;
    const double lo = 1.0 / (2.0 * p.omega()(2.0 * lp.mu * lp.R));
    const double hi = lp.R * lp.R / lp.epsilon;
    const double A = lo * std::pow(hi / lo, rng.Uniform());
    const LineSearchOutcome out =
        LineSearch(p, rng.BallPoint(d, 1.0), rng.BallPoint(d, 1.0), A, lp);
    invariants_ok = invariants_ok && out.invariants_held;
    if (out.kind != LineSearchKind::kBracketed) continue;
    ++bracketed;
    const double z = out.lambda * p.omega()(Distance(out.y, out.x_tilde));
    bracket_ok = bracket_ok && z >= 0.5 && z <= 1.0;
  }
  rec.Add(m, "bracketed outcomes land in [1/2, 1]", bracket_ok,
          std::to_string(bracketed) + " bracketed searches");
  rec.Add(m, "bisection invariant holds", invariants_ok, "20 searches");

  // The probe at theta = A / (A + a) reproduces lambda.
  double coef = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const double lambda = std::exp(4.0 * rng.Normal());
    const double A = std::exp(4.0 * rng.Normal());
    const StepCoefficients sc = ComputeStepCoefficients(lambda, A);
    const ZetaResult z = Zeta(A / (A + sc.a), A, Zeros(d), center, prox);
    coef = std::max(coef, std::abs(z.lambda - lambda) / lambda);
  }
  rec.Add(m, "probe coefficient identity", coef <= 1e-10,
          "max relative " + Fmt(coef));
}

void VerifySmoothing(Recorder& rec, std::uint64_t seed,
                     const std::function<double(double, double)>& chi) {
  const std::string m = "smoothing";
  RngStream rng(seed, MixKey(0x766572ULL, 5));
  {
    const double r = 0.3, r2 = r * r;
    double worst = 0.0;
    for (int i = 0; i < 20000; ++i) {
      const double t = (rng.Uniform() * 3.0 - 1.5) * r2;
      const double u = t + (rng.Uniform() - 0.5) * 1e-3 * r2;
      const double ratio = std::abs(chi(t, r) - chi(u, r)) /
                           std::max(std::abs(t - u), 1e-300);
      worst = std::max(worst, ratio * r2 / 2.0);
    }
    rec.Add(m, "chi continuity", worst <= 1.0 + 1e-9,
            "max slope relative to 2/r^2: " + Fmt(worst));
  }
  // Smoothing sandwich.
  {
    const std::size_t d = 20;
    const double r = 0.05;
    DistanceObjective f(rng.BallPoint(d, 0.5));
    bool ok = true;
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < 1000; ++i) {
      const Vec y = rng.BallPoint(d, 1.0);
      RngStream mc = rng.Derive(i);
      const McValue g = McSmoothedValue(f, y, r, 1000, mc);
      const double excess = std::abs(g.estimate - f.Value(y)) -
                            (std::sqrt(double(d)) * r + 3.0 * g.standard_error);
      worst = std::max(worst, excess);
      ok = ok && excess <= 0.0;
    }
    rec.Add(m, "smoothing sandwich", ok, "max excess " + Fmt(worst));
  }
  // Field accuracy for a linear function.
  {
    const std::size_t d = 30;
    const double eps_apx = 0.1, r = 0.1, nu = 0.05;
    const double eta = FieldEta(eps_apx);
    const std::size_t n = FieldSampleCount(d, eps_apx, nu, 1.0);
    Vec slope = rng.UnitVector(d);
    auto f = std::make_shared<LinearObjective>(slope);
    ParallelOracle oracle(f, n);
    int good = 0;
    const int trials = 20;
    for (int trial = 0; trial < trials; ++trial) {
      RngStream frng = rng.Derive(1000 + trial);
      const Vec c = frng.BallPoint(d, 1.0);
      const SampledVectorField field =
          SampledVectorField::Sample(oracle, c, r, eta, n, frng);
      double worst = 0.0;
      for (int k = 0; k < 100; ++k) {
        const Vec y = Add(c, frng.BallPoint(d, field.trust_radius()));
        worst = std::max(worst, Distance(field.Eval(y), slope));
      }
      if (worst <= eps_apx) ++good;
    }
    rec.Add(m, "uniform field accuracy", good >= trials - 1,
            std::to_string(good) + "/" + std::to_string(trials) + " trials");
  }
  // Proximal step: trust region, stopping rule and depth accounting.
  {
    const std::size_t d = 10;
    SmoothingConstants k;
    k.sample_count = 400;
    const SmoothingPlan plan = SmoothingParams(d, 1.0, 1.0, 0.2, 0.1, k);
    auto f = std::make_shared<DistanceObjective>(rng.BallPoint(d, 0.5));
    ParallelOracle oracle(f, plan.sample_count);
    bool trust = true, stop = true, depth = true;
    for (int i = 0; i < 5; ++i) {
      const Vec c = rng.BallPoint(d, 1.0);
      const std::uint64_t before = oracle.ledger().Snapshot().depth;
      RngStream prng = rng.Derive(2000 + i);
      const ProxStepResult r = ProxStepGd(oracle, c, plan, prng);
      depth = depth && oracle.ledger().Snapshot().depth == before + 1;
      trust = trust && r.max_radius <= plan.r_tilde * (1.0 + 1e-12);
      if (r.converged) {
        stop = stop && r.residual_norm <= 5.0 / 6.0 * plan.L * plan.eps_oracle;
      }
    }
    rec.Add(m, "proximal iterates stay in the trust ball", trust, "5 steps");
    rec.Add(m, "stopping rule sound on exit", stop, "5 steps");
    rec.Add(m, "one depth unit per proximal step", depth, "5 steps");
  }
}

void VerifyBenchCli(Recorder& rec, std::uint64_t seed) {
  const std::string m = "bench-cli";
  ExperimentConfig c;
  c.seed = seed;
  c.mode = Mode::kSolve;
  c.instance.d = 5;
  c.solver.method = "subgradient";
  c.solver.eps = 0.3;
  const nlohmann::json resolved = ConfigToJson(c);
  rec.Add(m, "resolved config round-trips",
          ConfigToJson(ParseConfig(resolved)) == resolved, "");

  const auto base = std::filesystem::temp_directory_path() /
                    ("parlab-verify-" + std::to_string(seed));
  nlohmann::json reports[2];
  for (int i = 0; i < 2; ++i) {
    RunOptions o;
    o.out_dir = base / std::to_string(i);
    reports[i] = RunConfig(ParseConfig(resolved), o);
    reports[i].erase("timing");
  }
  rec.Add(m, "re-run reproduces the report", reports[0] == reports[1], "");

  std::ifstream trace(base / "0" / c.outputs.trace);
  std::string header;
  std::getline(trace, header);
  rec.Add(m, "trace CSV header", header == kSolverTraceHeader, header);
  std::filesystem::remove_all(base);
}

}  // namespace

const std::vector<std::string>& VerifyScopes() {
  static const std::vector<std::string> scopes = {
      "oracle-core", "hard-instances", "adversary-game",
      "accel-framework", "smoothing", "bench-cli"};
  return scopes;
}

std::vector<InvariantResult> VerifySuite(const VerifyOptions& options) {
  const auto& scopes = VerifyScopes();
  if (options.scope != "all" &&
      std::find(scopes.begin(), scopes.end(), options.scope) == scopes.end()) {
    throw SchemaError("verify scope '" + options.scope + "' is unknown");
  }
  std::function<double(double, double)> chi = Chi;
  if (options.fault) {
    if (*options.fault != "chi") {
      throw SchemaError("verify fault '" + *options.fault + "' is unknown");
    }
    chi = CorruptChi;
  }
  std::vector<InvariantResult> results;
  Recorder rec(results);
  auto wanted = [&](const char* s) {
    return options.scope == "all" || options.scope == s;
  };
  if (wanted("oracle-core")) VerifyOracleCore(rec, options.seed);
  if (wanted("hard-instances")) VerifyHardInstances(rec, options.seed);
  if (wanted("adversary-game")) VerifyGame(rec, options.seed);
  if (wanted("accel-framework")) VerifyFramework(rec, options.seed);
  if (wanted("smoothing")) VerifySmoothing(rec, options.seed, chi);
  if (wanted("bench-cli")) VerifyBenchCli(rec, options.seed);
  return results;
}

void WriteVerifyCsv(std::ostream& os, const std::vector<InvariantResult>& r) {
  os << kVerifyHeader << '\n';
  for (const InvariantResult& x : r) {
    std::string detail = x.detail;
    for (char& ch : detail) {
      if (ch == ',' || ch == '\n') ch = ';';
    }
    os << x.module << ',' << x.invariant << ',' << (x.passed ? 1 : 0) << ','
       << detail << '\n';
  }
}

}  // namespace parlab
