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

#include "parlab/bench/config.h"

#include <fstream>
#include <set>
#include <sstream>

#include "parlab/core/errors.h"
#include "parlab/core/linalg.h"
#include "parlab/core/rng.h"
#include "parlab/instances/lowerbound_params.h"
#include "parlab/instances/shielded.h"

namespace parlab {
namespace {

using nlohmann::json;

// Reads one JSON object, remembering which keys were consumed so that the
// rest can be reported as unknown.
class Section {
 public:
  Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw SchemaError(path_ + ": expected an object");
  }

  bool Has(const std::string& key) const { return j_.contains(key); }

  template <typename T>
  void Read(const std::string& key, T& out) {
    if (!j_.contains(key)) return;
    seen_.insert(key);
    out = Convert<T>(j_.at(key), Path(key));
  }

  template <typename T>
  void ReadOptional(const std::string& key, std::optional<T>& out) {
    if (!j_.contains(key)) return;
    seen_.insert(key);
    const json& v = j_.at(key);
    if (v.is_null()) {
      out.reset();
    } else {
      out = Convert<T>(v, Path(key));
    }
  }

  template <typename T>
  void ReadPositive(const std::string& key, T& out) {
    Read(key, out);
    if (j_.contains(key) && !(out > T{0})) {
      throw SchemaError(Path(key) + ": must be positive");
    }
  }

  Section Child(const std::string& key) {
    seen_.insert(key);
    return Section(j_.at(key), Path(key));
  }

  const json& Raw(const std::string& key) {
    seen_.insert(key);
    return j_.at(key);
  }

  std::string Path(const std::string& key) const { return path_ + "." + key; }

  void Finish() const {
    for (const auto& item : j_.items()) {
      if (!seen_.count(item.key())) {
        throw SchemaError(Path(item.key()) + ": unknown key");
      }
    }
  }

 private:
  template <typename T>
  static T Convert(const json& v, const std::string& path) {
    try {
      if constexpr (std::is_same_v<T, double>) {
        if (!v.is_number()) throw SchemaError(path + ": expected a number");
      } else if constexpr (std::is_integral_v<T> && !std::is_same_v<T, bool>) {
        if (!v.is_number_unsigned() &&
            !(v.is_number_integer() && v.get<long long>() >= 0)) {
          throw SchemaError(path + ": expected a non-negative integer");
        }
      }
      return v.get<T>();
    } catch (const json::exception& e) {
      throw SchemaError(path + ": " + e.what());
    }
  }

  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

template <typename T>
json OptionalJson(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

void RequireOneOf(const std::string& value, std::initializer_list<const char*> allowed,
                  const std::string& path) {
  for (const char* a : allowed) {
    if (value == a) return;
  }
  std::ostringstream msg;
  msg << path << ": '" << value << "' is not one of";
  for (const char* a : allowed) msg << " " << a;
  throw SchemaError(msg.str());
}

void ParseConstants(Section s, SmoothingConstants& k) {
  s.ReadPositive("r_factor", k.r_factor);
  s.ReadPositive("sample_constant", k.sample_constant);
  s.ReadOptional("c", k.c);
  s.ReadOptional("eps_oracle", k.eps_oracle);
  s.ReadOptional("sample_count", k.sample_count);
  s.ReadPositive("iteration_cap_factor", k.iteration_cap_factor);
  s.ReadPositive("K_max", k.K_max);
  s.Finish();
  if (!(k.r_factor < 0.5)) {
    throw SchemaError(s.Path("r_factor") + ": must be below 1/2");
  }
  if (k.eps_oracle && !(*k.eps_oracle > 0.0 && *k.eps_oracle < 1.0)) {
    throw SchemaError(s.Path("eps_oracle") + ": must lie in (0, 1)");
  }
  if (k.c && !(*k.c > 0.0)) throw SchemaError(s.Path("c") + ": must be positive");
  if (k.sample_count && *k.sample_count == 0) {
    throw SchemaError(s.Path("sample_count") + ": must be positive");
  }
}

}  // namespace

const char* ModeName(Mode mode) {
  switch (mode) {
    case Mode::kSolve: return "solve";
    case Mode::kGame: return "game";
    case Mode::kBench: return "bench";
    case Mode::kVerify: return "verify";
  }
  return "?";
}

SmoothingConstants SolverSpec::DefaultSolverConstants() {
  SmoothingConstants k;
  k.sample_count = 500;
  return k;
}

ExperimentConfig ParseConfig(const json& j) {
  ExperimentConfig c;
  Section root(j, "config");
  if (!root.Has("seed")) throw SchemaError("config.seed: required");
  root.Read("seed", c.seed);
  if (!root.Has("mode")) throw SchemaError("config.mode: required");
  std::string mode;
  root.Read("mode", mode);
  RequireOneOf(mode, {"solve", "game", "bench", "verify"}, "config.mode");
  c.mode = mode == "solve"   ? Mode::kSolve
           : mode == "game"  ? Mode::kGame
           : mode == "bench" ? Mode::kBench
                             : Mode::kVerify;

  if (root.Has("instance")) {
    Section s = root.Child("instance");
    InstanceSpec& in = c.instance;
    s.Read("kind", in.kind);
    RequireOneOf(in.kind, {"distance", "nemirovski", "shielded", "linear", "quadratic"},
                 s.Path("kind"));
    s.ReadPositive("d", in.d);
    s.ReadPositive("N", in.N);
    s.Read("gamma", in.gamma);
    s.Read("anchor_norm", in.anchor_norm);
    s.ReadOptional("C", in.C);
    s.ReadPositive("delta_wall", in.delta_wall);
    s.ReadOptional("seed", in.seed);
    s.Finish();
    if (in.gamma < 0.0) throw SchemaError(s.Path("gamma") + ": must be >= 0");
    if (in.anchor_norm < 0.0) {
      throw SchemaError(s.Path("anchor_norm") + ": must be >= 0");
    }
    if (in.N > in.d) throw SchemaError(s.Path("N") + ": must not exceed d");
  }
  if (root.Has("solver")) {
    Section s = root.Child("solver");
    SolverSpec& sv = c.solver;
    s.Read("method", sv.method);
    RequireOneOf(sv.method, {"highly-parallel", "subgradient", "drs"}, s.Path("method"));
    s.ReadPositive("eps", sv.eps);
    s.ReadPositive("L", sv.L);
    s.ReadPositive("R", sv.R);
    s.ReadPositive("nu", sv.nu);
    if (s.Has("constants")) ParseConstants(s.Child("constants"), sv.constants);
    s.ReadOptional("drs_batch", sv.drs_batch);
    s.Finish();
    if (!(sv.nu < 1.0)) throw SchemaError(s.Path("nu") + ": must be below 1");
  }
  if (root.Has("game")) {
    Section s = root.Child("game");
    GameSpec& g = c.game;
    s.ReadPositive("d", g.d);
    s.ReadPositive("N", g.N);
    s.ReadPositive("Q", g.Q);
    s.ReadPositive("rho", g.rho);
    s.Read("strategy", g.strategy);
    RequireOneOf(g.strategy,
                 {"random-ball", "subgradient-descent", "coordinate-probe", "external"},
                 s.Path("strategy"));
    if (s.Has("strategy_options")) {
      g.strategy_options = s.Raw("strategy_options");
      if (!g.strategy_options.is_object()) {
        throw SchemaError(s.Path("strategy_options") + ": expected an object");
      }
    }
    s.ReadOptional("C", g.C);
    s.ReadOptional("fallback_delta", g.fallback_delta);
    s.ReadPositive("games", g.games);
    s.Read("write_transcripts", g.write_transcripts);
    s.Finish();
    if (g.N > g.d) throw SchemaError(s.Path("N") + ": must not exceed d");
  }
  if (root.Has("sweep")) {
    Section s = root.Child("sweep");
    SweepSpec& sw = c.sweep;
    s.Read("methods", sw.methods);
    for (const std::string& m : sw.methods) {
      RequireOneOf(m, {"highly-parallel", "subgradient", "drs"}, s.Path("methods"));
    }
    s.Read("d_grid", sw.d_grid);
    s.Read("eps_grid", sw.eps_grid);
    s.Read("seeds", sw.seeds);
    s.Finish();
    if (sw.methods.empty() || sw.d_grid.empty() || sw.eps_grid.empty()) {
      throw SchemaError("config.sweep: grids must be nonempty");
    }
  }
  if (root.Has("verify")) {
    Section s = root.Child("verify");
    s.Read("scope", c.verify.scope);
    s.ReadOptional("fault", c.verify.fault);
    s.Finish();
    if (c.verify.fault) {
      RequireOneOf(*c.verify.fault, {"chi"}, s.Path("fault"));
    }
  }
  if (root.Has("outputs")) {
    Section s = root.Child("outputs");
    OutputSpec& o = c.outputs;
    s.Read("report", o.report);
    s.Read("trace", o.trace);
    s.Read("framework_trace", o.framework_trace);
    s.Read("plan", o.plan);
    s.Read("transcript", o.transcript);
    s.Read("games", o.games);
    s.Read("table", o.table);
    s.Read("checks", o.checks);
    s.Finish();
  }
  root.Finish();
  return c;
}

ExperimentConfig LoadConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read config file " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw SchemaError("config: " + std::string(e.what()));
  }
  return ParseConfig(j);
}

json ConfigToJson(const ExperimentConfig& c) {
  const InstanceSpec& in = c.instance;
  const SolverSpec& sv = c.solver;
  const GameSpec& g = c.game;
  const OutputSpec& o = c.outputs;
  json constants = sv.constants.ToJson();
  return {
      {"mode", ModeName(c.mode)},
      {"seed", c.seed},
      {"instance",
       {{"kind", in.kind},
        {"d", in.d},
        {"N", in.N},
        {"gamma", in.gamma},
        {"anchor_norm", in.anchor_norm},
        {"C", OptionalJson(in.C)},
        {"delta_wall", in.delta_wall},
        {"seed", OptionalJson(in.seed)}}},
      {"solver",
       {{"method", sv.method},
        {"eps", sv.eps},
        {"L", sv.L},
        {"R", sv.R},
        {"nu", sv.nu},
        {"constants", constants},
        {"drs_batch", OptionalJson(sv.drs_batch)}}},
      {"game",
       {{"d", g.d},
        {"N", g.N},
        {"Q", g.Q},
        {"rho", g.rho},
        {"strategy", g.strategy},
        {"strategy_options", g.strategy_options},
        {"C", OptionalJson(g.C)},
        {"fallback_delta", OptionalJson(g.fallback_delta)},
        {"games", g.games},
        {"write_transcripts", g.write_transcripts}}},
      {"sweep",
       {{"methods", c.sweep.methods},
        {"d_grid", c.sweep.d_grid},
        {"eps_grid", c.sweep.eps_grid},
        {"seeds", c.sweep.seeds}}},
      {"verify", {{"scope", c.verify.scope}, {"fault", OptionalJson(c.verify.fault)}}},
      {"outputs",
       {{"report", o.report},
        {"trace", o.trace},
        {"framework_trace", o.framework_trace},
        {"plan", o.plan},
        {"transcript", o.transcript},
        {"games", o.games},
        {"table", o.table},
        {"checks", o.checks}}}};
}

std::shared_ptr<const Objective> MakeObjective(const InstanceSpec& spec,
                                               std::uint64_t seed) {
  const std::uint64_t s = spec.seed.value_or(seed);
  RngStream rng(s, MixKey(0x6f626aULL, 0));
  if (spec.kind == "distance" || spec.kind == "quadratic") {
    Vec anchor = rng.UnitVector(spec.d);
    Scale(spec.anchor_norm, anchor);
    if (spec.kind == "distance") {
      return std::make_shared<DistanceObjective>(std::move(anchor));
    }
    return std::make_shared<QuadraticObjective>(std::move(anchor));
  }
  if (spec.kind == "linear") {
    return std::make_shared<LinearObjective>(rng.UnitVector(spec.d));
  }
  if (spec.kind == "nemirovski") {
    NemirovskiParams params;
    params.gamma = spec.gamma;
    params.vectors = OrthonormalComplementSample({}, spec.N, spec.d, rng);
    return std::make_shared<NemirovskiObjective>(std::move(params), spec.d);
  }
  if (spec.kind == "shielded") {
    const double C = spec.C.value_or(LowerBoundConstant(spec.d, 100.0, 0.1));
    return std::make_shared<ShieldedObjective>(
        MakeShieldedInstance(spec.d, spec.N, C, spec.delta_wall, s));
  }
  throw SchemaError("config.instance.kind: unknown kind '" + spec.kind + "'");
}

}  // namespace parlab
