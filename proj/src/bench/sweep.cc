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

#include "parlab/bench/sweep.h"

#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>
#include <utility>

#include "parlab/bench/run.h"

namespace parlab {

std::vector<SweepCell> DeduplicateCells(const std::vector<SweepCell>& cells) {
  std::vector<SweepCell> out;
  for (const SweepCell& c : cells) {
    bool seen = false;
    for (const SweepCell& o : out) seen = seen || o == c;
    if (!seen) out.push_back(c);
  }
  return out;
}

std::vector<SweepCell> ExpandSweep(const SweepSpec& spec,
                                   std::uint64_t default_seed) {
  const std::vector<std::uint64_t> seeds =
      spec.seeds.empty() ? std::vector<std::uint64_t>{default_seed} : spec.seeds;
  std::vector<SweepCell> cells;
  for (const std::string& m : spec.methods) {
    for (std::size_t d : spec.d_grid) {
      for (double eps : spec.eps_grid) {
        for (std::uint64_t s : seeds) cells.push_back({m, d, eps, s});
      }
    }
  }
  return DeduplicateCells(cells);
}

double FitLogLogSlope(const std::vector<double>& x,
                      const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("slope fit needs two or more points");
  }
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("slope fit needs distinct x");
  return (n * sxy - sx * sy) / denom;
}

SweepResult RunSweep(const std::vector<SweepCell>& cells,
                     const InstanceSpec& instance, const SolverSpec& solver,
                     std::size_t jobs) {
  SweepResult result;
  result.rows.resize(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      SweepRow& row = result.rows[i];
      row.cell = cells[i];
      InstanceSpec in = instance;
      in.d = cells[i].d;
      if (in.N > in.d) in.N = in.d;
      SolverSpec sv = solver;
      sv.method = cells[i].method;
      sv.eps = cells[i].eps;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        const SolverResult r = SolveInstance(in, sv, cells[i].seed);
        row.depth = r.trace.depth;
        row.work = r.trace.work;
        row.gap = r.gap.value_or(r.value);
      } catch (const std::exception& e) {
        row.status = e.what();
      }
      row.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    }
  };
  const std::size_t n_threads = std::max<std::size_t>(
      1, std::min(jobs, cells.size()));
  std::vector<std::thread> threads;
  for (std::size_t t = 1; t < n_threads; ++t) threads.emplace_back(worker);
  worker();
  for (std::thread& t : threads) t.join();

  // (method, d) -> eps -> depths over seeds
  std::map<std::pair<std::string, std::size_t>, std::map<double, std::vector<double>>>
      groups;
  std::vector<std::pair<std::string, std::size_t>> order;
  for (const SweepRow& row : result.rows) {
    const auto key = std::make_pair(row.cell.method, row.cell.d);
    if (!groups.count(key)) order.push_back(key);
    auto& by_eps = groups[key];
    if (row.status != "ok") {
      ++result.failures;
      continue;
    }
    by_eps[row.cell.eps].push_back(static_cast<double>(row.depth));
  }
  for (const auto& key : order) {
    SweepSlope s{key.first, key.second, std::nullopt};
    std::vector<double> inv_eps, depth;
    for (const auto& [eps, depths] : groups[key]) {
      double log_sum = 0.0;
      for (double v : depths) log_sum += std::log(std::max(v, 1.0));
      inv_eps.push_back(1.0 / eps);
      depth.push_back(std::exp(log_sum / static_cast<double>(depths.size())));
    }
    if (inv_eps.size() >= 2) s.slope = FitLogLogSlope(inv_eps, depth);
    result.slopes.push_back(s);
  }
  return result;
}

void WriteSweepCsv(std::ostream& os, const SweepResult& result) {
  os << kSweepHeader << '\n';
  os.precision(17);
  for (const SweepRow& row : result.rows) {
    std::string status = row.status;
    for (char& ch : status) {
      if (ch == ',' || ch == '\n' || ch == '"') ch = ' ';
    }
    os << row.cell.method << ',' << row.cell.d << ',' << row.cell.eps << ','
       << row.cell.seed << ',' << row.depth << ',' << row.work << ','
       << row.gap << ',' << status << '\n';
  }
}

nlohmann::json SweepSlopesJson(const SweepResult& result) {
  nlohmann::json out = nlohmann::json::array();
  for (const SweepSlope& s : result.slopes) {
    out.push_back({{"method", s.method},
                   {"d", s.d},
                   {"depth_slope", s.slope ? nlohmann::json(*s.slope) : nullptr}});
  }
  return out;
}

}  // namespace parlab
