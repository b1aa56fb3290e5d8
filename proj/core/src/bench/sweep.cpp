// Copyright 2026 The empc Authors
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

#include "empc/bench/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include "empc/bench/generators.hpp"
#include "empc/drp.hpp"
#include "empc/gopsort.hpp"
#include "empc/random.hpp"

namespace empc::bench {
namespace {

std::string num(std::uint64_t x) { return std::to_string(x); }
std::string num(std::int64_t x) { return std::to_string(x); }

std::size_t pick(std::size_t configured, std::size_t fallback) { return configured == 0 ? fallback : configured; }

// floor(n^1.5), exactly.
std::size_t mst_edge_count(std::size_t n) {
  const std::uint64_t cube = static_cast<std::uint64_t>(n) * n * n;
  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(cube)));
  while (root * root > cube) --root;
  while ((root + 1) * (root + 1) <= cube) ++root;
  return static_cast<std::size_t>(root);
}

struct IoTotals {
  double parallel = 0.0;
  double serial = 0.0;
};

double ratio_of(double approx, double exact) {
  if (exact == 0.0) return approx == 0.0 ? 1.0 : INFINITY;
  return approx / exact;
}

void drp_rows(const SweepSpec& spec, SweepTable& t) {
  const std::size_t guard = spec.config.guard == 0 ? kDefaultExactDrpLimit : spec.config.guard;
  double max_bound = 0.0;
  for (std::size_t size : spec.sizes) {
    for (std::size_t trial = 0; trial < spec.trials; ++trial) {
      const std::uint64_t seed = derive_seed(spec.seed, size, trial);
      const DrpInstance inst = gen_drp(size, 1, spec.config.cost_high, spec.config.mass_max, seed);
      const Ratio bound = ratio_bound(inst.cost());
      max_bound = std::max(max_bound, bound.value());
      const DrpSolution approx = drp_solve_approx(inst);
      if (size > guard) {
        ++t.skipped;
        t.rows.push_back({num(size), num(trial), num(seed), "", num(approx.cost), "", format_number(bound.value()), "skipped"});
        continue;
      }
      const DrpSolution exact = drp_solve_exact(inst, guard);
      const double r = ratio_of(static_cast<double>(approx.cost), static_cast<double>(exact.cost));
      const bool ok = bound.admits(approx.cost, exact.cost) && approx.cost >= exact.cost;
      if (!ok) ++t.violations;
      t.max_ratio = std::max(t.max_ratio, r);
      t.rows.push_back({num(size), num(trial), num(seed), num(exact.cost), num(approx.cost), format_number(r),
                        format_number(bound.value()), ok ? "ok" : "violation"});
    }
  }
  t.rows.push_back({"summary", "", "", "", "", format_number(t.max_ratio), format_number(max_bound),
                    t.violations == 0 ? "ok" : "violation"});
}

void gop_rows(const SweepSpec& spec, SweepTable& t) {
  const std::size_t p = pick(spec.config.machines, 2);
  const std::uint64_t guard = spec.config.guard == 0 ? kDefaultGopWorkLimit : spec.config.guard;
  for (std::size_t n : spec.sizes) {
    for (std::size_t trial = 0; trial < spec.trials; ++trial) {
      const std::uint64_t seed = derive_seed(spec.seed, n, trial);
      const GopInstance g = gen_gop(n, p, seed, 1, spec.config.cost_high);
      const double bound = std::max(ratio_bound(g.cost()).value(), 2.0);
      const GopSolution approx = gop_solve_approx(g);
      if (gop_exact_work(n, p) > guard) {
        ++t.skipped;
        t.rows.push_back({num(n), num(trial), num(seed), num(p), "", format_number(approx.total_cost), "",
                          format_number(bound), "skipped"});
        continue;
      }
      const GopSolution exact = gop_solve_exact(g, guard);
      const double r = ratio_of(approx.total_cost, exact.total_cost);
      // The guarantee needs p * 2^p <= n.
      const bool in_regime = (static_cast<std::uint64_t>(p) << p) <= n;
      std::string status = "ok";
      if (!in_regime) {
        status = "outside-regime";
      } else if (r > bound * (1.0 + 1e-12)) {
        status = "violation";
        ++t.violations;
      }
      if (in_regime) t.max_ratio = std::max(t.max_ratio, r);
      t.rows.push_back({num(n), num(trial), num(seed), num(p), format_number(exact.total_cost),
                        format_number(approx.total_cost), format_number(r), format_number(bound), status});
    }
  }
  t.rows.push_back({"summary", "", "", "", "", "", format_number(t.max_ratio), "", t.violations == 0 ? "ok" : "violation"});
}

template <typename Row>
void io_rows(const SweepSpec& spec, SweepTable& t, std::size_t ratio_col, Row&& row) {
  std::vector<IoSample> samples;
  for (std::size_t size : spec.sizes) {
    IoTotals totals;
    for (std::size_t trial = 0; trial < spec.trials; ++trial) {
      const std::uint64_t seed = derive_seed(spec.seed, size, trial);
      std::vector<std::string> r = row(size, trial, seed, totals);
      t.rows.push_back(std::move(r));
    }
    samples.push_back({static_cast<double>(size), totals.parallel, totals.serial});
  }
  for (const auto& r : t.rows) t.max_ratio = std::max(t.max_ratio, std::stod(r[ratio_col]));
  std::string verdict = "INCONCLUSIVE";
  if (samples.size() >= ClassifierConfig{}.min_points) {
    t.classification = classify_io_optimality(samples);
    verdict = std::string(to_string(*t.classification));
  }
  std::vector<std::string> summary(t.header.size());
  summary.front() = "summary";
  summary[ratio_col] = format_number(t.max_ratio);
  summary.back() = verdict;
  t.rows.push_back(std::move(summary));
}

}  // namespace

std::string_view to_string(SweepKind k) {
  switch (k) {
    case SweepKind::kDrpRatio:
      return "drp-ratio";
    case SweepKind::kGopRatio:
      return "gop-ratio";
    case SweepKind::kTerasortIo:
      return "terasort-io";
    case SweepKind::kMstIo:
      return "mst-io";
    case SweepKind::kMmIo:
      return "mm-io";
  }
  return "drp-ratio";
}

SweepKind parse_sweep_kind(std::string_view name) {
  for (SweepKind k : {SweepKind::kDrpRatio, SweepKind::kGopRatio, SweepKind::kTerasortIo, SweepKind::kMstIo,
                      SweepKind::kMmIo}) {
    if (to_string(k) == name) return k;
  }
  throw ParameterError("unknown sweep kind \"" + std::string(name) +
                       "\"; expected drp-ratio, gop-ratio, terasort-io, mst-io or mm-io");
}

void SweepSpec::validate() const {
  if (sizes.empty()) throw ParameterError("sweep needs at least one size");
  for (std::size_t k = 1; k < sizes.size(); ++k) {
    if (sizes[k] <= sizes[k - 1]) throw ParameterError("sweep sizes must be strictly ascending");
  }
  if (trials < 1) throw ParameterError("sweep needs at least one trial per size");
  if (config.cost_high < 1) throw ParameterError("cost_high must be at least 1");
  if (kind == SweepKind::kDrpRatio && sizes.front() < 2) throw ParameterError("drp-ratio sizes are machine counts >= 2");
}

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string SweepTable::to_csv() const {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (k) out += ',';
      out += cells[k];
    }
    out += '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

SweepTable run_sweep(const SweepSpec& spec) {
  spec.validate();
  SweepTable t;
  const SweepConfig& cfg = spec.config;
  switch (spec.kind) {
    case SweepKind::kDrpRatio:
      t.header = {"size", "trial", "seed", "exact_cost", "approx_cost", "ratio", "bound", "status"};
      drp_rows(spec, t);
      break;
    case SweepKind::kGopRatio:
      t.header = {"size", "trial", "seed", "p", "exact_total", "approx_total", "ratio", "bound", "status"};
      gop_rows(spec, t);
      break;
    case SweepKind::kTerasortIo: {
      t.header = {"size", "trial", "seed", "parallel_io", "serial_io", "ratio", "status"};
      const std::size_t p = pick(cfg.machines, 4);
      const std::size_t memory = pick(cfg.main_memory, 1000);
      io_rows(spec, t, 5, [&](std::size_t n, std::size_t trial, std::uint64_t seed, IoTotals& acc) {
        const GopInstance g = gen_gop(n, p, seed, 1, cfg.cost_high);
        const TerasortResult res = terasort_simulate(g.sort(), {memory, p}, g.cost(), seed);
        std::vector<Value> flat;
        for (const auto& part : res.output) flat.insert(flat.end(), part.begin(), part.end());
        const bool sorted = flat.size() == n && std::is_sorted(flat.begin(), flat.end());
        const std::uint64_t serial = io_sort_count(n, memory);
        acc.parallel += static_cast<double>(res.report.total_io());
        acc.serial += static_cast<double>(serial);
        return std::vector<std::string>{num(n), num(trial), num(seed), num(res.report.total_io()), num(serial),
                                        format_number(static_cast<double>(res.report.total_io()) / serial),
                                        sorted ? "sorted" : "unsorted"};
      });
      break;
    }
    case SweepKind::kMstIo:
      t.header = {"size", "trial", "seed", "m", "groups", "parallel_io", "analytic_io", "serial_io", "ratio", "status"};
      io_rows(spec, t, 8, [&](std::size_t n, std::size_t trial, std::uint64_t seed, IoTotals& acc) {
        const std::size_t pairs = n * (n - 1) / 2;
        const std::size_t m = std::min(mst_edge_count(n), pairs);
        const std::size_t memory = pick(cfg.main_memory, n);
        const Graph g = gen_graph(n, m, seed);
        const PartitionIoResult res = nowicki_partition_io(g, memory);
        const std::uint64_t serial = kruskal_serial_io(m, memory);
        acc.parallel += static_cast<double>(res.report.total_io());
        acc.serial += static_cast<double>(serial);
        return std::vector<std::string>{num(n), num(trial), num(seed), num(m), num(res.groups),
                                        num(res.report.total_io()), num(res.analytic_io), num(serial),
                                        format_number(static_cast<double>(res.report.total_io()) / serial), ""};
      });
      break;
    case SweepKind::kMmIo: {
      t.header = {"size", "trial", "seed", "m", "iterations", "iteration_bound", "parallel_io", "serial_io", "ratio",
                  "status"};
      const std::size_t p = pick(cfg.machines, 4);
      io_rows(spec, t, 8, [&](std::size_t n, std::size_t trial, std::uint64_t seed, IoTotals& acc) {
        const std::size_t m = std::min(4 * n, n * (n - 1) / 2);
        const Graph g = gen_graph(n, m, seed);
        const MatchingRun serial = mm_serial_run(g, cfg.epsilon);
        const IoReport parallel = mm_parallel_io_model(g, cfg.epsilon, p, seed);
        const bool same = parallel.io_sequence() == serial.report.io_sequence();
        acc.parallel += static_cast<double>(parallel.total_io());
        acc.serial += static_cast<double>(serial.report.total_io());
        return std::vector<std::string>{num(n), num(trial), num(seed), num(m), num(serial.iterations),
                                        num(mm_iteration_bound(n, cfg.epsilon)), num(parallel.total_io()),
                                        num(serial.report.total_io()),
                                        format_number(static_cast<double>(parallel.total_io()) /
                                                      static_cast<double>(serial.report.total_io())),
                                        same ? "identical" : "diverged"};
      });
      break;
    }
  }
  return t;
}

}  // namespace empc::bench
