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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "empc/bench/generators.hpp"
#include "empc/error.hpp"
#include "empc/iosim.hpp"

namespace empc {
namespace {

TEST(IoSortCount, ModelFormula) {
  EXPECT_EQ(io_sort_count(0, 10), 0u);
  EXPECT_EQ(io_sort_count(8, 16), 8u);
  EXPECT_EQ(io_sort_count(1000, 10), 3000u);
  EXPECT_EQ(io_sort_count(1001, 10), 4004u);
  EXPECT_EQ(io_sort_count(100000, 1000), 200000u);
  EXPECT_THROW(io_sort_count(5, 1), ParameterError);
}

TEST(IoSortCount, Monotone) {
  for (std::uint64_t m = 2; m < 40; ++m)
    for (std::uint64_t n = 0; n < 3000; n += 7) {
      EXPECT_LE(io_sort_count(n, m), io_sort_count(n + 7, m));
      EXPECT_GE(io_sort_count(n, m), io_sort_count(n, m + 1));
    }
}

TEST(KruskalSerialIo, Examples) {
  EXPECT_EQ(kruskal_serial_io(0, 10), 0u);
  EXPECT_EQ(kruskal_serial_io(1000, 10), 4000u);
  EXPECT_EQ(kruskal_serial_io(500, 500), 1000u);
}

TEST(Graph, Validation) {
  EXPECT_THROW(Graph::make(3, {{1, 1, 1.0}}), InstanceError);
  EXPECT_THROW(Graph::make(3, {{1, 4, 1.0}}), InstanceError);
  EXPECT_THROW(Graph::make(3, {{0, 2, 1.0}}), InstanceError);
  EXPECT_THROW(Graph::make(3, {{1, 2, 1.0}, {2, 1, 5.0}}), InstanceError);
  EXPECT_NO_THROW(Graph::make(3, {{1, 2, 1.0}, {2, 3, 5.0}}));
}

double forest_weight(std::size_t n, const std::vector<Edge>& e) {
  double w = 0;
  for (auto k : minimum_spanning_forest(n, e)) w += e[k].weight;
  return w;
}

TEST(NowickiPartitionIo, SingleGroupReadsEveryEdgeOnce) {
  auto g = bench::gen_graph(20, 20, 4);
  auto r = nowicki_partition_io(g, 20);
  EXPECT_EQ(r.groups, 1u);
  EXPECT_EQ(r.report.total_io(), 20u);

  auto star = Graph::make(4, {{1, 2, 1.0}, {1, 3, 2.0}, {1, 4, 3.0}});
  auto s = nowicki_partition_io(star, 4);
  EXPECT_EQ(s.groups, 1u);
  EXPECT_EQ(s.report.total_io(), 3u);
}

TEST(NowickiPartitionIo, RandomGraphNearAnalyticCount) {
  auto g = bench::gen_graph(100, 2000, 9);
  auto r = nowicki_partition_io(g, 100);
  EXPECT_EQ(r.groups, 20u);
  EXPECT_EQ(r.analytic_io, 40000u);
  const double reads = static_cast<double>(r.report.total_io());
  EXPECT_LE(reads, 4.0 * 40000);
  EXPECT_GE(reads, 40000 / 4.0);
}

// Recount from scratch: group k holds vertices [k*n/g, (k+1)*n/g); the file
// of a group lists every edge touching it; pair (i, j) with i <= j scans
// file i.
TEST(NowickiPartitionIo, ReadsMatchIndependentRecount) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const std::size_t n = 20 + 5 * s;
    const std::size_t m = std::min(n * (n - 1) / 2, n * (1 + s % 6));
    auto g = bench::gen_graph(n, m, s);
    auto r = nowicki_partition_io(g, n);
    const std::size_t groups = std::max<std::size_t>(1, (m + n - 1) / n);
    ASSERT_EQ(r.groups, groups);
    auto group_of = [&](std::size_t v) { return (v - 1) * groups / n; };
    std::vector<std::uint64_t> file(groups, 0);
    for (const auto& e : g.edges()) {
      const auto a = group_of(e.u), b = group_of(e.v);
      ++file[a];
      if (b != a) ++file[b];
    }
    std::uint64_t want = 0;
    for (std::size_t i = 0; i < groups; ++i) want += file[i] * (groups - i);
    EXPECT_EQ(r.report.total_io(), want) << "n=" << n << " m=" << m;
    EXPECT_EQ(r.report.phases().size(), groups * (groups + 1) / 2);
    EXPECT_EQ(r.analytic_io, m * groups);
    // Every edge lies in exactly one pair, so pair forests keep the MSF.
    EXPECT_DOUBLE_EQ(forest_weight(n, r.forest_edges), forest_weight(n, g.edges()));
  }
}

TEST(NowickiPartitionIo, RejectsEmptyGraph) {
  EXPECT_THROW(nowicki_partition_io(Graph::make(5, {}), 10), InstanceError);
}

TEST(MinimumSpanningForest, MatchesPrimOnSmallGraphs) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const std::size_t n = 8;
    auto g = bench::gen_graph(n, 12 + s % 10, s);
    std::vector<std::vector<double>> w(n + 1, std::vector<double>(n + 1, INFINITY));
    for (const auto& e : g.edges()) w[e.u][e.v] = w[e.v][e.u] = e.weight;
    std::vector<bool> in(n + 1, false);
    std::vector<double> d(n + 1, INFINITY);
    d[1] = 0;
    double total = 0;
    for (std::size_t it = 0; it < n; ++it) {
      std::size_t u = 0;
      for (std::size_t v = 1; v <= n; ++v)
        if (!in[v] && (u == 0 || d[v] < d[u])) u = v;
      in[u] = true;
      total += d[u];
      for (std::size_t v = 1; v <= n; ++v) d[v] = std::min(d[v], w[u][v]);
    }
    EXPECT_DOUBLE_EQ(forest_weight(n, g.edges()), total);
  }
}

TEST(MmSerialRun, SingleEdgeTrace) {
  auto g = Graph::make(2, {{1, 2, 1.0}});
  auto r = mm_serial_run(g, 0.1);
  EXPECT_EQ(r.report.total_io(), 6u);
  EXPECT_EQ(r.iterations, 6u);
  EXPECT_NEAR(r.state.x[0], 0.5 / std::pow(0.9, 5), 1e-12);
  EXPECT_NEAR(r.state.x[0], 0.8468, 1e-4);
  EXPECT_TRUE(r.state.frozen_edges[0]);
  EXPECT_EQ(mm_parallel_io_model(g, 0.1).total_io(), 6u);
}

TEST(MmSerialRun, ImmediateFreeze) {
  auto r = mm_serial_run(Graph::make(2, {{1, 2, 1.0}}), 0.3);
  EXPECT_EQ(r.report.total_io(), 1u);
  EXPECT_EQ(r.iterations, 1u);
}

TEST(MmSerialRun, ParameterChecks) {
  auto g = Graph::make(2, {{1, 2, 1.0}});
  EXPECT_THROW(mm_serial_run(g, 0.0), ParameterError);
  EXPECT_THROW(mm_serial_run(g, 0.5), ParameterError);
  EXPECT_THROW(mm_serial_run(g, -0.1), ParameterError);
  EXPECT_THROW(mm_serial_run(Graph::make(3, {}), 0.1), InstanceError);
}

TEST(MmSerialRun, TriangleLoadsStayBelowOne) {
  auto g = Graph::make(3, {{1, 2, 1.0}, {2, 3, 1.0}, {1, 3, 1.0}});
  auto r = mm_serial_run(g, 0.1);
  for (double y : r.state.vertex_loads(g)) EXPECT_LE(y, 1.0);
}

TEST(MmProperties, RandomGraphs) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const std::size_t n = 10 + 7 * s;
    const std::size_t m = std::min(n * (n - 1) / 2, 3 * n);
    const double eps = 0.05 + 0.05 * static_cast<double>(s % 4);
    auto g = bench::gen_graph(n, m, s);
    auto r = mm_serial_run(g, eps);
    for (double y : r.state.vertex_loads(g)) EXPECT_LE(y, 1.0);
    auto seq = r.report.io_sequence();
    EXPECT_TRUE(std::is_sorted(seq.rbegin(), seq.rend())) << "active edges must not grow";
    EXPECT_EQ(seq.front(), m);
    EXPECT_LE(r.iterations, mm_iteration_bound(n, eps));
    EXPECT_TRUE(std::all_of(r.state.frozen_edges.begin(), r.state.frozen_edges.end(), [](bool b) { return b; }));
    for (std::size_t machines : {1u, 3u, 8u})
      EXPECT_EQ(mm_parallel_io_model(g, eps, machines, s).io_sequence(), seq);
  }
}

TEST(MmIterationBound, Formula) {
  EXPECT_EQ(mm_iteration_bound(2, 0.1), static_cast<std::size_t>(std::ceil(std::log(2.0) / -std::log(0.9))) + 1);
  EXPECT_EQ(mm_iteration_bound(100, 0.1), 45u);
}

// ---------------------------------------------------------------------------

std::vector<Value> flatten_sorted(const SortInstance& s) { return s.sorted_values(); }

std::vector<Value> concat(const std::vector<std::vector<Value>>& parts) {
  std::vector<Value> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

TEST(TerasortSimulate, FitsInMemory) {
  auto inst = bench::gen_gop(16, 2, 5).sort();
  auto r = terasort_simulate(inst, {16, 2}, CostMatrix::uniform(2), 1);
  EXPECT_EQ(concat(r.output), flatten_sorted(inst));
  ASSERT_EQ(r.report.phases().size(), 3u);
  EXPECT_EQ(r.report.phases()[1].io_ops, 0u);
  EXPECT_EQ(r.report.phases()[2].io_ops, 0u);
  EXPECT_EQ(r.report.total_io(), 16u);
}

TEST(TerasortSimulate, RangePartitionedInputMovesNothing) {
  std::vector<std::vector<Value>> parts(4);
  for (Value v = 0; v < 400; ++v) parts[v / 100].push_back(v);
  auto inst = SortInstance::from_subsets(parts);
  // Sample everything so the splitters are the exact quartiles.
  auto r = terasort_simulate(inst, {400, 4}, CostMatrix::uniform(4, 5), 3);
  EXPECT_EQ(r.splitters, (std::vector<Value>{99, 199, 299}));
  EXPECT_EQ(r.report.phases()[1].comm_amount, 0);
  EXPECT_EQ(r.report.phases()[1].records_moved, 0u);
  EXPECT_EQ(concat(r.output), flatten_sorted(inst));
}

TEST(TerasortSimulate, RandomInstancesSortAndConserve) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const std::size_t p = 2 + s % 5;
    const std::size_t n = 50 + 97 * s;
    const std::size_t mem = 8 + 13 * (s % 7);
    auto g = bench::gen_gop(n, p, s, 1, 4);
    auto r = terasort_simulate(g.sort(), {mem, p}, g.cost(), s);
    EXPECT_EQ(concat(r.output), flatten_sorted(g.sort()));
    std::uint64_t crossing = 0;
    Amount priced = 0;
    for (std::size_t i = 0; i < p; ++i)
      for (Value x : g.sort().subsets()[i]) {
        const auto j = static_cast<std::size_t>(std::lower_bound(r.splitters.begin(), r.splitters.end(), x) -
                                                r.splitters.begin());
        if (j != i) {
          ++crossing;
          priced += g.cost()(i, j);
        }
      }
    EXPECT_EQ(r.report.phases()[1].records_moved, crossing);
    EXPECT_EQ(r.report.phases()[1].comm_amount, priced);
    EXPECT_EQ(std::accumulate(r.loads.begin(), r.loads.end(), std::uint64_t{0}), n);
    for (std::size_t j = 0; j < p; ++j) EXPECT_EQ(r.loads[j], r.output[j].size());
    EXPECT_EQ(r.report.phases()[0].io_ops, std::min(mem, n));
  }
}

TEST(TerasortSimulate, DimensionMismatch) {
  auto inst = bench::gen_gop(20, 2, 5).sort();
  EXPECT_THROW(terasort_simulate(inst, {10, 3}, CostMatrix::uniform(2)), InstanceError);
  EXPECT_THROW(terasort_simulate(inst, {10, 2}, CostMatrix::uniform(3)), InstanceError);
  EXPECT_THROW(terasort_simulate(inst, {1, 2}, CostMatrix::uniform(2)), ParameterError);
}

// ---------------------------------------------------------------------------

std::vector<IoSample> sweep_of(std::initializer_list<std::pair<double, double>> io) {
  std::vector<IoSample> out;
  double size = 10;
  for (auto [par, ser] : io) {
    out.push_back({size, par, ser});
    size *= 10;
  }
  return out;
}

TEST(Classifier, Classes) {
  EXPECT_EQ(classify_io_optimality(sweep_of({{9, 10}, {90, 100}, {900, 1000}, {9000, 10000}})), IoClass::kSuper);
  EXPECT_EQ(classify_io_optimality(sweep_of({{10, 10}, {100, 100}, {1000, 1000}, {10000, 10000}})), IoClass::kOptimal);
  EXPECT_EQ(classify_io_optimality(sweep_of({{40, 10}, {300, 100}, {2500, 1000}, {20000, 10000}})), IoClass::kOptimal);
  EXPECT_EQ(classify_io_optimality(sweep_of({{10, 10}, {200, 100}, {3000, 1000}, {40000, 10000}})), IoClass::kNon);
  EXPECT_EQ(classify_io_optimality(sweep_of({{10, 10}, {300, 100}, {2000, 1000}, {40000, 10000}})),
            IoClass::kInconclusive);
  EXPECT_EQ(classify_io_optimality(sweep_of({{100, 10}, {1000, 100}, {10000, 1000}, {100000, 10000}})),
            IoClass::kInconclusive);
  EXPECT_EQ(to_string(IoClass::kNon), "NON");
}

TEST(Classifier, Guards) {
  EXPECT_THROW(classify_io_optimality(sweep_of({{1, 1}, {1, 1}, {1, 1}})), GuardError);
  auto bad = sweep_of({{1, 1}, {1, 1}, {1, 1}, {1, 1}});
  bad[2].size = 1;
  EXPECT_THROW(classify_io_optimality(bad), InstanceError);
}

}  // namespace
}  // namespace empc
