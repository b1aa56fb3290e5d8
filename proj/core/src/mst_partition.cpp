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

#include <algorithm>
#include <string>

#include "empc/iosim.hpp"

namespace empc {

PartitionIoResult nowicki_partition_io(const Graph& g, std::size_t main_memory) {
  if (main_memory < 2) throw ParameterError("main memory must hold at least 2 records");
  const std::size_t n = g.n_vertices();
  const std::size_t m = g.m();
  if (n < 2) throw InstanceError("edge partitioning needs at least 2 vertices");
  if (m == 0) throw InstanceError("edge partitioning needs at least one edge");

  PartitionIoResult out;
  out.groups = std::max<std::size_t>(1, (m + n - 1) / n);
  out.analytic_io = static_cast<std::uint64_t>(m) * out.groups;
  const std::size_t groups = out.groups;
  auto group_of = [&](std::size_t v) { return (v - 1) * groups / n; };

  std::vector<std::vector<std::size_t>> files(groups);
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t a = group_of(g.edges()[k].u);
    const std::size_t b = group_of(g.edges()[k].v);
    files[a].push_back(k);
    if (b != a) files[b].push_back(k);
  }

  std::vector<Edge> pair_edges;
  for (std::size_t i = 0; i < groups; ++i) {
    for (std::size_t j = i; j < groups; ++j) {
      pair_edges.clear();
      for (std::size_t k : files[i]) {
        const Edge& e = g.edges()[k];
        const std::size_t a = group_of(e.u);
        const std::size_t b = group_of(e.v);
        if (std::min(a, b) == i && std::max(a, b) == j) pair_edges.push_back(e);
      }
      out.largest_subproblem = std::max(out.largest_subproblem, pair_edges.size());
      if (pair_edges.size() > main_memory) ++out.subproblems_over_memory;
      for (std::size_t k : minimum_spanning_forest(n, pair_edges)) out.forest_edges.push_back(pair_edges[k]);

      out.report.add_phase({"E[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]",
                            static_cast<std::uint64_t>(files[i].size()), 0, 0});
    }
  }
  return out;
}

}  // namespace empc
