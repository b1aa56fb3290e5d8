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

#include <cmath>
#include <string>

#include "empc/iosim.hpp"

namespace empc {
namespace {

void check_matching_input(const Graph& g, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw ParameterError("epsilon must lie in (0, 1/2), got " + std::to_string(epsilon));
  }
  if (g.m() == 0) throw InstanceError("fractional matching needs a graph with at least one edge");
}

std::vector<std::vector<std::size_t>> incident_edges(const Graph& g) {
  std::vector<std::vector<std::size_t>> adj(g.n_vertices());
  for (std::size_t k = 0; k < g.m(); ++k) {
    adj[g.edges()[k].u - 1].push_back(k);
    adj[g.edges()[k].v - 1].push_back(k);
  }
  return adj;
}

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::vector<double> FractionalMatchingState::vertex_loads(const Graph& g) const {
  std::vector<double> y(g.n_vertices(), 0.0);
  for (std::size_t k = 0; k < g.m(); ++k) {
    y[g.edges()[k].u - 1] += x[k];
    y[g.edges()[k].v - 1] += x[k];
  }
  return y;
}

MatchingRun mm_serial_run(const Graph& g, double epsilon) {
  check_matching_input(g, epsilon);
  const std::size_t n = g.n_vertices();
  const std::size_t m = g.m();
  const auto adj = incident_edges(g);
  const double threshold = 1.0 - 2.0 * epsilon;

  MatchingRun run;
  FractionalMatchingState& st = run.state;
  st.epsilon = epsilon;
  st.x.assign(m, 1.0 / static_cast<double>(n));
  st.frozen_vertices.assign(n, false);
  st.frozen_edges.assign(m, false);

  std::size_t active = m;
  std::vector<std::size_t> to_freeze;
  while (active > 0) {
    ++run.iterations;
    run.report.add_phase({"iteration " + std::to_string(run.iterations), active, 0, 0});

    to_freeze.clear();
    for (std::size_t v = 0; v < n; ++v) {
      if (st.frozen_vertices[v] || adj[v].empty()) continue;
      double y = 0.0;
      for (std::size_t k : adj[v]) y += st.x[k];
      if (y >= threshold) to_freeze.push_back(v);
    }
    for (std::size_t v : to_freeze) {
      st.frozen_vertices[v] = true;
      for (std::size_t k : adj[v]) {
        if (!st.frozen_edges[k]) {
          st.frozen_edges[k] = true;
          --active;
        }
      }
    }
    for (std::size_t k = 0; k < m; ++k) {
      if (!st.frozen_edges[k]) st.x[k] = st.x[k] / (1.0 - epsilon);
    }
  }
  return run;
}

IoReport mm_parallel_io_model(const Graph& g, double epsilon, std::size_t machines, std::uint64_t seed) {
  check_matching_input(g, epsilon);
  if (machines < 1) throw ParameterError("need at least one machine");
  const std::size_t n = g.n_vertices();
  const std::size_t m = g.m();
  const auto adj = incident_edges(g);
  const double threshold = 1.0 - 2.0 * epsilon;

  std::vector<std::size_t> home(n);
  for (std::size_t v = 0; v < n; ++v) home[v] = splitmix64(seed ^ splitmix64(v)) % machines;
  std::vector<std::vector<std::size_t>> owned_vertices(machines), owned_edges(machines);
  for (std::size_t v = 0; v < n; ++v) owned_vertices[home[v]].push_back(v);
  for (std::size_t k = 0; k < m; ++k) owned_edges[home[g.edges()[k].u - 1]].push_back(k);

  // Every active edge has been boosted the same number of times, so an edge
  // weight is weight_after[boosts[e]].
  std::vector<double> weight_after{1.0 / static_cast<double>(n)};
  std::vector<std::size_t> boosts(m, 0);
  std::vector<bool> edge_frozen(m, false), vertex_frozen(n, false);

  IoReport report;
  std::vector<std::size_t> frozen_now;
  for (std::size_t iteration = 1;; ++iteration) {
    std::uint64_t scanned = 0;
    for (std::size_t mach = 0; mach < machines; ++mach) {
      for (std::size_t k : owned_edges[mach]) scanned += edge_frozen[k] ? 0 : 1;
    }
    if (scanned == 0) break;
    report.add_phase({"iteration " + std::to_string(iteration), scanned, 0, 0});

    frozen_now.clear();
    for (std::size_t mach = 0; mach < machines; ++mach) {
      for (std::size_t v : owned_vertices[mach]) {
        if (vertex_frozen[v] || adj[v].empty()) continue;
        double y = 0.0;
        for (std::size_t k : adj[v]) y += weight_after[boosts[k]];
        if (y >= threshold) frozen_now.push_back(v);
      }
    }
    for (std::size_t v : frozen_now) {
      vertex_frozen[v] = true;
      for (std::size_t k : adj[v]) edge_frozen[k] = true;
    }
    weight_after.push_back(weight_after.back() / (1.0 - epsilon));
    for (std::size_t k = 0; k < m; ++k) {
      if (!edge_frozen[k]) ++boosts[k];
    }
  }
  return report;
}

std::size_t mm_iteration_bound(std::size_t n_vertices, double epsilon) {
  const double boosts = std::ceil(std::log(static_cast<double>(n_vertices)) / -std::log1p(-epsilon));
  return static_cast<std::size_t>(boosts) + 1;
}

}  // namespace empc
