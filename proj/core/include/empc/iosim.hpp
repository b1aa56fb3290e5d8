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

#pragma once

// IO accounting for external-memory executions. One IO is one record moved
// between a machine's main memory and its external memory; block size is
// not modelled.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "empc/core.hpp"

namespace empc {

struct ExternalMemoryConfig {
  std::size_t main_memory = 1000;  // records held in main memory, M >= 2
  std::size_t machines = 1;        // p >= 1

  void validate() const;
};

struct IoPhase {
  std::string label;
  std::uint64_t io_ops = 0;
  Amount comm_amount = 0;        // records moved, priced by the cost matrix
  std::uint64_t records_moved = 0;

  bool operator==(const IoPhase&) const = default;
};

class IoReport {
 public:
  void add_phase(IoPhase phase);

  const std::vector<IoPhase>& phases() const { return phases_; }
  std::uint64_t total_io() const { return total_io_; }
  Amount total_comm() const { return total_comm_; }
  std::vector<std::uint64_t> io_sequence() const;

  bool operator==(const IoReport&) const = default;

 private:
  std::vector<IoPhase> phases_;
  std::uint64_t total_io_ = 0;
  Amount total_comm_ = 0;
};

// ---------------------------------------------------------------------------
// Serial cost model

/// Sorting N records with M records of memory: 0 for N = 0, N when the
/// input fits (N <= M), otherwise N * ceil(log_M N).
std::uint64_t io_sort_count(std::uint64_t records, std::uint64_t memory);

/// Kruskal on a single machine: sort the edges, then one scan.
std::uint64_t kruskal_serial_io(std::uint64_t edges, std::uint64_t memory);

// ---------------------------------------------------------------------------
// Graphs

struct Edge {
  std::size_t u = 0;  // 1-based
  std::size_t v = 0;  // 1-based
  double weight = 0.0;

  bool operator==(const Edge&) const = default;
};

/// Simple undirected graph on vertices 1..n.
class Graph {
 public:
  Graph() = default;

  static Graph make(std::size_t n_vertices, std::vector<Edge> edges);

  std::size_t n_vertices() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool operator==(const Graph&) const = default;

 private:
  Graph(std::size_t n, std::vector<Edge> e) : n_(n), edges_(std::move(e)) {}

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// Indices of a minimum spanning forest of `edges` (Kruskal, ties by index).
std::vector<std::size_t> minimum_spanning_forest(std::size_t n_vertices, std::span<const Edge> edges);

// ---------------------------------------------------------------------------
// Edge-partitioned MST sparsification

struct PartitionIoResult {
  IoReport report;                  // one phase per group pair (i <= j)
  std::size_t groups = 0;           // ceil(m / n)
  std::uint64_t analytic_io = 0;    // m * ceil(m / n)
  std::vector<Edge> forest_edges;   // union of the per-pair spanning forests
  std::size_t largest_subproblem = 0;
  std::size_t subproblems_over_memory = 0;  // pair edge sets larger than M
};

/// Splits the vertices into ceil(m/n) contiguous groups; each edge is kept in
/// the external file of both endpoint groups. Computing the forest of group
/// pair (i, j), i <= j, loads E_{i,j} by scanning group i's file, so every
/// scanned edge costs one read.
PartitionIoResult nowicki_partition_io(const Graph& g, std::size_t main_memory);

// ---------------------------------------------------------------------------
// Fractional matching by freezing

struct FractionalMatchingState {
  std::vector<double> x;               // per edge
  std::vector<bool> frozen_vertices;   // index v-1
  std::vector<bool> frozen_edges;
  double epsilon = 0.1;

  /// y_v = sum of x_e over edges at v, index v-1.
  std::vector<double> vertex_loads(const Graph& g) const;
};

struct MatchingRun {
  FractionalMatchingState state;
  IoReport report;                  // one phase per iteration
  std::size_t iterations = 0;
};

/// Starts with x_e = 1/n; each iteration scans the active edges (one IO
/// each), freezes every vertex with y_v >= 1 - 2*epsilon together with its
/// edges, then boosts the remaining active edges by 1/(1 - epsilon).
MatchingRun mm_serial_run(const Graph& g, double epsilon);

/// Vertex-partitioned execution on `machines` machines: each machine owns a
/// random share of the vertices and scans the active edges whose first
/// endpoint it owns. Per-iteration totals come from its own boost counters.
IoReport mm_parallel_io_model(const Graph& g, double epsilon, std::size_t machines = 4, std::uint64_t seed = 0);

/// ceil(log_{1/(1-epsilon)} n) + 1.
std::size_t mm_iteration_bound(std::size_t n_vertices, double epsilon);

// ---------------------------------------------------------------------------
// TeraSort

struct TerasortResult {
  std::vector<std::vector<Value>> output;  // per machine, ascending
  std::vector<Value> splitters;
  std::vector<std::uint64_t> loads;
  IoReport report;                         // sample, redistribute, merge
};

/// Phase 1 samples min(M, n) records (one IO each) and ships them to
/// machine 1, which broadcasts p-1 splitters. Phase 2 sends interval j to
/// machine j; a receive buffer of M records is sorted and spilled whenever
/// a record arrives to a full buffer (one IO per spilled record). Phase 3
/// merges the spilled runs with the resident buffer, rereading spilled
/// records once per merge pass.
TerasortResult terasort_simulate(const SortInstance& inst, const ExternalMemoryConfig& cfg, const CostMatrix& cost,
                                 std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Classification

enum class IoClass { kSuper, kOptimal, kNon, kInconclusive };

std::string_view to_string(IoClass c);

struct IoSample {
  double size = 0.0;
  double parallel_io = 0.0;
  double serial_io = 0.0;
};

struct ClassifierConfig {
  double optimal_bound = 8.0;   // K
  double growth = 1.5;          // end-to-end ratio growth for NON
  std::size_t min_points = 4;
};

/// Finite-sweep surrogate of the asymptotic classes, checked in order:
/// SUPER   parallel <= serial at every size and < at one or more;
/// OPTIMAL every ratio <= K and the ratio never increases;
/// NON     the ratio strictly increases and grows by >= `growth` overall;
/// otherwise INCONCLUSIVE.
IoClass classify_io_optimality(std::span<const IoSample> sweep, const ClassifierConfig& cfg = {});

}  // namespace empc
