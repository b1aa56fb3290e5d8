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

#include "empc/bench/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "empc/random.hpp"

namespace empc::bench {
namespace {

void check_range(Amount lo, Amount hi, const char* what) {
  if (!(0 < lo && lo <= hi)) {
    throw ParameterError(std::string(what) + " range must satisfy 0 < low <= high, got [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
  }
}

CostMatrix random_costs(std::size_t p, Amount lo, Amount hi, Rng& rng) {
  SquareMatrix<Amount> c(p, 0);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      if (i != j) c(i, j) = rng.uniform_int(lo, hi);
  return CostMatrix::from_matrix(std::move(c));
}

}  // namespace

DrpInstance gen_drp(std::size_t p, Amount cost_low, Amount cost_high, Amount mass_max, std::uint64_t seed) {
  if (p < 2) throw ParameterError("p must be at least 2");
  check_range(cost_low, cost_high, "cost");
  if (mass_max < 1) throw ParameterError("mass_max must be at least 1");
  Rng rng(seed);
  CostMatrix cost = random_costs(p, cost_low, cost_high, rng);
  SquareMatrix<Amount> t(p, 0);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) t(i, j) = rng.uniform_int(0, mass_max);
  return DrpInstance::make(TransferMatrix::from_matrix(std::move(t)), std::move(cost));
}

GopInstance gen_gop(std::size_t n, std::size_t p, std::uint64_t seed, Amount cost_low, Amount cost_high) {
  if (p < 2) throw ParameterError("p must be at least 2");
  if (n < p) throw ParameterError("n must be at least p");
  check_range(cost_low, cost_high, "cost");
  Rng rng(seed);
  std::vector<Value> pool(4 * n);
  std::iota(pool.begin(), pool.end(), Value{1});
  std::vector<std::vector<Value>> subsets(p);
  for (std::size_t k = 0; k < n; ++k) {
    std::swap(pool[k], pool[k + rng.index(pool.size() - k)]);
    subsets[rng.index(p)].push_back(pool[k]);
  }
  CostMatrix cost = random_costs(p, cost_low, cost_high, rng);
  return GopInstance::make(SortInstance::from_subsets(std::move(subsets)), std::move(cost));
}

Graph gen_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 1) throw ParameterError("graph needs at least one vertex");
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (m > pairs) {
    throw ParameterError("m = " + std::to_string(m) + " exceeds the " + std::to_string(pairs) + " vertex pairs of n = " +
                         std::to_string(n));
  }
  Rng rng(seed);
  auto key = [n](std::size_t u, std::size_t v) { return static_cast<std::uint64_t>(std::min(u, v)) * (n + 1) + std::max(u, v); };
  auto weight = [&rng] { return static_cast<double>(rng.uniform_int(1, 1'000'000)); };

  std::vector<Edge> edges;
  edges.reserve(m);
  std::unordered_set<std::uint64_t> used;
  if (m + 1 >= n && n >= 2) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{1});
    for (std::size_t k = n - 1; k > 0; --k) std::swap(order[k], order[rng.index(k + 1)]);
    for (std::size_t k = 1; k < n; ++k) {
      const std::size_t u = order[k];
      const std::size_t v = order[rng.index(k)];
      edges.push_back({std::min(u, v), std::max(u, v), weight()});
      used.insert(key(u, v));
    }
  }
  const std::size_t extra = m - edges.size();
  constexpr std::uint64_t kEnumerateLimit = 4'000'000;
  if (pairs <= kEnumerateLimit || extra * 2 > pairs) {
    std::vector<std::pair<std::size_t, std::size_t>> free;
    free.reserve(pairs - used.size());
    for (std::size_t u = 1; u <= n; ++u)
      for (std::size_t v = u + 1; v <= n; ++v)
        if (!used.count(key(u, v))) free.emplace_back(u, v);
    for (std::size_t k = 0; k < extra; ++k) {
      std::swap(free[k], free[k + rng.index(free.size() - k)]);
      edges.push_back({free[k].first, free[k].second, weight()});
    }
  } else {
    while (edges.size() < m) {
      const std::size_t u = 1 + rng.index(n);
      const std::size_t v = 1 + rng.index(n);
      if (u == v || !used.insert(key(u, v)).second) continue;
      edges.push_back({std::min(u, v), std::max(u, v), weight()});
    }
  }
  return Graph::make(n, std::move(edges));
}

TspFbInstance gen_tspfb(std::size_t n, Amount weight_low, Amount weight_high, std::uint64_t seed) {
  check_range(weight_low, weight_high, "weight");
  Rng rng(seed);
  std::vector<std::vector<Amount>> w(n, std::vector<Amount>(n));
  for (auto& row : w)
    for (auto& x : row) x = rng.uniform_int(weight_low, weight_high);
  return TspFbInstance::from_rows(w);
}

AssignmentProblem gen_lap(std::size_t p, Amount weight_max, std::uint64_t seed) {
  if (weight_max < 0) throw ParameterError("weight_max must be non-negative");
  Rng rng(seed);
  SquareMatrix<Amount> w(p, 0);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) w(i, j) = rng.uniform_int(0, weight_max);
  return AssignmentProblem::from_matrix(std::move(w));
}

}  // namespace empc::bench
