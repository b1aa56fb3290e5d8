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

#include "empc/gopsort.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace empc {

GopInstance GopInstance::make(SortInstance sort, CostMatrix cost) {
  if (sort.p() != cost.p()) {
    throw InstanceError("dimension mismatch: " + std::to_string(sort.p()) + " subsets but cost is " +
                        std::to_string(cost.p()) + "x" + std::to_string(cost.p()));
  }
  return GopInstance(std::move(sort), std::move(cost));
}

std::uint64_t gop_exact_work(std::size_t n, std::size_t p) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const std::size_t k = p - 1;
  if (k > n) return 0;
  unsigned __int128 work = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    work = work * (n - k + i) / i;
    if (work > kMax) return kMax;
  }
  for (std::size_t i = 2; i <= p; ++i) {
    work *= i;
    if (work > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(work);
}

GopSolution gop_solve_exact(const GopInstance& g, std::uint64_t work_limit) {
  const std::size_t p = g.p();
  const std::size_t n = g.n();
  if (n < p - 1) throw InstanceError("need at least p-1 = " + std::to_string(p - 1) + " elements to pick splitters");
  const std::uint64_t work = gop_exact_work(n, p);
  if (work > work_limit) {
    throw GuardError("exact sorting optimisation needs " + std::to_string(work) + " candidates > guard " +
                     std::to_string(work_limit));
  }

  // owner_prefix[i][r]: elements of S_i among the r smallest.
  const std::vector<Value> sorted = g.sort().sorted_values();
  std::vector<std::size_t> owner(n);
  {
    std::vector<std::pair<Value, std::size_t>> tagged;
    tagged.reserve(n);
    for (std::size_t i = 0; i < p; ++i)
      for (Value x : g.sort().subsets()[i]) tagged.emplace_back(x, i);
    std::sort(tagged.begin(), tagged.end());
    for (std::size_t r = 0; r < n; ++r) owner[r] = tagged[r].second;
  }
  std::vector<std::vector<Amount>> owner_prefix(p, std::vector<Amount>(n + 1, 0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i < p; ++i) owner_prefix[i][r + 1] = owner_prefix[i][r] + (owner[r] == i ? 1 : 0);

  const CostMatrix& cost = g.cost();
  const std::size_t k = p - 1;
  std::vector<std::size_t> pick(k);  // sorted ranks (0-based) of the splitters
  std::iota(pick.begin(), pick.end(), std::size_t{0});

  double best_total = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> best_pick = pick;
  std::vector<std::size_t> best_perm;
  std::vector<std::size_t> perm(p);
  SquareMatrix<Amount> placed(p, 0);
  std::vector<std::size_t> bounds(p + 1);

  while (true) {
    // Interval j covers sorted ranks [bounds[j], bounds[j+1]).
    bounds[0] = 0;
    for (std::size_t j = 0; j < k; ++j) bounds[j + 1] = pick[j] + 1;
    bounds[p] = n;
    Amount max_load = 0;
    for (std::size_t j = 0; j < p; ++j) max_load = std::max<Amount>(max_load, bounds[j + 1] - bounds[j]);
    const double io = sort_io_term(max_load);
    for (std::size_t j = 0; j < p; ++j) {
      for (std::size_t host = 0; host < p; ++host) {
        Amount c = 0;
        for (std::size_t i = 0; i < p; ++i) {
          c += (owner_prefix[i][bounds[j + 1]] - owner_prefix[i][bounds[j]]) * cost(i, host);
        }
        placed(j, host) = c;
      }
    }
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      Amount comm = 0;
      for (std::size_t j = 0; j < p; ++j) comm += placed(j, perm[j]);
      const double total = static_cast<double>(comm) + io;
      if (total < best_total) {
        best_total = total;
        best_pick = pick;
        best_perm = perm;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));

    // Next k-combination of [0, n) in lexicographic order.
    std::size_t pos = k;
    while (pos > 0 && pick[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++pick[pos - 1];
    for (std::size_t t = pos; t < k; ++t) pick[t] = pick[t - 1] + 1;
  }

  std::vector<Value> splitters(k);
  for (std::size_t j = 0; j < k; ++j) splitters[j] = sorted[best_pick[j]];
  return gop_objective(g.sort(), splitters, Assignment::from_zero_based(best_perm), cost);
}

std::vector<Value> equal_splitters(const SortInstance& inst) {
  const std::size_t n = inst.n();
  const std::size_t p = inst.p();
  if (n < p) {
    throw InstanceError("equal splitters need n >= p; got n = " + std::to_string(n) + ", p = " + std::to_string(p));
  }
  const std::vector<Value> sorted = inst.sorted_values();
  std::vector<Value> out(p - 1);
  for (std::size_t k = 1; k < p; ++k) {
    const std::size_t rank = std::max(k * n / p, k);
    out[k - 1] = sorted[rank - 1];
  }
  return out;
}

GopSolution gop_solve_approx(const GopInstance& g, DrpStrategy strategy) {
  const std::vector<Value> splitters = equal_splitters(g.sort());
  TransferAndLoad tl = derive_transfer_and_load(g.sort(), splitters);
  const DrpInstance drp = DrpInstance::make(std::move(tl.transfer), g.cost());
  const DrpSolution plan = strategy == DrpStrategy::kExact ? drp_solve_exact(drp) : drp_solve_approx(drp);
  return gop_objective(g.sort(), splitters, plan.assignment, g.cost());
}

}  // namespace empc
