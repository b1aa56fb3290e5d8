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

#include "empc/drp.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace empc {

DrpInstance DrpInstance::make(TransferMatrix transfer, CostMatrix cost) {
  if (transfer.p() != cost.p()) {
    throw InstanceError("dimension mismatch: transfer is " + std::to_string(transfer.p()) + "x" +
                        std::to_string(transfer.p()) + " but cost is " + std::to_string(cost.p()) + "x" +
                        std::to_string(cost.p()));
  }
  return DrpInstance(std::move(transfer), std::move(cost));
}

bool Ratio::admits(Amount approx, Amount exact) const {
  const __int128 lhs = static_cast<__int128>(approx) * denominator;
  const __int128 rhs = static_cast<__int128>(exact) * numerator;
  return lhs <= rhs;
}

DrpSolution drp_solve_exact(const DrpInstance& inst, std::size_t max_p) {
  const std::size_t p = inst.p();
  if (p > max_p) {
    throw GuardError("exact redistribution refuses p = " + std::to_string(p) + " > guard " + std::to_string(max_p));
  }
  // placed[j][k]: cost of hosting virtual j on physical k.
  SquareMatrix<Amount> placed(p, 0);
  for (std::size_t j = 0; j < p; ++j)
    for (std::size_t k = 0; k < p; ++k)
      for (std::size_t i = 0; i < p; ++i) placed(j, k) += inst.transfer()(i, j) * inst.cost()(i, k);

  std::vector<std::size_t> perm(p);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::size_t> best = perm;
  Amount best_cost = std::numeric_limits<Amount>::max();
  do {
    Amount c = 0;
    for (std::size_t j = 0; j < p; ++j) c += placed(j, perm[j]);
    if (c < best_cost) {
      best_cost = c;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {Assignment::from_zero_based(std::move(best)), best_cost};
}

DrpSolution drp_solve_approx(const DrpInstance& inst) {
  AssignmentResult lap = lap_solve(drp_to_lap(inst.transfer()));
  const Amount cost = drp_cost(inst.transfer(), inst.cost(), lap.assignment);
  return {std::move(lap.assignment), cost};
}

Ratio ratio_bound(const CostMatrix& cost) {
  const Amount hi = cost.max_off_diagonal();
  const Amount lo = cost.min_off_diagonal();
  const Amount g = std::gcd(hi, lo);
  return {hi / g, lo / g};
}

TspFbInstance TspFbInstance::from_rows(const std::vector<std::vector<Amount>>& rows) {
  SquareMatrix<Amount> w = SquareMatrix<Amount>::from_rows(rows, "weights");
  if (w.size() < 2) throw InstanceError("TSP-FB instance needs n >= 2, got " + std::to_string(w.size()));
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w(i, j) <= 0) {
        throw InstanceError("weights[" + std::to_string(i) + "][" + std::to_string(j) + "] is " +
                            std::to_string(w(i, j)) + "; edge weights must be positive");
      }
    }
  }
  return TspFbInstance(std::move(w));
}

TransferMatrix tspfb_transfer_pattern(std::size_t n) {
  if (n < 3) throw InstanceError("reduction needs n >= 3, got " + std::to_string(n));
  SquareMatrix<Amount> t(n, 0);
  // Indices below are 1-based as in the construction; `col` converts.
  auto mod = [n](std::size_t a, std::size_t b) { return (a + n - b % n) % n; };  // (a - b) mod n, a >= 0
  auto set = [&](std::size_t i, std::size_t j) { t(i - 1, j - 1) = 1; };
  for (std::size_t i = 1; i <= n; ++i) {
    if (n % 2 == 1) {
      set(i, 1 + (i + 1) % n);
      set(i, 1 + mod(i, 1));
    } else if (i == 1) {
      set(1, 2);
      set(1, n - 1);
    } else if (i == 2) {
      set(2, 1);
      set(2, n);
    } else {
      // Columns i and i-2 for every i > 2. Even rows then chain c2 .. c_n and
      // odd rows chain c1 .. c_{n-1}, closing one 2n-cycle through rows 1, 2.
      // Taking i and i+2 on even rows coincides at n = 4 but splits the
      // cycle (and unbalances columns) from n = 6 on.
      set(i, 1 + mod(i, 1));
      set(i, 1 + mod(i, 3));
    }
  }
  return TransferMatrix::from_matrix(std::move(t));
}

DrpInstance tspfb_to_drp(const TspFbInstance& t) {
  return DrpInstance::make(tspfb_transfer_pattern(t.n()), CostMatrix::from_matrix(t.weights(), DiagonalRule::kAny));
}

Amount tspfb_brute(const TspFbInstance& t, std::size_t max_n) {
  const std::size_t n = t.n();
  if (n > max_n) {
    throw GuardError("Hamilton-cycle enumeration refuses n = " + std::to_string(n) + " > guard " +
                     std::to_string(max_n));
  }
  // Cycle v1[r0] v2[c0] v1[r1] v2[c1] ... v1[r_{n-1}] v2[c_{n-1}] back to v1[r0];
  // r0 is pinned to vertex 0 to drop rotations.
  std::vector<std::size_t> rows(n), cols(n);
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  std::iota(cols.begin(), cols.end(), std::size_t{0});
  Amount best = std::numeric_limits<Amount>::max();
  do {
    std::sort(cols.begin(), cols.end());
    do {
      Amount w = 0;
      for (std::size_t k = 0; k < n; ++k) w += t.weight(rows[k], cols[k]) + t.weight(rows[(k + 1) % n], cols[k]);
      best = std::min(best, w);
    } while (std::next_permutation(cols.begin(), cols.end()));
  } while (std::next_permutation(rows.begin() + 1, rows.end()));
  return best;
}

}  // namespace empc
