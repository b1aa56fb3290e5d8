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

#include "empc/lap.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace empc {

AssignmentProblem AssignmentProblem::from_rows(const std::vector<std::vector<Amount>>& rows) {
  return from_matrix(SquareMatrix<Amount>::from_rows(rows, "weights"));
}

AssignmentProblem AssignmentProblem::from_matrix(SquareMatrix<Amount> weights) {
  if (weights.size() == 0) throw InstanceError("assignment problem is empty");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    for (std::size_t j = 0; j < weights.size(); ++j) {
      if (weights(i, j) < 0) {
        throw InstanceError("weights[" + std::to_string(i) + "][" + std::to_string(j) + "] is " +
                            std::to_string(weights(i, j)) + "; weights must be non-negative");
      }
    }
  }
  return AssignmentProblem(std::move(weights));
}

Amount assignment_cost(const AssignmentProblem& prob, const Assignment& a) {
  if (a.size() != prob.size()) throw InstanceError("assignment size does not match problem size");
  Amount total = 0;
  for (std::size_t j = 0; j < prob.size(); ++j) total += prob.weight(a[j], j);
  return total;
}

namespace {

struct Duals {
  std::vector<Amount> row;           // u
  std::vector<Amount> col;           // v
  std::vector<std::size_t> row_of;   // row matched to each column
};

// Shortest augmenting path Hungarian method, 1-based internally. Keeps
// u[i] + v[j] <= w[i][j] with equality on matched pairs.
Duals hungarian(const AssignmentProblem& prob) {
  const std::size_t n = prob.size();
  constexpr Amount kInf = std::numeric_limits<Amount>::max() / 4;
  std::vector<Amount> u(n + 1, 0), v(n + 1, 0), minv(n + 1);
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
  std::vector<bool> used(n + 1);

  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), false);
    do {
      used[j0] = true;
      const std::size_t i0 = match[j0];
      Amount delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const Amount cur = prob.weight(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Duals d{std::vector<Amount>(n), std::vector<Amount>(n), std::vector<std::size_t>(n)};
  for (std::size_t i = 0; i < n; ++i) d.row[i] = u[i + 1];
  for (std::size_t j = 0; j < n; ++j) {
    d.col[j] = v[j + 1];
    d.row_of[j] = match[j + 1] - 1;
  }
  return d;
}

// Every optimal assignment uses only zero-reduced-cost pairs for any optimal
// dual, so the lexicographically smallest optimum is the lexicographically
// smallest perfect matching of the tight subgraph. Built column by column:
// row i can take column j iff i is j's current partner or an alternating
// path leads from i's current column back to j's partner.
std::vector<std::size_t> lexicographic_tight_matching(const AssignmentProblem& prob, const Duals& d) {
  const std::size_t n = prob.size();
  auto tight = [&](std::size_t i, std::size_t j) { return prob.weight(i, j) - d.row[i] - d.col[j] == 0; };

  std::vector<std::size_t> row_of = d.row_of;
  std::vector<std::size_t> col_of(n);
  for (std::size_t j = 0; j < n; ++j) col_of[row_of[j]] = j;
  std::vector<bool> fixed_row(n, false), fixed_col(n, false);

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> next_row(n);
  std::vector<bool> reaches(n), row_seen(n);
  std::vector<std::size_t> queue;
  queue.reserve(n);

  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t target = row_of[j];

    // Reverse search: columns c whose alternating path ends at `target`.
    std::fill(reaches.begin(), reaches.end(), false);
    std::fill(row_seen.begin(), row_seen.end(), false);
    std::fill(next_row.begin(), next_row.end(), kNone);
    queue.assign(1, target);
    row_seen[target] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t r = queue[head];
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j || fixed_col[c] || reaches[c] || row_of[c] == r || !tight(r, c)) continue;
        reaches[c] = true;
        next_row[c] = r;
        if (!row_seen[row_of[c]]) {
          row_seen[row_of[c]] = true;
          queue.push_back(row_of[c]);
        }
      }
    }

    std::size_t chosen = target;
    for (std::size_t i = 0; i < n; ++i) {
      if (fixed_row[i] || !tight(i, j)) continue;
      if (i == target || reaches[col_of[i]]) {
        chosen = i;
        break;
      }
    }

    if (chosen != target) {
      // Rotate along chosen's column -> ... -> target.
      std::size_t c = col_of[chosen];
      row_of[j] = chosen;
      col_of[chosen] = j;
      while (true) {
        const std::size_t r = next_row[c];
        const std::size_t next_c = col_of[r];
        row_of[c] = r;
        col_of[r] = c;
        if (r == target) break;
        c = next_c;
      }
    }
    fixed_col[j] = true;
    fixed_row[chosen] = true;
  }
  return row_of;
}

}  // namespace

AssignmentResult lap_solve(const AssignmentProblem& prob) {
  const Duals duals = hungarian(prob);
  Assignment a = Assignment::from_zero_based(lexicographic_tight_matching(prob, duals));
  const Amount cost = assignment_cost(prob, a);
  return {std::move(a), cost};
}

AssignmentResult lap_brute(const AssignmentProblem& prob, std::size_t max_size) {
  const std::size_t n = prob.size();
  if (n > max_size) {
    throw GuardError("brute-force assignment refuses p = " + std::to_string(n) + " > guard " +
                     std::to_string(max_size));
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::size_t> best = perm;
  Amount best_cost = std::numeric_limits<Amount>::max();
  do {
    Amount c = 0;
    for (std::size_t j = 0; j < n; ++j) c += prob.weight(perm[j], j);
    if (c < best_cost) {
      best_cost = c;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {Assignment::from_zero_based(std::move(best)), best_cost};
}

AssignmentProblem drp_to_lap(const TransferMatrix& transfer) {
  const std::size_t p = transfer.p();
  SquareMatrix<Amount> w(p, 0);
  for (std::size_t j = 0; j < p; ++j) {
    const Amount col = transfer.column_sum(j);
    for (std::size_t i = 0; i < p; ++i) w(i, j) = col - transfer(i, j);
  }
  return AssignmentProblem::from_matrix(std::move(w));
}

}  // namespace empc
