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

#include <cstddef>
#include <vector>

#include "empc/core.hpp"

namespace empc {

/// Square min-cost assignment: choose mapping[j] (a row) for every column j
/// minimising sum_j weights[mapping[j]][j].
class AssignmentProblem {
 public:
  AssignmentProblem() = default;

  static AssignmentProblem from_rows(const std::vector<std::vector<Amount>>& rows);
  static AssignmentProblem from_matrix(SquareMatrix<Amount> weights);

  std::size_t size() const { return weights_.size(); }
  Amount weight(std::size_t row, std::size_t col) const { return weights_(row, col); }
  const SquareMatrix<Amount>& weights() const { return weights_; }

 private:
  explicit AssignmentProblem(SquareMatrix<Amount> w) : weights_(std::move(w)) {}

  SquareMatrix<Amount> weights_;
};

struct AssignmentResult {
  Assignment assignment;
  Amount cost = 0;
};

inline constexpr std::size_t kDefaultBruteForceLimit = 10;

Amount assignment_cost(const AssignmentProblem& prob, const Assignment& a);

/// Hungarian method on integer potentials, O(p^3). Among all optimal
/// assignments returns the lexicographically smallest mapping.
AssignmentResult lap_solve(const AssignmentProblem& prob);

/// Exhaustive p! enumeration with the same tie-break as lap_solve.
/// Throws GuardError when size() > max_size.
AssignmentResult lap_brute(const AssignmentProblem& prob, std::size_t max_size = kDefaultBruteForceLimit);

/// Uniform-cost surrogate of a redistribution instance:
/// weights[i][j] = colsum_j(T) - T[i][j], the data of column j that does
/// not already sit on row i.
AssignmentProblem drp_to_lap(const TransferMatrix& transfer);

}  // namespace empc
