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
#include "empc/lap.hpp"

namespace empc {

/// Data Redistribution Problem: choose the physical host of every virtual
/// machine so that sum_{i,j} T[i][j] * C[i][a[j]] is minimal.
class DrpInstance {
 public:
  DrpInstance() = default;

  static DrpInstance make(TransferMatrix transfer, CostMatrix cost);

  std::size_t p() const { return transfer_.p(); }
  const TransferMatrix& transfer() const { return transfer_; }
  const CostMatrix& cost() const { return cost_; }

  bool operator==(const DrpInstance&) const = default;

 private:
  DrpInstance(TransferMatrix t, CostMatrix c) : transfer_(std::move(t)), cost_(std::move(c)) {}

  TransferMatrix transfer_;
  CostMatrix cost_;
};

struct DrpSolution {
  Assignment assignment;
  Amount cost = 0;
};

/// Exact rational number num/den in lowest terms, den > 0.
struct Ratio {
  Amount numerator = 1;
  Amount denominator = 1;

  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
  /// approx <= ratio * exact, evaluated without rounding.
  bool admits(Amount approx, Amount exact) const;
};

inline constexpr std::size_t kDefaultExactDrpLimit = 10;
inline constexpr std::size_t kDefaultTspFbLimit = 6;

/// Exhaustive search over all p! assignments. Ties resolve to the
/// lexicographically smallest mapping. Throws GuardError when p > max_p.
DrpSolution drp_solve_exact(const DrpInstance& inst, std::size_t max_p = kDefaultExactDrpLimit);

/// Ignores C: solves the uniform-cost assignment on T and reports the true
/// cost of that assignment under C. Within c_max/c_min of optimal.
DrpSolution drp_solve_approx(const DrpInstance& inst);

/// c_max / c_min over off-diagonal entries.
Ratio ratio_bound(const CostMatrix& cost);

/// Travelling salesman on the complete bipartite graph K_{n,n};
/// w[i][j] weighs edge (v_{1,i}, v_{2,j}).
class TspFbInstance {
 public:
  TspFbInstance() = default;

  static TspFbInstance from_rows(const std::vector<std::vector<Amount>>& rows);

  std::size_t n() const { return weights_.size(); }
  Amount weight(std::size_t i, std::size_t j) const { return weights_(i, j); }
  const SquareMatrix<Amount>& weights() const { return weights_; }

  bool operator==(const TspFbInstance&) const = default;

 private:
  explicit TspFbInstance(SquareMatrix<Amount> w) : weights_(std::move(w)) {}

  SquareMatrix<Amount> weights_;
};

/// The 0/1 transfer pattern of the hardness construction for n >= 3: every
/// row carries exactly two ones and the bipartite (row, column) graph of the
/// ones is a single Hamilton cycle.
TransferMatrix tspfb_transfer_pattern(std::size_t n);

/// C = w (diagonal included, so the cost uses DiagonalRule::kAny) and
/// T = tspfb_transfer_pattern(n).
DrpInstance tspfb_to_drp(const TspFbInstance& t);

/// Minimum Hamilton-cycle weight of K_{n,n} by enumeration, n in [2, max_n].
Amount tspfb_brute(const TspFbInstance& t, std::size_t max_n = kDefaultTspFbLimit);

}  // namespace empc
