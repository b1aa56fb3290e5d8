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

// Domain types of the cost model: p machines joined by a weighted complete
// graph, unit-cost IO, and the two objectives built on them (redistribution
// cost and the sorting total of communication plus max-load IO).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "empc/matrix.hpp"

namespace empc {

/// Exact integer cost or data amount.
using Amount = std::int64_t;
/// Sort key.
using Value = std::int64_t;

enum class DiagonalRule {
  kZero,  ///< C[i][i] must be 0 (the model's own cost matrices).
  kAny,   ///< diagonal may be positive (reduction-built instances).
};

/// Per-unit transfer cost from physical machine i to physical machine j.
/// Off-diagonal entries are strictly positive so that the minimum
/// off-diagonal cost is a meaningful normaliser.
class CostMatrix {
 public:
  CostMatrix() = default;

  static CostMatrix from_rows(const std::vector<std::vector<Amount>>& rows,
                              DiagonalRule rule = DiagonalRule::kZero);
  static CostMatrix from_matrix(SquareMatrix<Amount> m, DiagonalRule rule = DiagonalRule::kZero);
  /// Every off-diagonal entry equal to `c`.
  static CostMatrix uniform(std::size_t p, Amount c = 1);

  std::size_t p() const { return entries_.size(); }
  Amount operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const SquareMatrix<Amount>& entries() const { return entries_; }
  DiagonalRule diagonal_rule() const { return rule_; }

  Amount max_off_diagonal() const;
  Amount min_off_diagonal() const;

  bool operator==(const CostMatrix&) const = default;

 private:
  CostMatrix(SquareMatrix<Amount> m, DiagonalRule rule) : entries_(std::move(m)), rule_(rule) {}

  SquareMatrix<Amount> entries_;
  DiagonalRule rule_ = DiagonalRule::kZero;
};

/// T[i][j]: amount of data on physical machine i destined for virtual
/// machine j.
class TransferMatrix {
 public:
  TransferMatrix() = default;

  static TransferMatrix from_rows(const std::vector<std::vector<Amount>>& rows);
  static TransferMatrix from_matrix(SquareMatrix<Amount> m);

  std::size_t p() const { return entries_.size(); }
  Amount operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const SquareMatrix<Amount>& entries() const { return entries_; }

  Amount column_sum(std::size_t j) const;
  Amount total() const;

  bool operator==(const TransferMatrix&) const = default;

 private:
  explicit TransferMatrix(SquareMatrix<Amount> m) : entries_(std::move(m)) {}

  SquareMatrix<Amount> entries_;
};

/// Bijection from virtual machines to physical machines. Stored 0-based;
/// the 1-based view is what external formats use.
class Assignment {
 public:
  Assignment() = default;

  static Assignment identity(std::size_t p);
  static Assignment from_zero_based(std::vector<std::size_t> mapping);
  static Assignment from_one_based(const std::vector<std::int64_t>& mapping);

  std::size_t size() const { return mapping_.size(); }
  /// Physical machine (0-based) hosting virtual machine `j`.
  std::size_t operator[](std::size_t j) const { return mapping_[j]; }
  std::span<const std::size_t> mapping() const { return mapping_; }
  std::vector<std::int64_t> one_based() const;

  /// Lexicographic order on the mapping sequence.
  auto operator<=>(const Assignment&) const = default;

 private:
  explicit Assignment(std::vector<std::size_t> m) : mapping_(std::move(m)) {}

  std::vector<std::size_t> mapping_;
};

/// n distinct integers split over p > 1 machines.
class SortInstance {
 public:
  SortInstance() = default;

  static SortInstance from_subsets(std::vector<std::vector<Value>> subsets);

  std::size_t p() const { return subsets_.size(); }
  std::size_t n() const { return n_; }
  const std::vector<std::vector<Value>>& subsets() const { return subsets_; }

  /// All elements in ascending order.
  std::vector<Value> sorted_values() const;

  bool operator==(const SortInstance&) const = default;

 private:
  explicit SortInstance(std::vector<std::vector<Value>> s, std::size_t n) : subsets_(std::move(s)), n_(n) {}

  std::vector<std::vector<Value>> subsets_;
  std::size_t n_ = 0;
};

struct GopSolution {
  std::vector<Value> splitters;  // p-1 ascending elements of S
  Assignment assignment;
  Amount comm_cost = 0;
  double io_cost = 0.0;
  double total_cost = 0.0;  // comm_cost + io_cost
};

struct TransferAndLoad {
  TransferMatrix transfer;
  std::vector<Amount> loads;  // loads[j] = elements of S in interval j
};

/// sum_{i,j} T[i][j] * C[i][a[j]].
Amount drp_cost(const TransferMatrix& transfer, const CostMatrix& cost, const Assignment& assignment);

/// Range-partitions the instance by `splitters` (strictly ascending,
/// p-1 of them). Interval j is (s_{j-1}, s_j] with s_0 = -inf, s_p = +inf.
TransferAndLoad derive_transfer_and_load(const SortInstance& inst, std::span<const Value> splitters);

/// L * log2(L); 0 for L <= 1.
double sort_io_term(Amount load);

/// Evaluates the sorting objective for fixed splitters and assignment.
GopSolution gop_objective(const SortInstance& inst, std::span<const Value> splitters,
                          const Assignment& assignment, const CostMatrix& cost);

}  // namespace empc
