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

#include "empc/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace empc {
namespace {

std::string entry_name(const char* what, std::size_t i, std::size_t j) {
  return std::string(what) + "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

}  // namespace

CostMatrix CostMatrix::from_rows(const std::vector<std::vector<Amount>>& rows, DiagonalRule rule) {
  return from_matrix(SquareMatrix<Amount>::from_rows(rows, "cost"), rule);
}

CostMatrix CostMatrix::from_matrix(SquareMatrix<Amount> m, DiagonalRule rule) {
  const std::size_t p = m.size();
  if (p < 2) throw InstanceError("cost matrix needs at least 2 machines, got " + std::to_string(p));
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      const Amount c = m(i, j);
      if (c < 0) {
        throw InstanceError(entry_name("cost", i, j) + " is " + std::to_string(c) + "; costs must be non-negative");
      }
      if (i == j && c != 0 && rule == DiagonalRule::kZero) {
        throw InstanceError(entry_name("cost", i, j) + " is " + std::to_string(c) + "; the diagonal must be 0");
      }
      if (i != j && c == 0) {
        throw InstanceError(entry_name("cost", i, j) + " is 0; off-diagonal costs must be positive");
      }
    }
  }
  return CostMatrix(std::move(m), rule);
}

CostMatrix CostMatrix::uniform(std::size_t p, Amount c) {
  SquareMatrix<Amount> m(p, c);
  for (std::size_t i = 0; i < p; ++i) m(i, i) = 0;
  return from_matrix(std::move(m));
}

Amount CostMatrix::max_off_diagonal() const {
  Amount best = 0;
  for (std::size_t i = 0; i < p(); ++i)
    for (std::size_t j = 0; j < p(); ++j)
      if (i != j) best = std::max(best, entries_(i, j));
  return best;
}

Amount CostMatrix::min_off_diagonal() const {
  Amount best = max_off_diagonal();
  for (std::size_t i = 0; i < p(); ++i)
    for (std::size_t j = 0; j < p(); ++j)
      if (i != j) best = std::min(best, entries_(i, j));
  return best;
}

TransferMatrix TransferMatrix::from_rows(const std::vector<std::vector<Amount>>& rows) {
  return from_matrix(SquareMatrix<Amount>::from_rows(rows, "transfer"));
}

TransferMatrix TransferMatrix::from_matrix(SquareMatrix<Amount> m) {
  if (m.size() == 0) throw InstanceError("transfer matrix is empty");
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m(i, j) < 0) {
        throw InstanceError(entry_name("transfer", i, j) + " is " + std::to_string(m(i, j)) +
                            "; amounts must be non-negative");
      }
    }
  }
  return TransferMatrix(std::move(m));
}

Amount TransferMatrix::column_sum(std::size_t j) const {
  Amount s = 0;
  for (std::size_t i = 0; i < p(); ++i) s += entries_(i, j);
  return s;
}

Amount TransferMatrix::total() const {
  Amount s = 0;
  for (std::size_t j = 0; j < p(); ++j) s += column_sum(j);
  return s;
}

Assignment Assignment::identity(std::size_t p) {
  std::vector<std::size_t> m(p);
  for (std::size_t j = 0; j < p; ++j) m[j] = j;
  return Assignment(std::move(m));
}

Assignment Assignment::from_zero_based(std::vector<std::size_t> mapping) {
  std::vector<bool> seen(mapping.size(), false);
  for (std::size_t j = 0; j < mapping.size(); ++j) {
    const std::size_t i = mapping[j];
    if (i >= mapping.size()) {
      throw InstanceError("mapping[" + std::to_string(j) + "] = " + std::to_string(i) + " is out of range");
    }
    if (seen[i]) throw InstanceError("mapping is not a permutation: machine " + std::to_string(i) + " repeats");
    seen[i] = true;
  }
  return Assignment(std::move(mapping));
}

Assignment Assignment::from_one_based(const std::vector<std::int64_t>& mapping) {
  std::vector<std::size_t> m(mapping.size());
  for (std::size_t j = 0; j < mapping.size(); ++j) {
    if (mapping[j] < 1 || mapping[j] > static_cast<std::int64_t>(mapping.size())) {
      throw InstanceError("mapping[" + std::to_string(j) + "] = " + std::to_string(mapping[j]) +
                          " is outside [1, " + std::to_string(mapping.size()) + "]");
    }
    m[j] = static_cast<std::size_t>(mapping[j] - 1);
  }
  return from_zero_based(std::move(m));
}

std::vector<std::int64_t> Assignment::one_based() const {
  std::vector<std::int64_t> out(mapping_.size());
  for (std::size_t j = 0; j < mapping_.size(); ++j) out[j] = static_cast<std::int64_t>(mapping_[j]) + 1;
  return out;
}

SortInstance SortInstance::from_subsets(std::vector<std::vector<Value>> subsets) {
  if (subsets.size() < 2) {
    throw InstanceError("sort instance needs p > 1 subsets, got " + std::to_string(subsets.size()));
  }
  std::vector<Value> all;
  for (const auto& s : subsets) all.insert(all.end(), s.begin(), s.end());
  std::sort(all.begin(), all.end());
  if (auto dup = std::adjacent_find(all.begin(), all.end()); dup != all.end()) {
    throw InstanceError("sort instance elements must be distinct; " + std::to_string(*dup) + " occurs twice");
  }
  const std::size_t n = all.size();
  return SortInstance(std::move(subsets), n);
}

std::vector<Value> SortInstance::sorted_values() const {
  std::vector<Value> all;
  all.reserve(n_);
  for (const auto& s : subsets_) all.insert(all.end(), s.begin(), s.end());
  std::sort(all.begin(), all.end());
  return all;
}

Amount drp_cost(const TransferMatrix& transfer, const CostMatrix& cost, const Assignment& assignment) {
  const std::size_t p = transfer.p();
  if (cost.p() != p || assignment.size() != p) {
    throw InstanceError("dimension mismatch: transfer is " + std::to_string(p) + "x" + std::to_string(p) +
                        ", cost " + std::to_string(cost.p()) + ", assignment " + std::to_string(assignment.size()));
  }
  Amount total = 0;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) total += transfer(i, j) * cost(i, assignment[j]);
  return total;
}

TransferAndLoad derive_transfer_and_load(const SortInstance& inst, std::span<const Value> splitters) {
  const std::size_t p = inst.p();
  if (splitters.size() + 1 != p) {
    throw InstanceError("expected " + std::to_string(p - 1) + " splitters, got " + std::to_string(splitters.size()));
  }
  for (std::size_t k = 1; k < splitters.size(); ++k) {
    if (splitters[k - 1] >= splitters[k]) {
      throw InstanceError("splitters must be strictly ascending; splitter " + std::to_string(k) + " (" +
                          std::to_string(splitters[k]) + ") does not exceed its predecessor");
    }
  }
  SquareMatrix<Amount> t(p, 0);
  for (std::size_t i = 0; i < p; ++i) {
    for (Value x : inst.subsets()[i]) {
      // First splitter >= x closes the interval holding x.
      const auto j = static_cast<std::size_t>(std::lower_bound(splitters.begin(), splitters.end(), x) - splitters.begin());
      ++t(i, j);
    }
  }
  TransferAndLoad out{TransferMatrix::from_matrix(std::move(t)), std::vector<Amount>(p, 0)};
  for (std::size_t j = 0; j < p; ++j) out.loads[j] = out.transfer.column_sum(j);
  return out;
}

double sort_io_term(Amount load) {
  if (load <= 1) return 0.0;
  const double l = static_cast<double>(load);
  return l * std::log2(l);
}

GopSolution gop_objective(const SortInstance& inst, std::span<const Value> splitters, const Assignment& assignment,
                          const CostMatrix& cost) {
  if (cost.p() != inst.p()) {
    throw InstanceError("dimension mismatch: instance has " + std::to_string(inst.p()) + " machines, cost matrix " +
                        std::to_string(cost.p()));
  }
  const TransferAndLoad tl = derive_transfer_and_load(inst, splitters);
  GopSolution sol;
  sol.splitters.assign(splitters.begin(), splitters.end());
  sol.assignment = assignment;
  sol.comm_cost = drp_cost(tl.transfer, cost, assignment);
  sol.io_cost = sort_io_term(*std::max_element(tl.loads.begin(), tl.loads.end()));
  sol.total_cost = static_cast<double>(sol.comm_cost) + sol.io_cost;
  return sol;
}

}  // namespace empc
