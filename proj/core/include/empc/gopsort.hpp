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
#include <cstdint>
#include <vector>

#include "empc/core.hpp"
#include "empc/drp.hpp"

namespace empc {

/// Joint splitter selection and machine assignment for range-partitioned
/// sorting: minimise communication plus max_i L_i log2 L_i.
class GopInstance {
 public:
  GopInstance() = default;

  static GopInstance make(SortInstance sort, CostMatrix cost);

  std::size_t p() const { return sort_.p(); }
  std::size_t n() const { return sort_.n(); }
  const SortInstance& sort() const { return sort_; }
  const CostMatrix& cost() const { return cost_; }

  bool operator==(const GopInstance&) const = default;

 private:
  GopInstance(SortInstance s, CostMatrix c) : sort_(std::move(s)), cost_(std::move(c)) {}

  SortInstance sort_;
  CostMatrix cost_;
};

inline constexpr std::uint64_t kDefaultGopWorkLimit = 5'000'000;

/// C(n, p-1) * p!, saturating at UINT64_MAX.
std::uint64_t gop_exact_work(std::size_t n, std::size_t p);

/// Enumerates every (p-1)-subset of S as splitters and every assignment.
/// Ties: smallest splitter sequence first, then smallest mapping.
GopSolution gop_solve_exact(const GopInstance& g, std::uint64_t work_limit = kDefaultGopWorkLimit);

/// Splitter k (k = 1..p-1) is the element of rank max(floor(k*n/p), k),
/// ranks 1-based in sorted order. Requires n >= p.
std::vector<Value> equal_splitters(const SortInstance& inst);

enum class DrpStrategy {
  kLinearAssignment,  ///< the polynomial approximation (default)
  kExact,             ///< extension: exhaustive redistribution, p <= 10
};

/// Equal-rank splitters, then the redistribution solved by `strategy`.
GopSolution gop_solve_approx(const GopInstance& g, DrpStrategy strategy = DrpStrategy::kLinearAssignment);

}  // namespace empc
