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

// Brute-force reference implementations used by the tests. They share no
// code with the solvers: permutations come from a plain recursive
// enumerator and every objective is recomputed from the raw matrices.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <tuple>
#include <vector>

namespace empc::oracle {

using Mat = std::vector<std::vector<std::int64_t>>;
using Perm = std::vector<std::size_t>;

// Calls f on every permutation of 0..n-1 in lexicographic order.
inline void for_each_perm(std::size_t n, const std::function<void(const Perm&)>& f) {
  Perm cur;
  std::vector<bool> used(n, false);
  std::function<void()> rec = [&] {
    if (cur.size() == n) {
      f(cur);
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      cur.push_back(v);
      rec();
      cur.pop_back();
      used[v] = false;
    }
  };
  rec();
}

struct Best {
  std::int64_t cost = std::numeric_limits<std::int64_t>::max();
  Perm perm;
};

// min over a of sum_j w[a[j]][j]; first minimum in lexicographic order.
inline Best assignment_min(const Mat& w) {
  Best best;
  for_each_perm(w.size(), [&](const Perm& a) {
    std::int64_t c = 0;
    for (std::size_t j = 0; j < a.size(); ++j) c += w[a[j]][j];
    if (c < best.cost) best = {c, a};
  });
  return best;
}

inline std::int64_t drp_cost(const Mat& t, const Mat& c, const Perm& a) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) s += t[i][j] * c[i][a[j]];
  return s;
}

inline Best drp_min(const Mat& t, const Mat& c) {
  Best best;
  for_each_perm(t.size(), [&](const Perm& a) {
    const std::int64_t v = drp_cost(t, c, a);
    if (v < best.cost) best = {v, a};
  });
  return best;
}

// Min Hamilton cycle of K_{n,n}: a cycle is a pair of permutations (s, r)
// visiting u_0 -> v_{s0} -> u_{r1} -> v_{s1} -> ... back to u_0.
inline std::int64_t bipartite_tsp(const Mat& w) {
  const std::size_t n = w.size();
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for_each_perm(n, [&](const Perm& us) {
    if (us[0] != 0) return;
    for_each_perm(n, [&](const Perm& vs) {
      std::int64_t c = 0;
      for (std::size_t k = 0; k < n; ++k) c += w[us[k]][vs[k]] + w[us[(k + 1) % n]][vs[k]];
      if (c < best) best = c;
    });
  });
  return best;
}

struct GopBest {
  double total = std::numeric_limits<double>::infinity();
  std::vector<std::int64_t> splitters;
  Perm perm;
  std::int64_t comm = 0;
};

inline double io_term(std::int64_t l) { return l <= 1 ? 0.0 : static_cast<double>(l) * std::log2(static_cast<double>(l)); }

// Enumerates every (p-1)-subset of the values by bitmask, then every
// assignment; interval membership is counted directly per element.
inline GopBest gop_min(const std::vector<std::vector<std::int64_t>>& subsets, const Mat& c) {
  const std::size_t p = subsets.size();
  std::vector<std::int64_t> all;
  for (const auto& s : subsets) all.insert(all.end(), s.begin(), s.end());
  std::sort(all.begin(), all.end());
  const std::size_t n = all.size();
  GopBest best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != p - 1) continue;
    std::vector<std::int64_t> sp;
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (1u << k)) sp.push_back(all[k]);
    Mat t(p, std::vector<std::int64_t>(p, 0));
    std::vector<std::int64_t> load(p, 0);
    for (std::size_t i = 0; i < p; ++i)
      for (std::int64_t x : subsets[i]) {
        std::size_t j = 0;
        while (j < p - 1 && x > sp[j]) ++j;
        ++t[i][j];
        ++load[j];
      }
    double io = 0.0;
    for (auto l : load) io = std::max(io, io_term(l));
    for_each_perm(p, [&](const Perm& a) {
      const std::int64_t comm = drp_cost(t, c, a);
      const double tot = static_cast<double>(comm) + io;
      // Masks run in increasing bit order, which is not lexicographic order
      // of splitter tuples; compare the tie-break explicitly.
      if (tot < best.total || (tot == best.total && std::tie(sp, a) < std::tie(best.splitters, best.perm)))
        best = {tot, sp, a, comm};
    });
  }
  return best;
}

}  // namespace empc::oracle
