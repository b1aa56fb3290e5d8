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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "empc/iosim.hpp"

namespace empc {

Graph Graph::make(std::size_t n_vertices, std::vector<Edge> edges) {
  if (n_vertices < 1) throw InstanceError("graph needs at least one vertex");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const Edge& e = edges[k];
    const std::string where = "edges[" + std::to_string(k) + "]";
    if (e.u < 1 || e.u > n_vertices || e.v < 1 || e.v > n_vertices) {
      throw InstanceError(where + " = (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                          ") has an endpoint outside [1, " + std::to_string(n_vertices) + "]");
    }
    if (e.u == e.v) throw InstanceError(where + " is a self-loop on vertex " + std::to_string(e.u));
    if (!std::isfinite(e.weight)) throw InstanceError(where + " has a non-finite weight");
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      throw InstanceError(where + " duplicates edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
    }
  }
  return Graph(n_vertices, std::move(edges));
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<std::size_t> minimum_spanning_forest(std::size_t n_vertices, std::span<const Edge> edges) {
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return edges[a].weight < edges[b].weight; });
  DisjointSets dsu(n_vertices + 1);
  std::vector<std::size_t> forest;
  for (std::size_t k : order) {
    if (dsu.unite(edges[k].u, edges[k].v)) forest.push_back(k);
  }
  std::sort(forest.begin(), forest.end());
  return forest;
}

}  // namespace empc
