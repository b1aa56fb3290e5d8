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

// Seeded instance generators. Every generator is a pure function of its
// arguments: the same seed yields the same instance on every platform.

#include <cstddef>
#include <cstdint>

#include "empc/core.hpp"
#include "empc/drp.hpp"
#include "empc/gopsort.hpp"
#include "empc/iosim.hpp"
#include "empc/lap.hpp"

namespace empc::bench {

/// Off-diagonal costs uniform in [cost_low, cost_high], transfer entries
/// uniform in [0, mass_max].
DrpInstance gen_drp(std::size_t p, Amount cost_low, Amount cost_high, Amount mass_max, std::uint64_t seed);

/// n distinct values drawn from [1, 4n], each placed on a uniformly random
/// machine; off-diagonal costs uniform in [cost_low, cost_high].
GopInstance gen_gop(std::size_t n, std::size_t p, std::uint64_t seed, Amount cost_low = 1, Amount cost_high = 1);

/// Simple graph with m edges and integer-valued weights in [1, 10^6]. When
/// m >= n-1 a random spanning tree is laid down first, so the graph is
/// connected.
Graph gen_graph(std::size_t n, std::size_t m, std::uint64_t seed);

TspFbInstance gen_tspfb(std::size_t n, Amount weight_low, Amount weight_high, std::uint64_t seed);

AssignmentProblem gen_lap(std::size_t p, Amount weight_max, std::uint64_t seed);

}  // namespace empc::bench
