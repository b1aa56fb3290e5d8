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
#include <functional>
#include <queue>
#include <string>
#include <tuple>

#include "empc/iosim.hpp"
#include "empc/random.hpp"

namespace empc {
namespace {

// Merge passes needed to combine `runs` sorted runs with fan-in `memory`.
std::uint64_t merge_passes(std::uint64_t runs, std::uint64_t memory) {
  std::uint64_t passes = 0;
  unsigned __int128 reach = 1;
  while (reach < runs) {
    reach *= memory;
    ++passes;
  }
  return passes;
}

std::vector<Value> kway_merge(std::vector<std::vector<Value>>& runs) {
  using Head = std::tuple<Value, std::size_t, std::size_t>;  // value, run, position
  std::priority_queue<Head, std::vector<Head>, std::greater<>> heap;
  std::size_t total = 0;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    total += runs[r].size();
    if (!runs[r].empty()) heap.emplace(runs[r][0], r, 0);
  }
  std::vector<Value> out;
  out.reserve(total);
  while (!heap.empty()) {
    auto [value, r, pos] = heap.top();
    heap.pop();
    out.push_back(value);
    if (pos + 1 < runs[r].size()) heap.emplace(runs[r][pos + 1], r, pos + 1);
  }
  return out;
}

}  // namespace

TerasortResult terasort_simulate(const SortInstance& inst, const ExternalMemoryConfig& cfg, const CostMatrix& cost,
                                 std::uint64_t seed) {
  cfg.validate();
  const std::size_t p = inst.p();
  if (cfg.machines != p || cost.p() != p) {
    throw InstanceError("dimension mismatch: instance has " + std::to_string(p) + " machines, config " +
                        std::to_string(cfg.machines) + ", cost matrix " + std::to_string(cost.p()));
  }
  const std::size_t n = inst.n();
  const std::size_t memory = cfg.main_memory;
  const std::size_t sample_size = std::min(memory, n);
  if (sample_size + 1 < p) {
    throw InstanceError("sample of " + std::to_string(sample_size) + " records cannot yield " +
                        std::to_string(p - 1) + " distinct splitters");
  }

  TerasortResult out;
  Rng rng(seed);

  // Phase 1: proportional sample (largest remainder), ship to machine 1,
  // broadcast the splitters.
  std::vector<std::size_t> quota(p, 0);
  {
    std::vector<std::pair<std::uint64_t, std::size_t>> remainders;
    std::size_t assigned = 0;
    for (std::size_t i = 0; i < p; ++i) {
      const std::uint64_t scaled = static_cast<std::uint64_t>(sample_size) * inst.subsets()[i].size();
      quota[i] = n == 0 ? 0 : scaled / n;
      assigned += quota[i];
      remainders.emplace_back(n == 0 ? 0 : scaled % n, i);
    }
    std::stable_sort(remainders.begin(), remainders.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t k = 0; assigned < sample_size; ++k, ++assigned) ++quota[remainders[k].second];
  }
  std::vector<Value> sample;
  IoPhase phase1{"phase 1: sample and split", 0, 0, 0};
  for (std::size_t i = 0; i < p; ++i) {
    std::vector<Value> local = inst.subsets()[i];
    for (std::size_t k = 0; k < quota[i]; ++k) {
      std::swap(local[k], local[k + rng.index(local.size() - k)]);
      sample.push_back(local[k]);
    }
    phase1.io_ops += quota[i];
    if (i != 0) {
      phase1.comm_amount += static_cast<Amount>(quota[i]) * cost(i, 0);
      phase1.records_moved += quota[i];
    }
  }
  std::sort(sample.begin(), sample.end());
  out.splitters.resize(p - 1);
  for (std::size_t k = 1; k < p; ++k) out.splitters[k - 1] = sample[std::max(k * sample_size / p, k) - 1];
  for (std::size_t j = 1; j < p; ++j) {
    phase1.comm_amount += static_cast<Amount>(p - 1) * cost(0, j);
    phase1.records_moved += p - 1;
  }
  out.report.add_phase(std::move(phase1));

  // Phase 2: range redistribution into bounded receive buffers.
  std::vector<std::vector<Value>> buffer(p);
  std::vector<std::vector<std::vector<Value>>> spilled(p);
  IoPhase phase2{"phase 2: redistribute and pre-sort", 0, 0, 0};
  out.loads.assign(p, 0);
  for (std::size_t i = 0; i < p; ++i) {
    for (Value x : inst.subsets()[i]) {
      const auto j = static_cast<std::size_t>(
          std::lower_bound(out.splitters.begin(), out.splitters.end(), x) - out.splitters.begin());
      if (j != i) {
        phase2.comm_amount += cost(i, j);
        ++phase2.records_moved;
      }
      if (buffer[j].size() == memory) {
        std::sort(buffer[j].begin(), buffer[j].end());
        phase2.io_ops += buffer[j].size();
        spilled[j].push_back(std::move(buffer[j]));
        buffer[j].clear();
      }
      buffer[j].push_back(x);
      ++out.loads[j];
    }
  }
  out.report.add_phase(std::move(phase2));

  // Phase 3: merge spilled runs with the resident buffer.
  IoPhase phase3{"phase 3: merge", 0, 0, 0};
  out.output.resize(p);
  for (std::size_t j = 0; j < p; ++j) {
    std::sort(buffer[j].begin(), buffer[j].end());
    if (spilled[j].empty()) {
      out.output[j] = std::move(buffer[j]);
      continue;
    }
    std::uint64_t spilled_records = 0;
    for (const auto& run : spilled[j]) spilled_records += run.size();
    const std::uint64_t runs = spilled[j].size() + (buffer[j].empty() ? 0 : 1);
    const std::uint64_t passes = merge_passes(runs, memory);
    // Final pass rereads spilled records; earlier passes write and reread all.
    phase3.io_ops += spilled_records + (passes - 1) * 2 * out.loads[j];
    spilled[j].push_back(std::move(buffer[j]));
    out.output[j] = kway_merge(spilled[j]);
  }
  out.report.add_phase(std::move(phase3));
  return out;
}

}  // namespace empc
