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

// Parameter sweeps producing CSV tables. Column layouts per kind:
//   drp-ratio    size,trial,seed,exact_cost,approx_cost,ratio,bound,status
//   gop-ratio    size,trial,seed,p,exact_total,approx_total,ratio,bound,status
//   terasort-io  size,trial,seed,parallel_io,serial_io,ratio,status
//   mst-io       size,trial,seed,m,groups,parallel_io,analytic_io,serial_io,ratio,status
//   mm-io        size,trial,seed,m,iterations,iteration_bound,parallel_io,serial_io,ratio,status
// The last row starts with "summary"; its ratio column holds the maximum
// ratio and its status column the verdict (ok / violation for ratio kinds,
// the IO class for IO kinds).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "empc/core.hpp"
#include "empc/iosim.hpp"

namespace empc::bench {

enum class SweepKind { kDrpRatio, kGopRatio, kTerasortIo, kMstIo, kMmIo };

std::string_view to_string(SweepKind k);
SweepKind parse_sweep_kind(std::string_view name);

struct SweepConfig {
  Amount cost_high = 10;        // off-diagonal costs drawn from [1, cost_high]
  Amount mass_max = 100;        // drp-ratio transfer entries in [0, mass_max]
  std::size_t machines = 0;     // 0 = kind default (gop 2, terasort 4, mm 4)
  std::size_t main_memory = 0;  // 0 = kind default (terasort 1000, mst n)
  double epsilon = 0.1;
  std::uint64_t guard = 0;      // 0 = solver default
};

struct SweepSpec {
  SweepKind kind = SweepKind::kDrpRatio;
  std::vector<std::size_t> sizes;  // p for drp-ratio, n otherwise
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  SweepConfig config;

  void validate() const;
};

struct SweepTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;  // summary row last
  std::optional<IoClass> classification;
  double max_ratio = 0.0;
  std::size_t violations = 0;
  std::size_t skipped = 0;

  std::string to_csv() const;
};

SweepTable run_sweep(const SweepSpec& spec);

/// Shortest round-trip decimal, '.' separator, independent of locale.
std::string format_number(double x);

}  // namespace empc::bench
