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

#include <string>

#include "empc/iosim.hpp"

namespace empc {

std::string_view to_string(IoClass c) {
  switch (c) {
    case IoClass::kSuper:
      return "SUPER";
    case IoClass::kOptimal:
      return "OPTIMAL";
    case IoClass::kNon:
      return "NON";
    case IoClass::kInconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

IoClass classify_io_optimality(std::span<const IoSample> sweep, const ClassifierConfig& cfg) {
  if (sweep.size() < cfg.min_points) {
    throw GuardError("classification needs at least " + std::to_string(cfg.min_points) + " sweep points, got " +
                     std::to_string(sweep.size()));
  }
  for (std::size_t k = 0; k < sweep.size(); ++k) {
    if (!(sweep[k].serial_io > 0.0) || sweep[k].parallel_io < 0.0) {
      throw InstanceError("sweep point " + std::to_string(k) + " needs positive serial IO and non-negative parallel IO");
    }
    if (k > 0 && !(sweep[k].size > sweep[k - 1].size)) {
      throw InstanceError("sweep sizes must be strictly ascending");
    }
  }

  bool never_above = true;
  bool once_below = false;
  for (const auto& s : sweep) {
    never_above = never_above && s.parallel_io <= s.serial_io;
    once_below = once_below || s.parallel_io < s.serial_io;
  }
  if (never_above && once_below) return IoClass::kSuper;

  constexpr double kRelTol = 1e-9;
  std::vector<double> ratio;
  for (const auto& s : sweep) ratio.push_back(s.parallel_io / s.serial_io);

  bool bounded = true;
  bool non_increasing = true;
  bool increasing = true;
  for (std::size_t k = 0; k < ratio.size(); ++k) {
    bounded = bounded && ratio[k] <= cfg.optimal_bound;
    if (k == 0) continue;
    non_increasing = non_increasing && ratio[k] <= ratio[k - 1] * (1.0 + kRelTol);
    increasing = increasing && ratio[k] > ratio[k - 1] * (1.0 + kRelTol);
  }
  if (bounded && non_increasing) return IoClass::kOptimal;
  if (increasing && ratio.back() >= cfg.growth * ratio.front()) return IoClass::kNon;
  return IoClass::kInconclusive;
}

}  // namespace empc
