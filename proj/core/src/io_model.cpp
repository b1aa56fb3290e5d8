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

void ExternalMemoryConfig::validate() const {
  if (main_memory < 2) throw ParameterError("main memory must hold at least 2 records, got " + std::to_string(main_memory));
  if (machines < 1) throw ParameterError("need at least one machine");
}

void IoReport::add_phase(IoPhase phase) {
  total_io_ += phase.io_ops;
  total_comm_ += phase.comm_amount;
  phases_.push_back(std::move(phase));
}

std::vector<std::uint64_t> IoReport::io_sequence() const {
  std::vector<std::uint64_t> out;
  out.reserve(phases_.size());
  for (const auto& ph : phases_) out.push_back(ph.io_ops);
  return out;
}

std::uint64_t io_sort_count(std::uint64_t records, std::uint64_t memory) {
  if (memory < 2) throw ParameterError("memory must be at least 2 records");
  if (records == 0) return 0;
  if (records <= memory) return records;
  std::uint64_t passes = 0;
  unsigned __int128 reach = 1;
  while (reach < records) {
    reach *= memory;
    ++passes;
  }
  return records * passes;
}

std::uint64_t kruskal_serial_io(std::uint64_t edges, std::uint64_t memory) {
  return io_sort_count(edges, memory) + edges;
}

}  // namespace empc
