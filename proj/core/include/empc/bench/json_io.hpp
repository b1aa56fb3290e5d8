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

// JSON instance formats:
//   DRP     {"p": int, "transfer": [[int]], "cost": [[int]]}
//           optional "nonzero_diagonal": true for reduction-built costs
//   GOP     {"p": int, "subsets": [[int]], "cost": [[int]]}
//   Graph   {"n": int, "edges": [[u, v, w]]}
//   TSP-FB  {"n": int, "weights": [[int]]}
// Costs and amounts are exact integers; a number with a fractional part is
// rejected.

#include <string>
#include <string_view>

#include <json.hpp>

#include "empc/core.hpp"
#include "empc/drp.hpp"
#include "empc/gopsort.hpp"
#include "empc/iosim.hpp"

namespace empc::bench {

using Json = nlohmann::ordered_json;

/// Throws InstanceError carrying the line and column of the first syntax
/// error.
Json parse_json(std::string_view text);

enum class InstanceKind { kDrp, kGop, kGraph, kTspFb };

std::string_view to_string(InstanceKind k);
/// Identifies the format by its distinguishing key.
InstanceKind detect_kind(const Json& j);

Json to_json(const DrpInstance& inst);
Json to_json(const GopInstance& inst);
Json to_json(const Graph& g);
Json to_json(const TspFbInstance& t);
Json to_json(const IoReport& r);
Json to_json(const GopSolution& s);

DrpInstance drp_from_json(const Json& j);
GopInstance gop_from_json(const Json& j);
Graph graph_from_json(const Json& j);
TspFbInstance tspfb_from_json(const Json& j);

}  // namespace empc::bench
