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

#include "empc/bench/json_io.hpp"

#include <cmath>
#include <vector>

namespace empc::bench {
namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) throw InstanceError("instance must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InstanceError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t integer(const Json& v, const std::string& path) {
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::isfinite(d) && std::trunc(d) == d && std::fabs(d) < 9.0e15) return static_cast<std::int64_t>(d);
    throw InstanceError(path + " is " + v.dump() + "; expected an integer");
  }
  throw InstanceError(path + " must be a number, got " + std::string(v.type_name()));
}

double real(const Json& v, const std::string& path) {
  if (!v.is_number()) throw InstanceError(path + " must be a number, got " + std::string(v.type_name()));
  return v.get<double>();
}

const Json& array(const Json& v, const std::string& path) {
  if (!v.is_array()) throw InstanceError(path + " must be an array, got " + std::string(v.type_name()));
  return v;
}

std::vector<std::vector<std::int64_t>> int_rows(const Json& v, const std::string& name) {
  std::vector<std::vector<std::int64_t>> rows;
  const Json& outer = array(v, name);
  for (std::size_t i = 0; i < outer.size(); ++i) {
    const std::string row_path = name + "[" + std::to_string(i) + "]";
    const Json& inner = array(outer[i], row_path);
    std::vector<std::int64_t> row;
    for (std::size_t k = 0; k < inner.size(); ++k) row.push_back(integer(inner[k], row_path + "[" + std::to_string(k) + "]"));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::size_t count(const Json& j, const char* key) {
  const std::int64_t v = integer(member(j, key), key);
  if (v < 0) throw InstanceError(std::string(key) + " must be non-negative");
  return static_cast<std::size_t>(v);
}

void expect_size(std::size_t declared, std::size_t actual, const char* field, const char* key) {
  if (declared != actual) {
    throw InstanceError(std::string(key) + " = " + std::to_string(declared) + " but \"" + field + "\" has " +
                        std::to_string(actual) + " rows");
  }
}

Json rows_json(const SquareMatrix<Amount>& m) {
  Json out = Json::array();
  for (const auto& row : m.rows()) out.push_back(row);
  return out;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < stop; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw InstanceError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                        what);
  }
}

std::string_view to_string(InstanceKind k) {
  switch (k) {
    case InstanceKind::kDrp:
      return "drp";
    case InstanceKind::kGop:
      return "gop";
    case InstanceKind::kGraph:
      return "graph";
    case InstanceKind::kTspFb:
      return "tspfb";
  }
  return "drp";
}

InstanceKind detect_kind(const Json& j) {
  if (!j.is_object()) throw InstanceError("instance must be a JSON object");
  if (j.contains("transfer")) return InstanceKind::kDrp;
  if (j.contains("subsets")) return InstanceKind::kGop;
  if (j.contains("edges")) return InstanceKind::kGraph;
  if (j.contains("weights")) return InstanceKind::kTspFb;
  throw InstanceError("cannot tell the instance kind: expected one of \"transfer\", \"subsets\", \"edges\", \"weights\"");
}

Json to_json(const DrpInstance& inst) {
  Json j;
  j["p"] = inst.p();
  j["transfer"] = rows_json(inst.transfer().entries());
  j["cost"] = rows_json(inst.cost().entries());
  if (inst.cost().diagonal_rule() == DiagonalRule::kAny) j["nonzero_diagonal"] = true;
  return j;
}

Json to_json(const GopInstance& inst) {
  Json j;
  j["p"] = inst.p();
  j["subsets"] = inst.sort().subsets();
  j["cost"] = rows_json(inst.cost().entries());
  return j;
}

Json to_json(const Graph& g) {
  Json j;
  j["n"] = g.n_vertices();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(Json::array({e.u, e.v, e.weight}));
  j["edges"] = std::move(edges);
  return j;
}

Json to_json(const TspFbInstance& t) {
  Json j;
  j["n"] = t.n();
  j["weights"] = rows_json(t.weights());
  return j;
}

Json to_json(const IoReport& r) {
  Json phases = Json::array();
  for (const IoPhase& ph : r.phases()) {
    Json p;
    p["label"] = ph.label;
    p["io_ops"] = ph.io_ops;
    p["comm_amount"] = ph.comm_amount;
    p["records_moved"] = ph.records_moved;
    phases.push_back(std::move(p));
  }
  Json j;
  j["phases"] = std::move(phases);
  j["total_io"] = r.total_io();
  j["total_comm"] = r.total_comm();
  return j;
}

Json to_json(const GopSolution& s) {
  Json j;
  j["splitters"] = s.splitters;
  j["mapping"] = s.assignment.one_based();
  j["comm_cost"] = s.comm_cost;
  j["io_cost"] = s.io_cost;
  j["total_cost"] = s.total_cost;
  return j;
}

DrpInstance drp_from_json(const Json& j) {
  const std::size_t p = count(j, "p");
  auto transfer = int_rows(member(j, "transfer"), "transfer");
  auto cost = int_rows(member(j, "cost"), "cost");
  expect_size(p, transfer.size(), "transfer", "p");
  expect_size(p, cost.size(), "cost", "p");
  DiagonalRule rule = DiagonalRule::kZero;
  if (auto it = j.find("nonzero_diagonal"); it != j.end()) {
    if (!it->is_boolean()) throw InstanceError("nonzero_diagonal must be a boolean");
    if (it->get<bool>()) rule = DiagonalRule::kAny;
  }
  return DrpInstance::make(TransferMatrix::from_rows(transfer), CostMatrix::from_rows(cost, rule));
}

GopInstance gop_from_json(const Json& j) {
  const std::size_t p = count(j, "p");
  auto subsets = int_rows(member(j, "subsets"), "subsets");
  auto cost = int_rows(member(j, "cost"), "cost");
  expect_size(p, subsets.size(), "subsets", "p");
  expect_size(p, cost.size(), "cost", "p");
  return GopInstance::make(SortInstance::from_subsets(std::move(subsets)), CostMatrix::from_rows(cost));
}

Graph graph_from_json(const Json& j) {
  const std::size_t n = count(j, "n");
  const Json& edges = array(member(j, "edges"), "edges");
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string path = "edges[" + std::to_string(k) + "]";
    const Json& e = array(edges[k], path);
    if (e.size() != 3) throw InstanceError(path + " must be [u, v, w]");
    const std::int64_t u = integer(e[0], path + "[0]");
    const std::int64_t v = integer(e[1], path + "[1]");
    if (u < 1 || v < 1) throw InstanceError(path + " has a vertex id below 1");
    out.push_back({static_cast<std::size_t>(u), static_cast<std::size_t>(v), real(e[2], path + "[2]")});
  }
  return Graph::make(n, std::move(out));
}

TspFbInstance tspfb_from_json(const Json& j) {
  const std::size_t n = count(j, "n");
  auto w = int_rows(member(j, "weights"), "weights");
  expect_size(n, w.size(), "weights", "n");
  return TspFbInstance::from_rows(w);
}

}  // namespace empc::bench
