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

// empc: solvers, simulators and sweeps for the external-memory parallel
// cost model. JSON in, JSON out; summaries on stderr.
//
// Exit codes: 0 success, 1 guard exceeded / infeasible, 2 bad input.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "empc/bench/generators.hpp"
#include "empc/bench/json_io.hpp"
#include "empc/bench/sweep.hpp"
#include "empc/drp.hpp"
#include "empc/gopsort.hpp"
#include "empc/iosim.hpp"
#include "empc/lap.hpp"

namespace {

using empc::bench::Json;

constexpr int kExitOk = 0;
constexpr int kExitGuard = 1;
constexpr int kExitBadInput = 2;

struct IoOptions {
  std::string input = "-";
  std::string output = "-";
  bool pretty = false;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw empc::InstanceError("cannot open input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw empc::InstanceError("cannot open output file " + path);
  out << text;
}

void write_json(const IoOptions& io, const Json& j) { write_text(io.output, j.dump(io.pretty ? 2 : -1) + "\n"); }

Json load(const IoOptions& io) { return empc::bench::parse_json(read_input(io.input)); }

void add_io(CLI::App* cmd, IoOptions& io) {
  cmd->add_option("-i,--input", io.input, "instance JSON file, '-' for stdin")->capture_default_str();
  cmd->add_option("-o,--output", io.output, "result file, '-' for stdout")->capture_default_str();
  cmd->add_flag("--pretty", io.pretty, "indent JSON output");
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw empc::ParameterError("--sizes expects comma-separated positive integers, got \"" + text + "\"");
    }
    out.push_back(std::stoull(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"empc: redistribution and sorting cost solvers, IO simulators and sweeps"};
  app.require_subcommand(1, 1);

  IoOptions io;
  std::uint64_t guard = 0;
  std::uint64_t seed = 0;
  std::size_t memory = 0;
  double epsilon = 0.1;
  std::size_t machines = 0;

  auto* drp_exact = app.add_subcommand("drp-exact", "optimal redistribution by enumeration (p <= guard, default 10)");
  add_io(drp_exact, io);
  drp_exact->add_option("--guard", guard, "largest p to enumerate");

  auto* drp_approx = app.add_subcommand("drp-approx", "redistribution via the uniform-cost linear assignment");
  add_io(drp_approx, io);

  auto* gop_exact = app.add_subcommand("gop-exact", "optimal splitters and assignment by enumeration");
  add_io(gop_exact, io);
  gop_exact->add_option("--guard", guard, "largest C(n,p-1)*p! candidate count (default 5000000)");

  bool exact_drp = false;
  auto* gop_approx = app.add_subcommand("gop-approx", "equal-rank splitters plus approximate redistribution");
  add_io(gop_approx, io);
  gop_approx->add_flag("--exact-drp", exact_drp, "extension: solve the redistribution step exactly (p <= 10)");

  bool verify = false;
  auto* reduce = app.add_subcommand("reduce-tspfb", "build the redistribution instance of a bipartite TSP instance");
  add_io(reduce, io);
  reduce->add_flag("--verify", verify, "also compare minimum Hamilton cycle and optimal redistribution cost");
  reduce->add_option("--guard", guard, "largest n to enumerate with --verify (default 6)");

  bool emit_output = false;
  auto* sim_tera = app.add_subcommand("sim-terasort", "simulate sample sort with IO and communication counters");
  add_io(sim_tera, io);
  sim_tera->add_option("--memory", memory, "main memory per machine in records (default 1000)");
  sim_tera->add_option("--seed", seed, "sampling seed");
  sim_tera->add_flag("--emit-output", emit_output, "include the sorted output per machine");

  auto* sim_mm = app.add_subcommand("sim-mm", "fractional matching by freezing, serial and parallel IO counts");
  add_io(sim_mm, io);
  sim_mm->add_option("--epsilon", epsilon, "freezing parameter in (0, 1/2)")->capture_default_str();
  sim_mm->add_option("--machines", machines, "machines in the parallel model (default 4)");
  sim_mm->add_option("--seed", seed, "vertex partition seed");

  auto* sim_mst = app.add_subcommand("sim-mst-io", "edge-partitioned spanning forest IO versus serial Kruskal");
  add_io(sim_mst, io);
  sim_mst->add_option("--memory", memory, "main memory in records (default n)");

  std::string kind;
  std::string sizes;
  std::size_t trials = 1;
  std::optional<std::string> csv_path;
  empc::Amount cost_low = 1, cost_high = 10, mass_max = 100;
  auto* sweep = app.add_subcommand("sweep", "run a parameter sweep and print a CSV table");
  sweep->add_option("--kind", kind, "drp-ratio | gop-ratio | terasort-io | mst-io | mm-io")->required();
  sweep->add_option("--sizes", sizes, "comma-separated ascending sizes (p for drp-ratio, n otherwise)")->required();
  sweep->add_option("--trials", trials, "trials per size")->capture_default_str();
  sweep->add_option("--seed", seed, "base seed");
  sweep->add_option("--memory", memory, "main memory in records");
  sweep->add_option("--epsilon", epsilon, "matching parameter")->capture_default_str();
  sweep->add_option("--machines", machines, "machine count for gop/terasort/mm sweeps");
  sweep->add_option("--cost-high", cost_high, "off-diagonal costs drawn from [1, cost-high]")->capture_default_str();
  sweep->add_option("--mass-max", mass_max, "drp-ratio transfer entries drawn from [0, mass-max]")->capture_default_str();
  sweep->add_option("--guard", guard, "override the exact solver guard");
  sweep->add_option("--csv", csv_path, "write the CSV here and print a JSON summary instead");

  std::string gen_kind;
  std::size_t gen_p = 4, gen_n = 16, gen_m = 0;
  auto* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--kind", gen_kind, "drp | gop | graph | tspfb")->required();
  gen->add_option("--p", gen_p, "machines")->capture_default_str();
  gen->add_option("--n", gen_n, "elements (gop), vertices (graph), side (tspfb)")->capture_default_str();
  gen->add_option("--m", gen_m, "edges (graph; default 2n capped at all pairs)");
  gen->add_option("--seed", seed, "seed");
  gen->add_option("--cost-low", cost_low, "lowest off-diagonal cost")->capture_default_str();
  gen->add_option("--cost-high", cost_high, "highest off-diagonal cost")->capture_default_str();
  gen->add_option("--mass-max", mass_max, "largest transfer entry (drp)")->capture_default_str();
  gen->add_option("-o,--output", io.output, "result file, '-' for stdout")->capture_default_str();
  gen->add_flag("--pretty", io.pretty, "indent JSON output");

  auto* validate = app.add_subcommand("validate", "check an instance file against its format and invariants");
  add_io(validate, io);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (drp_exact->parsed()) {
      const auto inst = empc::bench::drp_from_json(load(io));
      const auto sol = empc::drp_solve_exact(inst, guard == 0 ? empc::kDefaultExactDrpLimit : guard);
      Json out;
      out["mapping"] = sol.assignment.one_based();
      out["cost"] = sol.cost;
      write_json(io, out);
      std::cerr << "drp-exact: p=" << inst.p() << " cost=" << sol.cost << "\n";
    } else if (drp_approx->parsed()) {
      const auto inst = empc::bench::drp_from_json(load(io));
      const auto sol = empc::drp_solve_approx(inst);
      const auto bound = empc::ratio_bound(inst.cost());
      Json out;
      out["mapping"] = sol.assignment.one_based();
      out["cost"] = sol.cost;
      out["lap_cost"] = empc::assignment_cost(empc::drp_to_lap(inst.transfer()), sol.assignment);
      out["ratio_bound"] = {bound.numerator, bound.denominator};
      write_json(io, out);
      std::cerr << "drp-approx: p=" << inst.p() << " cost=" << sol.cost << " bound=" << bound.value() << "\n";
    } else if (gop_exact->parsed()) {
      const auto g = empc::bench::gop_from_json(load(io));
      const auto sol = empc::gop_solve_exact(g, guard == 0 ? empc::kDefaultGopWorkLimit : guard);
      write_json(io, empc::bench::to_json(sol));
      std::cerr << "gop-exact: n=" << g.n() << " p=" << g.p() << " total=" << sol.total_cost << "\n";
    } else if (gop_approx->parsed()) {
      const auto g = empc::bench::gop_from_json(load(io));
      const auto sol =
          empc::gop_solve_approx(g, exact_drp ? empc::DrpStrategy::kExact : empc::DrpStrategy::kLinearAssignment);
      write_json(io, empc::bench::to_json(sol));
      std::cerr << "gop-approx: n=" << g.n() << " p=" << g.p() << " total=" << sol.total_cost << "\n";
    } else if (reduce->parsed()) {
      const auto t = empc::bench::tspfb_from_json(load(io));
      const auto inst = empc::tspfb_to_drp(t);
      if (!verify) {
        write_json(io, empc::bench::to_json(inst));
      } else {
        const std::size_t limit = guard == 0 ? empc::kDefaultTspFbLimit : guard;
        const auto cycle = empc::tspfb_brute(t, limit);
        const auto drp = empc::drp_solve_exact(inst, std::max<std::size_t>(limit, empc::kDefaultExactDrpLimit));
        Json out;
        out["instance"] = empc::bench::to_json(inst);
        out["hamilton_cycle_min"] = cycle;
        out["drp_min"] = drp.cost;
        out["mapping"] = drp.assignment.one_based();
        out["equal"] = cycle == drp.cost;
        write_json(io, out);
        std::cerr << "reduce-tspfb: n=" << t.n() << " cycle=" << cycle << " drp=" << drp.cost << "\n";
      }
    } else if (sim_tera->parsed()) {
      const auto g = empc::bench::gop_from_json(load(io));
      const empc::ExternalMemoryConfig cfg{memory == 0 ? 1000 : memory, g.p()};
      const auto res = empc::terasort_simulate(g.sort(), cfg, g.cost(), seed);
      std::vector<empc::Value> flat;
      for (const auto& part : res.output) flat.insert(flat.end(), part.begin(), part.end());
      const std::uint64_t serial = empc::io_sort_count(g.n(), cfg.main_memory);
      Json out;
      out["splitters"] = res.splitters;
      out["loads"] = res.loads;
      out["report"] = empc::bench::to_json(res.report);
      out["serial_io"] = serial;
      out["sorted"] = flat.size() == g.n() && std::is_sorted(flat.begin(), flat.end());
      if (emit_output) out["output"] = res.output;
      write_json(io, out);
      std::cerr << "sim-terasort: n=" << g.n() << " io=" << res.report.total_io() << " serial=" << serial << "\n";
    } else if (sim_mm->parsed()) {
      const auto graph = empc::bench::graph_from_json(load(io));
      const auto serial = empc::mm_serial_run(graph, epsilon);
      const auto parallel = empc::mm_parallel_io_model(graph, epsilon, machines == 0 ? 4 : machines, seed);
      const auto y = serial.state.vertex_loads(graph);
      Json out;
      out["iterations"] = serial.iterations;
      out["iteration_bound"] = empc::mm_iteration_bound(graph.n_vertices(), epsilon);
      out["serial"] = empc::bench::to_json(serial.report);
      out["parallel"] = empc::bench::to_json(parallel);
      out["identical"] = serial.report.io_sequence() == parallel.io_sequence();
      out["max_vertex_load"] = y.empty() ? 0.0 : *std::max_element(y.begin(), y.end());
      out["x"] = serial.state.x;
      write_json(io, out);
      std::cerr << "sim-mm: iterations=" << serial.iterations << " io=" << serial.report.total_io() << "\n";
    } else if (sim_mst->parsed()) {
      const auto graph = empc::bench::graph_from_json(load(io));
      const std::size_t mem = memory == 0 ? graph.n_vertices() : memory;
      const auto res = empc::nowicki_partition_io(graph, mem);
      const std::uint64_t serial = empc::kruskal_serial_io(graph.m(), mem);
      Json out;
      out["groups"] = res.groups;
      out["report"] = empc::bench::to_json(res.report);
      out["analytic_io"] = res.analytic_io;
      out["serial_io"] = serial;
      out["forest_edges"] = res.forest_edges.size();
      out["largest_subproblem"] = res.largest_subproblem;
      out["subproblems_over_memory"] = res.subproblems_over_memory;
      write_json(io, out);
      std::cerr << "sim-mst-io: groups=" << res.groups << " io=" << res.report.total_io() << " serial=" << serial
                << "\n";
    } else if (sweep->parsed()) {
      empc::bench::SweepSpec spec;
      spec.kind = empc::bench::parse_sweep_kind(kind);
      spec.sizes = parse_sizes(sizes);
      spec.trials = trials;
      spec.seed = seed;
      spec.config.cost_high = cost_high;
      spec.config.mass_max = mass_max;
      spec.config.machines = machines;
      spec.config.main_memory = memory;
      spec.config.epsilon = epsilon;
      spec.config.guard = guard;
      const auto table = empc::bench::run_sweep(spec);
      if (csv_path) {
        write_text(*csv_path, table.to_csv());
        Json out;
        out["kind"] = kind;
        out["rows"] = table.rows.size() - 1;
        out["max_ratio"] = table.max_ratio;
        out["violations"] = table.violations;
        out["skipped"] = table.skipped;
        out["classification"] =
            table.classification ? std::string(empc::to_string(*table.classification)) : std::string("n/a");
        write_json(io, out);
      } else {
        write_text("-", table.to_csv());
      }
      std::cerr << "sweep " << kind << ": " << table.rows.size() - 1 << " rows, " << table.violations
                << " violations, " << table.skipped << " skipped\n";
    } else if (gen->parsed()) {
      Json out;
      if (gen_kind == "drp") {
        out = empc::bench::to_json(empc::bench::gen_drp(gen_p, cost_low, cost_high, mass_max, seed));
      } else if (gen_kind == "gop") {
        out = empc::bench::to_json(empc::bench::gen_gop(gen_n, gen_p, seed, cost_low, cost_high));
      } else if (gen_kind == "graph") {
        const std::size_t pairs = gen_n * (gen_n - 1) / 2;
        const std::size_t m = gen_m == 0 ? std::min(2 * gen_n, pairs) : gen_m;
        out = empc::bench::to_json(empc::bench::gen_graph(gen_n, m, seed));
      } else if (gen_kind == "tspfb") {
        out = empc::bench::to_json(empc::bench::gen_tspfb(gen_n, cost_low, cost_high, seed));
      } else {
        throw empc::ParameterError("unknown --kind \"" + gen_kind + "\"; expected drp, gop, graph or tspfb");
      }
      write_json(io, out);
    } else if (validate->parsed()) {
      const Json j = load(io);
      const auto k = empc::bench::detect_kind(j);
      switch (k) {
        case empc::bench::InstanceKind::kDrp:
          (void)empc::bench::drp_from_json(j);
          break;
        case empc::bench::InstanceKind::kGop:
          (void)empc::bench::gop_from_json(j);
          break;
        case empc::bench::InstanceKind::kGraph:
          (void)empc::bench::graph_from_json(j);
          break;
        case empc::bench::InstanceKind::kTspFb:
          (void)empc::bench::tspfb_from_json(j);
          break;
      }
      Json out;
      out["valid"] = true;
      out["kind"] = std::string(empc::bench::to_string(k));
      write_json(io, out);
    }
  } catch (const empc::GuardError& e) {
    std::cerr << "empc: " << e.what() << "\n";
    return kExitGuard;
  } catch (const empc::Error& e) {
    std::cerr << "empc: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "empc: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}
