// Copyright 2026 The qmaze Authors
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

// qmaze command line front end. Talks to the library only through qmaze.h.
//
// Exit codes: 0 success, 2 argument error, 3 resource limit, 4 I/O error,
// 5 parse/validation failure, 1 anything else.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qmaze/qmaze.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitArgument = 2;
constexpr int kExitResource = 3;
constexpr int kExitIo = 4;
constexpr int kExitInvalid = 5;

// Qubit override ceiling; 2^40 amplitudes is already 16 TiB.
constexpr unsigned kMaxQubitsCeiling = 40;

struct StateDeleter {
  void operator()(qmaze_state* s) const { qmaze_state_free(s); }
};
struct CircuitDeleter {
  void operator()(qmaze_circuit* c) const { qmaze_circuit_free(c); }
};
struct MazeDeleter {
  void operator()(qmaze_maze* m) const { qmaze_maze_free(m); }
};
using StatePtr = std::unique_ptr<qmaze_state, StateDeleter>;
using CircuitPtr = std::unique_ptr<qmaze_circuit, CircuitDeleter>;
using MazePtr = std::unique_ptr<qmaze_maze, MazeDeleter>;

/// Carries an exit code out of a command.
struct CommandError {
  int code;
  std::string message;
};

int exit_code_for(qmaze_status s) {
  switch (s) {
    case QMAZE_OK:
      return kExitOk;
    case QMAZE_ERR_ARGUMENT:
      return kExitArgument;
    case QMAZE_ERR_RESOURCE_LIMIT:
      return kExitResource;
    case QMAZE_ERR_IO:
      return kExitIo;
    case QMAZE_ERR_PARSE:
    case QMAZE_ERR_VALIDATION:
      return kExitInvalid;
    default:
      return kExitFailure;
  }
}

void check(qmaze_status s) {
  if (s != QMAZE_OK) throw CommandError{exit_code_for(s), qmaze_last_error()};
}

enum class Format { json, table };

struct RunConfig {
  unsigned depth = 0;
  std::optional<std::uint64_t> target;
  std::string mode = "oblivious";
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  double ops_per_sec = 1e9;
  unsigned n_max = 0;
  std::string branch_order = "zero-first";
  std::optional<unsigned> max_qubits_flag;
  std::string format = "json";
  std::string out_path;
  std::string maze_path;
};

Format parse_format(const std::string& f) {
  if (f == "json") return Format::json;
  if (f == "table") return Format::table;
  throw CommandError{kExitArgument, "unknown format '" + f + "'"};
}

// Flag beats QMAZE_MAX_QUBITS, which beats the default. Any explicit
// override lifts the depth cap so only the qubit count binds.
qmaze_limits resolve_limits(const RunConfig& cfg) {
  qmaze_limits limits;
  qmaze_limits_default(&limits);
  std::optional<unsigned> override_q = cfg.max_qubits_flag;
  if (!override_q) {
    if (const char* env = std::getenv("QMAZE_MAX_QUBITS"); env && *env) {
      char* end = nullptr;
      const unsigned long v = std::strtoul(env, &end, 10);
      if (*end != '\0' || env[0] == '-' || v == 0 || v > kMaxQubitsCeiling) {
        throw CommandError{kExitArgument,
                           std::string("invalid QMAZE_MAX_QUBITS '") + env +
                               "'"};
      }
      override_q = static_cast<unsigned>(v);
    }
  }
  if (override_q) {
    if (*override_q == 0 || *override_q > kMaxQubitsCeiling) {
      throw CommandError{kExitArgument,
                         "--max-qubits must be in [1, " +
                             std::to_string(kMaxQubitsCeiling) + "]"};
    }
    limits.max_qubits = *override_q;
    limits.max_depth = *override_q;
  }
  return limits;
}

qmaze_mode resolve_mode(const std::string& name) {
  qmaze_mode mode;
  check(qmaze_mode_parse(name.c_str(), &mode));
  return mode;
}

std::string path_string(const std::vector<std::uint8_t>& bits) {
  std::string s;
  for (auto b : bits) s += b ? '1' : '0';
  return s;
}

std::string path_of(std::uint64_t endpoint, unsigned depth) {
  std::vector<std::uint8_t> bits(depth);
  check(qmaze_path_of(endpoint, depth, bits.data(), bits.size()));
  return path_string(bits);
}

json envelope(const std::string& command, json params, json result) {
  json j;
  j["command"] = command;
  j["params"] = std::move(params);
  j["result"] = std::move(result);
  return j;
}

json limits_json(const qmaze_limits& l) {
  return json{{"max_qubits", l.max_qubits}, {"max_depth", l.max_depth}};
}

json nullable(double v) { return std::isnan(v) ? json(nullptr) : json(v); }
json nullable_flag(int v) { return v < 0 ? json(nullptr) : json(v != 0); }

void print_table(const std::vector<std::pair<std::string, std::string>>& kv) {
  std::size_t width = 0;
  for (const auto& [k, v] : kv) width = std::max(width, k.size());
  for (const auto& [k, v] : kv) {
    std::cout << std::left << std::setw(static_cast<int>(width) + 2) << k << v
              << "\n";
  }
}

std::string fmt(double v, int precision = 6) {
  std::ostringstream ss;
  ss << std::setprecision(precision) << v;
  return ss.str();
}

int cmd_solve(const RunConfig& cfg) {
  const Format format = parse_format(cfg.format);
  const qmaze_limits limits = resolve_limits(cfg);
  const qmaze_mode mode = resolve_mode(cfg.mode);
  if (!cfg.target) throw CommandError{kExitArgument, "--target is required"};

  std::vector<std::uint8_t> bits(std::min(cfg.depth, 64U));
  qmaze_solution sol;
  check(qmaze_solve(cfg.depth, *cfg.target, mode, &limits, bits.data(),
                    bits.size(), &sol));
  qmaze_layout layout;
  check(qmaze_layout_get(cfg.depth, &layout));
  const double magnitude = std::hypot(sol.amplitude_re, sol.amplitude_im);

  if (format == Format::table) {
    print_table({{"path", path_string(bits)},
                 {"endpoint", std::to_string(sol.endpoint)},
                 {"basis index", std::to_string(sol.basis_index)},
                 {"amplitude", fmt(magnitude)},
                 {"probability", fmt(sol.probability)},
                 {"qubits", std::to_string(layout.total_qubits)},
                 {"mode", cfg.mode}});
    return kExitOk;
  }
  json params{{"n", cfg.depth},
              {"target", *cfg.target},
              {"mode", cfg.mode},
              {"limits", limits_json(limits)}};
  json result{{"path", path_string(bits)},
              {"endpoint", sol.endpoint},
              {"basis_index", sol.basis_index},
              {"amplitude", {{"re", sol.amplitude_re}, {"im", sol.amplitude_im}}},
              {"amplitude_magnitude", magnitude},
              {"probability", sol.probability},
              {"counting_width", layout.counting_width},
              {"total_qubits", layout.total_qubits},
              {"final_counter", layout.final_counter}};
  std::cout << envelope("solve", params, result).dump(2) << "\n";
  return kExitOk;
}

int cmd_sample(const RunConfig& cfg) {
  const Format format = parse_format(cfg.format);
  const qmaze_limits limits = resolve_limits(cfg);
  const qmaze_mode mode = resolve_mode(cfg.mode);
  if (cfg.shots < 1) throw CommandError{kExitArgument, "--shots must be >= 1"};

  qmaze_state* raw = nullptr;
  check(qmaze_run(cfg.depth, mode, &limits, &raw));
  StatePtr state(raw);
  qmaze_layout layout;
  check(qmaze_layout_get(cfg.depth, &layout));
  std::vector<std::uint64_t> counts(std::uint64_t{1} << cfg.depth, 0);
  if (cfg.target && *cfg.target >= counts.size()) {
    throw CommandError{kExitArgument,
                       "target " + std::to_string(*cfg.target) +
                           " out of range for depth " +
                           std::to_string(cfg.depth)};
  }
  std::uint64_t counter_mismatches = 0;
  for (std::uint64_t shot = 0; shot < cfg.shots; ++shot) {
    std::uint64_t endpoint = 0;
    std::uint64_t counter = 0;
    check(qmaze_sample(state.get(), cfg.depth,
                       qmaze_shot_seed(cfg.seed, shot), &endpoint, &counter));
    ++counts[endpoint];
    if (counter != layout.final_counter) ++counter_mismatches;
  }

  double p = 0.0;
  check(qmaze_success_probability(cfg.depth, &p));
  json histogram = json::array();
  for (std::uint64_t e = 0; e < counts.size(); ++e) {
    if (counts[e] == 0) continue;
    histogram.push_back(
        {{"endpoint", e}, {"path", path_of(e, cfg.depth)}, {"count", counts[e]}});
  }
  json result{{"shots", cfg.shots},
              {"distinct_endpoints", histogram.size()},
              {"histogram", histogram},
              {"final_counter", layout.final_counter},
              {"counter_mismatches", counter_mismatches}};
  double hit_rate = 0.0;
  double sigma = 0.0;
  if (cfg.target) {
    const auto hits = counts[*cfg.target];
    hit_rate = static_cast<double>(hits) / static_cast<double>(cfg.shots);
    sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(cfg.shots));
    result["target"] = {{"endpoint", *cfg.target},
                        {"path", path_of(*cfg.target, cfg.depth)},
                        {"hits", hits},
                        {"hit_rate", hit_rate},
                        {"expected_rate", p},
                        {"sigma", sigma}};
  }

  if (format == Format::table) {
    std::cout << "endpoint  path  count\n";
    for (const auto& h : histogram) {
      std::cout << h["endpoint"].get<std::uint64_t>() << "  "
                << h["path"].get<std::string>() << "  "
                << h["count"].get<std::uint64_t>() << "\n";
    }
    std::cout << "shots " << cfg.shots << "\n";
    if (cfg.target) {
      std::cout << "hit rate " << fmt(hit_rate) << " (expected " << fmt(p)
                << ", sigma " << fmt(sigma) << ")\n";
    }
    return kExitOk;
  }
  json params{{"n", cfg.depth},
              {"shots", cfg.shots},
              {"seed", cfg.seed},
              {"target", cfg.target ? json(*cfg.target) : json(nullptr)},
              {"mode", cfg.mode},
              {"limits", limits_json(limits)}};
  std::cout << envelope("sample", params, result).dump(2) << "\n";
  return kExitOk;
}

int cmd_emit(const RunConfig& cfg) {
  const Format format = parse_format(cfg.format);
  const qmaze_limits limits = resolve_limits(cfg);
  const qmaze_mode mode = resolve_mode(cfg.mode);
  qmaze_circuit* raw = nullptr;
  check(qmaze_algorithm_circuit(cfg.depth, mode, &limits, &raw));
  CircuitPtr circuit(raw);
  check(qmaze_circuit_save(circuit.get(), cfg.out_path.c_str()));

  const auto qubits = qmaze_circuit_num_qubits(circuit.get());
  const auto gates = qmaze_circuit_gate_count(circuit.get());
  const auto hadamards = qmaze_circuit_hadamard_count(circuit.get());
  if (format == Format::table) {
    print_table({{"out", cfg.out_path},
                 {"qubits", std::to_string(qubits)},
                 {"gates", std::to_string(gates)},
                 {"hadamard gates", std::to_string(hadamards)}});
    return kExitOk;
  }
  json params{{"n", cfg.depth}, {"mode", cfg.mode}, {"out", cfg.out_path}};
  json result{{"qubits", qubits},
              {"gates", gates},
              {"hadamard_gates", hadamards}};
  std::cout << envelope("emit", params, result).dump(2) << "\n";
  return kExitOk;
}

json row_json(const qmaze_comparison& r) {
  json row;
  row["n"] = r.depth;
  row["quantum_steps"] = r.quantum_steps;
  row["source"] = r.measured ? "measured" : "extrapolated";
  row["extrapolated"] = r.measured == 0;
  if (r.measured) {
    row["measured"] = {{"worst_edge_steps", r.summary.worst_edge_steps},
                       {"best_edge_steps", r.summary.best_edge_steps},
                       {"mean_edge_steps", r.summary.mean_edge_steps},
                       {"worst_nodes_expanded", r.summary.worst_nodes_expanded},
                       {"mean_nodes_expanded", r.summary.mean_nodes_expanded}};
  } else {
    row["measured"] = nullptr;
  }
  row["closed_form_worst_edge_steps"] = r.closed_form;
  row["worst_edge_steps"] = r.worst_edge_steps;
  row["published_bound"] = r.formula_value;
  row["published_bound_matches_worst"] = r.formula_matches_worst != 0;
  row["ratio_percent"] = r.ratio_percent;
  row["classical_seconds"] = r.classical_seconds;
  row["classical_days"] = r.classical_seconds / 86400.0;
  if (r.has_quoted) {
    row["quoted"] = {
        {"classical_worst_steps", r.quoted_classical_worst_steps},
        {"quantum_steps", r.quoted_quantum_steps},
        {"classical_mean_steps", nullable(r.quoted_classical_mean_steps)},
        {"quantum_mean_steps", nullable(r.quoted_quantum_mean_steps)},
        {"ratio_percent", nullable(r.quoted_ratio_percent)},
        {"days_at_1e9_ops", nullable(r.quoted_days)},
        {"worst_matches_measured", r.quoted_worst_matches_measured != 0},
        {"worst_matches_published_bound", r.quoted_worst_matches_bound != 0},
        {"worst_disagrees_with_both", r.quoted_worst_discrepancy != 0},
        {"quantum_steps_match", r.quoted_quantum_steps_match != 0},
        {"mean_matches_measured", nullable_flag(r.quoted_mean_matches_measured)},
        {"quantum_mean_matches", nullable_flag(r.quoted_quantum_mean_matches)},
        {"implied_ratio_percent", r.quoted_implied_ratio_percent},
        {"ratio_consistent", nullable_flag(r.quoted_ratio_consistent)},
        {"implied_days_at_1e9_ops", r.quoted_implied_days},
        {"days_consistent", nullable_flag(r.quoted_days_consistent)}};
  } else {
    row["quoted"] = nullptr;
  }
  row["discrepancy"] = r.discrepancy != 0;
  return row;
}

int cmd_bench(const RunConfig& cfg) {
  const Format format = parse_format(cfg.format);
  qmaze_branch_order order;
  check(qmaze_branch_order_parse(cfg.branch_order.c_str(), &order));
  if (cfg.n_max < 1) throw CommandError{kExitArgument, "--n-max must be >= 1"};

  std::vector<qmaze_comparison> rows;
  for (unsigned n = 1; n <= cfg.n_max; ++n) {
    qmaze_comparison row;
    check(qmaze_comparison_row(n, cfg.ops_per_sec, order, &row));
    rows.push_back(row);
  }

  if (format == Format::table) {
    std::cout << std::left << std::setw(4) << "N" << std::setw(8) << "quantum"
              << std::setw(22) << "worst" << std::setw(14) << "mean"
              << std::setw(22) << "published bound" << std::setw(14)
              << "source" << std::setw(14) << "ratio %" << std::setw(14)
              << "seconds"
              << "flag\n";
    for (const auto& r : rows) {
      std::cout << std::left << std::setw(4) << r.depth << std::setw(8)
                << r.quantum_steps << std::setw(22) << r.worst_edge_steps
                << std::setw(14)
                << (r.measured ? fmt(r.summary.mean_edge_steps) : "-")
                << std::setw(22) << r.formula_value << std::setw(14)
                << (r.measured ? "measured" : "extrapolated") << std::setw(14)
                << fmt(r.ratio_percent, 4) << std::setw(14)
                << fmt(r.classical_seconds, 4)
                << (r.discrepancy ? "DISCREPANCY" : "") << "\n";
      if (r.has_quoted) {
        std::cout << "    quoted: worst " << fmt(r.quoted_classical_worst_steps, 6)
                  << " (matches measured: "
                  << (r.quoted_worst_matches_measured ? "yes" : "no")
                  << ", matches bound: "
                  << (r.quoted_worst_matches_bound ? "yes" : "no") << ")";
        if (!std::isnan(r.quoted_ratio_percent)) {
          std::cout << ", ratio " << fmt(r.quoted_ratio_percent, 3)
                    << "% vs implied " << fmt(r.quoted_implied_ratio_percent, 3)
                    << "%";
        }
        if (!std::isnan(r.quoted_days)) {
          std::cout << ", " << fmt(r.quoted_days, 3) << " days vs implied "
                    << fmt(r.quoted_implied_days, 4);
        }
        if (!std::isnan(r.quoted_classical_mean_steps)) {
          std::cout << ", mean " << fmt(r.quoted_classical_mean_steps, 3)
                    << " vs measured " << fmt(r.summary.mean_edge_steps);
        }
        std::cout << "\n";
      }
    }
    return kExitOk;
  }

  json out_rows = json::array();
  json flagged = json::array();
  for (const auto& r : rows) {
    out_rows.push_back(row_json(r));
    if (r.discrepancy) flagged.push_back(r.depth);
  }
  json params{{"n_max", cfg.n_max},
              {"ops_per_sec", cfg.ops_per_sec},
              {"branch_order", cfg.branch_order},
              {"step_convention", "edge traversals including backtracking"}};
  json result{{"rows", out_rows}, {"discrepancy_rows", flagged}};
  std::cout << envelope("bench", params, result).dump(2) << "\n";
  return kExitOk;
}

int cmd_validate(const RunConfig& cfg) {
  const Format format = parse_format(cfg.format);
  qmaze_maze* raw = nullptr;
  const qmaze_status s = qmaze_maze_load(cfg.maze_path.c_str(), 24, &raw);
  MazePtr maze(raw);
  json params{{"maze", cfg.maze_path}};
  json result;
  if (s == QMAZE_OK) {
    std::uint64_t target = 0;
    const bool has_target = qmaze_maze_target(maze.get(), &target) != 0;
    result = {{"valid", true},
              {"n", qmaze_maze_depth(maze.get())},
              {"endpoints", qmaze_maze_endpoint_count(maze.get())},
              {"target", has_target ? json(target) : json(nullptr)}};
  } else {
    if (s != QMAZE_ERR_PARSE && s != QMAZE_ERR_VALIDATION) check(s);
    result = {{"valid", false},
              {"line", qmaze_last_error_line()},
              {"message", qmaze_last_error()}};
    std::cerr << "qmaze: " << cfg.maze_path << ": " << qmaze_last_error()
              << "\n";
  }

  if (format == Format::table) {
    if (result["valid"].get<bool>()) {
      print_table({{"valid", "yes"},
                   {"n", std::to_string(qmaze_maze_depth(maze.get()))}});
    } else {
      print_table({{"valid", "no"},
                   {"line", std::to_string(qmaze_last_error_line())},
                   {"message", qmaze_last_error()}});
    }
  } else {
    std::cout << envelope("validate", params, result).dump(2) << "\n";
  }
  return s == QMAZE_OK ? kExitOk : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary maze solver on a simulated quantum register", "qmaze"};
  app.require_subcommand(1);
  RunConfig cfg;
  unsigned max_qubits = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));
  };
  auto add_limits = [&](CLI::App* sub) {
    sub->add_option("--max-qubits", max_qubits,
                    "Qubit cap (overrides QMAZE_MAX_QUBITS)");
  };

  auto* solve = app.add_subcommand("solve", "Read a target's path off the final state");
  solve->add_option("--n", cfg.depth, "Number of decisions")->required();
  solve->add_option("--target", cfg.target, "Endpoint index")->required();
  solve->add_option("--mode", cfg.mode, "oblivious or controlled");
  add_limits(solve);
  add_common(solve);

  auto* sample = app.add_subcommand("sample", "Measure the final state repeatedly");
  sample->add_option("--n", cfg.depth, "Number of decisions")->required();
  sample->add_option("--shots", cfg.shots, "Number of measurements")->required();
  sample->add_option("--seed", cfg.seed, "Base seed")->required();
  sample->add_option("--target", cfg.target, "Endpoint to report a hit rate for");
  sample->add_option("--mode", cfg.mode, "oblivious or controlled");
  add_limits(sample);
  add_common(sample);

  auto* emit = app.add_subcommand("emit", "Write the lowered algorithm circuit");
  emit->add_option("--n", cfg.depth, "Number of decisions")->required();
  emit->add_option("--mode", cfg.mode, "oblivious or controlled")->required();
  emit->add_option("--out", cfg.out_path, "Output circuit file")->required();
  add_limits(emit);
  add_common(emit);

  auto* bench = app.add_subcommand("bench", "Classical DFS versus quantum step counts");
  bench->add_option("--n-max", cfg.n_max, "Largest depth to report")->required();
  bench->add_option("--ops-per-sec", cfg.ops_per_sec, "Classical steps per second");
  bench->add_option("--branch-order", cfg.branch_order, "zero-first or one-first");
  add_common(bench);

  auto* validate = app.add_subcommand("validate", "Check a maze file");
  validate->add_option("--maze", cfg.maze_path, "Maze file")->required();
  add_common(validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitArgument;
  }

  for (auto* sub : {solve, sample, emit}) {
    if (sub->parsed() && sub->count("--max-qubits") > 0) {
      cfg.max_qubits_flag = max_qubits;
    }
  }

  try {
    if (solve->parsed()) return cmd_solve(cfg);
    if (sample->parsed()) return cmd_sample(cfg);
    if (emit->parsed()) return cmd_emit(cfg);
    if (bench->parsed()) return cmd_bench(cfg);
    if (validate->parsed()) return cmd_validate(cfg);
  } catch (const CommandError& e) {
    std::cerr << "qmaze: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "qmaze: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitArgument;
}
