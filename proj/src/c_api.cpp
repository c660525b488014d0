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

#include "qmaze/qmaze.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>
#include <new>
#include <sstream>
#include <string>

#include "qmaze/algorithm.hpp"
#include "qmaze/baseline.hpp"
#include "qmaze/circuit.hpp"
#include "qmaze/errors.hpp"
#include "qmaze/maze.hpp"
#include "qmaze/statevector.hpp"

struct qmaze_state {
  qmaze::StateVector sv;
};

struct qmaze_circuit {
  qmaze::Circuit circuit;
};

struct qmaze_maze {
  qmaze::BinaryMaze maze;
};

namespace {

thread_local std::string g_last_error;
thread_local std::size_t g_last_error_line = 0;

qmaze_status fail(qmaze_status status, const std::string& message,
                  std::size_t line = 0) {
  g_last_error = message;
  g_last_error_line = line;
  return status;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
qmaze_status guard(Fn&& fn) noexcept {
  try {
    fn();
    return QMAZE_OK;
  } catch (const qmaze::ParseError& e) {
    return fail(QMAZE_ERR_PARSE, e.what(), e.line());
  } catch (const qmaze::ArgumentError& e) {
    return fail(QMAZE_ERR_ARGUMENT, e.what());
  } catch (const qmaze::ResourceLimitError& e) {
    return fail(QMAZE_ERR_RESOURCE_LIMIT, e.what());
  } catch (const qmaze::IoError& e) {
    return fail(QMAZE_ERR_IO, e.what());
  } catch (const qmaze::StateIntegrityError& e) {
    return fail(QMAZE_ERR_STATE_INTEGRITY, e.what());
  } catch (const qmaze::InternalConsistencyError& e) {
    return fail(QMAZE_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(QMAZE_ERR_RESOURCE_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return fail(QMAZE_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(QMAZE_ERR_INTERNAL, "unknown error");
  }
}

template <class T>
T& deref(T* p, const char* what) {
  if (p == nullptr) throw qmaze::ArgumentError(std::string(what) + " is null");
  return *p;
}

qmaze::SimLimits to_limits(const qmaze_limits* limits) {
  qmaze::SimLimits out;
  if (limits != nullptr) {
    out.max_qubits = limits->max_qubits;
    out.max_depth = limits->max_depth;
  }
  return out;
}

qmaze::AlgorithmMode to_mode(qmaze_mode mode) {
  switch (mode) {
    case QMAZE_MODE_OBLIVIOUS:
      return qmaze::AlgorithmMode::oblivious;
    case QMAZE_MODE_CONTROLLED:
      return qmaze::AlgorithmMode::controlled;
  }
  throw qmaze::ArgumentError("unknown algorithm mode");
}

qmaze::BranchOrder to_order(qmaze_branch_order order) {
  switch (order) {
    case QMAZE_ZERO_FIRST:
      return qmaze::BranchOrder::zero_first;
    case QMAZE_ONE_FIRST:
      return qmaze::BranchOrder::one_first;
  }
  throw qmaze::ArgumentError("unknown branch order");
}

std::vector<qmaze::Control> to_controls(const qmaze_control* controls,
                                        size_t n) {
  if (n > 0 && controls == nullptr) {
    throw qmaze::ArgumentError("controls is null");
  }
  std::vector<qmaze::Control> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    out.push_back({controls[i].qubit, controls[i].positive
                                          ? qmaze::Polarity::positive
                                          : qmaze::Polarity::negative});
  }
  return out;
}

void write_path(const qmaze::PathBits& path, uint8_t* out, size_t capacity) {
  if (out == nullptr) return;
  if (capacity < path.size()) {
    throw qmaze::ArgumentError("path buffer too small: need " +
                               std::to_string(path.size()));
  }
  std::memcpy(out, path.decisions().data(), path.size());
}

std::string read_file(const char* path) {
  if (path == nullptr) throw qmaze::ArgumentError("path is null");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qmaze::IoError(std::string("cannot open '") + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw qmaze::IoError(std::string("cannot read '") + path + "'");
  return ss.str();
}

int tri(const std::optional<bool>& b) { return b ? (*b ? 1 : 0) : -1; }

double opt(const std::optional<double>& d) {
  return d ? *d : std::numeric_limits<double>::quiet_NaN();
}

void fill_summary(const qmaze::StepSummary& s, qmaze_step_summary* out) {
  out->depth = s.depth;
  out->worst_edge_steps = s.worst_edge_steps;
  out->best_edge_steps = s.best_edge_steps;
  out->mean_edge_steps = s.mean_edge_steps;
  out->worst_nodes_expanded = s.worst_nodes_expanded;
  out->mean_nodes_expanded = s.mean_nodes_expanded;
  out->formula_value = s.formula_value;
  out->quantum_steps = s.quantum_steps;
}

}  // namespace

extern "C" {

const char* qmaze_version(void) { return "0.1.0"; }

const char* qmaze_status_name(qmaze_status status) {
  switch (status) {
    case QMAZE_OK:
      return "ok";
    case QMAZE_ERR_ARGUMENT:
      return "argument error";
    case QMAZE_ERR_RESOURCE_LIMIT:
      return "resource limit";
    case QMAZE_ERR_IO:
      return "i/o error";
    case QMAZE_ERR_PARSE:
      return "parse error";
    case QMAZE_ERR_VALIDATION:
      return "validation failure";
    case QMAZE_ERR_STATE_INTEGRITY:
      return "state integrity error";
    case QMAZE_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* qmaze_last_error(void) { return g_last_error.c_str(); }

size_t qmaze_last_error_line(void) { return g_last_error_line; }

void qmaze_string_free(char* text) { std::free(text); }

void qmaze_limits_default(qmaze_limits* out) {
  if (out == nullptr) return;
  const qmaze::SimLimits d;
  out->max_qubits = d.max_qubits;
  out->max_depth = d.max_depth;
}

// ---- state vector ----------------------------------------------------------

qmaze_status qmaze_state_new(unsigned num_qubits, unsigned max_qubits,
                             qmaze_state** out) {
  return guard([&] {
    auto& o = deref(out, "out");
    o = new qmaze_state{qmaze::StateVector(num_qubits, max_qubits)};
  });
}

qmaze_status qmaze_state_from_amplitudes(const double* re, const double* im,
                                         uint64_t count, qmaze_state** out) {
  return guard([&] {
    auto& o = deref(out, "out");
    if (count > 0 && (re == nullptr || im == nullptr)) {
      throw qmaze::ArgumentError("amplitude arrays are null");
    }
    if (count > (uint64_t{1} << 40)) {
      throw qmaze::ResourceLimitError("amplitude count too large");
    }
    std::vector<qmaze::Amplitude> amps(count);
    for (uint64_t i = 0; i < count; ++i) amps[i] = {re[i], im[i]};
    o = new qmaze_state{qmaze::StateVector::from_amplitudes(std::move(amps))};
  });
}

qmaze_status qmaze_state_clone(const qmaze_state* state, qmaze_state** out) {
  return guard([&] {
    const auto& s = deref(state, "state");
    auto& o = deref(out, "out");
    o = new qmaze_state{s.sv};
  });
}

void qmaze_state_free(qmaze_state* state) { delete state; }

unsigned qmaze_state_num_qubits(const qmaze_state* state) {
  return state ? state->sv.num_qubits() : 0;
}

uint64_t qmaze_state_size(const qmaze_state* state) {
  return state ? state->sv.size() : 0;
}

qmaze_status qmaze_state_amplitude(const qmaze_state* state, uint64_t index,
                                   double* re, double* im) {
  return guard([&] {
    const auto a = deref(state, "state").sv.amplitude_at(index);
    if (re) *re = a.real();
    if (im) *im = a.imag();
  });
}

double qmaze_state_norm(const qmaze_state* state) {
  return state ? state->sv.norm() : 0.0;
}

qmaze_status qmaze_state_apply_h(qmaze_state* state, unsigned qubit) {
  return guard([&] { deref(state, "state").sv.apply_hadamard(qubit); });
}

qmaze_status qmaze_state_apply_x(qmaze_state* state, unsigned qubit) {
  return guard([&] { deref(state, "state").sv.apply_x(qubit); });
}

qmaze_status qmaze_state_apply_mcx(qmaze_state* state,
                                   const qmaze_control* controls,
                                   size_t num_controls, unsigned target) {
  return guard([&] {
    deref(state, "state")
        .sv.apply_multi_controlled_x(to_controls(controls, num_controls),
                                     target);
  });
}

qmaze_status qmaze_state_apply_mch(qmaze_state* state,
                                   const qmaze_control* controls,
                                   size_t num_controls, unsigned target) {
  return guard([&] {
    deref(state, "state")
        .sv.apply_multi_controlled_h(to_controls(controls, num_controls),
                                     target);
  });
}

qmaze_status qmaze_state_measure(const qmaze_state* state, uint64_t seed,
                                 uint64_t* out) {
  return guard([&] {
    deref(out, "out") = deref(state, "state").sv.measure_all(seed);
  });
}

qmaze_status qmaze_state_max_abs_diff(const qmaze_state* a,
                                      const qmaze_state* b, double* out) {
  return guard([&] {
    deref(out, "out") = qmaze::max_abs_diff(deref(a, "a").sv, deref(b, "b").sv);
  });
}

// ---- circuits --------------------------------------------------------------

qmaze_status qmaze_circuit_parse(const char* text, size_t length,
                                 qmaze_circuit** out) {
  return guard([&] {
    auto& o = deref(out, "out");
    if (text == nullptr && length > 0) throw qmaze::ArgumentError("text is null");
    o = new qmaze_circuit{
        qmaze::parse_text(std::string_view(text ? text : "", length))};
  });
}

qmaze_status qmaze_circuit_load(const char* path, qmaze_circuit** out) {
  return guard([&] {
    auto& o = deref(out, "out");
    const std::string text = read_file(path);
    o = new qmaze_circuit{qmaze::parse_text(text)};
  });
}

void qmaze_circuit_free(qmaze_circuit* circuit) { delete circuit; }

unsigned qmaze_circuit_num_qubits(const qmaze_circuit* circuit) {
  return circuit ? circuit->circuit.num_qubits() : 0;
}

size_t qmaze_circuit_gate_count(const qmaze_circuit* circuit) {
  if (circuit == nullptr) return 0;
  const qmaze::Circuit flat = circuit->circuit.lowered();
  return flat.gates().size();
}

size_t qmaze_circuit_hadamard_count(const qmaze_circuit* circuit) {
  if (circuit == nullptr) return 0;
  size_t n = 0;
  for (const auto& g : circuit->circuit.gates()) {
    if (qmaze::is_hadamard_family(g)) ++n;
  }
  return n;
}

qmaze_status qmaze_circuit_emit(const qmaze_circuit* circuit, char** out,
                                size_t* length) {
  return guard([&] {
    auto& o = deref(out, "out");
    const std::string text = qmaze::emit_text(deref(circuit, "circuit").circuit);
    char* buf = static_cast<char*>(std::malloc(text.size() + 1));
    if (buf == nullptr) throw std::bad_alloc();
    std::memcpy(buf, text.c_str(), text.size() + 1);
    o = buf;
    if (length) *length = text.size();
  });
}

qmaze_status qmaze_circuit_save(const qmaze_circuit* circuit,
                                const char* path) {
  return guard([&] {
    const std::string text = qmaze::emit_text(deref(circuit, "circuit").circuit);
    if (path == nullptr) throw qmaze::ArgumentError("path is null");
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw qmaze::IoError(std::string("cannot open '") + path + "' for writing");
    f << text;
    f.flush();
    if (!f) throw qmaze::IoError(std::string("cannot write '") + path + "'");
  });
}

qmaze_status qmaze_circuit_apply(const qmaze_circuit* circuit,
                                 qmaze_state* state) {
  return guard([&] {
    qmaze::apply_circuit(deref(circuit, "circuit").circuit,
                         deref(state, "state").sv);
  });
}

// ---- maze ------------------------------------------------------------------

qmaze_status qmaze_maze_build(unsigned depth, int has_target, uint64_t target,
                              unsigned max_depth, qmaze_maze** out) {
  return guard([&] {
    auto& o = deref(out, "out");
    std::optional<qmaze::EndpointIndex> t;
    if (has_target) t = target;
    o = new qmaze_maze{qmaze::build_maze(depth, t, max_depth)};
  });
}

qmaze_status qmaze_maze_parse(const char* text, size_t length,
                              unsigned max_depth, qmaze_maze** out) {
  return guard([&] {
    auto& o = deref(out, "out");
    if (text == nullptr && length > 0) throw qmaze::ArgumentError("text is null");
    o = new qmaze_maze{qmaze::parse_maze_text(
        std::string_view(text ? text : "", length), max_depth)};
  });
}

qmaze_status qmaze_maze_load(const char* path, unsigned max_depth,
                             qmaze_maze** out) {
  return guard([&] {
    auto& o = deref(out, "out");
    const std::string text = read_file(path);
    o = new qmaze_maze{qmaze::parse_maze_text(text, max_depth)};
  });
}

void qmaze_maze_free(qmaze_maze* maze) { delete maze; }

unsigned qmaze_maze_depth(const qmaze_maze* maze) {
  return maze ? maze->maze.depth() : 0;
}

uint64_t qmaze_maze_endpoint_count(const qmaze_maze* maze) {
  return maze ? maze->maze.endpoint_count() : 0;
}

int qmaze_maze_target(const qmaze_maze* maze, uint64_t* out) {
  if (maze == nullptr || !maze->maze.target()) return 0;
  if (out) *out = *maze->maze.target();
  return 1;
}

qmaze_status qmaze_tree_validate(const size_t* offsets, const size_t* children,
                                 size_t node_count, size_t* bad_node) {
  std::optional<qmaze::DefectReport> defect;
  const auto status = guard([&] {
    if (node_count > 0 && offsets == nullptr) {
      throw qmaze::ArgumentError("offsets is null");
    }
    qmaze::ExplicitMaze tree;
    tree.children.resize(node_count);
    for (size_t v = 0; v < node_count; ++v) {
      if (offsets[v + 1] < offsets[v]) {
        throw qmaze::ArgumentError("offsets must be non-decreasing");
      }
      if (offsets[v + 1] > offsets[v] && children == nullptr) {
        throw qmaze::ArgumentError("children is null");
      }
      tree.children[v].assign(children + offsets[v], children + offsets[v + 1]);
    }
    defect = qmaze::validate(tree);
  });
  if (status != QMAZE_OK) return status;
  if (!defect) return QMAZE_OK;
  if (bad_node) *bad_node = defect->node;
  return fail(QMAZE_ERR_VALIDATION,
              "node " + std::to_string(defect->node) + ": " + defect->reason);
}

qmaze_status qmaze_endpoint_of(const uint8_t* decisions, size_t length,
                               unsigned depth, uint64_t* out) {
  return guard([&] {
    auto& o = deref(out, "out");
    if (length > 0 && decisions == nullptr) {
      throw qmaze::ArgumentError("decisions is null");
    }
    qmaze::PathBits path(std::vector<uint8_t>(decisions, decisions + length));
    o = qmaze::endpoint_of(path, depth);
  });
}

qmaze_status qmaze_path_of(uint64_t endpoint, unsigned depth, uint8_t* out,
                           size_t capacity) {
  return guard([&] {
    if (out == nullptr) throw qmaze::ArgumentError("out is null");
    write_path(qmaze::path_of(endpoint, depth), out, capacity);
  });
}

// ---- algorithm -------------------------------------------------------------

qmaze_status qmaze_mode_parse(const char* name, qmaze_mode* out) {
  return guard([&] {
    auto& o = deref(out, "out");
    if (name == nullptr) throw qmaze::ArgumentError("name is null");
    o = qmaze::parse_mode(name) == qmaze::AlgorithmMode::oblivious
            ? QMAZE_MODE_OBLIVIOUS
            : QMAZE_MODE_CONTROLLED;
  });
}

qmaze_status qmaze_layout_get(unsigned depth, qmaze_layout* out) {
  return guard([&] {
    auto& o = deref(out, "out");
    const qmaze::RegisterLayout layout(depth);
    o.depth = layout.depth();
    o.counting_width = layout.counting_width();
    o.total_qubits = layout.total_qubits();
    o.final_counter = layout.final_counter();
  });
}

qmaze_status qmaze_decode(unsigned depth, uint64_t basis_index,
                          uint64_t* endpoint, uint64_t* counter) {
  return guard([&] {
    const qmaze::RegisterLayout layout(depth);
    if (layout.total_qubits() >= 64 ||
        (basis_index >> layout.total_qubits()) != 0) {
      throw qmaze::ArgumentError("basis index out of range for depth " +
                                 std::to_string(depth));
    }
    if (endpoint) *endpoint = layout.endpoint_of(basis_index);
    if (counter) *counter = layout.counter_of(basis_index);
  });
}

qmaze_status qmaze_algorithm_circuit(unsigned depth, qmaze_mode mode,
                                     const qmaze_limits* limits,
                                     qmaze_circuit** out) {
  return guard([&] {
    auto& o = deref(out, "out");
    o = new qmaze_circuit{qmaze::build_algorithm_circuit(depth, to_mode(mode),
                                                         to_limits(limits))};
  });
}

qmaze_status qmaze_run(unsigned depth, qmaze_mode mode,
                       const qmaze_limits* limits, qmaze_state** out) {
  return guard([&] {
    auto& o = deref(out, "out");
    auto result = qmaze::run(depth, to_mode(mode), to_limits(limits));
    o = new qmaze_state{std::move(result.final_state)};
  });
}

qmaze_status qmaze_solve(unsigned depth, uint64_t target, qmaze_mode mode,
                         const qmaze_limits* limits, uint8_t* path,
                         size_t path_capacity, qmaze_solution* out) {
  return guard([&] {
    const auto s =
        qmaze::solve(depth, target, to_mode(mode), to_limits(limits));
    write_path(s.path, path, path_capacity);
    if (out) {
      out->endpoint = s.endpoint;
      out->basis_index = s.basis_index;
      out->amplitude_re = s.amplitude.real();
      out->amplitude_im = s.amplitude.imag();
      out->probability = s.probability;
    }
  });
}

qmaze_status qmaze_sample(const qmaze_state* final_state, unsigned depth,
                          uint64_t seed, uint64_t* endpoint,
                          uint64_t* counter) {
  return guard([&] {
    const auto s = qmaze::sample_path(deref(final_state, "final_state").sv,
                                      qmaze::RegisterLayout(depth), seed);
    if (endpoint) *endpoint = s.endpoint;
    if (counter) *counter = s.counter;
  });
}

uint64_t qmaze_shot_seed(uint64_t seed, uint64_t shot) {
  return qmaze::shot_seed(seed, shot);
}

qmaze_status qmaze_success_probability(unsigned depth, double* out) {
  return guard(
      [&] { deref(out, "out") = qmaze::success_probability(depth); });
}

// ---- classical baseline ----------------------------------------------------

qmaze_status qmaze_branch_order_parse(const char* name,
                                      qmaze_branch_order* out) {
  return guard([&] {
    auto& o = deref(out, "out");
    if (name == nullptr) throw qmaze::ArgumentError("name is null");
    o = qmaze::parse_branch_order(name) == qmaze::BranchOrder::zero_first
            ? QMAZE_ZERO_FIRST
            : QMAZE_ONE_FIRST;
  });
}

qmaze_status qmaze_dfs_solve(unsigned depth, uint64_t target,
                             qmaze_branch_order order, uint8_t* path,
                             size_t path_capacity, qmaze_dfs_report* out) {
  return guard([&] {
    const auto r = qmaze::dfs_solve(depth, target, to_order(order));
    write_path(r.path, path, path_capacity);
    if (out) {
      out->target = r.target;
      out->edge_steps = r.edge_steps;
      out->nodes_expanded = r.nodes_expanded;
    }
  });
}

qmaze_status qmaze_worst_and_mean_steps(unsigned depth,
                                        qmaze_branch_order order,
                                        qmaze_step_summary* out) {
  return guard([&] {
    fill_summary(qmaze::worst_and_mean_steps(depth, to_order(order)),
                 &deref(out, "out"));
  });
}

qmaze_status qmaze_comparison_row(unsigned depth, double ops_per_sec,
                                  qmaze_branch_order order,
                                  qmaze_comparison* out) {
  return guard([&] {
    auto& o = deref(out, "out");
    const auto row = qmaze::comparison_row(depth, ops_per_sec, to_order(order));
    o = qmaze_comparison{};
    o.depth = row.depth;
    o.quantum_steps = row.quantum_steps;
    o.measured = row.measured ? 1 : 0;
    if (row.summary) fill_summary(*row.summary, &o.summary);
    o.worst_edge_steps = row.worst_edge_steps;
    o.closed_form = row.closed_form;
    o.formula_value = row.formula_value;
    o.formula_matches_worst = row.formula_matches_worst ? 1 : 0;
    o.ratio_percent = row.ratio_percent;
    o.classical_seconds = row.classical_seconds;
    o.ops_per_sec = row.ops_per_sec;
    o.discrepancy = row.discrepancy ? 1 : 0;

    const double nan = std::numeric_limits<double>::quiet_NaN();
    o.has_quoted = row.quoted ? 1 : 0;
    o.quoted_classical_worst_steps = nan;
    o.quoted_classical_mean_steps = nan;
    o.quoted_quantum_mean_steps = nan;
    o.quoted_ratio_percent = nan;
    o.quoted_days = nan;
    o.quoted_implied_ratio_percent = nan;
    o.quoted_implied_days = nan;
    o.quoted_worst_matches_measured = -1;
    o.quoted_worst_matches_bound = -1;
    o.quoted_worst_discrepancy = -1;
    o.quoted_quantum_steps_match = -1;
    o.quoted_mean_matches_measured = -1;
    o.quoted_quantum_mean_matches = -1;
    o.quoted_ratio_consistent = -1;
    o.quoted_days_consistent = -1;
    if (row.quoted) {
      const auto& a = *row.quoted;
      o.quoted_classical_worst_steps = a.quoted.classical_worst_steps;
      o.quoted_quantum_steps = a.quoted.quantum_steps;
      o.quoted_classical_mean_steps = opt(a.quoted.classical_mean_steps);
      o.quoted_quantum_mean_steps = opt(a.quoted.quantum_mean_steps);
      o.quoted_ratio_percent = opt(a.quoted.ratio_percent);
      o.quoted_days = opt(a.quoted.days_at_1e9_ops);
      o.quoted_worst_matches_measured = a.worst_matches_measured ? 1 : 0;
      o.quoted_worst_matches_bound = a.worst_matches_bound ? 1 : 0;
      o.quoted_worst_discrepancy = a.worst_discrepancy ? 1 : 0;
      o.quoted_quantum_steps_match = a.quantum_steps_match ? 1 : 0;
      o.quoted_mean_matches_measured = tri(a.mean_matches_measured);
      o.quoted_quantum_mean_matches = tri(a.quantum_mean_matches);
      o.quoted_implied_ratio_percent = a.implied_ratio_percent;
      o.quoted_ratio_consistent = tri(a.ratio_consistent);
      o.quoted_implied_days = a.implied_days;
      o.quoted_days_consistent = tri(a.days_consistent);
    }
  });
}

}  // extern "C"
