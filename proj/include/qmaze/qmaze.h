/* Copyright 2026 The qmaze Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

/* C interface to libqmaze.
 *
 * Every function that can fail returns a qmaze_status. On failure a message
 * is stored per thread and can be read with qmaze_last_error() until the next
 * failing call on that thread. Handles are opaque; each *_new / *_parse /
 * *_load / qmaze_run result must be released with the matching *_free.
 * Functions never take ownership of caller buffers.
 */

#ifndef QMAZE_QMAZE_H_
#define QMAZE_QMAZE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(QMAZE_BUILDING_LIBRARY)
#    define QMAZE_API __declspec(dllexport)
#  else
#    define QMAZE_API __declspec(dllimport)
#  endif
#else
#  define QMAZE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qmaze_status {
  QMAZE_OK = 0,
  QMAZE_ERR_ARGUMENT = 2,
  QMAZE_ERR_RESOURCE_LIMIT = 3,
  QMAZE_ERR_IO = 4,
  QMAZE_ERR_PARSE = 5,
  QMAZE_ERR_VALIDATION = 6,
  QMAZE_ERR_STATE_INTEGRITY = 7,
  QMAZE_ERR_INTERNAL = 8
} qmaze_status;

typedef enum qmaze_mode {
  QMAZE_MODE_OBLIVIOUS = 0,
  QMAZE_MODE_CONTROLLED = 1
} qmaze_mode;

typedef enum qmaze_branch_order {
  QMAZE_ZERO_FIRST = 0,
  QMAZE_ONE_FIRST = 1
} qmaze_branch_order;

typedef struct qmaze_state qmaze_state;
typedef struct qmaze_circuit qmaze_circuit;
typedef struct qmaze_maze qmaze_maze;

typedef struct qmaze_control {
  unsigned qubit;
  int positive; /* nonzero: fires on 1; zero: fires on 0 */
} qmaze_control;

typedef struct qmaze_limits {
  unsigned max_qubits; /* default 26 */
  unsigned max_depth;  /* default 20 */
} qmaze_limits;

QMAZE_API const char* qmaze_version(void);
QMAZE_API const char* qmaze_status_name(qmaze_status status);
/* Message of the most recent failure on this thread, "" if none. */
QMAZE_API const char* qmaze_last_error(void);
/* 1-based line of the most recent parse failure on this thread, else 0. */
QMAZE_API size_t qmaze_last_error_line(void);
QMAZE_API void qmaze_string_free(char* text);

QMAZE_API void qmaze_limits_default(qmaze_limits* out);

/* ---- state vector ------------------------------------------------------ */

QMAZE_API qmaze_status qmaze_state_new(unsigned num_qubits, unsigned max_qubits,
                                       qmaze_state** out);
/* Adopts 2^k amplitudes given as separate real/imaginary arrays. */
QMAZE_API qmaze_status qmaze_state_from_amplitudes(const double* re,
                                                   const double* im,
                                                   uint64_t count,
                                                   qmaze_state** out);
QMAZE_API qmaze_status qmaze_state_clone(const qmaze_state* state,
                                         qmaze_state** out);
QMAZE_API void qmaze_state_free(qmaze_state* state);
QMAZE_API unsigned qmaze_state_num_qubits(const qmaze_state* state);
QMAZE_API uint64_t qmaze_state_size(const qmaze_state* state);
QMAZE_API qmaze_status qmaze_state_amplitude(const qmaze_state* state,
                                             uint64_t index, double* re,
                                             double* im);
QMAZE_API double qmaze_state_norm(const qmaze_state* state);
QMAZE_API qmaze_status qmaze_state_apply_h(qmaze_state* state, unsigned qubit);
QMAZE_API qmaze_status qmaze_state_apply_x(qmaze_state* state, unsigned qubit);
QMAZE_API qmaze_status qmaze_state_apply_mcx(qmaze_state* state,
                                             const qmaze_control* controls,
                                             size_t num_controls,
                                             unsigned target);
QMAZE_API qmaze_status qmaze_state_apply_mch(qmaze_state* state,
                                             const qmaze_control* controls,
                                             size_t num_controls,
                                             unsigned target);
/* Born-rule sample; the state is left untouched. */
QMAZE_API qmaze_status qmaze_state_measure(const qmaze_state* state,
                                           uint64_t seed, uint64_t* out);
QMAZE_API qmaze_status qmaze_state_max_abs_diff(const qmaze_state* a,
                                                const qmaze_state* b,
                                                double* out);

/* ---- circuits ---------------------------------------------------------- */

QMAZE_API qmaze_status qmaze_circuit_parse(const char* text, size_t length,
                                           qmaze_circuit** out);
QMAZE_API qmaze_status qmaze_circuit_load(const char* path,
                                          qmaze_circuit** out);
QMAZE_API void qmaze_circuit_free(qmaze_circuit* circuit);
QMAZE_API unsigned qmaze_circuit_num_qubits(const qmaze_circuit* circuit);
/* Gate count with increments lowered. */
QMAZE_API size_t qmaze_circuit_gate_count(const qmaze_circuit* circuit);
/* Number of H and MCH gates. */
QMAZE_API size_t qmaze_circuit_hadamard_count(const qmaze_circuit* circuit);
/* *out receives a NUL-terminated string; release with qmaze_string_free. */
QMAZE_API qmaze_status qmaze_circuit_emit(const qmaze_circuit* circuit,
                                          char** out, size_t* length);
QMAZE_API qmaze_status qmaze_circuit_save(const qmaze_circuit* circuit,
                                          const char* path);
QMAZE_API qmaze_status qmaze_circuit_apply(const qmaze_circuit* circuit,
                                           qmaze_state* state);

/* ---- maze -------------------------------------------------------------- */

QMAZE_API qmaze_status qmaze_maze_build(unsigned depth, int has_target,
                                        uint64_t target, unsigned max_depth,
                                        qmaze_maze** out);
QMAZE_API qmaze_status qmaze_maze_parse(const char* text, size_t length,
                                        unsigned max_depth, qmaze_maze** out);
/* QMAZE_ERR_IO if the file cannot be read. */
QMAZE_API qmaze_status qmaze_maze_load(const char* path, unsigned max_depth,
                                       qmaze_maze** out);
QMAZE_API void qmaze_maze_free(qmaze_maze* maze);
QMAZE_API unsigned qmaze_maze_depth(const qmaze_maze* maze);
QMAZE_API uint64_t qmaze_maze_endpoint_count(const qmaze_maze* maze);
/* Returns 1 and writes *out if the maze has a target, else 0. */
QMAZE_API int qmaze_maze_target(const qmaze_maze* maze, uint64_t* out);

/* Explicit tree in CSR form: node v's children are
 * children[offsets[v] .. offsets[v + 1]), node 0 is the root.
 * QMAZE_ERR_VALIDATION with *bad_node set when the tree has a defect. */
QMAZE_API qmaze_status qmaze_tree_validate(const size_t* offsets,
                                           const size_t* children,
                                           size_t node_count,
                                           size_t* bad_node);

QMAZE_API qmaze_status qmaze_endpoint_of(const uint8_t* decisions,
                                         size_t length, unsigned depth,
                                         uint64_t* out);
/* Writes `depth` decisions (0/1) into out; capacity must be >= depth. */
QMAZE_API qmaze_status qmaze_path_of(uint64_t endpoint, unsigned depth,
                                     uint8_t* out, size_t capacity);

/* ---- algorithm --------------------------------------------------------- */

typedef struct qmaze_layout {
  unsigned depth;
  unsigned counting_width;
  unsigned total_qubits;
  uint64_t final_counter;
} qmaze_layout;

typedef struct qmaze_solution {
  uint64_t endpoint;
  uint64_t basis_index;
  double amplitude_re;
  double amplitude_im;
  double probability;
} qmaze_solution;

QMAZE_API qmaze_status qmaze_mode_parse(const char* name, qmaze_mode* out);
QMAZE_API qmaze_status qmaze_layout_get(unsigned depth, qmaze_layout* out);
/* Splits a basis index of the algorithm register into endpoint and counter. */
QMAZE_API qmaze_status qmaze_decode(unsigned depth, uint64_t basis_index,
                                    uint64_t* endpoint, uint64_t* counter);
QMAZE_API qmaze_status qmaze_algorithm_circuit(unsigned depth, qmaze_mode mode,
                                               const qmaze_limits* limits,
                                               qmaze_circuit** out);
/* Final state of the algorithm. limits may be NULL for defaults. */
QMAZE_API qmaze_status qmaze_run(unsigned depth, qmaze_mode mode,
                                 const qmaze_limits* limits,
                                 qmaze_state** out);
QMAZE_API qmaze_status qmaze_solve(unsigned depth, uint64_t target,
                                   qmaze_mode mode, const qmaze_limits* limits,
                                   uint8_t* path, size_t path_capacity,
                                   qmaze_solution* out);
/* One measurement of a state returned by qmaze_run(depth, ...). */
QMAZE_API qmaze_status qmaze_sample(const qmaze_state* final_state,
                                    unsigned depth, uint64_t seed,
                                    uint64_t* endpoint, uint64_t* counter);
/* Seed for shot `shot`: splitmix64 output number `shot` from `seed`. */
QMAZE_API uint64_t qmaze_shot_seed(uint64_t seed, uint64_t shot);
QMAZE_API qmaze_status qmaze_success_probability(unsigned depth, double* out);

/* ---- classical baseline ------------------------------------------------ */

typedef struct qmaze_dfs_report {
  uint64_t target;
  uint64_t edge_steps;
  uint64_t nodes_expanded;
} qmaze_dfs_report;

typedef struct qmaze_step_summary {
  unsigned depth;
  uint64_t worst_edge_steps;
  uint64_t best_edge_steps;
  double mean_edge_steps;
  uint64_t worst_nodes_expanded;
  double mean_nodes_expanded;
  uint64_t formula_value;
  uint64_t quantum_steps;
} qmaze_step_summary;

/* Optional numbers are NaN when absent; tri-state flags are -1 when the
 * comparison does not apply. */
typedef struct qmaze_comparison {
  unsigned depth;
  uint64_t quantum_steps;
  int measured;
  qmaze_step_summary summary; /* valid when measured != 0 */
  uint64_t worst_edge_steps;
  uint64_t closed_form;
  uint64_t formula_value;
  int formula_matches_worst;
  double ratio_percent;
  double classical_seconds;
  double ops_per_sec;
  int discrepancy;

  int has_quoted;
  double quoted_classical_worst_steps;
  uint64_t quoted_quantum_steps;
  double quoted_classical_mean_steps;
  double quoted_quantum_mean_steps;
  double quoted_ratio_percent;
  double quoted_days;
  int quoted_worst_matches_measured;
  int quoted_worst_matches_bound;
  int quoted_worst_discrepancy;
  int quoted_quantum_steps_match;
  int quoted_mean_matches_measured;
  int quoted_quantum_mean_matches;
  double quoted_implied_ratio_percent;
  int quoted_ratio_consistent;
  double quoted_implied_days;
  int quoted_days_consistent;
} qmaze_comparison;

QMAZE_API qmaze_status qmaze_branch_order_parse(const char* name,
                                                qmaze_branch_order* out);
QMAZE_API qmaze_status qmaze_dfs_solve(unsigned depth, uint64_t target,
                                       qmaze_branch_order order, uint8_t* path,
                                       size_t path_capacity,
                                       qmaze_dfs_report* out);
QMAZE_API qmaze_status qmaze_worst_and_mean_steps(unsigned depth,
                                                  qmaze_branch_order order,
                                                  qmaze_step_summary* out);
QMAZE_API qmaze_status qmaze_comparison_row(unsigned depth, double ops_per_sec,
                                            qmaze_branch_order order,
                                            qmaze_comparison* out);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // QMAZE_QMAZE_H_
