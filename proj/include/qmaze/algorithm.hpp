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

#pragma once

#include <cstdint>
#include <string_view>

#include "qmaze/circuit.hpp"
#include "qmaze/maze.hpp"
#include "qmaze/statevector.hpp"

namespace qmaze {

/// Caps for full simulation. The default depth cap keeps the state vector
/// at or below 2^25 amplitudes.
struct SimLimits {
  unsigned max_qubits = kDefaultMaxQubits;
  unsigned max_depth = 20;
};

/// max(1, ceil(log2(depth))). Throws ArgumentError for depth 0.
unsigned counting_width(unsigned depth);

/// Qubits [0, C) hold the step counter (bit 0 = LSB); qubit C + i holds
/// decision i.
class RegisterLayout {
 public:
  explicit RegisterLayout(unsigned depth);

  unsigned depth() const noexcept { return depth_; }
  unsigned counting_width() const noexcept { return width_; }
  unsigned total_qubits() const noexcept { return width_ + depth_; }

  unsigned counter_qubit(unsigned bit) const noexcept { return bit; }
  unsigned path_qubit(unsigned decision) const noexcept {
    return width_ + decision;
  }
  std::vector<unsigned> counter_register() const;

  /// Counter value after all N increments: N mod 2^C.
  std::uint64_t final_counter() const noexcept;

  std::uint64_t counter_of(BasisIndex index) const noexcept;
  EndpointIndex endpoint_of(BasisIndex index) const noexcept;
  BasisIndex basis_index(std::uint64_t counter, EndpointIndex endpoint) const;

 private:
  unsigned depth_;
  unsigned width_;
};

/// oblivious: each step's Hadamard is unconditional.
/// controlled: each step's Hadamard fires only when the counter equals the
/// step number.
enum class AlgorithmMode { oblivious, controlled };

std::string_view to_string(AlgorithmMode mode) noexcept;
/// Throws ArgumentError for anything other than "oblivious"/"controlled".
AlgorithmMode parse_mode(std::string_view name);

/// Controls matching the counter against `value` (+ on 1 bits, - on 0 bits).
std::vector<Control> counter_equals(const RegisterLayout& layout,
                                    std::uint64_t value);

/// Per decision i: H (or counter-controlled MCH) on path qubit C+i, then INC
/// on the counter. Throws ResourceLimitError past `limits`.
Circuit build_algorithm_circuit(unsigned depth, AlgorithmMode mode,
                                const SimLimits& limits = {});

struct RunResult {
  StateVector final_state;
  RegisterLayout layout;
  std::uint64_t final_counter;
};

RunResult run(unsigned depth, AlgorithmMode mode, const SimLimits& limits = {});

struct Solution {
  PathBits path;
  EndpointIndex endpoint = 0;
  BasisIndex basis_index = 0;
  Amplitude amplitude;
  /// Single-shot probability of reading this path, 2^-N.
  double probability = 0.0;
};

/// Reads the target's amplitude straight out of the simulated state. Throws
/// InternalConsistencyError if its magnitude differs from 2^(-N/2) by more
/// than 1e-9.
Solution solve(const RunResult& result, EndpointIndex target);
Solution solve(unsigned depth, EndpointIndex target,
               AlgorithmMode mode = AlgorithmMode::oblivious,
               const SimLimits& limits = {});

struct Sample {
  PathBits path;
  EndpointIndex endpoint = 0;
  std::uint64_t counter = 0;
};

Sample sample_path(const StateVector& state, const RegisterLayout& layout,
                   std::uint64_t seed);
Sample sample_path(const RunResult& result, std::uint64_t seed);
Sample sample_path(unsigned depth, std::uint64_t seed,
                   AlgorithmMode mode = AlgorithmMode::oblivious,
                   const SimLimits& limits = {});

/// Seed for shot `shot` of a run with base seed `seed`: the shot-th output
/// of a splitmix64 stream started at `seed`. Earlier shots keep their seeds
/// when the shot count changes.
std::uint64_t shot_seed(std::uint64_t seed, std::uint64_t shot) noexcept;

/// 2^-depth. Throws ArgumentError for depth 0.
double success_probability(unsigned depth);

}  // namespace qmaze
