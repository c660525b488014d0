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

#include "qmaze/algorithm.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qmaze/errors.hpp"

namespace qmaze {

namespace {

void check_limits(unsigned depth, const SimLimits& limits) {
  if (depth < 1) throw ArgumentError("depth must be at least 1");
  if (depth > limits.max_depth) {
    throw ResourceLimitError("depth " + std::to_string(depth) +
                             " exceeds the simulation cap of " +
                             std::to_string(limits.max_depth));
  }
  const unsigned q = depth + counting_width(depth);
  if (q > limits.max_qubits) {
    throw ResourceLimitError("depth " + std::to_string(depth) + " needs " +
                             std::to_string(q) + " qubits, cap is " +
                             std::to_string(limits.max_qubits));
  }
}

}  // namespace

unsigned counting_width(unsigned depth) {
  if (depth < 1) throw ArgumentError("depth must be at least 1");
  // ceil(log2(depth)) == bit_width(depth - 1) for depth >= 1.
  const auto w = static_cast<unsigned>(std::bit_width(depth - 1U));
  return std::max(1U, w);
}

RegisterLayout::RegisterLayout(unsigned depth)
    : depth_(depth), width_(qmaze::counting_width(depth)) {}

std::vector<unsigned> RegisterLayout::counter_register() const {
  std::vector<unsigned> reg(width_);
  for (unsigned b = 0; b < width_; ++b) reg[b] = counter_qubit(b);
  return reg;
}

std::uint64_t RegisterLayout::final_counter() const noexcept {
  return depth_ & ((std::uint64_t{1} << width_) - 1);
}

std::uint64_t RegisterLayout::counter_of(BasisIndex index) const noexcept {
  return index & ((BasisIndex{1} << width_) - 1);
}

EndpointIndex RegisterLayout::endpoint_of(BasisIndex index) const noexcept {
  EndpointIndex e = 0;
  for (unsigned i = 0; i < depth_; ++i) {
    e = (e << 1) | ((index >> path_qubit(i)) & 1U);
  }
  return e;
}

BasisIndex RegisterLayout::basis_index(std::uint64_t counter,
                                       EndpointIndex endpoint) const {
  if (counter >> width_) throw ArgumentError("counter value out of range");
  if (endpoint >> depth_) throw ArgumentError("endpoint out of range");
  BasisIndex index = counter;
  for (unsigned i = 0; i < depth_; ++i) {
    const BasisIndex decision = (endpoint >> (depth_ - 1 - i)) & 1U;
    index |= decision << path_qubit(i);
  }
  return index;
}

std::string_view to_string(AlgorithmMode mode) noexcept {
  return mode == AlgorithmMode::oblivious ? "oblivious" : "controlled";
}

AlgorithmMode parse_mode(std::string_view name) {
  if (name == "oblivious") return AlgorithmMode::oblivious;
  if (name == "controlled") return AlgorithmMode::controlled;
  throw ArgumentError("unknown mode '" + std::string(name) + "'");
}

std::vector<Control> counter_equals(const RegisterLayout& layout,
                                    std::uint64_t value) {
  std::vector<Control> controls;
  controls.reserve(layout.counting_width());
  for (unsigned b = 0; b < layout.counting_width(); ++b) {
    const unsigned q = layout.counter_qubit(b);
    controls.push_back((value >> b) & 1U ? pos(q) : neg(q));
  }
  return controls;
}

Circuit build_algorithm_circuit(unsigned depth, AlgorithmMode mode,
                                const SimLimits& limits) {
  check_limits(depth, limits);
  const RegisterLayout layout(depth);
  Circuit circuit(layout.total_qubits());
  const auto counter = layout.counter_register();
  for (unsigned i = 0; i < depth; ++i) {
    if (mode == AlgorithmMode::oblivious) {
      circuit.add(HGate{layout.path_qubit(i)});
    } else {
      // Counter values wrap mod 2^C, but i < N <= 2^C so each step's pattern
      // is distinct.
      circuit.add(MCHGate{counter_equals(layout, i), layout.path_qubit(i)});
    }
    circuit.add(IncGate{counter});
  }
  return circuit;
}

RunResult run(unsigned depth, AlgorithmMode mode, const SimLimits& limits) {
  const Circuit circuit = build_algorithm_circuit(depth, mode, limits);
  const RegisterLayout layout(depth);
  StateVector state(layout.total_qubits(), limits.max_qubits);
  apply_circuit(circuit, state);
  return RunResult{std::move(state), layout, layout.final_counter()};
}

Solution solve(const RunResult& result, EndpointIndex target) {
  const auto& layout = result.layout;
  const unsigned n = layout.depth();
  if (target >> n) {
    throw ArgumentError("target " + std::to_string(target) +
                        " out of range for depth " + std::to_string(n));
  }
  const BasisIndex index = layout.basis_index(result.final_counter, target);
  const Amplitude amp = result.final_state.amplitude_at(index);
  const double expected = std::pow(2.0, -0.5 * n);
  if (!(std::abs(std::abs(amp) - expected) <= 1e-9)) {
    throw InternalConsistencyError(
        "amplitude at basis index " + std::to_string(index) + " is " +
        std::to_string(std::abs(amp)) + ", expected " +
        std::to_string(expected));
  }
  Solution s;
  s.path = path_of(layout.endpoint_of(index), n);
  s.endpoint = target;
  s.basis_index = index;
  s.amplitude = amp;
  s.probability = success_probability(n);
  return s;
}

Solution solve(unsigned depth, EndpointIndex target, AlgorithmMode mode,
               const SimLimits& limits) {
  if (depth >= 1 && depth <= 62 && (target >> depth)) {
    throw ArgumentError("target " + std::to_string(target) +
                        " out of range for depth " + std::to_string(depth));
  }
  return solve(run(depth, mode, limits), target);
}

Sample sample_path(const StateVector& state, const RegisterLayout& layout,
                   std::uint64_t seed) {
  if (state.num_qubits() != layout.total_qubits()) {
    throw ArgumentError("state does not match the register layout");
  }
  const BasisIndex index = state.measure_all(seed);
  Sample s;
  s.endpoint = layout.endpoint_of(index);
  s.path = path_of(s.endpoint, layout.depth());
  s.counter = layout.counter_of(index);
  return s;
}

Sample sample_path(const RunResult& result, std::uint64_t seed) {
  return sample_path(result.final_state, result.layout, seed);
}

Sample sample_path(unsigned depth, std::uint64_t seed, AlgorithmMode mode,
                   const SimLimits& limits) {
  return sample_path(run(depth, mode, limits), seed);
}

std::uint64_t shot_seed(std::uint64_t seed, std::uint64_t shot) noexcept {
  std::uint64_t z = seed + (shot + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double success_probability(unsigned depth) {
  if (depth < 1) throw ArgumentError("depth must be at least 1");
  return std::ldexp(1.0, -static_cast<int>(depth));
}

}  // namespace qmaze
