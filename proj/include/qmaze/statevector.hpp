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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace qmaze {

using Amplitude = std::complex<double>;

/// Bit q of a basis index is the state of qubit q (qubit 0 is the LSB).
using BasisIndex = std::uint64_t;

inline constexpr unsigned kDefaultMaxQubits = 26;

enum class Polarity : std::uint8_t { positive, negative };

/// One control of a multi-controlled gate. A positive control fires when the
/// qubit is 1, a negative one when it is 0.
struct Control {
  unsigned qubit = 0;
  Polarity polarity = Polarity::positive;

  friend bool operator==(const Control&, const Control&) = default;
};

inline Control pos(unsigned q) { return {q, Polarity::positive}; }
inline Control neg(unsigned q) { return {q, Polarity::negative}; }

/// Dense 2^Q amplitude vector.
///
/// Gate application walks the index pairs (i, i | 2^target) with bit `target`
/// of i clear. Each pair is read and written independently, so the result
/// does not depend on iteration order.
class StateVector {
 public:
  /// |0...0> on `num_qubits` qubits. Throws ResourceLimitError above
  /// `max_qubits` and ArgumentError for zero qubits.
  explicit StateVector(unsigned num_qubits,
                       unsigned max_qubits = kDefaultMaxQubits);

  /// Adopts explicit amplitudes; the length must be a power of two >= 2.
  /// No normalization is performed.
  static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

  unsigned num_qubits() const noexcept { return num_qubits_; }
  std::uint64_t size() const noexcept { return amps_.size(); }

  std::span<const Amplitude> amplitudes() const noexcept { return amps_; }

  Amplitude amplitude_at(BasisIndex index) const;

  double norm() const noexcept;

  void apply_hadamard(unsigned qubit);
  void apply_x(unsigned qubit);
  void apply_multi_controlled_x(std::span<const Control> controls,
                                unsigned target);
  void apply_multi_controlled_h(std::span<const Control> controls,
                                unsigned target);

  /// Born-rule sample of all qubits. Does not collapse the state; calling
  /// again with a different seed models a fresh preparation.
  /// Throws StateIntegrityError if |norm - 1| > 1e-9.
  BasisIndex measure_all(std::uint64_t seed) const;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  StateVector() = default;

  struct ControlMask {
    BasisIndex mask = 0;
    BasisIndex value = 0;
  };
  ControlMask checked_controls(std::span<const Control> controls,
                               unsigned target) const;

  unsigned num_qubits_ = 0;
  std::vector<Amplitude> amps_;
};

inline StateVector init_zero_state(unsigned num_qubits,
                                   unsigned max_qubits = kDefaultMaxQubits) {
  return StateVector(num_qubits, max_qubits);
}

/// Largest componentwise |a_i - b_i|. Throws ArgumentError on size mismatch.
double max_abs_diff(const StateVector& a, const StateVector& b);

/// Marginal probability that `qubit` reads 1.
double probability_of_one(const StateVector& state, unsigned qubit);

}  // namespace qmaze
