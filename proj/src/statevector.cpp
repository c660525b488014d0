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

#include "qmaze/statevector.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <string>

#include "qmaze/errors.hpp"

namespace qmaze {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Enumerate i with bit `target` clear and (i & mask) == value, calling
// fn(i, i | 2^target). Inserting a zero at `target` into a dense counter
// visits every pair exactly once.
template <class Fn>
void for_each_pair(std::uint64_t size, unsigned target, BasisIndex mask,
                   BasisIndex value, Fn&& fn) {
  const BasisIndex bit = BasisIndex{1} << target;
  const BasisIndex lo = bit - 1;
  const BasisIndex hi = ~lo;
  const std::uint64_t half = size >> 1;
  for (std::uint64_t k = 0; k < half; ++k) {
    const BasisIndex i0 = ((k & hi) << 1) | (k & lo);
    if ((i0 & mask) != value) continue;
    fn(i0, i0 | bit);
  }
}

}  // namespace

StateVector::StateVector(unsigned num_qubits, unsigned max_qubits) {
  if (num_qubits == 0) throw ArgumentError("state needs at least one qubit");
  if (num_qubits > max_qubits) {
    throw ResourceLimitError("state of " + std::to_string(num_qubits) +
                             " qubits exceeds the cap of " +
                             std::to_string(max_qubits));
  }
  if (num_qubits >= 63) {
    throw ResourceLimitError("basis index would not fit in 64 bits");
  }
  num_qubits_ = num_qubits;
  amps_.assign(std::uint64_t{1} << num_qubits, Amplitude{0.0, 0.0});
  amps_[0] = Amplitude{1.0, 0.0};
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
  const auto n = amplitudes.size();
  if (n < 2 || !std::has_single_bit(n)) {
    throw ArgumentError("amplitude count must be a power of two >= 2");
  }
  for (const auto& a : amplitudes) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw ArgumentError("amplitudes must be finite");
    }
  }
  StateVector s;
  s.num_qubits_ = static_cast<unsigned>(std::countr_zero(n));
  s.amps_ = std::move(amplitudes);
  return s;
}

Amplitude StateVector::amplitude_at(BasisIndex index) const {
  if (index >= amps_.size()) {
    throw ArgumentError("basis index " + std::to_string(index) +
                        " out of range for " + std::to_string(num_qubits_) +
                        " qubits");
  }
  return amps_[index];
}

double StateVector::norm() const noexcept {
  double sum = 0.0;
  for (const auto& a : amps_) sum += std::norm(a);
  return std::sqrt(sum);
}

StateVector::ControlMask StateVector::checked_controls(
    std::span<const Control> controls, unsigned target) const {
  if (target >= num_qubits_) {
    throw ArgumentError("target qubit " + std::to_string(target) +
                        " out of range");
  }
  ControlMask cm;
  const BasisIndex target_bit = BasisIndex{1} << target;
  for (const auto& c : controls) {
    if (c.qubit >= num_qubits_) {
      throw ArgumentError("control qubit " + std::to_string(c.qubit) +
                          " out of range");
    }
    const BasisIndex bit = BasisIndex{1} << c.qubit;
    if ((cm.mask & bit) != 0 || bit == target_bit) {
      throw ArgumentError("qubit " + std::to_string(c.qubit) +
                          " used more than once in one gate");
    }
    cm.mask |= bit;
    if (c.polarity == Polarity::positive) cm.value |= bit;
  }
  return cm;
}

void StateVector::apply_hadamard(unsigned qubit) {
  apply_multi_controlled_h({}, qubit);
}

void StateVector::apply_x(unsigned qubit) {
  apply_multi_controlled_x({}, qubit);
}

void StateVector::apply_multi_controlled_x(std::span<const Control> controls,
                                           unsigned target) {
  const auto cm = checked_controls(controls, target);
  for_each_pair(amps_.size(), target, cm.mask, cm.value,
                [this](BasisIndex i, BasisIndex j) {
                  std::swap(amps_[i], amps_[j]);
                });
}

void StateVector::apply_multi_controlled_h(std::span<const Control> controls,
                                           unsigned target) {
  const auto cm = checked_controls(controls, target);
  for_each_pair(amps_.size(), target, cm.mask, cm.value,
                [this](BasisIndex i, BasisIndex j) {
                  const Amplitude a = amps_[i];
                  const Amplitude b = amps_[j];
                  amps_[i] = (a + b) * kInvSqrt2;
                  amps_[j] = (a - b) * kInvSqrt2;
                });
}

BasisIndex StateVector::measure_all(std::uint64_t seed) const {
  const double n = norm();
  if (!(std::abs(n - 1.0) <= 1e-9)) {
    throw StateIntegrityError("cannot measure: state norm is " +
                              std::to_string(n));
  }
  // 53 high bits of one mt19937_64 draw give a uniform double in [0, 1).
  std::mt19937_64 gen(seed);
  const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;

  double acc = 0.0;
  BasisIndex last_nonzero = 0;
  for (BasisIndex i = 0; i < amps_.size(); ++i) {
    const double p = std::norm(amps_[i]);
    if (p == 0.0) continue;
    acc += p;
    last_nonzero = i;
    if (u < acc) return i;
  }
  // Rounding left the cumulative sum just below u.
  return last_nonzero;
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) throw ArgumentError("state sizes differ");
  double worst = 0.0;
  const auto aa = a.amplitudes();
  const auto bb = b.amplitudes();
  for (std::uint64_t i = 0; i < aa.size(); ++i) {
    worst = std::max(worst, std::abs(aa[i] - bb[i]));
  }
  return worst;
}

double probability_of_one(const StateVector& state, unsigned qubit) {
  if (qubit >= state.num_qubits()) throw ArgumentError("qubit out of range");
  const BasisIndex bit = BasisIndex{1} << qubit;
  double p = 0.0;
  const auto amps = state.amplitudes();
  for (BasisIndex i = 0; i < amps.size(); ++i) {
    if (i & bit) p += std::norm(amps[i]);
  }
  return p;
}

}  // namespace qmaze
