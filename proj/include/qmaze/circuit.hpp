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

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qmaze/statevector.hpp"

namespace qmaze {

struct HGate {
  unsigned target = 0;
  friend bool operator==(const HGate&, const HGate&) = default;
};

struct XGate {
  unsigned target = 0;
  friend bool operator==(const XGate&, const XGate&) = default;
};

struct MCXGate {
  std::vector<Control> controls;
  unsigned target = 0;
  friend bool operator==(const MCXGate&, const MCXGate&) = default;
};

struct MCHGate {
  std::vector<Control> controls;
  unsigned target = 0;
  friend bool operator==(const MCHGate&, const MCHGate&) = default;
};

/// +1 modulo 2^C on `reg`, low bit first. A macro: it is lowered to
/// MCX/X gates before simulation or serialization.
struct IncGate {
  std::vector<unsigned> reg;
  friend bool operator==(const IncGate&, const IncGate&) = default;
};

using Gate = std::variant<HGate, XGate, MCXGate, MCHGate, IncGate>;

/// True for H and MCH.
bool is_hadamard_family(const Gate& gate) noexcept;

/// Ripple ladder for +1 mod 2^C: for k = C-1 down to 1, MCX with positive
/// controls on reg[0..k-1] targeting reg[k]; then X on reg[0].
/// The most-significant target must go first.
std::vector<Gate> lower_increment(const std::vector<unsigned>& reg);

/// Ordered gate list over a fixed qubit count. Every gate is range- and
/// distinctness-checked on insertion, so a constructed Circuit is always valid.
class Circuit {
 public:
  explicit Circuit(unsigned num_qubits);

  unsigned num_qubits() const noexcept { return num_qubits_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }

  /// Throws ArgumentError if the gate references bad or repeated qubits.
  Circuit& add(Gate gate);

  /// Copy with every IncGate replaced by its ladder.
  Circuit lowered() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  unsigned num_qubits_;
  std::vector<Gate> gates_;
};

void apply_gate(const Gate& gate, StateVector& state);

/// Applies gates in order. Throws ArgumentError on qubit-count mismatch.
void apply_circuit(const Circuit& circuit, StateVector& state);

/// Serializes to the line format:
///   QUBITS <Q>
///   H <t> | X <t> | MCX <ctrl>... : <t> | MCH <ctrl>... : <t>
/// with <ctrl> = +q or -q. INC is lowered first; MCX/MCH with no controls
/// are written as X/H.
std::string emit_text(const Circuit& circuit);

/// Inverse of emit_text. Accepts '#' comment lines and blank lines.
/// Throws ParseError carrying the 1-based line number.
Circuit parse_text(std::string_view text);

}  // namespace qmaze
