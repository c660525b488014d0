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

#include "qmaze/circuit.hpp"

#include <charconv>
#include <cstdint>
#include <optional>

#include "qmaze/errors.hpp"

namespace qmaze {

namespace {

constexpr unsigned kMaxCircuitQubits = 62;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Returns an error message, or nullopt if the gate is well formed.
std::optional<std::string> check_gate(const Gate& gate, unsigned num_qubits) {
  auto in_range = [&](unsigned q) { return q < num_qubits; };
  auto check_controlled = [&](const std::vector<Control>& controls,
                              unsigned target) -> std::optional<std::string> {
    if (!in_range(target)) {
      return "target qubit " + std::to_string(target) + " out of range";
    }
    std::uint64_t seen = std::uint64_t{1} << target;
    for (const auto& c : controls) {
      if (!in_range(c.qubit)) {
        return "control qubit " + std::to_string(c.qubit) + " out of range";
      }
      const std::uint64_t bit = std::uint64_t{1} << c.qubit;
      if (seen & bit) {
        return "qubit " + std::to_string(c.qubit) + " used more than once";
      }
      seen |= bit;
    }
    return std::nullopt;
  };

  return std::visit(
      overloaded{
          [&](const HGate& g) { return check_controlled({}, g.target); },
          [&](const XGate& g) { return check_controlled({}, g.target); },
          [&](const MCXGate& g) {
            return check_controlled(g.controls, g.target);
          },
          [&](const MCHGate& g) {
            return check_controlled(g.controls, g.target);
          },
          [&](const IncGate& g) -> std::optional<std::string> {
            if (g.reg.empty()) return "INC register is empty";
            std::uint64_t seen = 0;
            for (unsigned q : g.reg) {
              if (!in_range(q)) {
                return "INC qubit " + std::to_string(q) + " out of range";
              }
              const std::uint64_t bit = std::uint64_t{1} << q;
              if (seen & bit) {
                return "INC qubit " + std::to_string(q) + " repeated";
              }
              seen |= bit;
            }
            return std::nullopt;
          },
      },
      gate);
}

void append_controls(std::string& out, const std::vector<Control>& controls,
                     unsigned target) {
  for (const auto& c : controls) {
    out += c.polarity == Polarity::positive ? " +" : " -";
    out += std::to_string(c.qubit);
  }
  out += " : ";
  out += std::to_string(target);
}

std::vector<std::string_view> split_spaces(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(' ', start);
    tokens.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return tokens;
}

std::optional<unsigned> parse_uint(std::string_view tok) {
  if (tok.empty()) return std::nullopt;
  unsigned value = 0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

unsigned expect_qubit(std::string_view tok, unsigned num_qubits,
                      std::size_t line) {
  const auto q = parse_uint(tok);
  if (!q) {
    throw ParseError(line, "expected a qubit number, got '" +
                               std::string(tok) + "'");
  }
  if (*q >= num_qubits) {
    throw ParseError(line, "qubit " + std::to_string(*q) +
                               " outside declared range [0, " +
                               std::to_string(num_qubits) + ")");
  }
  return *q;
}

}  // namespace

bool is_hadamard_family(const Gate& gate) noexcept {
  return std::holds_alternative<HGate>(gate) ||
         std::holds_alternative<MCHGate>(gate);
}

std::vector<Gate> lower_increment(const std::vector<unsigned>& reg) {
  if (reg.empty()) throw ArgumentError("increment register is empty");
  std::uint64_t seen = 0;
  for (unsigned q : reg) {
    if (q >= 64 || (seen & (std::uint64_t{1} << q))) {
      throw ArgumentError("increment register qubits must be distinct");
    }
    seen |= std::uint64_t{1} << q;
  }

  std::vector<Gate> ladder;
  ladder.reserve(reg.size());
  for (std::size_t k = reg.size() - 1; k >= 1; --k) {
    MCXGate g;
    g.target = reg[k];
    for (std::size_t c = 0; c < k; ++c) g.controls.push_back(pos(reg[c]));
    ladder.emplace_back(std::move(g));
  }
  ladder.emplace_back(XGate{reg[0]});
  return ladder;
}

Circuit::Circuit(unsigned num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits == 0 || num_qubits > kMaxCircuitQubits) {
    throw ArgumentError("circuit qubit count must be in [1, " +
                        std::to_string(kMaxCircuitQubits) + "]");
  }
}

Circuit& Circuit::add(Gate gate) {
  if (auto err = check_gate(gate, num_qubits_)) throw ArgumentError(*err);
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit Circuit::lowered() const {
  Circuit out(num_qubits_);
  for (const auto& g : gates_) {
    if (const auto* inc = std::get_if<IncGate>(&g)) {
      for (auto& step : lower_increment(inc->reg)) {
        out.gates_.push_back(std::move(step));
      }
    } else {
      out.gates_.push_back(g);
    }
  }
  return out;
}

void apply_gate(const Gate& gate, StateVector& state) {
  std::visit(overloaded{
                 [&](const HGate& g) { state.apply_hadamard(g.target); },
                 [&](const XGate& g) { state.apply_x(g.target); },
                 [&](const MCXGate& g) {
                   state.apply_multi_controlled_x(g.controls, g.target);
                 },
                 [&](const MCHGate& g) {
                   state.apply_multi_controlled_h(g.controls, g.target);
                 },
                 [&](const IncGate& g) {
                   for (const auto& step : lower_increment(g.reg)) {
                     apply_gate(step, state);
                   }
                 },
             },
             gate);
}

void apply_circuit(const Circuit& circuit, StateVector& state) {
  if (circuit.num_qubits() != state.num_qubits()) {
    throw ArgumentError("circuit has " + std::to_string(circuit.num_qubits()) +
                        " qubits but state has " +
                        std::to_string(state.num_qubits()));
  }
  for (const auto& g : circuit.gates()) apply_gate(g, state);
}

std::string emit_text(const Circuit& circuit) {
  std::string out = "QUBITS " + std::to_string(circuit.num_qubits()) + "\n";
  const Circuit flat = circuit.lowered();
  for (const auto& g : flat.gates()) {
    std::visit(overloaded{
                   [&](const HGate& h) {
                     out += "H " + std::to_string(h.target);
                   },
                   [&](const XGate& x) {
                     out += "X " + std::to_string(x.target);
                   },
                   [&](const MCXGate& m) {
                     if (m.controls.empty()) {
                       out += "X " + std::to_string(m.target);
                     } else {
                       out += "MCX";
                       append_controls(out, m.controls, m.target);
                     }
                   },
                   [&](const MCHGate& m) {
                     if (m.controls.empty()) {
                       out += "H " + std::to_string(m.target);
                     } else {
                       out += "MCH";
                       append_controls(out, m.controls, m.target);
                     }
                   },
                   [&](const IncGate&) {
                     throw InternalConsistencyError("INC survived lowering");
                   },
               },
               g);
    out += '\n';
  }
  return out;
}

Circuit parse_text(std::string_view text) {
  std::optional<Circuit> circuit;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    if (line.empty() || line.front() == '#') continue;

    const auto tokens = split_spaces(line);
    for (const auto& t : tokens) {
      if (t.empty()) throw ParseError(line_no, "tokens must be separated by single spaces");
    }
    const std::string_view op = tokens[0];

    if (!circuit) {
      if (op != "QUBITS") throw ParseError(line_no, "missing QUBITS header");
      if (tokens.size() != 2) throw ParseError(line_no, "QUBITS takes one count");
      const auto q = parse_uint(tokens[1]);
      if (!q || *q == 0 || *q > kMaxCircuitQubits) {
        throw ParseError(line_no, "invalid qubit count '" +
                                      std::string(tokens[1]) + "'");
      }
      circuit.emplace(*q);
      continue;
    }

    const unsigned nq = circuit->num_qubits();
    Gate gate;
    if (op == "H" || op == "X") {
      if (tokens.size() != 2) {
        throw ParseError(line_no, std::string(op) + " takes one qubit");
      }
      const unsigned t = expect_qubit(tokens[1], nq, line_no);
      gate = op == "H" ? Gate{HGate{t}} : Gate{XGate{t}};
    } else if (op == "MCX" || op == "MCH") {
      if (tokens.size() < 3 || tokens[tokens.size() - 2] != ":") {
        throw ParseError(line_no, std::string(op) +
                                      " must end with ': <target>'");
      }
      std::vector<Control> controls;
      for (std::size_t i = 1; i + 2 < tokens.size(); ++i) {
        const auto tok = tokens[i];
        if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-')) {
          throw ParseError(line_no, "control must be +q or -q, got '" +
                                        std::string(tok) + "'");
        }
        const unsigned q = expect_qubit(tok.substr(1), nq, line_no);
        controls.push_back(
            {q, tok[0] == '+' ? Polarity::positive : Polarity::negative});
      }
      const unsigned t = expect_qubit(tokens.back(), nq, line_no);
      if (op == "MCX") {
        gate = MCXGate{std::move(controls), t};
      } else {
        gate = MCHGate{std::move(controls), t};
      }
    } else if (op == "QUBITS") {
      throw ParseError(line_no, "duplicate QUBITS header");
    } else {
      throw ParseError(line_no, "unknown opcode '" + std::string(op) + "'");
    }

    if (auto err = check_gate(gate, nq)) throw ParseError(line_no, *err);
    circuit->add(std::move(gate));
  }
  if (!circuit) throw ParseError(line_no == 0 ? 1 : line_no, "missing QUBITS header");
  return std::move(*circuit);
}

}  // namespace qmaze
