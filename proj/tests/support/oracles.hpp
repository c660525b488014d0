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

// Reference models used by the tests. None of this calls into the library's
// simulation code: gates become dense matrices built from Kronecker
// products, increments become integer permutations, and the algorithm's
// final state is written down directly.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <variant>
#include <vector>

#include "qmaze/circuit.hpp"
#include "qmaze/statevector.hpp"

namespace qmaze::oracle {

using Amps = std::vector<Amplitude>;

// Row-major dense square matrix.
struct Dense {
  std::size_t n = 0;
  Amps a;

  Amplitude& at(std::size_t r, std::size_t c) { return a[r * n + c]; }
  Amplitude at(std::size_t r, std::size_t c) const { return a[r * n + c]; }

  static Dense identity(std::size_t n) {
    Dense m{n, Amps(n * n)};
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }
};

inline Dense kron(const Dense& x, const Dense& y) {
  Dense out{x.n * y.n, Amps(x.n * y.n * x.n * y.n)};
  for (std::size_t r1 = 0; r1 < x.n; ++r1)
    for (std::size_t c1 = 0; c1 < x.n; ++c1)
      for (std::size_t r2 = 0; r2 < y.n; ++r2)
        for (std::size_t c2 = 0; c2 < y.n; ++c2)
          out.at(r1 * y.n + r2, c1 * y.n + c2) = x.at(r1, c1) * y.at(r2, c2);
  return out;
}

inline Dense two_by_two(Amplitude a, Amplitude b, Amplitude c, Amplitude d) {
  return Dense{2, {a, b, c, d}};
}

inline Amps matvec(const Dense& m, const Amps& v) {
  Amps out(m.n);
  for (std::size_t r = 0; r < m.n; ++r) {
    Amplitude acc = 0.0;
    for (std::size_t c = 0; c < m.n; ++c) acc += m.at(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

// I + (P_controls (x) (U - I)), assembled qubit by qubit with qubit 0 as
// the rightmost Kronecker factor.
inline Dense controlled_matrix(const std::vector<Control>& controls,
                               unsigned target, const Dense& u,
                               unsigned num_qubits) {
  const Dense eye = Dense::identity(2);
  Dense u_minus_i = u;
  u_minus_i.at(0, 0) -= 1.0;
  u_minus_i.at(1, 1) -= 1.0;

  Dense acc = Dense::identity(1);
  for (int q = static_cast<int>(num_qubits) - 1; q >= 0; --q) {
    Dense factor = eye;
    if (static_cast<unsigned>(q) == target) {
      factor = u_minus_i;
    } else {
      for (const auto& c : controls) {
        if (c.qubit != static_cast<unsigned>(q)) continue;
        factor = c.polarity == Polarity::positive ? two_by_two(0, 0, 0, 1)
                                                  : two_by_two(1, 0, 0, 0);
      }
    }
    acc = kron(acc, factor);
  }
  Dense full = Dense::identity(acc.n);
  for (std::size_t i = 0; i < full.a.size(); ++i) full.a[i] += acc.a[i];
  return full;
}

inline Dense hadamard_2x2() {
  const double s = 1.0 / std::sqrt(2.0);
  return two_by_two(s, s, s, -s);
}

inline Dense pauli_x_2x2() { return two_by_two(0, 1, 1, 0); }

// +1 mod 2^C on `reg` (low bit first) as a permutation matrix.
inline Dense increment_matrix(const std::vector<unsigned>& reg,
                              unsigned num_qubits) {
  const std::size_t dim = std::size_t{1} << num_qubits;
  const std::uint64_t modulus = std::uint64_t{1} << reg.size();
  Dense m{dim, Amps(dim * dim)};
  for (std::size_t col = 0; col < dim; ++col) {
    std::uint64_t value = 0;
    for (std::size_t k = 0; k < reg.size(); ++k) {
      value += ((col >> reg[k]) & 1U) * (std::uint64_t{1} << k);
    }
    value = (value + 1) % modulus;
    std::size_t row = col;
    for (std::size_t k = 0; k < reg.size(); ++k) {
      row &= ~(std::size_t{1} << reg[k]);
      row |= static_cast<std::size_t>((value >> k) & 1U) << reg[k];
    }
    m.at(row, col) = 1.0;
  }
  return m;
}

inline Dense gate_matrix(const Gate& gate, unsigned num_qubits) {
  if (const auto* g = std::get_if<HGate>(&gate))
    return controlled_matrix({}, g->target, hadamard_2x2(), num_qubits);
  if (const auto* g = std::get_if<XGate>(&gate))
    return controlled_matrix({}, g->target, pauli_x_2x2(), num_qubits);
  if (const auto* g = std::get_if<MCXGate>(&gate))
    return controlled_matrix(g->controls, g->target, pauli_x_2x2(),
                             num_qubits);
  if (const auto* g = std::get_if<MCHGate>(&gate))
    return controlled_matrix(g->controls, g->target, hadamard_2x2(),
                             num_qubits);
  return increment_matrix(std::get<IncGate>(gate).reg, num_qubits);
}

inline Amps zero_state(unsigned num_qubits) {
  Amps v(std::size_t{1} << num_qubits);
  v[0] = 1.0;
  return v;
}

inline Amps dense_simulate(const Circuit& circuit, Amps state) {
  for (const auto& g : circuit.gates()) {
    state = matvec(gate_matrix(g, circuit.num_qubits()), state);
  }
  return state;
}

inline double max_diff(std::span<const Amplitude> a,
                       std::span<const Amplitude> b) {
  double worst = a.size() == b.size() ? 0.0 : INFINITY;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

inline Amps random_state(std::mt19937_64& rng, unsigned num_qubits) {
  std::normal_distribution<double> normal;
  Amps v(std::size_t{1} << num_qubits);
  double total = 0.0;
  for (auto& x : v) {
    x = {normal(rng), normal(rng)};
    total += std::norm(x);
  }
  for (auto& x : v) x /= std::sqrt(total);
  return v;
}

inline std::vector<unsigned> shuffled_qubits(std::mt19937_64& rng,
                                             unsigned num_qubits) {
  std::vector<unsigned> q(num_qubits);
  std::iota(q.begin(), q.end(), 0U);
  std::shuffle(q.begin(), q.end(), rng);
  return q;
}

inline Gate random_gate(std::mt19937_64& rng, unsigned num_qubits,
                        bool allow_increment) {
  const auto order = shuffled_qubits(rng, num_qubits);
  const unsigned kinds = allow_increment ? 5 : 4;
  const unsigned kind = std::uniform_int_distribution<unsigned>(0, kinds - 1)(rng);
  const unsigned target = order[0];
  const unsigned max_controls = std::min(3U, num_qubits - 1);
  const unsigned n_controls =
      std::uniform_int_distribution<unsigned>(0, max_controls)(rng);
  std::vector<Control> controls;
  for (unsigned i = 0; i < n_controls; ++i) {
    controls.push_back(rng() & 1 ? pos(order[1 + i]) : neg(order[1 + i]));
  }
  switch (kind) {
    case 0:
      return HGate{target};
    case 1:
      return XGate{target};
    case 2:
      return MCXGate{controls, target};
    case 3:
      return MCHGate{controls, target};
    default: {
      const unsigned width = std::uniform_int_distribution<unsigned>(
          1, std::min(4U, num_qubits))(rng);
      return IncGate{std::vector<unsigned>(order.begin(), order.begin() + width)};
    }
  }
}

inline Circuit random_circuit(std::mt19937_64& rng, unsigned num_qubits,
                              unsigned num_gates, bool allow_increment) {
  Circuit c(num_qubits);
  for (unsigned i = 0; i < num_gates; ++i) {
    c.add(random_gate(rng, num_qubits, allow_increment));
  }
  return c;
}

// Smallest C >= 1 with 2^C >= n.
inline unsigned counter_width(unsigned n) {
  unsigned c = 1;
  while ((std::uint64_t{1} << c) < n) ++c;
  return c;
}

// Counter in the low C bits; decision i (the (N-1-i)-th bit of the
// endpoint) on qubit C + i.
inline std::uint64_t algorithm_index(unsigned n, std::uint64_t counter,
                                     std::uint64_t endpoint) {
  const unsigned c = counter_width(n);
  std::uint64_t index = counter;
  for (unsigned i = 0; i < n; ++i) {
    const std::uint64_t decision = (endpoint >> (n - 1 - i)) & 1U;
    index |= decision << (c + i);
  }
  return index;
}

// Final state of the n-step algorithm: uniform over every path with the
// counter at n mod 2^C.
inline Amps expected_algorithm_state(unsigned n) {
  const unsigned c = counter_width(n);
  Amps v(std::size_t{1} << (c + n));
  const double amp = std::pow(2.0, -0.5 * n);
  const std::uint64_t counter = n % (std::uint64_t{1} << c);
  for (std::uint64_t e = 0; e < (std::uint64_t{1} << n); ++e) {
    v[algorithm_index(n, counter, e)] = amp;
  }
  return v;
}

// Upper-tail chi-square statistic against a uniform expectation.
inline double chi_square_uniform(const std::vector<std::uint64_t>& counts) {
  double total = 0.0;
  for (auto c : counts) total += static_cast<double>(c);
  const double expected = total / static_cast<double>(counts.size());
  double chi = 0.0;
  for (auto c : counts) {
    const double d = static_cast<double>(c) - expected;
    chi += d * d / expected;
  }
  return chi;
}

}  // namespace qmaze::oracle
