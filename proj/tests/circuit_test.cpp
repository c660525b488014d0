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

#include <gtest/gtest.h>

#include <random>

#include "qmaze/errors.hpp"
#include "support/oracles.hpp"

namespace qmaze {
namespace {

constexpr double kTol = 1e-12;

StateVector basis_state(unsigned nq, BasisIndex index) {
  std::vector<Amplitude> amps(std::size_t{1} << nq);
  amps[index] = 1.0;
  return StateVector::from_amplitudes(std::move(amps));
}

std::vector<unsigned> iota_reg(unsigned c) {
  std::vector<unsigned> reg(c);
  for (unsigned i = 0; i < c; ++i) reg[i] = i;
  return reg;
}

int parse_error_line(std::string_view text) {
  try {
    parse_text(text);
  } catch (const ParseError& e) {
    return static_cast<int>(e.line());
  }
  return -1;
}

TEST(LowerIncrement, OneBit) {
  const auto ladder = lower_increment({0});
  ASSERT_EQ(ladder.size(), 1u);
  EXPECT_EQ(ladder[0], Gate(XGate{0}));
}

TEST(LowerIncrement, ThreeBitShape) {
  const std::vector<Gate> expected = {
      MCXGate{{pos(0), pos(1)}, 2},
      MCXGate{{pos(0)}, 1},
      XGate{0},
  };
  EXPECT_EQ(lower_increment({0, 1, 2}), expected);
}

TEST(LowerIncrement, Errors) {
  EXPECT_THROW(lower_increment({}), ArgumentError);
  EXPECT_THROW(lower_increment({1, 1}), ArgumentError);
}

// The ladder must realize i -> i+1 mod 2^C on every basis state, exactly.
TEST(LowerIncrement, ExhaustivePermutation) {
  for (unsigned c = 1; c <= 4; ++c) {
    const std::uint64_t dim = std::uint64_t{1} << c;
    Circuit ladder(c);
    for (auto& g : lower_increment(iota_reg(c))) ladder.add(g);
    for (std::uint64_t i = 0; i < dim; ++i) {
      auto s = basis_state(c, i);
      apply_circuit(ladder, s);
      const std::uint64_t want = (i + 1) % dim;
      for (std::uint64_t j = 0; j < dim; ++j) {
        ASSERT_EQ(s.amplitude_at(j), Amplitude(j == want ? 1.0 : 0.0))
            << "C=" << c << " i=" << i << " j=" << j;
      }
    }
  }
}

// Registers need not be contiguous or ordered; compare against the
// permutation matrix built from integer arithmetic.
TEST(LowerIncrement, ScatteredRegisterMatchesPermutationOracle) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned nq = 2 + static_cast<unsigned>(rng() % 5);
    auto order = oracle::shuffled_qubits(rng, nq);
    const unsigned c = 1 + static_cast<unsigned>(rng() % nq);
    const std::vector<unsigned> reg(order.begin(), order.begin() + c);

    Circuit ladder(nq);
    for (auto& g : lower_increment(reg)) ladder.add(g);
    const auto perm = oracle::increment_matrix(reg, nq);
    const auto amps = oracle::random_state(rng, nq);
    auto s = StateVector::from_amplitudes(amps);
    apply_circuit(ladder, s);
    ASSERT_EQ(oracle::max_diff(s.amplitudes(), oracle::matvec(perm, amps)),
              0.0);
  }
}

TEST(LowerIncrement, TwoBitWrapsAround) {
  Circuit c(2);
  for (int i = 0; i < 4; ++i) c.add(IncGate{{0, 1}});
  auto s = init_zero_state(2);
  apply_circuit(c, s);
  EXPECT_EQ(s, init_zero_state(2));
}

TEST(ApplyCircuit, Examples) {
  std::mt19937_64 rng(3);
  const auto s0 = StateVector::from_amplitudes(oracle::random_state(rng, 3));

  auto s = s0;
  apply_circuit(Circuit(3), s);
  EXPECT_EQ(s, s0);

  Circuit hh(3);
  hh.add(HGate{0}).add(HGate{0});
  apply_circuit(hh, s);
  EXPECT_LT(max_abs_diff(s, s0), kTol);

  Circuit inc(3);
  inc.add(IncGate{{0, 1, 2}});
  auto t = basis_state(3, 3);
  apply_circuit(inc, t);
  EXPECT_EQ(t, basis_state(3, 4));

  auto wrong = init_zero_state(2);
  EXPECT_THROW(apply_circuit(inc, wrong), ArgumentError);
}

TEST(ApplyCircuit, IncrementMacroEqualsItsLadder) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned nq = 1 + static_cast<unsigned>(rng() % 6);
    const auto c = oracle::random_circuit(rng, nq, 20, true);
    auto a = StateVector::from_amplitudes(oracle::random_state(rng, nq));
    auto b = a;
    apply_circuit(c, a);
    apply_circuit(c.lowered(), b);
    ASSERT_EQ(a, b);
  }
}

TEST(ApplyCircuit, MatchesDenseOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned nq = 1 + static_cast<unsigned>(rng() % 5);
    const auto c = oracle::random_circuit(rng, nq, 15, true);
    auto s = init_zero_state(nq);
    apply_circuit(c, s);
    const auto expected = oracle::dense_simulate(c, oracle::zero_state(nq));
    ASSERT_LT(oracle::max_diff(s.amplitudes(), expected), kTol);
  }
}

TEST(CircuitIR, RejectsBadGates) {
  Circuit c(3);
  EXPECT_THROW(c.add(HGate{3}), ArgumentError);
  EXPECT_THROW(c.add(MCXGate{{pos(0), neg(0)}, 1}), ArgumentError);
  EXPECT_THROW(c.add(MCHGate{{pos(1)}, 1}), ArgumentError);
  EXPECT_THROW(c.add(IncGate{{}}), ArgumentError);
  EXPECT_THROW(c.add(IncGate{{0, 2, 0}}), ArgumentError);
  EXPECT_THROW(c.add(IncGate{{0, 3}}), ArgumentError);
  EXPECT_TRUE(c.gates().empty());
  EXPECT_THROW(Circuit(0), ArgumentError);
}

TEST(CircuitIR, HadamardFamily) {
  EXPECT_TRUE(is_hadamard_family(HGate{0}));
  EXPECT_TRUE(is_hadamard_family(MCHGate{{pos(1)}, 0}));
  EXPECT_FALSE(is_hadamard_family(XGate{0}));
  EXPECT_FALSE(is_hadamard_family(MCXGate{{}, 0}));
  EXPECT_FALSE(is_hadamard_family(IncGate{{0}}));
}

TEST(EmitText, SingleGate) {
  Circuit c(2);
  c.add(HGate{1});
  EXPECT_EQ(emit_text(c), "QUBITS 2\nH 1\n");
}

TEST(EmitText, IncrementIsLowered) {
  Circuit c(3);
  c.add(IncGate{{0, 1, 2}});
  EXPECT_EQ(emit_text(c), "QUBITS 3\nMCX +0 +1 : 2\nMCX +0 : 1\nX 0\n");
}

TEST(EmitText, PolarityAndEmptyControls) {
  Circuit c(3);
  c.add(MCHGate{{neg(0), pos(2)}, 1});
  c.add(MCXGate{{}, 2});
  c.add(MCHGate{{}, 0});
  EXPECT_EQ(emit_text(c), "QUBITS 3\nMCH -0 +2 : 1\nX 2\nH 0\n");
}

TEST(EmitText, Deterministic) {
  std::mt19937_64 a(99), b(99);
  for (int trial = 0; trial < 20; ++trial) {
    const auto ca = oracle::random_circuit(a, 6, 30, true);
    const auto cb = oracle::random_circuit(b, 6, 30, true);
    ASSERT_EQ(emit_text(ca), emit_text(cb));
    ASSERT_EQ(emit_text(ca), emit_text(ca));
  }
}

TEST(ParseText, Examples) {
  Circuit want(1);
  want.add(XGate{0});
  EXPECT_EQ(parse_text("QUBITS 1\nX 0\n"), want);

  EXPECT_EQ(parse_error_line("QUBITS 2\nFOO 0\n"), 2);
  EXPECT_EQ(parse_error_line("QUBITS 2\nMCX +0 +0 : 1\n"), 2);
}

TEST(ParseText, CommentsBlankLinesAndMissingNewline) {
  Circuit want(3);
  want.add(MCHGate{{neg(0)}, 1}).add(HGate{2});
  EXPECT_EQ(parse_text("# header comment\nQUBITS 3\n\n# step\nMCH -0 : 1\nH 2"),
            want);
}

TEST(ParseText, ErrorLines) {
  EXPECT_EQ(parse_error_line(""), 1);
  EXPECT_EQ(parse_error_line("# only a comment\n"), 1);
  EXPECT_EQ(parse_error_line("H 0\n"), 1);
  EXPECT_EQ(parse_error_line("QUBITS 0\n"), 1);
  EXPECT_EQ(parse_error_line("QUBITS x\n"), 1);
  EXPECT_EQ(parse_error_line("QUBITS 2\nH 0\nH 2\n"), 3);
  EXPECT_EQ(parse_error_line("QUBITS 2\nH  0\n"), 2);
  EXPECT_EQ(parse_error_line("QUBITS 2\nH 0 1\n"), 2);
  EXPECT_EQ(parse_error_line("QUBITS 2\nMCX +0 1\n"), 2);
  EXPECT_EQ(parse_error_line("QUBITS 2\nMCX 0 : 1\n"), 2);
  EXPECT_EQ(parse_error_line("QUBITS 2\nMCX +1 : 1\n"), 2);
  EXPECT_EQ(parse_error_line("QUBITS 3\nMCH +0 : 1\nMCX -5 : 2\n"), 3);
  EXPECT_EQ(parse_error_line("QUBITS 2\nQUBITS 2\n"), 2);
  EXPECT_EQ(parse_error_line("QUBITS 2\nX -1\n"), 2);
}

TEST(RoundTrip, RandomCircuitsSimulateIdentically) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned nq = 1 + static_cast<unsigned>(rng() % 8);
    const unsigned ng = static_cast<unsigned>(rng() % 51);
    const auto c = oracle::random_circuit(rng, nq, ng, true);
    const auto text = emit_text(c);
    const auto back = parse_text(text);

    // Control-free MCX/MCH come back as X/H, so compare text, not gates.
    EXPECT_EQ(emit_text(back), text);
    EXPECT_EQ(back.gates().size(), c.lowered().gates().size());

    auto direct = init_zero_state(nq);
    auto reparsed = init_zero_state(nq);
    apply_circuit(c, direct);
    apply_circuit(back, reparsed);
    ASSERT_LT(max_abs_diff(direct, reparsed), kTol) << text;
  }
}

}  // namespace
}  // namespace qmaze
