// Copyright 2026 The cliffsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include "cliffsynth/lnn_clifford.hpp"
#include "oracle/oracle.hpp"

using namespace cliffsynth;

namespace {

// The last box on (1, 2) with phases a..e, Hadamards on both wires, then the
// first CNOT of the following layer.
Circuit merge_lhs(BoxKind kind, int a, int b, int c, int d, int e) {
  Circuit lhs(2);
  lhs.cnot(1, 2);
  lhs.phase(2, a);
  lhs.cnot(2, 1);
  if (kind == BoxKind::SWAP) lhs.cnot(1, 2);
  lhs.phase(1, b);
  lhs.phase(2, c);
  lhs.h(1);
  lhs.h(2);
  lhs.phase(1, d);
  lhs.phase(2, e);
  lhs.cnot(1, 2);
  return lhs;
}

Circuit merge_rhs(BoxKind kind, int a, int b, int c, int d, int e) {
  Circuit rhs(2);
  emit_merged_box(rhs, 1, kind, a, b, c, d, e);
  return rhs;
}

void expect_result(const CliffordTableau& t, const CliffordSynthResult& r) {
  const int n = t.n();
  EXPECT_EQ(tableau_of(r.circuit), t);
  EXPECT_TRUE(validate_connectivity(r.circuit, Connectivity::lnn(n)).empty());
  EXPECT_EQ(r.depth, two_qubit_depth(expand_swaps(r.circuit)));
}

}  // namespace

TEST(MergedBox, CaseOneSwap) {
  int cases = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d)
          for (int e = 0; e < 4; ++e) {
            Circuit lhs = merge_lhs(BoxKind::SWAP, a, b, c, d, e);
            Circuit rhs = merge_rhs(BoxKind::SWAP, a, b, c, d, e);
            ASSERT_TRUE(oracle::unitary_equal(lhs, rhs)) << a << b << c << d << e;
            EXPECT_EQ(rhs.count_two_qubit(), 2u);
            ++cases;
          }
  EXPECT_EQ(cases, 1024);
}

TEST(MergedBox, CasesTwoAndThreeSwapPlus) {
  for (int e = 0; e < 2; ++e) {
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d) {
            Circuit lhs = merge_lhs(BoxKind::SWAP_PLUS, a, b, c, d, e);
            Circuit rhs = merge_rhs(BoxKind::SWAP_PLUS, a, b, c, d, e);
            ASSERT_TRUE(oracle::unitary_equal(lhs, rhs)) << a << b << c << d << e;
            EXPECT_EQ(rhs.count_two_qubit(), e ? 2u : 1u);
          }
  }
}

TEST(MergedBox, SwapPlusHighBitOfEIsPauli) {
  // Z on the target before the closing CNOT becomes Z on both outputs.
  for (int e = 2; e < 4; ++e) {
    Circuit lhs = merge_lhs(BoxKind::SWAP_PLUS, 1, 2, 3, 1, e);
    Circuit rhs = merge_rhs(BoxKind::SWAP_PLUS, 1, 2, 3, 1, e);
    EXPECT_FALSE(oracle::unitary_equal(lhs, rhs));
    EXPECT_TRUE(oracle::unitary_equal(concat(rhs, Circuit(2, {Gate::z(1), Gate::z(2)})), lhs));
  }
}

TEST(SynthCliffordLnn, Identity) {
  for (int n = 1; n <= 6; ++n) {
    auto r = synth_clifford_lnn_detailed(CliffordTableau(n));
    EXPECT_EQ(r.depth, 0);
    EXPECT_EQ(tableau_of(r.circuit), CliffordTableau(n));
  }
}

TEST(SynthCliffordLnn, NineQubitExample) {
  Rng rng(71);
  auto t = tableau_of(random_clifford_circuit(9, 200, rng));
  auto r = synth_clifford_lnn_detailed(t);
  expect_result(t, r);
  EXPECT_EQ(r.tier(), "skeleton");
  EXPECT_LE(r.depth, 59);
}

TEST(SynthCliffordLnn, RandomTableaux) {
  Rng rng(72);
  for (int n = 1; n <= 16; ++n) {
    for (int trial = 0; trial < 15; ++trial) {
      auto t = tableau_of(random_clifford_circuit(n, 20 * static_cast<std::size_t>(n), rng));
      auto r = synth_clifford_lnn_detailed(t);
      expect_result(t, r);
      EXPECT_FALSE(r.fallback);
      EXPECT_EQ(r.bound, 7 * n - 4);
      if (n >= 2) EXPECT_TRUE(r.within_bound()) << n << " depth " << r.depth;
    }
  }
}

TEST(SynthCliffordLnn, HadamardFreeTableau) {
  Rng rng(73);
  for (int n = 2; n <= 10; ++n) {
    auto u = random_hfree_target(n, rng);
    u.t.randomize(rng);
    auto t = tableau_of(naive_hfree_circuit(u));
    auto r = synth_clifford_lnn_detailed(t);
    expect_result(t, r);
    EXPECT_EQ(r.tier(), "hadamard-free");
    EXPECT_LE(r.depth, 5 * n);
  }
}

TEST(SynthCliffordLnn, ForcedFallbackIsFlagged) {
  Rng rng(74);
  for (int n = 2; n <= 10; ++n) {
    auto t = tableau_of(random_clifford_circuit(n, 20 * static_cast<std::size_t>(n), rng));
    auto r = synth_clifford_lnn_detailed(t, {true});
    expect_result(t, r);
    EXPECT_TRUE(r.fallback);
    EXPECT_EQ(r.tier(), "fallback");
    EXPECT_EQ(r.bound, 8 * n - 6);
    // Natural form (<= 5n) followed by the all-SWAP reversal (<= 3n).
    EXPECT_LE(r.depth, 8 * n);
  }
}

TEST(SynthCliffordLnn, RejectsInvalidTableau) {
  auto t = CliffordTableau::from_rows({"10", "10"}, {0, 0});
  EXPECT_THROW(synth_clifford_lnn(t), std::invalid_argument);
}

TEST(HfreeTargetModPauli, RecoversTarget) {
  Rng rng(75);
  for (int n = 1; n <= 10; ++n) {
    auto u = random_hfree_target(n, rng);
    auto t = tableau_of(naive_hfree_circuit(u));
    auto got = hfree_target_mod_pauli(t);
    EXPECT_EQ(got.m, u.m);
    EXPECT_EQ(got.gamma, u.gamma);
    for (int i = 0; i < n; ++i) EXPECT_EQ(got.p[static_cast<std::size_t>(i)], u.p[static_cast<std::size_t>(i)] & 1);
  }
  EXPECT_THROW(hfree_target_mod_pauli(tableau_of(Circuit(1, {Gate::h(1)}))), std::invalid_argument);
}

TEST(FixSigns, RestoresPaulis) {
  Rng rng(76);
  for (int n = 1; n <= 8; ++n) {
    Circuit c = random_clifford_circuit(n, 30, rng);
    Circuit with_pauli(n);
    for (int q = 1; q <= n; ++q) {
      if (rng.coin()) with_pauli.x(q);
      if (rng.coin()) with_pauli.z(q);
    }
    with_pauli.append(c);
    EXPECT_EQ(tableau_of(fix_signs(c, tableau_of(with_pauli))), tableau_of(with_pauli));
  }
}
