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

#include "cliffsynth/hfree.hpp"
#include "cliffsynth/lnn_hfree.hpp"
#include "oracle/oracle.hpp"

using namespace cliffsynth;

namespace {

BitMatrix gamma_of(int n, std::vector<std::pair<int, int>> pairs) {
  BitMatrix g(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (auto [a, b] : pairs) g.set(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
  return g;
}

void expect_schedule(const PhaseSchedule& s, const std::vector<std::vector<int>>& want) {
  const int n = s.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      EXPECT_EQ(s.at(i, j), want[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]) << i << "," << j;
    }
  }
}

void expect_realizes(const HadamardFreeTarget& u, const Circuit& c) {
  EXPECT_EQ(hfree_canonical(c), u);
  EXPECT_TRUE(validate_connectivity(c, Connectivity::lnn(u.n)).empty());
  EXPECT_LE(two_qubit_depth(expand_swaps(c)), 5 * u.n);
}

}  // namespace

TEST(SevenTermIdentity, AllAssignments) {
  for (int a = 0; a <= 1; ++a) {
    for (int b = 0; b <= 1; ++b) {
      for (int c = 0; c <= 1; ++c) {
        int v = a + b + c - (a ^ b) - (a ^ c) - (b ^ c) + (a ^ b ^ c);
        EXPECT_EQ(((v % 4) + 4) % 4, 0);
      }
    }
  }
}

TEST(InitializeSchedule, Examples) {
  expect_schedule(initialize_schedule({1, 0}, gamma_of(2, {{1, 2}})), {{2, 3}, {0, 1}});
  expect_schedule(initialize_schedule({0, 0, 0}, gamma_of(3, {})), {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  expect_schedule(initialize_schedule({0, 0, 0}, gamma_of(3, {{1, 3}})), {{1, 0, 3}, {0, 0, 0}, {0, 0, 1}});
}

TEST(FindPhaseSchedule, AllSwapUnchanged) {
  Rng rng(51);
  for (int n = 2; n <= 10; ++n) {
    auto u = random_hfree_target(n, rng);
    auto net = box_network(BitMatrix::reversal(static_cast<std::size_t>(n)));
    EXPECT_EQ(find_phase_schedule(u.p, u.gamma, net), initialize_schedule(u.p, u.gamma));
  }
}

TEST(FindPhaseSchedule, SingleSwapPlusExchanges) {
  auto net = box_network(BitMatrix::from_rows({"11", "10"}));
  ASSERT_EQ(net.boxes().size(), 1u);
  ASSERT_EQ(net.boxes()[0].kind, BoxKind::SWAP_PLUS);
  PhaseSchedule s(2);
  s.set(1, 2, 3);
  apply_swap_plus_updates(s, net);
  expect_schedule(s, {{0, 0}, {0, 3}});
}

TEST(FindPhaseSchedule, ThreeQubitWithCaseThree) {
  Rng rng(52);
  int seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto u = random_hfree_target(3, rng);
    auto plan = plan_hfree_lnn(u);
    if (plan.net.count(BoxKind::SWAP_PLUS) < 2) continue;
    ++seen;
    expect_realizes(u, assemble_hfree_lnn(u));
  }
  EXPECT_GT(seen, 20);
}

TEST(AssembleHfreeLnn, Identity) {
  for (int n = 1; n <= 6; ++n) {
    Circuit c = assemble_hfree_lnn(HadamardFreeTarget(n));
    EXPECT_EQ(two_qubit_depth(c), 0);
  }
}

TEST(AssembleHfreeLnn, LinearOnly) {
  Rng rng(53);
  for (int n = 2; n <= 16; ++n) {
    HadamardFreeTarget u(n);
    u.m = random_invertible(static_cast<std::size_t>(n), rng);
    Circuit c = assemble_hfree_lnn(u);
    EXPECT_EQ(c.count(GateKind::PHASE) + c.count(GateKind::Z), 0u);
    expect_realizes(u, c);
  }
}

TEST(AssembleHfreeLnn, RandomTargets) {
  Rng rng(54);
  for (int n = 1; n <= 20; ++n) {
    for (int trial = 0; trial < 60; ++trial) {
      auto u = random_hfree_target(n, rng);
      if (trial % 4 == 0) u.t.randomize(rng);
      expect_realizes(u, assemble_hfree_lnn(u));
    }
  }
}

TEST(AssembleHfreeLnn, AgreesWithBasisOracle) {
  Rng rng(55);
  for (int n = 2; n <= 7; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      auto u = random_hfree_target(n, rng);
      Circuit c = assemble_hfree_lnn(u);
      int phase0 = oracle::simulate_basis(c, 0).phase;
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        auto img = oracle::simulate_basis(c, x);
        auto xv = oracle::to_bits(x, n);
        ASSERT_EQ(oracle::to_bits(img.y, n), u.apply_linear(xv));
        ASSERT_EQ((img.phase - phase0) & 3, u.phase(xv));
      }
    }
  }
}

TEST(AssembleHfreeLnn, StageDepths) {
  Rng rng(56);
  for (int n = 2; n <= 30; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      auto plan = plan_hfree_lnn(random_hfree_target(n, rng));
      EXPECT_LE(two_qubit_depth(plan.c1), 2 * n);
      EXPECT_LE(two_qubit_depth(plan.net.circuit()), 3 * n);
    }
  }
}

TEST(NaturalForm, MatchesTarget) {
  Rng rng(57);
  for (int n = 1; n <= 14; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      auto u = random_hfree_target(n, rng);
      auto form = natural_hfree_lnn(u);
      Circuit c = flatten(form);
      EXPECT_EQ(hfree_canonical(c), u);
      EXPECT_LE(two_qubit_depth(expand_swaps(c)), 5 * n);
      for (const auto& b : form.last) EXPECT_EQ(b.slot, n);
    }
  }
}
