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

#include <set>

#include "cliffsynth/hfree.hpp"
#include "cliffsynth/lnn_linear.hpp"
#include "oracle/oracle.hpp"

using namespace cliffsynth;

namespace {

BitMatrix six_qubit_matrix() {
  return BitMatrix::from_rows({"001011", "000110", "011100", "111000", "010000", "100000"});
}

// Applies c1 as column operations: CNOT(a, b) adds column a into column b.
BitMatrix replay_columns(BitMatrix m, const Circuit& c1) {
  for (const auto& g : c1.gates()) {
    EXPECT_EQ(g.kind, GateKind::CNOT);
    m.add_column(static_cast<std::size_t>(g.a - 1), static_cast<std::size_t>(g.b - 1));
  }
  return m;
}

struct Replay {
  std::vector<BitVector> inputs;  // network input function, per wire
  std::vector<BitVector> xor_at;  // XOR-point function, per box
};

// Input columns that a network with the given box kinds diagonalizes, found
// by running the inverse boxes from the diagonal; then the XOR points.
Replay replay_network(int n, const std::vector<Box>& boxes) {
  const auto un = static_cast<std::size_t>(n);
  std::vector<BitVector> f;
  for (std::size_t k = 0; k < un; ++k) f.push_back(BitVector::unit(un, k));
  for (auto it = boxes.rbegin(); it != boxes.rend(); ++it) {
    auto t = static_cast<std::size_t>(it->wire - 1);
    BitVector top = f[t];
    BitVector bot = f[t + 1];
    f[t] = it->kind == BoxKind::SWAP_PLUS ? (bot ^ top) : bot;
    f[t + 1] = top;
  }
  Replay r;
  r.inputs = f;
  for (const auto& b : boxes) {
    auto t = static_cast<std::size_t>(b.wire - 1);
    r.xor_at.push_back(f[t] ^ f[t + 1]);
    BitVector top = f[t];
    f[t] = f[t + 1];
    f[t + 1] = b.kind == BoxKind::SWAP_PLUS ? (top ^ f[t]) : top;
  }
  return r;
}

BitMatrix random_nw(int n, Rng& rng) {
  return northwest_triangularize(random_invertible(static_cast<std::size_t>(n), rng)).m_prime;
}

}  // namespace

TEST(NorthwestTriangular, Predicate) {
  EXPECT_TRUE(is_northwest_triangular(six_qubit_matrix()));
  EXPECT_TRUE(is_northwest_triangular(BitMatrix::reversal(5)));
  EXPECT_FALSE(is_northwest_triangular(BitMatrix::identity(2)));
  EXPECT_TRUE(is_northwest_triangular(BitMatrix::identity(1)));
  EXPECT_EQ(key(BitVector::from_string("0110")), 3);
  EXPECT_EQ(key(BitVector(4)), 0);
}

TEST(Triangularize, AlreadyTriangular) {
  auto ex = northwest_triangularize(six_qubit_matrix());
  EXPECT_TRUE(ex.c1.empty());
  EXPECT_EQ(ex.m_prime, six_qubit_matrix());
  auto rev = northwest_triangularize(BitMatrix::reversal(7));
  EXPECT_TRUE(rev.c1.empty());
  EXPECT_EQ(rev.m_prime, BitMatrix::reversal(7));
}

TEST(Triangularize, RandomReplayAndDepth) {
  Rng rng(41);
  for (int n = 1; n <= 40; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      BitMatrix m = random_invertible(static_cast<std::size_t>(n), rng);
      auto res = northwest_triangularize(m);
      EXPECT_TRUE(is_northwest_triangular(res.m_prime));
      EXPECT_EQ(replay_columns(m, res.c1), res.m_prime);
      EXPECT_LE(two_qubit_depth(res.c1), 2 * n);
      EXPECT_TRUE(validate_connectivity(res.c1, Connectivity::lnn(n)).empty());
    }
  }
}

TEST(Triangularize, SingularRejected) {
  EXPECT_THROW(northwest_triangularize(BitMatrix::from_rows({"110", "011", "101"})), std::domain_error);
}

TEST(LayerOrder, Examples) {
  EXPECT_EQ(layer_order(7), (std::vector<int>{6, 4, 2, 1, 3, 5}));
  EXPECT_EQ(layer_order(6), (std::vector<int>{5, 3, 1, 2, 4}));
  EXPECT_EQ(layer_order(2), (std::vector<int>{1}));
  EXPECT_TRUE(layer_order(1).empty());
}

TEST(BoxNetwork, ReversalIsAllSwap) {
  for (int n = 1; n <= 12; ++n) {
    auto net = box_network(BitMatrix::reversal(static_cast<std::size_t>(n)));
    EXPECT_EQ(net.count(BoxKind::SWAP_PLUS), 0u);
    EXPECT_EQ(net.boxes().size(), static_cast<std::size_t>(n * (n - 1) / 2));
  }
}

TEST(BoxNetwork, SixQubitExampleDiagonalized) {
  BitMatrix m = six_qubit_matrix();
  auto net = box_network(m);
  auto w = oracle::replay_masks(net.circuit());
  // Column j of m is the function on input wire j; the circuit sends wire j's
  // mask to a combination of inputs, which must compose to x_k on wire k.
  for (std::size_t k = 0; k < 6; ++k) {
    BitVector f(6);
    for (std::size_t j = 0; j < 6; ++j) {
      if ((w[k] >> j) & 1) f ^= m.column(j);
    }
    EXPECT_EQ(f, BitVector::unit(6, k));
  }
  EXPECT_TRUE(validate_connectivity(net.circuit(), Connectivity::lnn(6)).empty());
}

TEST(BoxNetwork, SevenQubitLayers) {
  Rng rng(42);
  auto net = box_network(random_nw(7, rng));
  std::vector<int> order = layer_order(7);
  EXPECT_EQ(order, (std::vector<int>{6, 4, 2, 1, 3, 5}));
  for (const auto& b : net.boxes()) EXPECT_EQ(order[static_cast<std::size_t>(net.layer_position(b.i))], b.i);
}

TEST(BoxNetwork, EveryPairOnceLargerLabelDown) {
  Rng rng(43);
  for (int n = 2; n <= 16; ++n) {
    auto net = box_network(random_nw(n, rng));
    std::set<std::pair<int, int>> pairs;
    std::vector<int> label(static_cast<std::size_t>(n));
    for (int w = 0; w < n; ++w) label[static_cast<std::size_t>(w)] = n - w;
    for (const auto& b : net.boxes()) {
      EXPECT_LT(b.i, b.j);
      EXPECT_TRUE(pairs.insert({b.i, b.j}).second);
      auto t = static_cast<std::size_t>(b.wire - 1);
      EXPECT_EQ(label[t], b.j);
      EXPECT_EQ(label[t + 1], b.i);
      std::swap(label[t], label[t + 1]);
    }
    EXPECT_EQ(pairs.size(), static_cast<std::size_t>(n * (n - 1) / 2));
    for (int w = 0; w < n; ++w) EXPECT_EQ(label[static_cast<std::size_t>(w)], w + 1);
  }
}

TEST(BoxNetwork, LabelInvariantDuringReplay) {
  Rng rng(44);
  for (int n = 2; n <= 20; ++n) {
    BitMatrix mp = random_nw(n, rng);
    auto net = box_network(mp);
    std::vector<BitVector> f = columns_of(mp);
    std::vector<int> label(static_cast<std::size_t>(n));
    for (int w = 0; w < n; ++w) label[static_cast<std::size_t>(w)] = n - w;
    for (const auto& b : net.boxes()) {
      auto t = static_cast<std::size_t>(b.wire - 1);
      BitVector top = f[t];
      f[t] = f[t + 1];
      f[t + 1] = b.kind == BoxKind::SWAP_PLUS ? (top ^ f[t]) : top;
      std::swap(label[t], label[t + 1]);
      EXPECT_EQ(key(f[t]), label[t]);
      EXPECT_EQ(key(f[t + 1]), label[t + 1]);
    }
  }
}

TEST(BoxNetwork, RejectsNonTriangular) {
  EXPECT_THROW(box_network(BitMatrix::identity(3)), std::invalid_argument);
}

TEST(BoxNetwork, BoxOrderOnLabelTriples) {
  for (int n = 2; n <= 12; ++n) {
    auto net = box_network(BitMatrix::reversal(static_cast<std::size_t>(n)));
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        for (int k = 1; k <= n; ++k) {
          if (i == j || j == k || i == k) continue;
          if (net.precedes(net.box(j, k), net.box(i, j))) {
            EXPECT_FALSE(net.precedes(net.box(i, j), net.box(i, k))) << n << " " << i << " " << j << " " << k;
          }
        }
      }
    }
  }
}

// Turning the first SWAP+ (in the order of the schedule's induction) into a
// SWAP alters one input column, c_j -> c_i + c_j, and XOR points only at
// boxes box(k, j) no later than box(i, j).
TEST(BoxNetwork, FlippingFirstSwapPlus) {
  Rng rng(45);
  int checked = 0;
  for (int n = 3; n <= 14; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      auto net = box_network(random_nw(n, rng));
      const Box* first = nullptr;
      for (const auto& b : net.boxes()) {
        if (b.kind != BoxKind::SWAP_PLUS) continue;
        if (!first || net.layer_position(b.i) < net.layer_position(first->i) ||
            (b.i == first->i && b.slot < first->slot)) {
          first = &b;
        }
      }
      if (!first) continue;
      ++checked;
      const int i = first->i;
      const int j = first->j;
      std::vector<Box> flipped = net.boxes();
      for (auto& b : flipped) {
        if (b.i == i && b.j == j) b.kind = BoxKind::SWAP;
      }
      auto before = replay_network(n, net.boxes());
      auto after = replay_network(n, flipped);
      auto wire_of = [&](int label) { return static_cast<std::size_t>(n - label); };
      for (int l = 1; l <= n; ++l) {
        if (l == j) {
          EXPECT_EQ(after.inputs[wire_of(j)], before.inputs[wire_of(i)] ^ before.inputs[wire_of(j)]);
        } else {
          EXPECT_EQ(after.inputs[wire_of(l)], before.inputs[wire_of(l)]);
        }
      }
      for (std::size_t b = 0; b < flipped.size(); ++b) {
        if (after.xor_at[b] == before.xor_at[b]) continue;
        const Box& bx = flipped[b];
        EXPECT_TRUE(bx.i == j || bx.j == j);
        EXPECT_FALSE(net.precedes(net.box(i, j), bx));
      }
    }
  }
  EXPECT_GT(checked, 100);
}
