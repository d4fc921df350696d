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

#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cliffsynth/circuit.hpp"
#include "cliffsynth/gf2.hpp"

namespace cliffsynth {

// Wire functions are the columns of a matrix: rows index primary variables, and
// CNOT(a, b) adds column a into column b.

// 1-based index of the largest variable in f, 0 for the zero function.
inline int key(const BitVector& f) {
  auto h = f.highest();
  return h == f.size() ? 0 : static_cast<int>(h) + 1;
}

inline bool is_northwest_triangular(const BitMatrix& m) {
  const std::size_t n = m.rows();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.get(r, c) && r + c > n - 1) return false;
    }
  }
  return true;
}

inline std::vector<BitVector> columns_of(const BitMatrix& m) {
  std::vector<BitVector> out;
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.column(c));
  return out;
}

inline BitMatrix from_columns(const std::vector<BitVector>& cols) {
  BitMatrix m(cols.empty() ? 0 : cols[0].size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

struct TriangularizeResult {
  Circuit c1;
  BitMatrix m_prime;
};

// Builds a key-echelon basis w of the wire functions, then sorts basis slots
// into antidiagonal position with odd-even transposition rounds. Each exchange
// of adjacent wires costs at most two CNOT layers.
inline TriangularizeResult northwest_triangularize(const BitMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("northwest_triangularize: matrix not square");
  const int n = static_cast<int>(m.rows());
  const auto un = static_cast<std::size_t>(n);
  std::vector<BitVector> v = columns_of(m);
  std::vector<BitVector> w(un);
  std::map<int, std::size_t> pivot;  // key -> basis slot
  for (std::size_t i = un; i-- > 0;) {
    BitVector cur = v[i];
    while (cur.any() && pivot.count(key(cur))) cur ^= w[pivot[key(cur)]];
    if (cur.none()) throw std::domain_error("northwest_triangularize: singular matrix");
    w[i] = cur;
    pivot[key(cur)] = i;
  }
  // coord[i]: coordinates of wire i in basis w, indexed by slot.
  std::vector<BitVector> coord(un, BitVector(un));
  for (std::size_t i = 0; i < un; ++i) {
    BitVector cur = v[i];
    while (cur.any()) {
      std::size_t s = pivot[key(cur)];
      cur ^= w[s];
      coord[i].flip(s);
    }
  }
  std::vector<std::size_t> slot(un);
  for (std::size_t i = 0; i < un; ++i) slot[i] = i;
  auto target_pos = [&](std::size_t s) { return n + 1 - key(w[s]); };

  Circuit c1(n);
  int empty_rounds = 0;
  std::size_t start = 0;
  while (empty_rounds < 2) {
    bool moved = false;
    for (std::size_t i = start; i + 1 < un; i += 2) {
      if (target_pos(slot[i]) <= target_pos(slot[i + 1])) continue;
      moved = true;
      int top = static_cast<int>(i) + 1;
      if (!coord[i].get(slot[i + 1])) {
        v[i] ^= v[i + 1];
        coord[i] ^= coord[i + 1];
        c1.cnot(top + 1, top);
      }
      v[i + 1] ^= v[i];
      coord[i + 1] ^= coord[i];
      c1.cnot(top, top + 1);
      std::swap(slot[i], slot[i + 1]);
    }
    empty_rounds = moved ? 0 : empty_rounds + 1;
    start ^= 1;
  }
  BitMatrix mp = from_columns(v);
  if (!is_northwest_triangular(mp)) {
    throw std::logic_error("northwest_triangularize: result not northwest-triangular");
  }
  return {std::move(c1), std::move(mp)};
}

// Diagonal-layer order of the reversal network.
inline std::vector<int> layer_order(int n) {
  std::vector<int> out;
  if (n % 2 == 0) {
    for (int l = n - 1; l >= 1; l -= 2) out.push_back(l);
    for (int l = 2; l <= n - 2; l += 2) out.push_back(l);
  } else {
    for (int l = n - 1; l >= 2; l -= 2) out.push_back(l);
    if (n >= 2) out.push_back(1);
    for (int l = 3; l <= n - 2; l += 2) out.push_back(l);
  }
  return out;
}

enum class BoxKind { SWAP, SWAP_PLUS };

struct Box {
  int i = 0;     // smaller label
  int j = 0;     // larger label
  int slot = 0;  // time step 1..n
  int wire = 0;  // top wire, 1-based; the box acts on (wire, wire + 1)
  BoxKind kind = BoxKind::SWAP;
};

class BoxNetwork {
 public:
  BoxNetwork() = default;
  BoxNetwork(int n, std::vector<Box> boxes) : n_(n), boxes_(std::move(boxes)) {
    auto order = layer_order(n);
    pos_.assign(static_cast<std::size_t>(n) + 1, -1);
    for (std::size_t k = 0; k < order.size(); ++k) pos_[static_cast<std::size_t>(order[k])] = int(k);
    index_.assign(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1), -1);
    for (std::size_t b = 0; b < boxes_.size(); ++b) {
      index_[flat(boxes_[b].i, boxes_[b].j)] = static_cast<int>(b);
    }
  }

  int n() const { return n_; }
  const std::vector<Box>& boxes() const { return boxes_; }

  // Position of diagonal layer l in the layer order.
  int layer_position(int l) const { return pos_[static_cast<std::size_t>(l)]; }

  // box(a, b) for either argument order.
  const Box& box(int a, int b) const {
    int k = index_[flat(std::min(a, b), std::max(a, b))];
    if (k < 0) throw std::out_of_range("no box for label pair");
    return boxes_[static_cast<std::size_t>(k)];
  }

  // Strict order on boxes by the layer of their smaller label.
  bool precedes(const Box& a, const Box& b) const {
    return layer_position(a.i) < layer_position(b.i);
  }

  std::size_t count(BoxKind kind) const {
    std::size_t c = 0;
    for (const auto& b : boxes_) c += b.kind == kind;
    return c;
  }

  // CNOT realization; SWAP boxes use three CNOTs, SWAP+ two.
  Circuit circuit() const {
    Circuit c(n_);
    for (const auto& b : boxes_) {
      c.cnot(b.wire, b.wire + 1);
      c.cnot(b.wire + 1, b.wire);
      if (b.kind == BoxKind::SWAP) c.cnot(b.wire, b.wire + 1);
    }
    return c;
  }

 private:
  std::size_t flat(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(b);
  }

  int n_ = 0;
  std::vector<Box> boxes_;
  std::vector<int> pos_;
  std::vector<int> index_;
};

// Pairs (top wire) acted on in time step t of the n-wire brick pattern.
inline std::vector<int> brick_wires(int n, int t) {
  std::vector<int> out;
  for (int w = (t % 2 == 1) ? 1 : 2; w + 1 <= n; w += 2) out.push_back(w);
  return out;
}

// Replays the brick network on the columns of m_prime. At a meeting of the
// label-j function (bottom) with the label-i function (top), i > j, the box is
// SWAP+ exactly when x_j occurs in the top function.
inline BoxNetwork box_network(const BitMatrix& m_prime) {
  if (!m_prime.is_square()) throw std::invalid_argument("box_network: matrix not square");
  if (!is_northwest_triangular(m_prime) || !is_invertible(m_prime)) {
    throw std::invalid_argument("box_network: input not invertible northwest-triangular");
  }
  const int n = static_cast<int>(m_prime.rows());
  std::vector<BitVector> f = columns_of(m_prime);
  std::vector<int> label(static_cast<std::size_t>(n));
  for (int w = 0; w < n; ++w) label[static_cast<std::size_t>(w)] = n - w;
  std::vector<Box> boxes;
  for (int t = 1; t <= n; ++t) {
    for (int w : brick_wires(n, t)) {
      auto top = static_cast<std::size_t>(w - 1);
      auto bot = top + 1;
      int li = label[top];
      int lj = label[bot];
      if (li <= lj) throw std::logic_error("box_network: label order broken");
      bool plus = f[top].get(static_cast<std::size_t>(lj - 1));
      BitVector ft = f[top];
      f[top] = f[bot];
      f[bot] = plus ? (ft ^ f[top]) : ft;
      std::swap(label[top], label[bot]);
      if (key(f[top]) != label[top] || key(f[bot]) != label[bot]) {
        throw std::logic_error("box_network: label invariant broken");
      }
      boxes.push_back({lj, li, t, w, plus ? BoxKind::SWAP_PLUS : BoxKind::SWAP});
    }
  }
  for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
    if (!(f[k] == BitVector::unit(static_cast<std::size_t>(n), k))) {
      throw std::logic_error("box_network: network does not diagonalize the input");
    }
  }
  return BoxNetwork(n, std::move(boxes));
}

}  // namespace cliffsynth
