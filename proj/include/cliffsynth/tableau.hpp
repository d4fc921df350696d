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
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cliffsynth/circuit.hpp"
#include "cliffsynth/gf2.hpp"

namespace cliffsynth {

// Rows 0..n-1 hold the images of X_1..X_n, rows n..2n-1 the images of Z_1..Z_n.
// Storage is by qubit column so gate updates are word-parallel over rows.
class CliffordTableau {
 public:
  CliffordTableau() = default;
  explicit CliffordTableau(int n)
      : n_(n),
        xs_(static_cast<std::size_t>(n), BitVector(2 * static_cast<std::size_t>(n))),
        zs_(static_cast<std::size_t>(n), BitVector(2 * static_cast<std::size_t>(n))),
        r_(2 * static_cast<std::size_t>(n)) {
    for (std::size_t q = 0; q < static_cast<std::size_t>(n); ++q) {
      xs_[q].set(q);
      zs_[q].set(q + static_cast<std::size_t>(n));
    }
  }

  int n() const { return n_; }
  std::size_t num_rows() const { return 2 * static_cast<std::size_t>(n_); }

  // q is 0-based here.
  bool x(std::size_t row, std::size_t q) const { return xs_[q].get(row); }
  bool z(std::size_t row, std::size_t q) const { return zs_[q].get(row); }
  bool sign(std::size_t row) const { return r_.get(row); }
  void set_x(std::size_t row, std::size_t q, bool v) { xs_[q].set(row, v); }
  void set_z(std::size_t row, std::size_t q, bool v) { zs_[q].set(row, v); }
  void set_sign(std::size_t row, bool v) { r_.set(row, v); }

  // Gate updates; qubits 1-based.
  void h(int a) {
    auto& xa = xs_[idx(a)];
    auto& za = zs_[idx(a)];
    r_ ^= xa & za;
    std::swap(xa, za);
  }
  void s(int a) {
    auto& xa = xs_[idx(a)];
    auto& za = zs_[idx(a)];
    r_ ^= xa & za;
    za ^= xa;
  }
  void x_gate(int a) { r_ ^= zs_[idx(a)]; }
  void z_gate(int a) { r_ ^= xs_[idx(a)]; }
  void cnot(int c, int t) {
    auto& xc = xs_[idx(c)];
    auto& zc = zs_[idx(c)];
    auto& xt = xs_[idx(t)];
    auto& zt = zs_[idx(t)];
    for (std::size_t w = 0; w < r_.num_words(); ++w) {
      std::uint64_t flip = xc.word(w) & zt.word(w) & ~(xt.word(w) ^ zc.word(w));
      r_.data()[w] ^= flip;
      xt.data()[w] ^= xc.word(w);
      zc.data()[w] ^= zt.word(w);
    }
  }
  void cz(int a, int b) {
    h(b);
    cnot(a, b);
    h(b);
  }
  void swap(int a, int b) {
    std::swap(xs_[idx(a)], xs_[idx(b)]);
    std::swap(zs_[idx(a)], zs_[idx(b)]);
  }

  void apply(const Gate& g) {
    switch (g.kind) {
      case GateKind::CNOT: cnot(g.a, g.b); break;
      case GateKind::CZ: cz(g.a, g.b); break;
      case GateKind::PHASE:
        for (int k = 0; k < (g.k & 3); ++k) s(g.a);
        break;
      case GateKind::H: h(g.a); break;
      case GateKind::X: x_gate(g.a); break;
      case GateKind::Z: z_gate(g.a); break;
      case GateKind::SWAP: swap(g.a, g.b); break;
    }
  }
  void apply(const Circuit& c) {
    if (c.n() != n_) throw std::invalid_argument("tableau: qubit count mismatch");
    for (const auto& g : c.gates()) apply(g);
  }

  // Symplectic form of two rows.
  bool symplectic_product(std::size_t r1, std::size_t r2) const {
    bool acc = false;
    for (std::size_t q = 0; q < static_cast<std::size_t>(n_); ++q) {
      acc ^= (x(r1, q) && z(r2, q)) != (z(r1, q) && x(r2, q));
    }
    return acc;
  }

  bool is_symplectic() const {
    const std::size_t n = static_cast<std::size_t>(n_);
    BitMatrix xr(2 * n, n), zr(2 * n, n);
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t row : xs_[q].support()) xr.set(row, q);
      for (std::size_t row : zs_[q].support()) zr.set(row, q);
    }
    for (std::size_t a = 0; a < 2 * n; ++a) {
      for (std::size_t b = a + 1; b < 2 * n; ++b) {
        bool prod = xr.row(a).dot(zr.row(b)) != zr.row(a).dot(xr.row(b));
        bool want = (b == a + n);
        if (prod != want) return false;
      }
    }
    return true;
  }

  // Row strings: x part then z part.
  std::vector<std::string> symplectic_rows() const {
    std::vector<std::string> out;
    const std::size_t n = static_cast<std::size_t>(n_);
    for (std::size_t row = 0; row < 2 * n; ++row) {
      std::string s(2 * n, '0');
      for (std::size_t q = 0; q < n; ++q) {
        if (x(row, q)) s[q] = '1';
        if (z(row, q)) s[n + q] = '1';
      }
      out.push_back(std::move(s));
    }
    return out;
  }

  static CliffordTableau from_rows(const std::vector<std::string>& rows,
                                   const std::vector<int>& signs) {
    if (rows.size() % 2 || rows.size() != signs.size()) {
      throw std::invalid_argument("tableau: need 2n rows and 2n signs");
    }
    const std::size_t n = rows.size() / 2;
    CliffordTableau t(static_cast<int>(n));
    for (std::size_t row = 0; row < 2 * n; ++row) {
      if (rows[row].size() != 2 * n) throw std::invalid_argument("tableau: row length must be 2n");
      for (std::size_t q = 0; q < n; ++q) {
        t.set_x(row, q, bit(rows[row][q]));
        t.set_z(row, q, bit(rows[row][n + q]));
      }
      if (signs[row] != 0 && signs[row] != 1) throw std::invalid_argument("tableau: sign not 0/1");
      t.set_sign(row, signs[row] == 1);
    }
    return t;
  }

  friend bool operator==(const CliffordTableau&, const CliffordTableau&) = default;

 private:
  static bool bit(char ch) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("tableau: bit must be 0 or 1");
    return ch == '1';
  }
  std::size_t idx(int q) const {
    if (q < 1 || q > n_) throw std::out_of_range("tableau: qubit out of range");
    return static_cast<std::size_t>(q - 1);
  }

  int n_ = 0;
  std::vector<BitVector> xs_;
  std::vector<BitVector> zs_;
  BitVector r_;
};

inline CliffordTableau tableau_of(const Circuit& c) {
  CliffordTableau t(c.n());
  t.apply(c);
  return t;
}

inline bool equiv(const Circuit& a, const Circuit& b) {
  if (a.n() != b.n()) throw std::invalid_argument("equiv: qubit count mismatch");
  return tableau_of(a) == tableau_of(b);
}

inline Circuit random_clifford_circuit(int n, std::size_t gates, Rng& rng) {
  Circuit c(n);
  for (std::size_t i = 0; i < gates; ++i) {
    auto kind = rng.below(n > 1 ? 3 : 2);
    int a = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    if (kind == 0) {
      c.h(a);
    } else if (kind == 1) {
      c.phase(a, 1);
    } else {
      int b = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
      if (b >= a) ++b;
      c.cnot(a, b);
    }
  }
  return c;
}

}  // namespace cliffsynth
