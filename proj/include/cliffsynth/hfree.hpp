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
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cliffsynth/circuit.hpp"
#include "cliffsynth/gf2.hpp"

namespace cliffsynth {

// U|x> = i^{p.x + 2 sum_{i<j} gamma_ij x_i x_j} |m x + t>.
// Indices in p, gamma, m and t are 0-based; gamma is strictly upper triangular.
struct HadamardFreeTarget {
  int n = 0;
  std::vector<int> p;
  BitMatrix gamma;
  BitMatrix m;
  BitVector t;

  HadamardFreeTarget() = default;
  explicit HadamardFreeTarget(int n_)
      : n(n_),
        p(static_cast<std::size_t>(n_), 0),
        gamma(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)),
        m(BitMatrix::identity(static_cast<std::size_t>(n_))),
        t(static_cast<std::size_t>(n_)) {}

  // Phase exponent (mod 4) of the diagonal stage on input x.
  int phase(const BitVector& x) const {
    int s = 0;
    auto on = x.support();
    for (std::size_t a = 0; a < on.size(); ++a) {
      s += p[on[a]];
      for (std::size_t b = a + 1; b < on.size(); ++b) {
        if (gamma.get(on[a], on[b])) s += 2;
      }
    }
    return s & 3;
  }

  BitVector apply_linear(const BitVector& x) const { return (m * x) ^ t; }

  void validate() const {
    auto un = static_cast<std::size_t>(n);
    if (p.size() != un || gamma.rows() != un || gamma.cols() != un || m.rows() != un ||
        m.cols() != un || t.size() != un) {
      throw std::invalid_argument("target: inconsistent dimensions");
    }
    for (int v : p) {
      if (v < 0 || v > 3) throw std::invalid_argument("target: phase exponent outside 0..3");
    }
    for (std::size_t i = 0; i < un; ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        if (gamma.get(i, j)) throw std::invalid_argument("target: gamma not strictly upper");
      }
    }
    if (!is_invertible(m)) throw std::domain_error("target: singular linear part");
  }

  friend bool operator==(const HadamardFreeTarget& a, const HadamardFreeTarget& b) {
    return a.n == b.n && a.p == b.p && a.gamma == b.gamma && a.m == b.m && a.t == b.t;
  }
};

// Builds the canonical target of the map x -> i^{phi(x)} |m x + t>, where phi is
// any degree-2 Z4 function; phi is normalized so that phi(0) = 0.
inline HadamardFreeTarget target_from_phase_function(
    int n, const BitMatrix& m, const BitVector& t,
    const std::function<int(const BitVector&)>& phi) {
  HadamardFreeTarget out(n);
  out.m = m;
  out.t = t;
  auto un = static_cast<std::size_t>(n);
  BitVector zero(un);
  int base = phi(zero);
  std::vector<int> single(un);
  for (std::size_t i = 0; i < un; ++i) {
    single[i] = ((phi(BitVector::unit(un, i)) - base) % 4 + 4) % 4;
    out.p[i] = single[i];
  }
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = i + 1; j < un; ++j) {
      BitVector x = BitVector::unit(un, i);
      x.set(j);
      int q = ((phi(x) - base - single[i] - single[j]) % 4 + 4) % 4;
      if (q & 1) throw std::logic_error("phase function is not of Clifford form");
      out.gamma.set(i, j, q == 2);
    }
  }
  return out;
}

inline HadamardFreeTarget inverse_target(const HadamardFreeTarget& u) {
  BitMatrix minv = invert(u.m);
  BitVector tinv = minv * u.t;
  return target_from_phase_function(u.n, minv, tinv, [&](const BitVector& y) {
    return (4 - u.phase((minv * y) ^ tinv)) & 3;
  });
}

// first, then second.
inline HadamardFreeTarget compose(const HadamardFreeTarget& first,
                                  const HadamardFreeTarget& second) {
  if (first.n != second.n) throw std::invalid_argument("compose: qubit count mismatch");
  BitMatrix m = second.m * first.m;
  BitVector t = (second.m * first.t) ^ second.t;
  return target_from_phase_function(first.n, m, t, [&](const BitVector& x) {
    return (first.phase(x) + second.phase(first.apply_linear(x))) & 3;
  });
}

// Simulates the circuit on inputs {0, e_i, e_i + e_j} at once: each wire holds a
// bit vector indexed by input, and the Z4 phase is kept in two bit planes.
inline HadamardFreeTarget hfree_canonical(const Circuit& c) {
  const int n = c.n();
  const auto un = static_cast<std::size_t>(n);
  const std::size_t inputs = 1 + un + un * (un - 1) / 2;
  std::vector<BitVector> wire(un, BitVector(inputs));
  auto pair_index = [&](std::size_t i, std::size_t j) {
    return 1 + un + i * (2 * un - i - 1) / 2 + (j - i - 1);
  };
  for (std::size_t i = 0; i < un; ++i) {
    wire[i].set(1 + i);
    for (std::size_t j = 0; j < un; ++j) {
      if (j != i) wire[i].set(pair_index(std::min(i, j), std::max(i, j)));
    }
  }
  BitVector lo(inputs), hi(inputs);
  auto add_masked = [&](const BitVector& mask, int k) {
    if (k & 1) {
      BitVector carry = lo & mask;
      lo ^= mask;
      hi ^= carry;
    }
    if (k & 2) hi ^= mask;
  };
  BitVector ones(inputs);
  for (std::size_t s = 0; s < inputs; ++s) ones.set(s);

  for (const auto& g : c.gates()) {
    auto a = static_cast<std::size_t>(g.a - 1);
    auto b = static_cast<std::size_t>(g.b - 1);
    switch (g.kind) {
      case GateKind::CNOT: wire[b] ^= wire[a]; break;
      case GateKind::CZ: hi ^= wire[a] & wire[b]; break;
      case GateKind::PHASE: add_masked(wire[a], g.k); break;
      case GateKind::Z: hi ^= wire[a]; break;
      case GateKind::X: wire[a] ^= ones; break;
      case GateKind::SWAP: std::swap(wire[a], wire[b]); break;
      case GateKind::H: throw std::invalid_argument("hfree_canonical: circuit contains H");
    }
  }

  HadamardFreeTarget out(n);
  auto value = [&](std::size_t s) { return int(lo.get(s)) + 2 * int(hi.get(s)); };
  int base = value(0);
  for (std::size_t w = 0; w < un; ++w) {
    bool t = wire[w].get(0);
    out.t.set(w, t);
    for (std::size_t i = 0; i < un; ++i) out.m.set(w, i, wire[w].get(1 + i) != t);
  }
  for (std::size_t i = 0; i < un; ++i) out.p[i] = (value(1 + i) - base + 4) & 3;
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = i + 1; j < un; ++j) {
      int q = (value(pair_index(i, j)) - base - out.p[i] - out.p[j] + 8) & 3;
      out.gamma.set(i, j, q == 2);
    }
  }
  return out;
}

// Row-operation elimination; output wire i carries row i of m.
inline Circuit gauss_synth(const BitMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("gauss_synth: matrix not square");
  const std::size_t n = m.rows();
  BitMatrix w = m;
  std::vector<std::pair<int, int>> ops;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && !w.get(r, c)) ++r;
    if (r == n) throw std::domain_error("gauss_synth: singular matrix");
    if (r != c) {
      w.add_row(r, c);
      ops.emplace_back(int(r) + 1, int(c) + 1);
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (k != c && w.get(k, c)) {
        w.add_row(c, k);
        ops.emplace_back(int(c) + 1, int(k) + 1);
      }
    }
  }
  Circuit out(static_cast<int>(n));
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) out.cnot(it->first, it->second);
  return out;
}

// Plain -P-CZ-CNOT-X- realization over complete connectivity.
inline Circuit naive_hfree_circuit(const HadamardFreeTarget& u) {
  Circuit out(u.n);
  for (int i = 0; i < u.n; ++i) out.phase(i + 1, u.p[static_cast<std::size_t>(i)]);
  for (int i = 0; i < u.n; ++i) {
    for (int j = i + 1; j < u.n; ++j) {
      if (u.gamma.get(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) out.cz(i + 1, j + 1);
    }
  }
  out.append(gauss_synth(u.m));
  for (int i = 0; i < u.n; ++i) {
    if (u.t.get(static_cast<std::size_t>(i))) out.x(i + 1);
  }
  return out;
}

inline HadamardFreeTarget random_hfree_target(int n, Rng& rng) {
  HadamardFreeTarget u(n);
  for (auto& v : u.p) v = static_cast<int>(rng.below(4));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      u.gamma.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), rng.coin());
    }
  }
  u.m = random_invertible(static_cast<std::size_t>(n), rng);
  return u;
}

}  // namespace cliffsynth
