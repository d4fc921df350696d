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
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cliffsynth/circuit.hpp"
#include "cliffsynth/gf2.hpp"

namespace cliffsynth {

inline std::size_t num_pairs(int n) {
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

// Index of the pair (i, j), 1 <= i < j <= n.
inline std::size_t pair_index(int n, int i, int j) {
  return static_cast<std::size_t>((i - 1) * (2 * n - i) / 2 + (j - i - 1));
}

// A linear function over x_1..x_n; bit k of the support is x_{k+1}.
using LinearFunction = BitVector;

// CZ content of a Phase gate applied to f: every pair inside the support.
inline BitVector cz_vector(int n, const LinearFunction& f) {
  BitVector v(num_pairs(n));
  auto s = f.support();
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      v.set(pair_index(n, int(s[a]) + 1, int(s[b]) + 1));
    }
  }
  return v;
}

// CZ content of a CZ gate between wires carrying f and g.
inline BitVector cz_product_vector(int n, const LinearFunction& f, const LinearFunction& g) {
  BitVector v(num_pairs(n));
  for (std::size_t s : f.support()) {
    for (std::size_t t : g.support()) {
      if (s == t) continue;
      v.flip(pair_index(n, int(std::min(s, t)) + 1, int(std::max(s, t)) + 1));
    }
  }
  return v;
}

struct FunctionSite {
  std::size_t position;  // number of gates applied before this value appears
  int wire;              // 1-based
  LinearFunction f;
};

struct CzSite {
  std::size_t position;  // gate index of the CZ
  LinearFunction f;
  LinearFunction g;
};

struct LinearReplay {
  std::vector<FunctionSite> functions;
  std::vector<CzSite> czs;
  std::vector<LinearFunction> final_functions;
};

// Replays CNOT / CZ / SWAP circuits; single-qubit gates are skipped when
// allow_single is set.
inline LinearReplay replay_linear(const Circuit& c, bool allow_cz, bool allow_single) {
  const auto un = static_cast<std::size_t>(c.n());
  LinearReplay out;
  std::vector<LinearFunction> w;
  for (std::size_t i = 0; i < un; ++i) {
    w.push_back(BitVector::unit(un, i));
    out.functions.push_back({0, int(i) + 1, w.back()});
  }
  for (std::size_t pos = 0; pos < c.size(); ++pos) {
    const Gate& g = c[pos];
    auto a = static_cast<std::size_t>(g.a - 1);
    auto b = static_cast<std::size_t>(g.b - 1);
    switch (g.kind) {
      case GateKind::CNOT:
        w[b] ^= w[a];
        out.functions.push_back({pos + 1, g.b, w[b]});
        break;
      case GateKind::SWAP:
        if (!allow_cz) throw std::invalid_argument("expected a CNOT-only circuit");
        std::swap(w[a], w[b]);
        break;
      case GateKind::CZ:
        if (!allow_cz) throw std::invalid_argument("expected a CNOT-only circuit");
        out.czs.push_back({pos, w[a], w[b]});
        break;
      default:
        if (!allow_single) throw std::invalid_argument("unexpected single-qubit gate");
        break;
    }
  }
  out.final_functions = std::move(w);
  return out;
}

inline std::vector<FunctionSite> collect_linear_functions(const Circuit& c) {
  return replay_linear(c, false, false).functions;
}

// Incremental echelon basis; every basis vector's lowest set bit is its pivot
// and pivots are distinct.
class EchelonBasis {
 public:
  EchelonBasis() = default;
  explicit EchelonBasis(std::size_t len) : len_(len), pivot_of_(len, -1) {}

  std::size_t length() const { return len_; }
  std::size_t dim() const { return vectors_.size(); }
  const std::vector<BitVector>& vectors() const { return vectors_; }

  BitVector reduce(BitVector v) const {
    while (true) {
      std::size_t p = v.lowest();
      if (p == len_) return v;
      int k = pivot_of_[p];
      if (k < 0) return v;
      v ^= vectors_[static_cast<std::size_t>(k)];
    }
  }

  bool contains(const BitVector& v) const { return reduce(v).none(); }

  // Returns true when v enlarged the span.
  bool add(const BitVector& v) {
    BitVector r = reduce(v);
    if (r.none()) return false;
    pivot_of_[r.lowest()] = static_cast<int>(vectors_.size());
    vectors_.push_back(std::move(r));
    return true;
  }

 private:
  std::size_t len_ = 0;
  std::vector<int> pivot_of_;
  std::vector<BitVector> vectors_;
};

struct CzBasis {
  int n = 0;
  std::vector<BitVector> basis;       // reduced row-echelon form
  std::vector<BitVector> complement;  // basis of the orthogonal complement

  std::size_t dim() const { return basis.size(); }
  std::size_t missing() const { return complement.size(); }
};

inline CzBasis cz_basis_from(int n, const std::vector<BitVector>& vectors) {
  CzBasis out;
  out.n = n;
  const std::size_t len = num_pairs(n);
  BitMatrix m(vectors.size(), len);
  for (std::size_t r = 0; r < vectors.size(); ++r) m.row(r) = vectors[r];
  auto pivots = row_reduce(m);
  for (std::size_t r = 0; r < pivots.size(); ++r) out.basis.push_back(m.row(r));
  BitMatrix b(out.basis.size(), len);
  for (std::size_t r = 0; r < out.basis.size(); ++r) b.row(r) = out.basis[r];
  out.complement = null_space(b);
  return out;
}

// CZ vectors generated by a CNOT (optionally CNOT + CZ) circuit.
inline std::vector<BitVector> generated_cz_vectors(const Circuit& c) {
  auto rep = replay_linear(c, true, true);
  std::vector<BitVector> out;
  for (const auto& s : rep.functions) out.push_back(cz_vector(c.n(), s.f));
  for (const auto& z : rep.czs) out.push_back(cz_product_vector(c.n(), z.f, z.g));
  return out;
}

inline CzBasis cz_basis(const Circuit& c) { return cz_basis_from(c.n(), generated_cz_vectors(c)); }

inline std::size_t span_dim(const Circuit& c) {
  EchelonBasis e(num_pairs(c.n()));
  for (const auto& v : generated_cz_vectors(c)) e.add(v);
  return e.dim();
}

// Picks a subset of the columns summing to rhs.
inline std::optional<BitVector> solve_columns(const std::vector<BitVector>& columns,
                                              const BitVector& rhs) {
  BitMatrix a(rhs.size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t r : columns[c].support()) a.set(r, c);
  }
  return solve(a, rhs);
}

inline BitVector gamma_vector(int n, const BitMatrix& gamma) {
  BitVector v(num_pairs(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (gamma.get(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1))) {
        v.set(pair_index(n, i, j));
      }
    }
  }
  return v;
}

}  // namespace cliffsynth
