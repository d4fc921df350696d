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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliffsynth/rng.hpp"

namespace cliffsynth {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

  static BitVector unit(std::size_t len, std::size_t i) {
    BitVector v(len);
    v.set(i);
    return v;
  }

  // Parses a string of '0'/'1'; character k is bit k.
  static BitVector from_string(std::string_view s) {
    BitVector v(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] == '1') {
        v.set(k);
      } else if (s[k] != '0') {
        throw std::invalid_argument("bit string may contain only 0 and 1");
      }
    }
    return v;
  }

  std::size_t size() const { return len_; }
  std::size_t num_words() const { return words_.size(); }
  const std::uint64_t* data() const { return words_.data(); }
  std::uint64_t* data() { return words_.data(); }
  std::uint64_t word(std::size_t w) const { return words_[w]; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value = true) {
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  bool operator[](std::size_t i) const { return get(i); }

  BitVector& operator^=(const BitVector& o) {
    check_same(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  BitVector& operator&=(const BitVector& o) {
    check_same(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  BitVector& operator|=(const BitVector& o) {
    check_same(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

  friend bool operator==(const BitVector& a, const BitVector& b) {
    return a.len_ == b.len_ && a.words_ == b.words_;
  }
  friend bool operator<(const BitVector& a, const BitVector& b) {
    if (a.len_ != b.len_) return a.len_ < b.len_;
    return a.words_ < b.words_;
  }

  bool any() const {
    for (auto w : words_) {
      if (w) return true;
    }
    return false;
  }
  bool none() const { return !any(); }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  // Parity of the AND.
  bool dot(const BitVector& o) const {
    check_same(o);
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
    return std::popcount(acc) & 1;
  }

  // Index of the lowest set bit, or size() if none.
  std::size_t lowest() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
    return len_;
  }

  // Index of the highest set bit, or size() if none.
  std::size_t highest() const {
    for (std::size_t w = words_.size(); w-- > 0;) {
      if (words_[w]) return w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[w]));
    }
    return len_;
  }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t x = words_[w];
      while (x) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
        x &= x - 1;
      }
    }
    return out;
  }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  void randomize(Rng& rng) {
    for (auto& w : words_) w = rng.next();
    trim();
  }

  std::string to_string() const {
    std::string s(len_, '0');
    for (std::size_t k = 0; k < len_; ++k) {
      if (get(k)) s[k] = '1';
    }
    return s;
  }

 private:
  void check_same(const BitVector& o) const {
    if (o.len_ != len_) throw std::invalid_argument("bit vector length mismatch");
  }
  void trim() {
    if (len_ % 64 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (len_ % 64)) - 1;
  }

  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
  }

  // Antidiagonal permutation.
  static BitMatrix reversal(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, n - 1 - i);
    return m;
  }

  static BitMatrix from_rows(const std::vector<std::string>& rows) {
    BitMatrix m;
    m.cols_ = rows.empty() ? 0 : rows[0].size();
    for (const auto& r : rows) {
      if (r.size() != m.cols_) throw std::invalid_argument("ragged bit matrix rows");
      m.rows_.push_back(BitVector::from_string(r));
    }
    return m;
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows() == cols(); }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
  const BitVector& row(std::size_t r) const { return rows_[r]; }
  BitVector& row(std::size_t r) { return rows_[r]; }
  BitVector column(std::size_t c) const {
    BitVector v(rows());
    for (std::size_t r = 0; r < rows(); ++r) v.set(r, get(r, c));
    return v;
  }
  void set_column(std::size_t c, const BitVector& v) {
    for (std::size_t r = 0; r < rows(); ++r) set(r, c, v.get(r));
  }

  void add_row(std::size_t src, std::size_t dst) { rows_[dst] ^= rows_[src]; }
  void swap_rows(std::size_t a, std::size_t b) { std::swap(rows_[a], rows_[b]); }
  void add_column(std::size_t src, std::size_t dst) {
    for (auto& r : rows_) {
      if (r.get(src)) r.flip(dst);
    }
  }

  BitMatrix transpose() const {
    BitMatrix t(cols(), rows());
    for (std::size_t r = 0; r < rows(); ++r) {
      for (std::size_t c : rows_[r].support()) t.set(c, r);
    }
    return t;
  }

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t k : a.rows_[r].support()) out.rows_[r] ^= b.rows_[k];
    }
    return out;
  }

  friend BitVector operator*(const BitMatrix& a, const BitVector& x) {
    if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
    BitVector out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) out.set(r, a.rows_[r].dot(x));
    return out;
  }

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

  std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    for (const auto& r : rows_) out.push_back(r.to_string());
    return out;
  }

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

// Row-reduces m in place; returns pivot columns, one per nonzero row, in row order.
inline std::vector<std::size_t> row_reduce(BitMatrix& m, bool reduced = true) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && !m.get(p, c)) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    for (std::size_t k = reduced ? 0 : r + 1; k < m.rows(); ++k) {
      if (k != r && m.get(k, c)) m.add_row(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(const BitMatrix& m) {
  BitMatrix w = m;
  return row_reduce(w, false).size();
}

inline std::optional<BitVector> solve(const BitMatrix& a, const BitVector& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  BitMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c : a.row(r).support()) aug.set(r, c);
    aug.set(r, a.cols(), b.get(r));
  }
  auto pivots = row_reduce(aug);
  BitVector x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == a.cols()) return std::nullopt;
    x.set(pivots[r], aug.get(r, a.cols()));
  }
  return x;
}

inline BitMatrix invert(const BitMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("invert: matrix not square");
  std::size_t n = m.rows();
  BitMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c : m.row(r).support()) aug.set(r, c);
    aug.set(r, n + r);
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] >= n) throw std::domain_error("invert: singular matrix");
  BitMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out.set(r, c, aug.get(r, n + c));
  }
  return out;
}

inline bool is_invertible(const BitMatrix& m) { return m.is_square() && rank(m) == m.rows(); }

// Basis of {x : m x = 0}.
inline std::vector<BitVector> null_space(const BitMatrix& m) {
  BitMatrix w = m;
  auto pivots = row_reduce(w);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<BitVector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVector v(m.cols());
    v.set(f);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (w.get(r, f)) v.set(pivots[r]);
    }
    out.push_back(std::move(v));
  }
  return out;
}

// Uniform over GL(n,2) by rejection. Reports the number of draws if asked.
inline BitMatrix random_invertible(std::size_t n, Rng& rng, std::size_t* draws = nullptr) {
  if (n == 0) throw std::invalid_argument("random_invertible: n must be positive");
  std::size_t count = 0;
  while (true) {
    ++count;
    BitMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) m.row(r).randomize(rng);
    if (rank(m) == n) {
      if (draws) *draws = count;
      return m;
    }
  }
}

inline BitMatrix random_invertible(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_invertible(n, rng);
}

}  // namespace cliffsynth
