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

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cliffsynth {

enum class GateKind { CNOT, CZ, PHASE, H, X, Z, SWAP };

// Qubit indices are 1-based. For CNOT, a is the control and b the target.
struct Gate {
  GateKind kind;
  int a = 0;
  int b = 0;
  int k = 0;  // PHASE exponent; Circuit stores k=2 as Z

  static Gate cnot(int c, int t) { return {GateKind::CNOT, c, t, 0}; }
  static Gate cz(int a, int b) { return {GateKind::CZ, a, b, 0}; }
  static Gate phase(int q, int k) { return {GateKind::PHASE, q, 0, k}; }
  static Gate h(int q) { return {GateKind::H, q, 0, 0}; }
  static Gate x(int q) { return {GateKind::X, q, 0, 0}; }
  static Gate z(int q) { return {GateKind::Z, q, 0, 0}; }
  static Gate swap(int a, int b) { return {GateKind::SWAP, a, b, 0}; }

  bool two_qubit() const {
    return kind == GateKind::CNOT || kind == GateKind::CZ || kind == GateKind::SWAP;
  }

  Gate inverse() const {
    if (kind == GateKind::PHASE) return phase(a, 4 - k);
    return *this;
  }

  friend bool operator==(const Gate&, const Gate&) = default;
};

inline std::string to_string(const Gate& g) {
  switch (g.kind) {
    case GateKind::CNOT: return "CNOT(" + std::to_string(g.a) + "," + std::to_string(g.b) + ")";
    case GateKind::CZ: return "CZ(" + std::to_string(g.a) + "," + std::to_string(g.b) + ")";
    case GateKind::PHASE: return "PHASE(" + std::to_string(g.a) + "," + std::to_string(g.k) + ")";
    case GateKind::H: return "H(" + std::to_string(g.a) + ")";
    case GateKind::X: return "X(" + std::to_string(g.a) + ")";
    case GateKind::Z: return "Z(" + std::to_string(g.a) + ")";
    case GateKind::SWAP: return "SWAP(" + std::to_string(g.a) + "," + std::to_string(g.b) + ")";
  }
  return "?";
}

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int n) : n_(n) {}
  Circuit(int n, std::vector<Gate> gates) : n_(n) {
    for (const auto& g : gates) push(g);
  }

  int n() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  const Gate& operator[](std::size_t i) const { return gates_[i]; }

  void push(const Gate& g) {
    auto in_range = [&](int q) { return q >= 1 && q <= n_; };
    if (!in_range(g.a) || (g.two_qubit() && !in_range(g.b))) {
      throw std::out_of_range("gate " + to_string(g) + " outside qubit range");
    }
    if (g.two_qubit() && g.a == g.b) throw std::invalid_argument("two-qubit gate on one qubit");
    if (g.kind == GateKind::PHASE) {
      int k = ((g.k % 4) + 4) % 4;
      if (k == 0) return;
      gates_.push_back(k == 2 ? Gate::z(g.a) : Gate::phase(g.a, k));
      return;
    }
    gates_.push_back(g);
  }

  void cnot(int c, int t) { push(Gate::cnot(c, t)); }
  void cz(int a, int b) { push(Gate::cz(a, b)); }
  void phase(int q, int k) { push(Gate::phase(q, k)); }
  void h(int q) { push(Gate::h(q)); }
  void x(int q) { push(Gate::x(q)); }
  void z(int q) { push(Gate::z(q)); }
  void swap(int a, int b) { push(Gate::swap(a, b)); }

  void append(const Circuit& o) {
    if (o.n_ != n_) throw std::invalid_argument("append: qubit count mismatch");
    gates_.insert(gates_.end(), o.gates_.begin(), o.gates_.end());
  }

  std::size_t count_two_qubit() const {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(), [](const Gate& g) { return g.two_qubit(); }));
  }
  std::size_t count(GateKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(), [&](const Gate& g) { return g.kind == kind; }));
  }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int n_ = 0;
  std::vector<Gate> gates_;
};

inline Circuit concat(Circuit a, const Circuit& b) {
  a.append(b);
  return a;
}

// ASAP level of every two-qubit gate (0 for single-qubit gates).
inline std::vector<int> two_qubit_levels(const Circuit& c) {
  std::vector<int> wire(static_cast<std::size_t>(c.n()) + 1, 0);
  std::vector<int> out;
  out.reserve(c.size());
  for (const auto& g : c.gates()) {
    if (!g.two_qubit()) {
      out.push_back(0);
      continue;
    }
    int l = 1 + std::max(wire[g.a], wire[g.b]);
    wire[g.a] = wire[g.b] = l;
    out.push_back(l);
  }
  return out;
}

inline int two_qubit_depth(const Circuit& c) {
  auto levels = two_qubit_levels(c);
  int d = 0;
  for (int l : levels) d = std::max(d, l);
  return d;
}

inline Circuit expand_swaps(const Circuit& c) {
  Circuit out(c.n());
  for (const auto& g : c.gates()) {
    if (g.kind == GateKind::SWAP) {
      out.cnot(g.a, g.b);
      out.cnot(g.b, g.a);
      out.cnot(g.a, g.b);
    } else {
      out.push(g);
    }
  }
  return out;
}

inline Circuit inverse(const Circuit& c) {
  Circuit out(c.n());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) out.push(it->inverse());
  return out;
}

struct Connectivity {
  enum class Kind { LNN, COMPLETE, GRAPH };
  Kind kind = Kind::COMPLETE;
  int n = 0;
  std::set<std::pair<int, int>> edges;  // normalized (min, max); GRAPH only

  static Connectivity lnn(int n) { return {Kind::LNN, n, {}}; }
  static Connectivity complete(int n) { return {Kind::COMPLETE, n, {}}; }
  static Connectivity graph(int n, std::set<std::pair<int, int>> edges) {
    std::set<std::pair<int, int>> norm;
    for (auto [a, b] : edges) norm.insert({std::min(a, b), std::max(a, b)});
    return {Kind::GRAPH, n, std::move(norm)};
  }

  bool has_edge(int a, int b) const {
    if (a == b || a < 1 || b < 1 || a > n || b > n) return false;
    switch (kind) {
      case Kind::LNN: return std::abs(a - b) == 1;
      case Kind::COMPLETE: return true;
      case Kind::GRAPH: return edges.count({std::min(a, b), std::max(a, b)}) > 0;
    }
    return false;
  }
};

struct Violation {
  std::size_t index;
  Gate gate;
};

inline std::vector<Violation> validate_connectivity(const Circuit& c, const Connectivity& conn) {
  if (c.n() != conn.n) throw std::invalid_argument("validate_connectivity: qubit count mismatch");
  std::vector<Violation> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate& g = c[i];
    if (g.two_qubit() && !conn.has_edge(g.a, g.b)) out.push_back({i, g});
  }
  return out;
}

}  // namespace cliffsynth
