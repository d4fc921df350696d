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
#include <stdexcept>
#include <vector>

#include "cliffsynth/circuit.hpp"
#include "cliffsynth/gf2.hpp"
#include "cliffsynth/hfree.hpp"
#include "cliffsynth/lnn_linear.hpp"

namespace cliffsynth {

// s(i, i): phase on the network input carrying label i.
// s(i, j), i < j: phase at the XOR point of box(i, j).
class PhaseSchedule {
 public:
  PhaseSchedule() = default;
  explicit PhaseSchedule(int n)
      : n_(n), s_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

  int n() const { return n_; }
  // 1-based labels, any order.
  int at(int i, int j) const { return s_[flat(i, j)]; }
  void set(int i, int j, int v) { s_[flat(i, j)] = ((v % 4) + 4) % 4; }
  void add(int i, int j, int v) { set(i, j, at(i, j) + v); }

  friend bool operator==(const PhaseSchedule&, const PhaseSchedule&) = default;

 private:
  std::size_t flat(int i, int j) const {
    int a = std::min(i, j) - 1;
    int b = std::max(i, j) - 1;
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
  }

  int n_ = 0;
  std::vector<int> s_;
};

// p and gamma are 0-based as in HadamardFreeTarget.
inline PhaseSchedule initialize_schedule(const std::vector<int>& p, const BitMatrix& gamma) {
  const int n = static_cast<int>(p.size());
  PhaseSchedule s(n);
  for (int i = 1; i <= n; ++i) s.set(i, i, p[static_cast<std::size_t>(i - 1)]);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (!gamma.get(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1))) continue;
      s.set(i, j, 3);
      s.add(i, i, 1);
      s.add(j, j, 1);
    }
  }
  return s;
}

// SWAP+ boxes in processing order: by layer position descending, then time
// step descending.
inline std::vector<Box> swap_plus_order(const BoxNetwork& net) {
  std::vector<Box> plus;
  for (const auto& b : net.boxes()) {
    if (b.kind == BoxKind::SWAP_PLUS) plus.push_back(b);
  }
  std::sort(plus.begin(), plus.end(), [&](const Box& a, const Box& b) {
    int pa = net.layer_position(a.i);
    int pb = net.layer_position(b.i);
    if (pa != pb) return pa > pb;
    return a.slot > b.slot;
  });
  return plus;
}

// Rewrites an all-SWAP schedule for the given network in place.
inline void apply_swap_plus_updates(PhaseSchedule& s, const BoxNetwork& net) {
  const int n = net.n();
  for (const Box& b : swap_plus_order(net)) {
    const int i = b.i;
    const int j = b.j;
    int sjj = s.at(j, j);
    s.set(j, j, s.at(i, j));
    s.set(i, j, sjj);
    for (int k = 1; k <= n; ++k) {
      if (k == i || k == j) continue;
      if (!net.precedes(net.box(k, j), b)) continue;
      int pk = s.at(k, j);
      if (pk == 0) continue;
      s.add(i, i, 3 * pk);
      s.add(j, j, 3 * pk);
      s.add(k, k, 3 * pk);
      s.add(i, j, pk);
      s.add(i, k, pk);
    }
  }
}

inline PhaseSchedule find_phase_schedule(const std::vector<int>& p, const BitMatrix& gamma,
                                         const BoxNetwork& net) {
  PhaseSchedule s = initialize_schedule(p, gamma);
  apply_swap_plus_updates(s, net);
  return s;
}

// All pieces of the C1 C2 construction for one target.
struct LnnPlan {
  int n = 0;
  Circuit c1;
  BitMatrix m_prime;
  BoxNetwork net;
  PhaseSchedule s;
};

// C1 C2 diagonalizes the matrix whose columns are the rows of target.m; its
// inverse then implements target.m.
inline LnnPlan plan_hfree_lnn(const HadamardFreeTarget& target) {
  target.validate();
  LnnPlan plan;
  plan.n = target.n;
  auto tri = northwest_triangularize(target.m.transpose());
  plan.c1 = std::move(tri.c1);
  plan.m_prime = std::move(tri.m_prime);
  plan.net = box_network(plan.m_prime);
  plan.s = find_phase_schedule(target.p, target.gamma, plan.net);
  return plan;
}

// Gates of one box in natural order with its XOR-point phase k.
inline void emit_box(Circuit& c, const Box& b, int k) {
  c.cnot(b.wire, b.wire + 1);
  c.phase(b.wire + 1, k);
  c.cnot(b.wire + 1, b.wire);
  if (b.kind == BoxKind::SWAP) c.cnot(b.wire, b.wire + 1);
}

// Circuit (C1 C2)^-1 with the schedule placed at the mirrored cuts.
inline Circuit emit_inverted_network(const LnnPlan& plan) {
  const int n = plan.n;
  Circuit out(n);
  const auto& boxes = plan.net.boxes();
  for (auto it = boxes.rbegin(); it != boxes.rend(); ++it) {
    const Box& b = *it;
    if (b.kind == BoxKind::SWAP) out.cnot(b.wire, b.wire + 1);
    out.cnot(b.wire + 1, b.wire);
    out.phase(b.wire + 1, plan.s.at(b.i, b.j));
    out.cnot(b.wire, b.wire + 1);
  }
  for (int i = 1; i <= n; ++i) out.phase(n + 1 - i, plan.s.at(i, i));
  out.append(inverse(plan.c1));
  return out;
}

inline void apply_x_shift(Circuit& c, const BitVector& t) {
  for (std::size_t w : t.support()) c.x(static_cast<int>(w) + 1);
}

// Depth <= 5n LNN circuit for a Hadamard-free target (X shift appended last).
inline Circuit assemble_hfree_lnn(const HadamardFreeTarget& target) {
  target.validate();
  const auto un = static_cast<std::size_t>(target.n);
  if (target.m == BitMatrix::identity(un) && target.gamma == BitMatrix(un, un)) {
    Circuit out(target.n);
    for (int i = 1; i <= target.n; ++i) out.phase(i, target.p[static_cast<std::size_t>(i - 1)]);
    apply_x_shift(out, target.t);
    return out;
  }
  Circuit out = emit_inverted_network(plan_hfree_lnn(target));
  apply_x_shift(out, target.t);
  return out;
}

// The same operator written as C1 C2 in natural orientation, obtained by
// inverting the construction for the inverse target. The boxes of the final
// time step are returned separately so callers can rewrite them.
struct NaturalLnnForm {
  Circuit body;             // everything before the final box step
  std::vector<Box> last;    // boxes of the final time step
  std::vector<int> last_a;  // XOR-point phase of each final box
};

inline NaturalLnnForm natural_hfree_lnn(const HadamardFreeTarget& target) {
  if (target.t.any()) throw std::invalid_argument("natural_hfree_lnn: X shift not supported");
  LnnPlan plan = plan_hfree_lnn(inverse_target(target));
  const int n = plan.n;
  NaturalLnnForm out{Circuit(n), {}, {}};
  out.body.append(plan.c1);
  for (int i = 1; i <= n; ++i) out.body.phase(n + 1 - i, 4 - plan.s.at(i, i));
  for (const Box& b : plan.net.boxes()) {
    int k = 4 - plan.s.at(b.i, b.j);
    if (b.slot == n) {
      out.last.push_back(b);
      out.last_a.push_back(k & 3);
    } else {
      emit_box(out.body, b, k);
    }
  }
  return out;
}

inline Circuit flatten(const NaturalLnnForm& f) {
  Circuit c = f.body;
  for (std::size_t k = 0; k < f.last.size(); ++k) emit_box(c, f.last[k], f.last_a[k]);
  return c;
}

}  // namespace cliffsynth
