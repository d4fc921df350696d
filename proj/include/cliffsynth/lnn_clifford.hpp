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
#include <string>
#include <utility>
#include <vector>

#include "cliffsynth/circuit.hpp"
#include "cliffsynth/cz_network.hpp"
#include "cliffsynth/gf2.hpp"
#include "cliffsynth/hfree.hpp"
#include "cliffsynth/lnn_hfree.hpp"
#include "cliffsynth/tableau.hpp"

namespace cliffsynth {

// The last box on (w, w+1), then H on both wires, then CNOT(w -> w+1), with
// a = XOR-point phase of the box, b / c = phases on w / w+1 between box and H,
// d / e = phases on w / w+1 between H and the CNOT. Emits an equivalent
// sequence with one CNOT before and at most one after the Hadamards. For a
// SWAP+ box, e is only used mod 2; the dropped Z is a Pauli.
inline void emit_merged_box(Circuit& c, int w, BoxKind kind, int a, int b, int cc, int d, int e) {
  const int u = w;
  const int v = w + 1;
  if (kind == BoxKind::SWAP) {
    c.phase(u, cc);
    c.phase(v, b);
    c.cnot(v, u);
    c.phase(u, a);
    c.h(u);
    c.h(v);
    c.phase(u, e);
    c.cnot(v, u);
    c.phase(u, d);
  } else if (e % 2 == 0) {
    c.phase(v, b);
    c.cnot(u, v);
    c.phase(v, a + cc);
    c.h(u);
    c.h(v);
    c.phase(u, d);
  } else {
    c.phase(v, b);
    c.cnot(u, v);
    c.phase(v, a + cc);
    c.h(u);
    c.cnot(u, v);
    c.h(v);
    c.phase(u, d + 1);
    c.phase(v, 1);
  }
}

// Target of a tableau that maps every Z_i to a Z-type Pauli, ignoring signs and
// the high bit of p (both are Pauli corrections).
inline HadamardFreeTarget hfree_target_mod_pauli(const CliffordTableau& t) {
  const int n = t.n();
  const auto un = static_cast<std::size_t>(n);
  BitMatrix dx(un, un), dz(un, un);
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t q = 0; q < un; ++q) {
      dx.set(i, q, t.x(i, q));
      dz.set(i, q, t.z(i, q));
      if (t.x(un + i, q)) throw std::invalid_argument("tableau is not Hadamard-free");
    }
  }
  HadamardFreeTarget out(n);
  out.m = dx.transpose();
  BitMatrix b = dz * out.m;
  for (std::size_t i = 0; i < un; ++i) {
    out.p[i] = b.get(i, i) ? 1 : 0;
    for (std::size_t j = i + 1; j < un; ++j) {
      if (b.get(i, j) != b.get(j, i)) throw std::logic_error("diagonal part not symmetric");
      out.gamma.set(i, j, b.get(i, j));
    }
  }
  return out;
}

// Prepends the Pauli layer that makes tableau_of(c) equal t, given that they
// agree up to signs.
inline Circuit fix_signs(const Circuit& c, const CliffordTableau& t) {
  const int n = t.n();
  auto got = tableau_of(c);
  Circuit out(n);
  for (int i = 0; i < n; ++i) {
    auto ui = static_cast<std::size_t>(i);
    if (got.sign(ui) != t.sign(ui)) out.z(i + 1);
    if (got.sign(ui + static_cast<std::size_t>(n)) != t.sign(ui + static_cast<std::size_t>(n))) out.x(i + 1);
  }
  out.append(c);
  return out;
}

struct CliffordSynthResult {
  Circuit circuit;
  int depth = 0;   // two-qubit depth after SWAP expansion
  int bound = 0;
  bool fallback = false;
  bool hadamard_free = false;  // synthesized directly, no Hadamard layer
  bool merged = false;         // whether the last-box rewrites were applied
  std::string tier() const { return fallback ? "fallback" : hadamard_free ? "hadamard-free" : "skeleton"; }
  bool within_bound() const { return depth <= bound; }
};

struct CliffordSynthOptions {
  bool force_fallback = false;
};

// Layers (time order): Paulis, Hadamard-free part W, H on all qubits, CZ
// network after its first four layers, H on a subset. The first four network
// layers are moved in front of the Hadamards with controls and targets
// exchanged, and the final box step of W is merged with the fifth network
// layer across the Hadamards.
inline CliffordSynthResult synth_clifford_lnn_detailed(const CliffordTableau& target,
                                                       CliffordSynthOptions opt = {}) {
  if (!target.is_symplectic()) throw std::invalid_argument("synth_clifford_lnn: invalid tableau");
  const int n = target.n();
  const auto un = static_cast<std::size_t>(n);

  bool z_to_z = true;
  for (std::size_t i = 0; i < un && z_to_z; ++i) {
    for (std::size_t q = 0; q < un; ++q) z_to_z = z_to_z && !target.x(un + i, q);
  }
  if (z_to_z && !opt.force_fallback) {
    CliffordSynthResult res;
    res.circuit = fix_signs(assemble_hfree_lnn(hfree_target_mod_pauli(target)), target);
    if (!(tableau_of(res.circuit) == target)) {
      throw std::logic_error("synth_clifford_lnn: result differs from target tableau");
    }
    res.hadamard_free = true;
    res.bound = 7 * n - 4;
    res.depth = two_qubit_depth(expand_swaps(res.circuit));
    return res;
  }

  // Hadamard subset: Z-part pivots of stabilizer rows without X part.
  BitMatrix stab(un, 2 * un);
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t q = 0; q < un; ++q) {
      stab.set(i, q, target.x(un + i, q));
      stab.set(i, un + q, target.z(un + i, q));
    }
  }
  std::vector<int> hset;
  for (std::size_t p : row_reduce(stab)) {
    if (p >= un) hset.push_back(static_cast<int>(p - un) + 1);
  }

  CliffordTableau w = target;
  for (int q : hset) w.h(q);
  BitMatrix sx(un, un), sz(un, un);
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t q = 0; q < un; ++q) {
      sx.set(i, q, w.x(un + i, q));
      sz.set(i, q, w.z(un + i, q));
    }
  }
  BitMatrix b = invert(sx) * sz;
  BitMatrix gamma_b(un, un);
  std::vector<int> diag_b(un, 0);
  for (std::size_t i = 0; i < un; ++i) {
    diag_b[i] = b.get(i, i);
    if (diag_b[i]) w.s(int(i) + 1);
    for (std::size_t j = i + 1; j < un; ++j) {
      if (b.get(i, j) != b.get(j, i)) throw std::logic_error("diagonal layer not symmetric");
      if (b.get(i, j)) {
        gamma_b.set(i, j);
        w.cz(int(i) + 1, int(j) + 1);
      }
    }
  }
  for (int q = 1; q <= n; ++q) w.h(q);
  for (int q = 1; q <= n / 2; ++q) w.swap(q, n + 1 - q);

  // The CZ network acts on reversed labels.
  BitMatrix gamma_r(un, un);
  std::vector<int> p_r(un, 0);
  for (std::size_t i = 0; i < un; ++i) {
    p_r[un - 1 - i] = diag_b[i];
    for (std::size_t j = i + 1; j < un; ++j) {
      if (gamma_b.get(i, j)) gamma_r.set(un - 1 - j, un - 1 - i);
    }
  }

  CliffordSynthResult res;
  Circuit c(n);
  bool use_skeleton = !opt.force_fallback && check_cz_skeleton(n, cz_skeleton_layers(n)).ok();
  if (use_skeleton) {
    CzNetwork net = cz_reversal_layout(n, gamma_r, p_r);
    const std::size_t pushed = std::min<std::size_t>(kCzPhaseFreeLayers, net.layers.size());
    for (std::size_t l = 0; l < pushed; ++l) {
      for (auto [ctl, tgt] : net.layers[l]) w.cnot(tgt, ctl);
    }
    NaturalLnnForm form = natural_hfree_lnn(hfree_target_mod_pauli(w));
    c.append(form.body);

    // Merge only when the final box step sits exactly on the fifth layer.
    std::map<int, std::size_t> box_at;
    for (std::size_t k = 0; k < form.last.size(); ++k) box_at[form.last[k].wire] = k;
    const CnotLayer& fifth = net.layers.size() > pushed ? net.layers[pushed] : CnotLayer{};
    bool match = !form.last.empty() && fifth.size() == form.last.size();
    for (auto [ctl, tgt] : fifth) match = match && tgt == ctl + 1 && box_at.count(ctl);

    std::vector<int> cut_phase(un + 1, 0);
    for (auto [q, k] : net.phases[pushed]) cut_phase[static_cast<std::size_t>(q)] += k;
    if (match) {
      std::vector<bool> done(un + 1, false);
      for (std::size_t k = 0; k < form.last.size(); ++k) {
        const Box& bx = form.last[k];
        int u = bx.wire;
        emit_merged_box(c, u, bx.kind, form.last_a[k], 0, 0, cut_phase[static_cast<std::size_t>(u)],
                        cut_phase[static_cast<std::size_t>(u + 1)]);
        done[static_cast<std::size_t>(u)] = done[static_cast<std::size_t>(u + 1)] = true;
      }
      for (int q = 1; q <= n; ++q) {
        if (done[static_cast<std::size_t>(q)]) continue;
        c.h(q);
        c.phase(q, cut_phase[static_cast<std::size_t>(q)]);
      }
      res.merged = true;
    } else {
      for (std::size_t k = 0; k < form.last.size(); ++k) emit_box(c, form.last[k], form.last_a[k]);
      for (int q = 1; q <= n; ++q) c.h(q);
      for (int q = 1; q <= n; ++q) c.phase(q, cut_phase[static_cast<std::size_t>(q)]);
      for (auto [ctl, tgt] : fifth) c.cnot(ctl, tgt);
    }
    for (std::size_t cut = pushed + 1; cut <= net.layers.size(); ++cut) {
      if (cut > pushed + 1) {
        for (auto [ctl, tgt] : net.layers[cut - 1]) c.cnot(ctl, tgt);
      }
      for (auto [q, k] : net.phases[cut]) c.phase(q, k);
    }
    res.bound = 7 * n - 4;
  } else {
    // Plain tier: W (with the reversal folded in), H, then the diagonal layer
    // and reversal from the generic Hadamard-free synthesizer.
    HadamardFreeTarget dr(n);
    dr.p = p_r;
    dr.gamma = gamma_r;
    dr.m = BitMatrix::reversal(un);
    c.append(flatten(natural_hfree_lnn(hfree_target_mod_pauli(w))));
    for (int q = 1; q <= n; ++q) c.h(q);
    c.append(assemble_hfree_lnn(dr));
    res.fallback = true;
    res.bound = 8 * n - 6;
  }
  for (int q : hset) c.h(q);

  res.circuit = fix_signs(c, target);
  if (!(tableau_of(res.circuit) == target)) {
    throw std::logic_error("synth_clifford_lnn: result differs from target tableau");
  }
  res.depth = two_qubit_depth(expand_swaps(res.circuit));
  return res;
}

inline Circuit synth_clifford_lnn(const CliffordTableau& target) {
  return synth_clifford_lnn_detailed(target).circuit;
}

}  // namespace cliffsynth
