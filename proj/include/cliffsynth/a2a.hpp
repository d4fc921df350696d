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

#include <cmath>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cliffsynth/circuit.hpp"
#include "cliffsynth/cz_space.hpp"
#include "cliffsynth/gf2.hpp"
#include "cliffsynth/hfree.hpp"

namespace cliffsynth {

namespace detail {

// Lower-triangular sweep with sub-row deduplication. Row ops are recorded as
// (source, destination), 0-based.
inline std::vector<std::pair<int, int>> pmh_lower(BitMatrix& a, int section) {
  const int n = static_cast<int>(a.rows());
  std::vector<std::pair<int, int>> ops;
  auto row_op = [&](int src, int dst) {
    a.add_row(static_cast<std::size_t>(src), static_cast<std::size_t>(dst));
    ops.emplace_back(src, dst);
  };
  for (int lo = 0; lo < n; lo += section) {
    int hi = std::min(n, lo + section);
    std::map<std::uint64_t, int> first;
    for (int r = lo; r < n; ++r) {
      std::uint64_t pattern = 0;
      for (int c = lo; c < hi; ++c) {
        if (a.get(static_cast<std::size_t>(r), static_cast<std::size_t>(c))) pattern |= std::uint64_t{1} << (c - lo);
      }
      if (pattern == 0) continue;
      auto it = first.find(pattern);
      if (it == first.end()) {
        first.emplace(pattern, r);
      } else {
        row_op(it->second, r);
      }
    }
    for (int c = lo; c < hi; ++c) {
      bool diag = a.get(static_cast<std::size_t>(c), static_cast<std::size_t>(c));
      for (int r = c + 1; r < n; ++r) {
        if (!a.get(static_cast<std::size_t>(r), static_cast<std::size_t>(c))) continue;
        if (!diag) {
          row_op(r, c);
          diag = true;
        }
        row_op(c, r);
      }
    }
  }
  return ops;
}

}  // namespace detail

inline int pmh_section_size(int n) {
  return std::max(1, static_cast<int>(std::lround(std::log2(static_cast<double>(n)) / 2.0)));
}

// CNOT synthesis over complete connectivity; output wire i carries row i of m.
inline Circuit pmh_synth(const BitMatrix& m, int section = 0) {
  if (!is_invertible(m)) throw std::domain_error("pmh_synth: singular matrix");
  const int n = static_cast<int>(m.rows());
  if (section <= 0) section = pmh_section_size(n);
  if (section > 63) throw std::invalid_argument("pmh_synth: section too wide");
  BitMatrix a = m;
  auto lower = detail::pmh_lower(a, section);
  BitMatrix u = a.transpose();
  auto upper = detail::pmh_lower(u, section);
  Circuit out(n);
  for (auto [src, dst] : upper) out.cnot(dst + 1, src + 1);
  for (auto it = lower.rbegin(); it != lower.rend(); ++it) out.cnot(it->first + 1, it->second + 1);
  return out;
}

struct InsertCzResult {
  Circuit circuit;
  std::size_t missing_before = 0;  // dim of the complement on input
  std::size_t inserted = 0;
  int depth_before = 0;
  int depth_after = 0;
  int appended_layers = 0;
};

// Greedy CZ insertion: layers left to right, then pairs (a, b) in
// lexicographic order; a CZ is placed where both qubits are idle in that layer
// and its CZ vector lies outside the current span. Extra layers are appended
// at the end only when no existing layer admits a useful CZ.
inline InsertCzResult insert_cz_detailed(const Circuit& c) {
  const int n = c.n();
  const auto un = static_cast<std::size_t>(n);
  auto levels = two_qubit_levels(c);
  int depth = 0;
  for (int l : levels) depth = std::max(depth, l);
  std::vector<std::vector<Gate>> layers(static_cast<std::size_t>(depth) + 1);
  for (std::size_t k = 0; k < c.size(); ++k) {
    const Gate& g = c[k];
    if (g.kind != GateKind::CNOT && g.kind != GateKind::CZ) {
      throw std::invalid_argument("insert_cz: expected a CNOT (+CZ) circuit");
    }
    layers[static_cast<std::size_t>(levels[k])].push_back(g);
  }

  EchelonBasis span(num_pairs(n));
  for (const auto& v : generated_cz_vectors(c)) span.add(v);

  InsertCzResult res;
  res.missing_before = num_pairs(n) - span.dim();
  res.depth_before = depth;

  // before[l][w]: function on wire w entering layer l (1-based layers).
  std::vector<std::vector<LinearFunction>> before;
  std::vector<std::vector<bool>> busy;
  std::vector<LinearFunction> cur;
  for (std::size_t i = 0; i < un; ++i) cur.push_back(BitVector::unit(un, i));
  before.emplace_back();
  busy.emplace_back();
  for (int l = 1; l <= depth; ++l) {
    before.push_back(cur);
    std::vector<bool> b(un, false);
    for (const auto& g : layers[static_cast<std::size_t>(l)]) {
      b[static_cast<std::size_t>(g.a - 1)] = b[static_cast<std::size_t>(g.b - 1)] = true;
      if (g.kind == GateKind::CNOT) cur[static_cast<std::size_t>(g.b - 1)] ^= cur[static_cast<std::size_t>(g.a - 1)];
    }
    busy.push_back(std::move(b));
  }

  std::vector<std::vector<Gate>> added(layers.size());
  auto scan_layer = [&](std::size_t l) {
    for (int a = 1; a <= n && span.dim() < num_pairs(n); ++a) {
      for (int b = a + 1; b <= n && span.dim() < num_pairs(n); ++b) {
        auto ua = static_cast<std::size_t>(a - 1);
        auto ub = static_cast<std::size_t>(b - 1);
        if (busy[l][ua] || busy[l][ub]) continue;
        if (!span.add(cz_product_vector(n, before[l][ua], before[l][ub]))) continue;
        busy[l][ua] = busy[l][ub] = true;
        added[l].push_back(Gate::cz(a, b));
        ++res.inserted;
      }
    }
  };
  for (std::size_t l = 1; l < layers.size(); ++l) scan_layer(l);
  while (span.dim() < num_pairs(n)) {
    layers.emplace_back();
    added.emplace_back();
    before.push_back(cur);
    busy.emplace_back(un, false);
    ++res.appended_layers;
    std::size_t before_dim = span.dim();
    scan_layer(layers.size() - 1);
    if (span.dim() == before_dim) throw std::logic_error("insert_cz: appended layer added nothing");
  }

  Circuit out(n);
  for (std::size_t l = 1; l < layers.size(); ++l) {
    for (const auto& g : layers[l]) out.push(g);
    for (const auto& g : added[l]) out.push(g);
  }
  res.circuit = std::move(out);
  res.depth_after = two_qubit_depth(res.circuit);
  return res;
}

inline Circuit insert_cz(const Circuit& c) { return insert_cz_detailed(c).circuit; }

// Places Phase gates (and keeps the subset of the skeleton's CZ gates) so the
// result equals the target. Odd phases come from an F2 solve over the
// skeleton's exposed functions; leftover linear phases go on the inputs.
inline Circuit schedule_phases_a2a(const HadamardFreeTarget& target, const Circuit& skeleton) {
  target.validate();
  const int n = target.n;
  if (skeleton.n() != n) throw std::invalid_argument("schedule_phases_a2a: qubit count mismatch");
  auto rep = replay_linear(skeleton, true, false);
  for (std::size_t w = 0; w < static_cast<std::size_t>(n); ++w) {
    if (!(rep.final_functions[w] == target.m.row(w))) {
      throw std::invalid_argument("schedule_phases_a2a: skeleton linear part differs from target");
    }
  }
  // Distinct functions only; remember the first site of each.
  std::vector<BitVector> columns;
  std::vector<std::pair<std::size_t, int>> phase_site;  // (position, wire)
  std::map<BitVector, bool> seen;
  for (const auto& s : rep.functions) {
    if (seen.count(s.f)) continue;
    seen[s.f] = true;
    columns.push_back(cz_vector(n, s.f));
    phase_site.emplace_back(s.position, s.wire);
  }
  const std::size_t num_phase_cols = columns.size();
  for (const auto& z : rep.czs) columns.push_back(cz_product_vector(n, z.f, z.g));
  auto sol = solve_columns(columns, gamma_vector(n, target.gamma));
  if (!sol) throw std::runtime_error("schedule_phases_a2a: CZ space not spanned by skeleton");

  std::vector<std::vector<int>> phases_at(skeleton.size() + 1);
  for (std::size_t k = 0; k < num_phase_cols; ++k) {
    if (sol->get(k)) phases_at[phase_site[k].first].push_back(phase_site[k].second);
  }
  std::vector<bool> keep_cz(skeleton.size(), false);
  for (std::size_t k = 0; k < rep.czs.size(); ++k) {
    if (sol->get(num_phase_cols + k)) keep_cz[rep.czs[k].position] = true;
  }
  auto build = [&](const std::vector<int>& input_phase) {
    Circuit out(n);
    for (int w = 1; w <= n; ++w) out.phase(w, input_phase[static_cast<std::size_t>(w - 1)]);
    for (std::size_t pos = 0; pos <= skeleton.size(); ++pos) {
      for (int w : phases_at[pos]) out.phase(w, 1);
      if (pos == skeleton.size()) break;
      const Gate& g = skeleton[pos];
      if (g.kind == GateKind::CZ && !keep_cz[pos]) continue;
      out.push(g);
    }
    return out;
  };
  std::vector<int> none(static_cast<std::size_t>(n), 0);
  auto got = hfree_canonical(build(none));
  std::vector<int> fix(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < fix.size(); ++i) fix[i] = (target.p[i] - got.p[i] + 4) & 3;
  Circuit out = build(fix);
  for (std::size_t w : target.t.support()) out.x(static_cast<int>(w) + 1);
  if (!(hfree_canonical(out) == target)) {
    throw std::logic_error("schedule_phases_a2a: scheduled circuit differs from target");
  }
  return out;
}

// PMH, then CZ insertion if the functions do not span, then phase scheduling.
inline Circuit synth_hfree_a2a(const HadamardFreeTarget& target) {
  Circuit skeleton = pmh_synth(target.m);
  if (span_dim(skeleton) < num_pairs(target.n)) skeleton = insert_cz(skeleton);
  return schedule_phases_a2a(target, skeleton);
}

}  // namespace cliffsynth
