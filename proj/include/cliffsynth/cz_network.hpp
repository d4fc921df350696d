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
#include "cliffsynth/cz_space.hpp"
#include "cliffsynth/gf2.hpp"
#include "cliffsynth/hfree.hpp"

namespace cliffsynth {

// Number of leading CNOT layers that carry no phases.
inline constexpr int kCzPhaseFreeLayers = 4;

// Layer shapes of the skeleton, 1-based wires:
//   DownOdd  CNOT(k -> k+1), k odd      UpEven   CNOT(k+1 -> k), k even
//   UpOdd    CNOT(k+1 -> k), k odd      DownEven CNOT(k -> k+1), k even
enum class CzLayer { DownOdd, UpEven, UpOdd, DownEven };

inline std::vector<std::pair<int, int>> cz_layer_gates(int n, CzLayer kind) {
  std::vector<std::pair<int, int>> out;
  bool odd = kind == CzLayer::DownOdd || kind == CzLayer::UpOdd;
  bool down = kind == CzLayer::DownOdd || kind == CzLayer::DownEven;
  for (int k = odd ? 1 : 2; k + 1 <= n; k += 2) {
    if (down) {
      out.emplace_back(k, k + 1);
    } else {
      out.emplace_back(k + 1, k);
    }
  }
  return out;
}

using CnotLayer = std::vector<std::pair<int, int>>;  // (control, target)

// 2n+2 CNOT layers whose linear part is the qubit reversal. Odd n repeats
// (DownOdd UpEven UpOdd DownEven); even n repeats (DownEven UpOdd UpEven
// DownOdd), so that in both cases the fifth layer acts top-down on the pairs
// used by the last step of the brick network.
inline std::vector<CnotLayer> cz_skeleton_layers(int n) {
  std::vector<CzLayer> period =
      n % 2 ? std::vector<CzLayer>{CzLayer::DownOdd, CzLayer::UpEven, CzLayer::UpOdd, CzLayer::DownEven}
            : std::vector<CzLayer>{CzLayer::DownEven, CzLayer::UpOdd, CzLayer::UpEven, CzLayer::DownOdd};
  std::vector<CnotLayer> out;
  for (int l = 0; l < 2 * n + 2; ++l) out.push_back(cz_layer_gates(n, period[static_cast<std::size_t>(l % 4)]));
  return out;
}

inline Circuit layers_circuit(int n, const std::vector<CnotLayer>& layers, std::size_t from = 0,
                              std::size_t to = static_cast<std::size_t>(-1)) {
  Circuit c(n);
  for (std::size_t l = from; l < std::min(to, layers.size()); ++l) {
    for (auto [a, b] : layers[l]) c.cnot(a, b);
  }
  return c;
}

// Wire functions after each layer; entry c holds the cut after c layers.
inline std::vector<std::vector<LinearFunction>> cut_functions(int n, const std::vector<CnotLayer>& layers) {
  const auto un = static_cast<std::size_t>(n);
  std::vector<LinearFunction> w;
  for (std::size_t i = 0; i < un; ++i) w.push_back(BitVector::unit(un, i));
  std::vector<std::vector<LinearFunction>> cuts{w};
  for (const auto& layer : layers) {
    for (auto [a, b] : layer) w[static_cast<std::size_t>(b - 1)] ^= w[static_cast<std::size_t>(a - 1)];
    cuts.push_back(w);
  }
  return cuts;
}

struct SkeletonCheck {
  bool reversal = false;
  bool spans = false;
  bool ok() const { return reversal && spans; }
};

// Both properties the construction relies on: the linear part is the reversal,
// and the functions at cuts >= 4 span the CZ space.
inline SkeletonCheck check_cz_skeleton(int n, const std::vector<CnotLayer>& layers) {
  SkeletonCheck out;
  auto cuts = cut_functions(n, layers);
  const auto un = static_cast<std::size_t>(n);
  out.reversal = true;
  for (std::size_t w = 0; w < un; ++w) {
    if (!(cuts.back()[w] == BitVector::unit(un, un - 1 - w))) out.reversal = false;
  }
  EchelonBasis span(num_pairs(n));
  for (std::size_t c = kCzPhaseFreeLayers; c < cuts.size(); ++c) {
    for (const auto& f : cuts[c]) span.add(cz_vector(n, f));
  }
  out.spans = span.dim() == num_pairs(n);
  return out;
}

struct CzNetwork {
  int n = 0;
  std::vector<CnotLayer> layers;
  // phases[c]: (wire, exponent) applied at the cut after c layers.
  std::vector<std::vector<std::pair<int, int>>> phases;

  Circuit circuit() const {
    Circuit c(n);
    for (std::size_t cut = 0; cut <= layers.size(); ++cut) {
      if (cut > 0) {
        for (auto [a, b] : layers[cut - 1]) c.cnot(a, b);
      }
      for (auto [w, k] : phases[cut]) c.phase(w, k);
    }
    return c;
  }
};

// Diagonal gamma / p (0-based, as in HadamardFreeTarget) followed by the qubit
// reversal, as a depth 2n+2 LNN circuit.
inline CzNetwork cz_reversal_layout(int n, const BitMatrix& gamma, const std::vector<int>& p) {
  CzNetwork net;
  net.n = n;
  net.layers = cz_skeleton_layers(n);
  if (!check_cz_skeleton(n, net.layers).ok()) {
    throw std::logic_error("cz_reversal_network: skeleton failed validation");
  }
  net.phases.assign(net.layers.size() + 1, {});
  auto cuts = cut_functions(n, net.layers);

  std::vector<BitVector> columns;
  std::vector<std::pair<std::size_t, int>> site;
  std::map<BitVector, bool> seen;
  for (std::size_t c = kCzPhaseFreeLayers; c < cuts.size(); ++c) {
    for (std::size_t w = 0; w < cuts[c].size(); ++w) {
      if (seen.count(cuts[c][w])) continue;
      seen[cuts[c][w]] = true;
      columns.push_back(cz_vector(n, cuts[c][w]));
      site.emplace_back(c, static_cast<int>(w) + 1);
    }
  }
  auto sol = solve_columns(columns, gamma_vector(n, gamma));
  if (!sol) throw std::logic_error("cz_reversal_network: phase system infeasible");
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (sol->get(k)) net.phases[site[k].first].emplace_back(site[k].second, 1);
  }

  HadamardFreeTarget want(n);
  want.p = p;
  want.gamma = gamma;
  want.m = BitMatrix::reversal(static_cast<std::size_t>(n));
  auto got = hfree_canonical(net.circuit());
  // After the reversal, wire w carries x_{n+1-w}.
  for (int i = 1; i <= n; ++i) {
    int fix = (p[static_cast<std::size_t>(i - 1)] - got.p[static_cast<std::size_t>(i - 1)] + 4) & 3;
    if (fix) net.phases.back().emplace_back(n + 1 - i, fix);
  }
  if (!(hfree_canonical(net.circuit()) == want)) {
    throw std::logic_error("cz_reversal_network: result differs from target");
  }
  return net;
}

inline Circuit cz_reversal_network(int n, const BitMatrix& gamma, const std::vector<int>& p) {
  return cz_reversal_layout(n, gamma, p).circuit();
}

}  // namespace cliffsynth
