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

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cliffsynth/gf2.hpp"
#include "cliffsynth/hfree.hpp"
#include "cliffsynth/tableau.hpp"

namespace cliffsynth {

using json = nlohmann::json;

inline json target_to_json(const HadamardFreeTarget& u) {
  json j;
  j["n"] = u.n;
  j["p"] = u.p;
  json gamma = json::array();
  for (int i = 0; i < u.n; ++i) {
    for (int k = i + 1; k < u.n; ++k) {
      if (u.gamma.get(static_cast<std::size_t>(i), static_cast<std::size_t>(k))) gamma.push_back({i + 1, k + 1});
    }
  }
  j["gamma"] = gamma;
  j["m"] = u.m.to_strings();
  if (u.t.any()) j["t"] = u.t.to_string();
  return j;
}

inline HadamardFreeTarget target_from_json(const json& j) {
  int n = j.at("n").get<int>();
  if (n < 1) throw std::invalid_argument("target: n must be positive");
  HadamardFreeTarget u(n);
  u.p = j.at("p").get<std::vector<int>>();
  for (const auto& pr : j.at("gamma")) {
    int a = pr.at(0).get<int>();
    int b = pr.at(1).get<int>();
    if (pr.size() != 2 || a < 1 || b > n || a >= b) {
      throw std::invalid_argument("target: gamma entries must be [i,j] with 1 <= i < j <= n");
    }
    u.gamma.set(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
  }
  u.m = BitMatrix::from_rows(j.at("m").get<std::vector<std::string>>());
  if (j.contains("t")) u.t = BitVector::from_string(j.at("t").get<std::string>());
  u.validate();
  return u;
}

inline json tableau_to_json(const CliffordTableau& t) {
  json j;
  j["n"] = t.n();
  j["symplectic"] = t.symplectic_rows();
  std::vector<int> signs;
  for (std::size_t r = 0; r < t.num_rows(); ++r) signs.push_back(t.sign(r) ? 1 : 0);
  j["signs"] = signs;
  return j;
}

inline CliffordTableau tableau_from_json(const json& j) {
  auto t = CliffordTableau::from_rows(j.at("symplectic").get<std::vector<std::string>>(),
                                      j.at("signs").get<std::vector<int>>());
  if (j.contains("n") && j.at("n").get<int>() != t.n()) {
    throw std::invalid_argument("tableau: n does not match row count");
  }
  if (!t.is_symplectic()) throw std::invalid_argument("tableau: rows are not symplectic");
  return t;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << data;
}

}  // namespace cliffsynth
