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

#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cliffsynth/circuit.hpp"

namespace cliffsynth {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

inline std::string emit_text(const Circuit& c) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << c.n() << "];\n";
  auto q = [](int i) { return "q[" + std::to_string(i - 1) + "]"; };
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::CNOT: out << "cx " << q(g.a) << "," << q(g.b) << ";\n"; break;
      case GateKind::CZ: out << "cz " << q(g.a) << "," << q(g.b) << ";\n"; break;
      case GateKind::SWAP: out << "swap " << q(g.a) << "," << q(g.b) << ";\n"; break;
      case GateKind::H: out << "h " << q(g.a) << ";\n"; break;
      case GateKind::X: out << "x " << q(g.a) << ";\n"; break;
      case GateKind::Z: out << "z " << q(g.a) << ";\n"; break;
      case GateKind::PHASE:
        out << (g.k == 1 ? "s " : g.k == 2 ? "z " : "sdg ") << q(g.a) << ";\n";
        break;
    }
  }
  return out.str();
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::optional<int> parse_index(std::string_view s) {
  if (s.empty() || s.size() > 9) return std::nullopt;
  int v = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
    v = v * 10 + (ch - '0');
  }
  return v;
}

// "q[7]" -> 7
inline std::optional<int> parse_qubit(std::string_view s) {
  s = trim(s);
  if (s.size() < 4 || s.substr(0, 2) != "q[" || s.back() != ']') return std::nullopt;
  return parse_index(trim(s.substr(2, s.size() - 3)));
}

}  // namespace detail

inline Circuit parse_text(std::string_view text) {
  std::vector<std::pair<int, std::string>> statements;
  {
    int line = 1;
    int start_line = 1;
    std::string cur;
    for (std::size_t i = 0; i < text.size(); ++i) {
      char ch = text[i];
      if (ch == '/' && i + 1 < text.size() && text[i + 1] == '/') {
        while (i < text.size() && text[i] != '\n') ++i;
        if (i < text.size()) ++line;
        continue;
      }
      if (ch == ';') {
        statements.emplace_back(start_line, std::string(detail::trim(cur)));
        cur.clear();
        continue;
      }
      if (detail::trim(cur).empty() && !std::isspace(static_cast<unsigned char>(ch))) {
        start_line = line;
      }
      if (ch == '\n') ++line;
      cur.push_back(ch);
    }
    if (!detail::trim(cur).empty()) throw ParseError(start_line, "statement missing ';'");
  }

  std::optional<Circuit> c;
  bool saw_version = false;
  for (auto& [line, stmt] : statements) {
    if (stmt.empty()) throw ParseError(line, "empty statement");
    std::string_view s = stmt;
    auto space = s.find_first_of(" \t\r\n");
    std::string_view head = s.substr(0, space);
    std::string_view rest = space == std::string_view::npos ? "" : detail::trim(s.substr(space));
    if (head == "OPENQASM") {
      if (rest != "2.0") throw ParseError(line, "unsupported version");
      saw_version = true;
      continue;
    }
    if (!saw_version) throw ParseError(line, "expected OPENQASM 2.0 header");
    if (head == "include") {
      if (rest != "\"qelib1.inc\"") throw ParseError(line, "unsupported include");
      continue;
    }
    if (head == "qreg") {
      if (c) throw ParseError(line, "multiple qreg declarations");
      auto n = detail::parse_qubit(rest);
      if (!n || *n < 1) throw ParseError(line, "malformed qreg");
      c.emplace(*n);
      continue;
    }
    if (!c) throw ParseError(line, "gate before qreg");
    std::vector<int> args;
    std::string_view r = rest;
    while (true) {
      auto comma = r.find(',');
      auto q = detail::parse_qubit(r.substr(0, comma));
      if (!q) throw ParseError(line, "malformed operand");
      if (*q >= c->n()) throw ParseError(line, "qubit index out of range");
      args.push_back(*q + 1);
      if (comma == std::string_view::npos) break;
      r = r.substr(comma + 1);
    }
    auto want = [&](std::size_t k) {
      if (args.size() != k) throw ParseError(line, "wrong operand count for " + std::string(head));
    };
    try {
      if (head == "cx") {
        want(2);
        c->cnot(args[0], args[1]);
      } else if (head == "cz") {
        want(2);
        c->cz(args[0], args[1]);
      } else if (head == "swap") {
        want(2);
        c->swap(args[0], args[1]);
      } else if (head == "h") {
        want(1);
        c->h(args[0]);
      } else if (head == "x") {
        want(1);
        c->x(args[0]);
      } else if (head == "z") {
        want(1);
        c->z(args[0]);
      } else if (head == "s") {
        want(1);
        c->phase(args[0], 1);
      } else if (head == "sdg") {
        want(1);
        c->phase(args[0], 3);
      } else {
        throw ParseError(line, "unknown gate '" + std::string(head) + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(line, e.what());
    }
  }
  if (!c) throw ParseError(1, "missing qreg declaration");
  return *c;
}

}  // namespace cliffsynth
