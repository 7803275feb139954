// Copyright 2026 The tdo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tdo/circuit.hpp"
#include "tdo/errors.hpp"

namespace tdo {

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize_line(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char ch = line[i];
    if (ch == '#') break;
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r' && line[i] != '#') {
      ++i;
    }
    out.push_back(Token{line.substr(start, i - start), start + 1});
  }
  return out;
}

inline std::size_t parse_index(const Token& tok, std::size_t line_no) {
  if (tok.text.empty()) throw SourceError(line_no, tok.column, "expected integer");
  std::size_t v = 0;
  for (char ch : tok.text) {
    if (ch < '0' || ch > '9') {
      throw SourceError(line_no, tok.column,
                        "malformed integer '" + std::string(tok.text) + "'");
    }
    std::size_t digit = static_cast<std::size_t>(ch - '0');
    if (v > (std::numeric_limits<std::size_t>::max() - digit) / 10) {
      throw SourceError(line_no, tok.column,
                        "integer '" + std::string(tok.text) + "' too large");
    }
    v = v * 10 + digit;
  }
  return v;
}

}  // namespace detail

/// Parses the line-oriented circuit format:
///
///   qubits N
///   [ancillas M]
///   <mnemonic> <q>...   # comments run to end of line
///
/// Throws SourceError with the 1-based position of the first problem.
inline Circuit parse_circuit(std::string_view text) {
  std::optional<std::size_t> n_main;
  std::optional<std::size_t> n_anc;
  bool saw_gate = false;
  Circuit c;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;

    auto toks = detail::tokenize_line(line);
    if (toks.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const detail::Token& head = toks[0];

    if (head.text == "qubits") {
      if (n_main) throw SourceError(line_no, head.column, "duplicate 'qubits' header");
      if (toks.size() != 2) {
        throw SourceError(line_no, head.column, "expected 'qubits N'");
      }
      n_main = detail::parse_index(toks[1], line_no);
      c = Circuit(*n_main, 0);
    } else if (head.text == "ancillas") {
      if (!n_main) {
        throw SourceError(line_no, head.column, "'ancillas' before 'qubits' header");
      }
      if (n_anc) throw SourceError(line_no, head.column, "duplicate 'ancillas' header");
      if (saw_gate) {
        throw SourceError(line_no, head.column, "'ancillas' must precede gates");
      }
      if (toks.size() != 2) {
        throw SourceError(line_no, head.column, "expected 'ancillas M'");
      }
      n_anc = detail::parse_index(toks[1], line_no);
      c = Circuit(*n_main, *n_anc);
    } else {
      if (!n_main) throw SourceError(line_no, head.column, "missing 'qubits' header");
      auto kind = kind_from_mnemonic(head.text);
      if (!kind) {
        throw SourceError(line_no, head.column,
                          "unknown gate '" + std::string(head.text) + "'");
      }
      std::size_t want = arity(*kind);
      if (toks.size() - 1 != want) {
        std::size_t col = toks.size() - 1 > want ? toks[want + 1].column
                                                 : line.size() + 1;
        throw SourceError(line_no, col,
                          std::string(head.text) + " expects " +
                              std::to_string(want) + " qubit(s), got " +
                              std::to_string(toks.size() - 1));
      }
      std::vector<std::size_t> qs;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        std::size_t q = detail::parse_index(toks[i], line_no);
        if (q >= c.width()) {
          throw SourceError(line_no, toks[i].column,
                            "qubit " + std::to_string(q) +
                                " out of range (width " +
                                std::to_string(c.width()) + ")");
        }
        for (std::size_t prev : qs) {
          if (prev == q) {
            throw SourceError(line_no, toks[i].column,
                              "repeated qubit " + std::to_string(q));
          }
        }
        qs.push_back(q);
      }
      c.add(*kind, std::move(qs));
      saw_gate = true;
    }
    if (end == text.size()) break;
  }
  if (!n_main) throw SourceError(line_no == 0 ? 1 : line_no, 1, "missing 'qubits' header");
  return c;
}

inline Circuit parse_circuit(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_circuit(ss.str());
}

/// Canonical text; parse_circuit(emit_circuit(c)) == c.
inline std::string emit_circuit(const Circuit& c) {
  std::string out = "qubits " + std::to_string(c.n_main()) + "\n";
  if (c.n_anc() > 0) out += "ancillas " + std::to_string(c.n_anc()) + "\n";
  for (const Gate& g : c.gates()) {
    out += mnemonic(g.kind);
    for (std::size_t q : g.qubits) {
      out += ' ';
      out += std::to_string(q);
    }
    out += '\n';
  }
  return out;
}

}  // namespace tdo
