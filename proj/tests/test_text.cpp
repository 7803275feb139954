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

#include <catch2/catch_amalgamated.hpp>
#include <filesystem>
#include <fstream>
#include <random>

#include "random_circuits.hpp"
#include "tdo/constructions.hpp"
#include "tdo/text.hpp"

namespace tdo {
namespace {

using K = GateKind;

struct Pos {
  std::size_t line, column;
};

Pos error_position(const std::string& text) {
  try {
    parse_circuit(text);
  } catch (const SourceError& e) {
    return {e.line(), e.column()};
  }
  FAIL("expected SourceError for: " << text);
  return {0, 0};
}

TEST_CASE("parse examples", "[text]") {
  Circuit c = parse_circuit("qubits 2\ncx 0 1\n");
  Circuit expect(2);
  expect.add(K::CX, {0, 1});
  CHECK(c == expect);
  CHECK(c.n_anc() == 0);

  Circuit net = parse_circuit(emit_circuit(ccz_tdepth1()));
  CHECK(net.n_main() == 3);
  CHECK(net.n_anc() == 4);
  CHECK(t_count(net) == 7);
  std::size_t cx = 0;
  for (const Gate& g : net.gates()) cx += g.kind == K::CX ? 1 : 0;
  CHECK(cx == 16);

  CHECK(parse_circuit("qubits 1") == Circuit(1));
  CHECK(parse_circuit("qubits 1\r\nt 0\r\n").size() == 1);
}

TEST_CASE("comments, blanks and whitespace", "[text]") {
  const char* text =
      "# leading comment\n"
      "\n"
      "qubits 3   # main\n"
      "ancillas 1\n"
      "\t ccx  0\t1 2\n"
      "\n"
      "# between\n"
      "cs 3 0#tight comment\n";
  Circuit c = parse_circuit(text);
  Circuit expect(3, 1);
  expect.add(K::CCX, {0, 1, 2}).add(K::CS, {3, 0});
  CHECK(c == expect);
  CHECK(emit_circuit(c) == "qubits 3\nancillas 1\nccx 0 1 2\ncs 3 0\n");
}

TEST_CASE("every mnemonic parses", "[text]") {
  for (GateKind k : kAllGateKinds) {
    std::string line = std::string(mnemonic(k));
    for (std::size_t q = 0; q < arity(k); ++q) line += " " + std::to_string(q);
    Circuit c = parse_circuit("qubits 3\n" + line + "\n");
    REQUIRE(c.size() == 1);
    CHECK(c.gates()[0].kind == k);
  }
}

TEST_CASE("emit examples", "[text]") {
  Circuit t(1);
  t.add(K::T, {0});
  CHECK(emit_circuit(t) == "qubits 1\nt 0\n");
  CHECK(emit_circuit(Circuit(2, 3)) == "qubits 2\nancillas 3\n");
}

TEST_CASE("round trip on fixtures and builders", "[text]") {
  for (const auto& entry : std::filesystem::directory_iterator(TDO_FIXTURE_DIR)) {
    if (entry.path().extension() != ".tdo") continue;
    std::ifstream in(entry.path());
    std::string text((std::istreambuf_iterator<char>(in)), {});
    Circuit c = parse_circuit(text);
    INFO(entry.path().filename().string());
    CHECK(parse_circuit(emit_circuit(c)) == c);
    CHECK(emit_circuit(parse_circuit(emit_circuit(c))) == emit_circuit(c));
  }
  for (const std::string& name : construction_names()) {
    ConstructionId id{name, std::nullopt, true};
    if (name == "multi-controlled-x") id.controls = 5;
    Circuit c = build(id);
    INFO(name);
    CHECK(parse_circuit(emit_circuit(c)) == c);
  }
  std::mt19937 rng(9);
  for (int i = 0; i < 100; ++i) {
    Circuit c = testing::random_circuit(rng, 1 + i % 6, 30, testing::all_kinds());
    c.set_ancillas(i % 3);
    REQUIRE(parse_circuit(emit_circuit(c)) == c);
  }
}

TEST_CASE("malformed input reports positions", "[text]") {
  struct Case {
    const char* text;
    std::size_t line, column;
  };
  const Case cases[] = {
      {"qubits 1\nt 1\n", 2, 3},                // out of range
      {"qubits 2\nfoo 0\n", 2, 1},              // unknown mnemonic
      {"qubits 2\ncx 0\n", 2, 5},               // too few operands
      {"qubits 2\nt 0 1\n", 2, 5},              // too many operands
      {"qubits 2\ncx 1 1\n", 2, 6},             // repeated qubit
      {"qubits 2\nqubits 2\n", 2, 1},           // duplicate header
      {"cx 0 1\n", 1, 1},                       // missing header
      {"", 1, 1},                               // empty file
      {"# only a comment\n", 2, 1},             // no header: end of input
      {"qubits x\n", 1, 8},                     // malformed integer
      {"qubits -1\n", 1, 8},                    // negative
      {"qubits 2\nt 0x1\n", 2, 3},              // trailing garbage
      {"qubits 99999999999999999999999\n", 1, 8},  // overflow
      {"qubits\n", 1, 1},                       // header without value
      {"qubits 1\nt 0\nancillas 1\n", 3, 1},    // ancillas after gates
      {"ancillas 1\nqubits 1\n", 1, 1},         // ancillas first
      {"qubits 1\nancillas 1\nancillas 1\n", 3, 1},
      {"qubits 1\n  T 0\n", 2, 3},              // mnemonics are lowercase
  };
  for (const Case& c : cases) {
    INFO(c.text);
    Pos p = error_position(c.text);
    CHECK(p.line == c.line);
    CHECK(p.column == c.column);
  }
}

TEST_CASE("fuzzed input never escapes as anything but SourceError", "[text][property]") {
  std::mt19937 rng(123);
  const std::string alphabet = "qubitsancl xyzhdgc0123456789 #\n\t-";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string base = emit_circuit(toffoli_nc4());
  std::uniform_int_distribution<std::size_t> where(0, base.size() - 1);
  for (int trial = 0; trial < 2000; ++trial) {
    std::string text;
    if (trial % 2 == 0) {
      text = base;
      for (int m = 0; m < 3; ++m) text[where(rng)] = alphabet[pick(rng)];
    } else {
      text = "qubits 3\n";
      for (int j = 0; j < 40; ++j) text += alphabet[pick(rng)];
    }
    try {
      Circuit c = parse_circuit(text);
      REQUIRE(parse_circuit(emit_circuit(c)) == c);
    } catch (const SourceError& e) {
      REQUIRE(e.line() >= 1);
      REQUIRE(e.column() >= 1);
    }
  }
}

}  // namespace
}  // namespace tdo
