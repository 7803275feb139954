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

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tdo/errors.hpp"

namespace tdo {

enum class GateKind {
  X, Y, Z, H, S, SDG, T, TDG, CX, CZ, CS, CSDG, SWAP, CCX, CCZ
};

inline constexpr std::array<GateKind, 15> kAllGateKinds = {
    GateKind::X,  GateKind::Y,   GateKind::Z,    GateKind::H,   GateKind::S,
    GateKind::SDG, GateKind::T,  GateKind::TDG,  GateKind::CX,  GateKind::CZ,
    GateKind::CS, GateKind::CSDG, GateKind::SWAP, GateKind::CCX, GateKind::CCZ};

constexpr std::size_t arity(GateKind k) {
  switch (k) {
    case GateKind::CX:
    case GateKind::CZ:
    case GateKind::CS:
    case GateKind::CSDG:
    case GateKind::SWAP:
      return 2;
    case GateKind::CCX:
    case GateKind::CCZ:
      return 3;
    default:
      return 1;
  }
}

constexpr std::string_view mnemonic(GateKind k) {
  switch (k) {
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::SDG: return "sdg";
    case GateKind::T: return "t";
    case GateKind::TDG: return "tdg";
    case GateKind::CX: return "cx";
    case GateKind::CZ: return "cz";
    case GateKind::CS: return "cs";
    case GateKind::CSDG: return "csdg";
    case GateKind::SWAP: return "swap";
    case GateKind::CCX: return "ccx";
    case GateKind::CCZ: return "ccz";
  }
  return "?";
}

inline std::optional<GateKind> kind_from_mnemonic(std::string_view s) {
  for (GateKind k : kAllGateKinds) {
    if (mnemonic(k) == s) return k;
  }
  return std::nullopt;
}

constexpr bool is_t_like(GateKind k) {
  return k == GateKind::T || k == GateKind::TDG;
}

constexpr GateKind inverse(GateKind k) {
  switch (k) {
    case GateKind::S: return GateKind::SDG;
    case GateKind::SDG: return GateKind::S;
    case GateKind::T: return GateKind::TDG;
    case GateKind::TDG: return GateKind::T;
    case GateKind::CS: return GateKind::CSDG;
    case GateKind::CSDG: return GateKind::CS;
    default: return k;
  }
}

/// A gate application. For controlled kinds the controls come first and the
/// target last.
struct Gate {
  GateKind kind;
  std::vector<std::size_t> qubits;

  friend bool operator==(const Gate&, const Gate&) = default;
};

inline Gate make_gate(GateKind kind, std::vector<std::size_t> qubits) {
  return Gate{kind, std::move(qubits)};
}

/// Gates over n_main main wires followed by n_anc ancillas. Ancillas start in
/// |0> and must be returned to |0>.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t n_main, std::size_t n_anc = 0)
      : n_main_(n_main), n_anc_(n_anc) {}

  std::size_t n_main() const { return n_main_; }
  std::size_t n_anc() const { return n_anc_; }
  std::size_t width() const { return n_main_ + n_anc_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  void set_ancillas(std::size_t n_anc) {
    for (const Gate& g : gates_) {
      for (std::size_t q : g.qubits) {
        if (q >= n_main_ + n_anc) {
          throw InvalidCircuit("shrinking ancillas would orphan qubit " +
                               std::to_string(q));
        }
      }
    }
    n_anc_ = n_anc;
  }

  /// Appends a gate after checking arity, range and distinctness.
  Circuit& add(GateKind kind, std::vector<std::size_t> qubits) {
    if (qubits.size() != arity(kind)) {
      throw InvalidCircuit(std::string(mnemonic(kind)) + " expects " +
                           std::to_string(arity(kind)) + " qubits");
    }
    for (std::size_t i = 0; i < qubits.size(); ++i) {
      if (qubits[i] >= width()) {
        throw InvalidCircuit("qubit " + std::to_string(qubits[i]) +
                             " out of range for width " +
                             std::to_string(width()));
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (qubits[i] == qubits[j]) {
          throw InvalidCircuit("repeated qubit " + std::to_string(qubits[i]));
        }
      }
    }
    gates_.push_back(Gate{kind, std::move(qubits)});
    return *this;
  }

  Circuit& add(const Gate& g) { return add(g.kind, g.qubits); }

  /// Appends every gate of `other` (which must not be wider).
  Circuit& append(const Circuit& other) {
    for (const Gate& g : other.gates_) add(g);
    return *this;
  }

  /// Appends `other` with its qubit q relabelled to wire_map[q].
  Circuit& append_mapped(const Circuit& other,
                         const std::vector<std::size_t>& wire_map) {
    for (const Gate& g : other.gates_) {
      std::vector<std::size_t> qs;
      qs.reserve(g.qubits.size());
      for (std::size_t q : g.qubits) qs.push_back(wire_map.at(q));
      add(g.kind, std::move(qs));
    }
    return *this;
  }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t n_main_ = 0;
  std::size_t n_anc_ = 0;
  std::vector<Gate> gates_;
};

/// Inverse circuit: reversed gate order with each kind inverted.
inline Circuit dagger(const Circuit& c) {
  Circuit r(c.n_main(), c.n_anc());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
    r.add(inverse(it->kind), it->qubits);
  }
  return r;
}

inline std::size_t t_count(const Circuit& c) {
  return static_cast<std::size_t>(std::count_if(
      c.gates().begin(), c.gates().end(),
      [](const Gate& g) { return is_t_like(g.kind); }));
}

/// T-stages obtained by greedily packing the gate list as written. A T gate
/// joins the open stage only if none of its qubits has seen any gate since
/// the stage opened.
inline std::size_t t_depth_as_written(const Circuit& c) {
  std::size_t stages = 0;
  // touched[q]: qubit q has been used since the current stage opened
  std::vector<bool> touched(c.width(), false);
  bool open = false;
  for (const Gate& g : c.gates()) {
    if (is_t_like(g.kind)) {
      std::size_t q = g.qubits[0];
      if (!open || touched[q]) {
        ++stages;
        open = true;
        std::fill(touched.begin(), touched.end(), false);
      }
    } else if (!open) {
      continue;
    }
    for (std::size_t q : g.qubits) touched[q] = true;
  }
  return stages;
}

/// Minimum number of T-stages over all schedules of the dependency order in
/// which gates sharing a qubit keep their relative order: the largest number
/// of T/TDG gates on any dependency chain.
inline std::size_t t_depth_scheduled(const Circuit& c) {
  std::vector<std::size_t> level(c.width(), 0);
  std::size_t best = 0;
  for (const Gate& g : c.gates()) {
    std::size_t l = 0;
    for (std::size_t q : g.qubits) l = std::max(l, level[q]);
    if (is_t_like(g.kind)) ++l;
    for (std::size_t q : g.qubits) level[q] = l;
    best = std::max(best, l);
  }
  return best;
}

/// Number of layers in the ASAP schedule of all gates.
inline std::size_t depth(const Circuit& c) {
  std::vector<std::size_t> layer(c.width(), 0);
  std::size_t best = 0;
  for (const Gate& g : c.gates()) {
    std::size_t l = 0;
    for (std::size_t q : g.qubits) l = std::max(l, layer[q]);
    ++l;
    for (std::size_t q : g.qubits) layer[q] = l;
    best = std::max(best, l);
  }
  return best;
}

struct Metrics {
  std::size_t t_count = 0;
  std::size_t t_depth_as_written = 0;
  std::size_t t_depth_scheduled = 0;
  std::size_t depth = 0;
  std::size_t gate_count = 0;
  std::size_t n_main = 0;
  std::size_t n_anc = 0;

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

inline Metrics metrics(const Circuit& c) {
  return Metrics{t_count(c),  t_depth_as_written(c), t_depth_scheduled(c),
                 depth(c),    c.size(),              c.n_main(),
                 c.n_anc()};
}

}  // namespace tdo
