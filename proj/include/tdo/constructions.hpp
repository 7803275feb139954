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
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tdo/circuit.hpp"
#include "tdo/errors.hpp"
#include "tdo/sim.hpp"

// Gate constructions for Toffoli-family and controlled gates with low
// T-depth. Three-qubit builders use qubits (0, 1) as controls and 2 as the
// target.

namespace tdo {

namespace detail {

inline Circuit from_list(std::size_t n_main, std::size_t n_anc,
                         std::initializer_list<Gate> gates) {
  Circuit c(n_main, n_anc);
  for (const Gate& g : gates) c.add(g);
  return c;
}

inline Gate g(GateKind k, std::initializer_list<std::size_t> qs) { return Gate{k, qs}; }

}  // namespace detail

/// Textbook Toffoli decomposition, T-count 7, in its usual gate order.
inline Circuit toffoli_nc() {
  using K = GateKind;
  using detail::g;
  return detail::from_list(3, 0, {
      g(K::H, {2}),       g(K::CX, {1, 2}), g(K::TDG, {2}), g(K::CX, {0, 2}),
      g(K::T, {2}),       g(K::CX, {1, 2}), g(K::TDG, {2}), g(K::CX, {0, 2}),
      g(K::T, {2}),       g(K::TDG, {1}),   g(K::H, {2}),   g(K::CX, {0, 1}),
      g(K::TDG, {1}),     g(K::CX, {0, 1}), g(K::S, {1}),   g(K::T, {0}),
  });
}

/// toffoli_nc with T gates commuted through CNOT controls: four T-stages.
inline Circuit toffoli_nc4() {
  using K = GateKind;
  using detail::g;
  return detail::from_list(3, 0, {
      g(K::H, {2}),     g(K::CX, {1, 2}), g(K::TDG, {2}), g(K::CX, {0, 2}),
      g(K::T, {2}),     g(K::CX, {1, 2}), g(K::TDG, {2}), g(K::TDG, {1}),
      g(K::CX, {0, 2}), g(K::CX, {0, 1}), g(K::T, {2}),   g(K::TDG, {1}),
      g(K::T, {0}),     g(K::CX, {0, 1}), g(K::H, {2}),   g(K::S, {1}),
  });
}

/// Ancilla-free Toffoli with three T-stages.
inline Circuit toffoli_ammr() {
  using K = GateKind;
  using detail::g;
  return detail::from_list(3, 0, {
      g(K::H, {2}),     g(K::T, {2}),     g(K::T, {1}),     g(K::TDG, {0}),
      g(K::CX, {0, 1}), g(K::CX, {2, 0}), g(K::TDG, {0}),   g(K::CX, {1, 2}),
      g(K::CX, {1, 0}), g(K::T, {2}),     g(K::TDG, {1}),   g(K::TDG, {0}),
      g(K::CX, {2, 0}), g(K::CX, {1, 2}), g(K::S, {0}),     g(K::H, {2}),
      g(K::CX, {0, 1}),
  });
}

namespace detail {

// CNOT network for the T-depth-1 CCZ, in three parallel layers. Ancillas
// 3..6 end up holding x^y^z, x^y, y^z, x^z.
inline std::vector<Gate> ccz_parity_network() {
  using K = GateKind;
  return {
      g(K::CX, {1, 5}), g(K::CX, {0, 3}),
      g(K::CX, {2, 5}), g(K::CX, {3, 6}), g(K::CX, {1, 4}),
      g(K::CX, {0, 4}), g(K::CX, {2, 6}), g(K::CX, {5, 3}),
  };
}

inline Circuit ccz_tdepth1_body(bool hadamard_target) {
  using K = GateKind;
  Circuit c(3, 4);
  if (hadamard_target) c.add(K::H, {2});
  auto net = ccz_parity_network();
  for (const Gate& gate : net) c.add(gate);
  // w^x w^y w^z w^(x^y^z) w^-(x^y) w^-(y^z) w^-(x^z) = (-1)^(xyz)
  for (std::size_t q : {0, 1, 2, 3}) c.add(K::T, {q});
  for (std::size_t q : {4, 5, 6}) c.add(K::TDG, {q});
  for (auto it = net.rbegin(); it != net.rend(); ++it) c.add(*it);
  if (hadamard_target) c.add(K::H, {2});
  return c;
}

}  // namespace detail

/// Doubly-controlled Z with T-depth 1 using four ancillas; depth 7.
inline Circuit ccz_tdepth1() { return detail::ccz_tdepth1_body(false); }

/// Toffoli = H(target) . CCZ . H(target), T-depth 1 and depth 7.
inline Circuit toffoli_tdepth1() { return detail::ccz_tdepth1_body(true); }

/// Doubly-controlled (-iZ), i.e. CCZ . CS^dagger(0, 1). With the ancilla:
/// T-count 4, T-depth 1, depth 5, 12 gates. Without: T-depth 2, depth 7.
inline Circuit cc_minus_iz(bool use_ancilla = true) {
  using K = GateKind;
  using detail::g;
  if (use_ancilla) {
    return detail::from_list(3, 1, {
        g(K::CX, {2, 1}), g(K::CX, {0, 3}), g(K::CX, {2, 0}), g(K::CX, {1, 3}),
        g(K::TDG, {0}),   g(K::TDG, {1}),   g(K::T, {2}),     g(K::T, {3}),
        g(K::CX, {1, 3}), g(K::CX, {2, 0}), g(K::CX, {0, 3}), g(K::CX, {2, 1}),
    });
  }
  return detail::from_list(3, 0, {
      g(K::CX, {2, 1}), g(K::CX, {1, 0}), g(K::T, {0}),     g(K::TDG, {1}),
      g(K::T, {2}),     g(K::CX, {2, 1}), g(K::CX, {1, 0}), g(K::TDG, {0}),
      g(K::CX, {2, 0}),
  });
}

/// Doubly-controlled (-iX) = H(2) . cc_minus_iz . H(2) = CCX . CS^dagger(0, 1).
inline Circuit cc_minus_ix(bool use_ancilla = true) {
  Circuit core = cc_minus_iz(use_ancilla);
  Circuit c(3, core.n_anc());
  c.add(GateKind::H, {2});
  c.append(core);
  c.add(GateKind::H, {2});
  return c;
}

struct AddControlOptions {
  bool use_ancilla = true;
  /// Leave the scratch ancilla of the first CC(-iX) holding its control
  /// value while the controlled circuit runs, saving two CNOTs. Requires
  /// use_ancilla.
  bool carry_scratch = false;
};

namespace detail {

/// Throws NotAControlledCircuit unless `g` acts as the identity whenever
/// qubit 0 is |0>.
inline void require_controlled_on_qubit0(const Circuit& c) {
  ExactMatrix u = induced_unitary(c);
  std::size_t half = u.dim() / 2;
  for (std::size_t j = 0; j < u.dim(); ++j) {
    for (std::size_t i = 0; i < u.dim(); ++i) {
      bool top_left = i < half && j < half;
      bool off_block = (i < half) != (j < half);
      if (top_left && !(u(i, j) == (i == j ? RingScalar::one() : RingScalar::zero()))) {
        throw NotAControlledCircuit();
      }
      if (off_block && !u(i, j).is_zero()) throw NotAControlledCircuit();
    }
  }
}

inline void erase_last(Circuit& c, const Gate& target) {
  std::vector<Gate> gs = c.gates();
  auto it = std::find(gs.rbegin(), gs.rend(), target);
  if (it == gs.rend()) throw Error("gate to elide not found");
  gs.erase(std::next(it).base());
  Circuit r(c.n_main(), c.n_anc());
  for (const Gate& gate : gs) r.add(gate);
  c = std::move(r);
}

inline void erase_first(Circuit& c, const Gate& target) {
  std::vector<Gate> gs = c.gates();
  auto it = std::find(gs.begin(), gs.end(), target);
  if (it == gs.end()) throw Error("gate to elide not found");
  gs.erase(it);
  Circuit r(c.n_main(), c.n_anc());
  for (const Gate& gate : gs) r.add(gate);
  c = std::move(r);
}

}  // namespace detail

/// Adds one control to a controlled circuit. `g` must be controlled on its
/// qubit 0. The result has a new leading control, so its main register is
/// (new control, g's qubits...). g's control wire is moved onto a fresh
/// ancilla that receives the AND of both controls via CC(-iX), with CC(iX)
/// undoing it afterwards.
///
/// Ancilla layout: g's ancillas, then the AND ancilla, then (with
/// use_ancilla) the scratch ancilla of the CC(-iX) blocks.
inline Circuit add_control(const Circuit& g, AddControlOptions opts = {}) {
  if (g.n_main() < 1) throw BadParams("add_control needs at least one main qubit");
  if (opts.carry_scratch && !opts.use_ancilla) {
    throw BadParams("carry_scratch requires the ancilla form");
  }
  detail::require_controlled_on_qubit0(g);

  const std::size_t m = g.n_main();
  const std::size_t and_wire = m + 1 + g.n_anc();
  const std::size_t scratch = and_wire + 1;
  Circuit out(m + 1, g.n_anc() + (opts.use_ancilla ? 2 : 1));

  Circuit block = cc_minus_ix(opts.use_ancilla);
  std::vector<std::size_t> block_map = {0, 1, and_wire};
  if (opts.use_ancilla) block_map.push_back(scratch);

  Circuit compute(out.n_main(), out.n_anc());
  compute.append_mapped(block, block_map);
  Circuit uncompute = dagger(compute);
  if (opts.carry_scratch) {
    Gate copy{GateKind::CX, {0, scratch}};
    detail::erase_last(compute, copy);
    detail::erase_first(uncompute, copy);
  }

  std::vector<std::size_t> g_map(g.width());
  g_map[0] = and_wire;
  for (std::size_t q = 1; q < m; ++q) g_map[q] = q + 1;
  for (std::size_t a = 0; a < g.n_anc(); ++a) g_map[m + a] = m + 1 + a;

  out.append(compute);
  out.append_mapped(g, g_map);
  out.append(uncompute);
  return out;
}

/// X controlled on `controls` qubits; the target is the last main qubit.
/// k = 1 is a CNOT and k = 2 the T-depth-1 Toffoli. For k >= 3, controls
/// 0..k-2 are ANDed pairwise into ancillas by a balanced tree of CC(-iX)
/// blocks (one T-stage per tree level), the root drives a T-depth-1 Toffoli
/// together with control k-1, and the tree is then uncomputed. T-count is
/// 7 + 8(k-2).
inline Circuit multi_controlled_x(std::size_t controls) {
  using K = GateKind;
  if (controls < 1) throw BadParams("multi-controlled-x needs at least one control");
  if (controls == 1) {
    Circuit c(2);
    c.add(K::CX, {0, 1});
    return c;
  }
  if (controls == 2) return toffoli_tdepth1();

  const std::size_t n_main = controls + 1;
  const std::size_t target = controls;
  const std::size_t merges = controls - 2;

  // Pair up wires level by level.
  struct Merge {
    std::size_t a, b, out, scratch_slot;
  };
  std::vector<Merge> plan;
  std::vector<std::size_t> frontier;
  for (std::size_t q = 0; q + 1 < controls; ++q) frontier.push_back(q);
  std::size_t next_and = n_main;
  std::size_t widest_level = 0;
  while (frontier.size() > 1) {
    std::vector<std::size_t> next;
    std::size_t slot = 0;
    for (std::size_t i = 0; i + 1 < frontier.size(); i += 2) {
      plan.push_back({frontier[i], frontier[i + 1], next_and, slot++});
      next.push_back(next_and++);
    }
    if (frontier.size() % 2 == 1) next.push_back(frontier.back());
    widest_level = std::max(widest_level, slot);
    frontier = std::move(next);
  }
  const std::size_t root = frontier[0];

  // Scratch pool, shared by the CC(-iX) blocks of one level and by the
  // Toffoli's four parity ancillas.
  const std::size_t pool = std::max<std::size_t>(widest_level, 4);
  const std::size_t pool_base = n_main + merges;
  Circuit out(n_main, merges + pool);

  Circuit block = cc_minus_ix(true);
  Circuit tree(out.n_main(), out.n_anc());
  for (const Merge& mg : plan) {
    tree.append_mapped(block, {mg.a, mg.b, mg.out, pool_base + mg.scratch_slot});
  }

  out.append(tree);
  out.append_mapped(toffoli_tdepth1(), {root, controls - 1, target, pool_base,
                                        pool_base + 1, pool_base + 2, pool_base + 3});
  out.append(dagger(tree));
  return out;
}

/// Controlled-T built by adding a control to T viewed as a controlled phase.
/// Ancilla form: T-count 9, T-depth 3, depth 15, 29 gates, 2 ancillas.
inline Circuit controlled_t(bool use_ancilla = true) {
  Circuit t(1);
  t.add(GateKind::T, {0});
  return add_control(t, AddControlOptions{use_ancilla, false});
}

/// Names accepted by build().
inline const std::vector<std::string>& construction_names() {
  static const std::vector<std::string> names = {
      "toffoli-nc",  "toffoli-nc4", "toffoli-ammr",       "ccz-tdepth1",
      "toffoli-tdepth1", "cc-minus-iz", "cc-minus-iz-noanc", "cc-minus-ix",
      "add-control", "multi-controlled-x", "controlled-t"};
  return names;
}

struct ConstructionId {
  std::string name;
  /// Only for multi-controlled-x.
  std::optional<std::size_t> controls = std::nullopt;
  /// Only meaningful for cc-minus-iz, cc-minus-ix, add-control, controlled-t.
  bool use_ancilla = true;
};

/// Builds a named construction. `add-control` adds a control to a CNOT,
/// yielding a Toffoli.
inline Circuit build(const ConstructionId& id) {
  const std::string& n = id.name;
  if (std::find(construction_names().begin(), construction_names().end(), n) ==
      construction_names().end()) {
    throw UnknownConstruction(n);
  }
  const bool parameterized = n == "multi-controlled-x";
  const bool has_variant = n == "cc-minus-iz" || n == "cc-minus-ix" ||
                           n == "add-control" || n == "controlled-t";
  if (parameterized && !id.controls) throw BadParams(n + " requires a control count");
  if (!parameterized && id.controls) throw BadParams(n + " takes no control count");
  if (!has_variant && !id.use_ancilla) throw BadParams(n + " has no ancilla-free variant");

  if (n == "toffoli-nc") return toffoli_nc();
  if (n == "toffoli-nc4") return toffoli_nc4();
  if (n == "toffoli-ammr") return toffoli_ammr();
  if (n == "ccz-tdepth1") return ccz_tdepth1();
  if (n == "toffoli-tdepth1") return toffoli_tdepth1();
  if (n == "cc-minus-iz") return cc_minus_iz(id.use_ancilla);
  if (n == "cc-minus-iz-noanc") return cc_minus_iz(false);
  if (n == "cc-minus-ix") return cc_minus_ix(id.use_ancilla);
  if (n == "add-control") {
    Circuit cx(2);
    cx.add(GateKind::CX, {0, 1});
    return add_control(cx, AddControlOptions{id.use_ancilla, false});
  }
  if (n == "multi-controlled-x") {
    if (*id.controls < 1) throw BadParams("control count must be >= 1");
    return multi_controlled_x(*id.controls);
  }
  return controlled_t(id.use_ancilla);
}

}  // namespace tdo
