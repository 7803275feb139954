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
#include <string>
#include <utility>
#include <vector>

#include "tdo/circuit.hpp"
#include "tdo/errors.hpp"
#include "tdo/sim.hpp"

namespace tdo {

/// Positions of non-T gates whose matrices are not monomial. Empty iff the
/// circuit can be rewritten to T-depth 1.
inline std::vector<std::size_t> validate_gateset(const Circuit& c) {
  std::vector<bool> monomial(kAllGateKinds.size());
  for (GateKind k : kAllGateKinds) {
    monomial[static_cast<std::size_t>(k)] = is_almost_classical(gate_matrix(k));
  }
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < c.size(); ++i) {
    GateKind k = c.gates()[i].kind;
    if (!is_t_like(k) && !monomial[static_cast<std::size_t>(k)]) bad.push_back(i);
  }
  return bad;
}

/// Output of the rewrite, built as L . M . L^dagger . A2 where M is a single
/// T-stage on fresh ancillas.
struct RewriteState {
  /// Every almost-classical gate in order, interleaved with the CNOTs that
  /// copy a wire onto a fresh ancilla at each T gate.
  std::vector<Gate> compute;
  /// (ancilla, T or TDG), all on distinct ancillas.
  std::vector<std::pair<std::size_t, GateKind>> t_stage;
  /// The almost-classical gates of the input, in order.
  std::vector<Gate> suffix;
};

namespace detail {

inline void check_rewritable(const Circuit& c) {
  auto bad = validate_gateset(c);
  if (!bad.empty()) {
    throw NotAlmostClassical(std::string(mnemonic(c.gates()[bad[0]].kind)), bad[0]);
  }
}

/// Folds gates [begin, end) of `c` into a RewriteState, drawing ancillas
/// from `pool` in order.
inline RewriteState fold_segment(const Circuit& c, std::size_t begin, std::size_t end,
                                 const std::vector<std::size_t>& pool) {
  RewriteState st;
  std::size_t next = 0;
  for (std::size_t i = begin; i < end; ++i) {
    const Gate& gate = c.gates()[i];
    if (is_t_like(gate.kind)) {
      // The phase a T contributes depends only on the wire's classical value
      // at this point; copy it out and apply the T there instead.
      std::size_t anc = pool.at(next++);
      st.compute.push_back(Gate{GateKind::CX, {gate.qubits[0], anc}});
      st.t_stage.emplace_back(anc, gate.kind);
    } else {
      st.compute.push_back(gate);
      st.suffix.push_back(gate);
    }
  }
  return st;
}

inline void emit_state(Circuit& out, const RewriteState& st) {
  for (const Gate& gate : st.compute) out.add(gate);
  for (const auto& [anc, kind] : st.t_stage) out.add(kind, {anc});
  for (auto it = st.compute.rbegin(); it != st.compute.rend(); ++it) {
    out.add(inverse(it->kind), it->qubits);
  }
  for (const Gate& gate : st.suffix) out.add(gate);
}

}  // namespace detail

/// Rewrites a circuit of T/TDG and almost-classical gates into T-depth 1,
/// spending one fresh ancilla per T gate. Ancillas of the input are kept as
/// ordinary wires and precede the fresh ones. Throws NotAlmostClassical.
inline Circuit rewrite_tdepth1(const Circuit& c) {
  detail::check_rewritable(c);
  const std::size_t fresh = t_count(c);
  Circuit out(c.n_main(), c.n_anc() + fresh);
  std::vector<std::size_t> pool(fresh);
  for (std::size_t i = 0; i < fresh; ++i) pool[i] = c.width() + i;
  if (fresh == 0) {
    out.append(c);
    return out;
  }
  detail::emit_state(out, detail::fold_segment(c, 0, c.size(), pool));
  return out;
}

/// Trades T-depth for ancillas: splits the gate list into at most `stages`
/// consecutive segments of at most ceil(t/stages) T gates each and rewrites
/// each to T-depth 1 over one shared pool of ceil(t/stages) ancillas.
inline Circuit rewrite_budgeted(const Circuit& c, std::size_t stages) {
  if (stages < 1) throw BadParams("stage budget must be >= 1");
  detail::check_rewritable(c);
  const std::size_t t = t_count(c);
  const std::size_t per = (t + stages - 1) / stages;
  Circuit out(c.n_main(), c.n_anc() + per);
  if (t == 0) {
    out.append(c);
    return out;
  }
  std::vector<std::size_t> pool(per);
  for (std::size_t i = 0; i < per; ++i) pool[i] = c.width() + i;

  std::size_t begin = 0;
  std::size_t in_segment = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!is_t_like(c.gates()[i].kind)) continue;
    if (in_segment == per) {
      detail::emit_state(out, detail::fold_segment(c, begin, i, pool));
      begin = i;
      in_segment = 0;
    }
    ++in_segment;
  }
  detail::emit_state(out, detail::fold_segment(c, begin, c.size(), pool));
  return out;
}

}  // namespace tdo
