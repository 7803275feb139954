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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tdo/circuit.hpp"
#include "tdo/errors.hpp"
#include "tdo/ring.hpp"
#include "tdo/sim.hpp"

namespace tdo {

enum class Pauli { I, X, Y, Z };

inline char pauli_char(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

/// sign * (letters[0] (x) letters[1] (x) ...), one letter per qubit.
struct PauliString {
  int sign = 1;
  std::vector<Pauli> letters;

  static PauliString identity(std::size_t n) {
    return PauliString{1, std::vector<Pauli>(n, Pauli::I)};
  }
  static PauliString single(std::size_t n, std::size_t q, Pauli p) {
    PauliString s = identity(n);
    s.letters.at(q) = p;
    return s;
  }

  std::string to_string() const {
    std::string s = sign > 0 ? "+" : "-";
    for (Pauli p : letters) s += pauli_char(p);
    return s;
  }

  friend bool operator==(const PauliString&, const PauliString&) = default;
};

/// lambda * sum(terms) with lambda = (1/sqrt2)^k. Terms are not merged.
struct PauliSum {
  unsigned k = 0;
  std::vector<PauliString> terms;
};

/// A circuit of the form (Clifford)* T-stage (Clifford)*, segments named by
/// application order: pre_clifford runs first, post_clifford last.
struct SplitCircuit {
  Circuit pre_clifford;
  std::vector<std::pair<std::size_t, GateKind>> t_layer;
  Circuit post_clifford;
};

constexpr bool is_clifford(GateKind k) {
  switch (k) {
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::H:
    case GateKind::S:
    case GateKind::SDG:
    case GateKind::CX:
    case GateKind::CZ:
    case GateKind::SWAP:
      return true;
    default:
      return false;
  }
}

namespace detail {

// i^phase * prod_q X^x[q] Z^z[q]; a Y letter is i*X*Z.
struct PauliOp {
  int phase = 0;
  std::vector<bool> x, z;

  explicit PauliOp(std::size_t n) : x(n, false), z(n, false) {}

  static PauliOp from(const PauliString& p) {
    PauliOp op(p.letters.size());
    op.phase = p.sign > 0 ? 0 : 2;
    for (std::size_t q = 0; q < p.letters.size(); ++q) {
      Pauli l = p.letters[q];
      op.x[q] = l == Pauli::X || l == Pauli::Y;
      op.z[q] = l == Pauli::Z || l == Pauli::Y;
      if (l == Pauli::Y) op.phase += 1;
    }
    op.phase &= 3;
    return op;
  }

  PauliString to_string_form() const {
    PauliString p = PauliString::identity(x.size());
    int ys = 0;
    for (std::size_t q = 0; q < x.size(); ++q) {
      if (x[q] && z[q]) {
        p.letters[q] = Pauli::Y;
        ++ys;
      } else if (x[q]) {
        p.letters[q] = Pauli::X;
      } else if (z[q]) {
        p.letters[q] = Pauli::Z;
      }
    }
    int rest = ((phase - ys) % 4 + 4) % 4;
    if (rest % 2 != 0) throw Error("non-Hermitian Pauli product");
    p.sign = rest == 0 ? 1 : -1;
    return p;
  }

  // this = this * rhs
  void mul(const PauliOp& rhs) {
    int ph = phase + rhs.phase;
    for (std::size_t q = 0; q < x.size(); ++q) {
      // Z^a X^b = (-1)^(ab) X^b Z^a
      if (z[q] && rhs.x[q]) ph += 2;
      x[q] = x[q] != rhs.x[q];
      z[q] = z[q] != rhs.z[q];
    }
    phase = ph & 3;
  }
};

inline PauliOp letter_op(std::size_t n, std::initializer_list<std::pair<std::size_t, Pauli>> letters,
                         int sign = 1) {
  PauliString s = PauliString::identity(n);
  s.sign = sign;
  for (auto [q, l] : letters) s.letters[q] = l;
  return PauliOp::from(s);
}

// g^dagger X_q g and g^dagger Z_q g for each qubit q the gate touches.
struct Images {
  std::vector<std::size_t> support;
  std::vector<PauliOp> of_x, of_z;
};

inline Images clifford_images(std::size_t n, const Gate& g) {
  using P = Pauli;
  const auto& q = g.qubits;
  Images im;
  im.support = q;
  auto one = [&](PauliOp ix, PauliOp iz) {
    im.of_x.push_back(std::move(ix));
    im.of_z.push_back(std::move(iz));
  };
  switch (g.kind) {
    case GateKind::X:
      one(letter_op(n, {{q[0], P::X}}), letter_op(n, {{q[0], P::Z}}, -1));
      break;
    case GateKind::Y:
      one(letter_op(n, {{q[0], P::X}}, -1), letter_op(n, {{q[0], P::Z}}, -1));
      break;
    case GateKind::Z:
      one(letter_op(n, {{q[0], P::X}}, -1), letter_op(n, {{q[0], P::Z}}));
      break;
    case GateKind::H:
      one(letter_op(n, {{q[0], P::Z}}), letter_op(n, {{q[0], P::X}}));
      break;
    case GateKind::S:
      one(letter_op(n, {{q[0], P::Y}}, -1), letter_op(n, {{q[0], P::Z}}));
      break;
    case GateKind::SDG:
      one(letter_op(n, {{q[0], P::Y}}), letter_op(n, {{q[0], P::Z}}));
      break;
    case GateKind::CX:
      one(letter_op(n, {{q[0], P::X}, {q[1], P::X}}), letter_op(n, {{q[0], P::Z}}));
      one(letter_op(n, {{q[1], P::X}}), letter_op(n, {{q[0], P::Z}, {q[1], P::Z}}));
      break;
    case GateKind::CZ:
      one(letter_op(n, {{q[0], P::X}, {q[1], P::Z}}), letter_op(n, {{q[0], P::Z}}));
      one(letter_op(n, {{q[0], P::Z}, {q[1], P::X}}), letter_op(n, {{q[1], P::Z}}));
      break;
    case GateKind::SWAP:
      one(letter_op(n, {{q[1], P::X}}), letter_op(n, {{q[1], P::Z}}));
      one(letter_op(n, {{q[0], P::X}}), letter_op(n, {{q[0], P::Z}}));
      break;
    default:
      throw NotClifford(std::string(mnemonic(g.kind)));
  }
  return im;
}

}  // namespace detail

/// g^dagger p g for a Clifford gate g. Throws NotClifford.
inline PauliString conjugate_clifford(const PauliString& p, const Gate& g) {
  const std::size_t n = p.letters.size();
  detail::Images im = detail::clifford_images(n, g);
  detail::PauliOp src = detail::PauliOp::from(p);
  detail::PauliOp out = src;
  for (std::size_t q : im.support) {
    out.x[q] = false;
    out.z[q] = false;
  }
  for (std::size_t i = 0; i < im.support.size(); ++i) {
    std::size_t q = im.support[i];
    if (src.x[q]) out.mul(im.of_x[i]);
    if (src.z[q]) out.mul(im.of_z[i]);
  }
  return out.to_string_form();
}

/// U^dagger p U for a circuit U of Clifford gates.
inline PauliString conjugate_clifford(PauliString p, const Circuit& c) {
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
    p = conjugate_clifford(p, *it);
  }
  return p;
}

/// Conjugates p by a single T-stage. On a T qubit X -> (X - Y)/sqrt2 and
/// Y -> (X + Y)/sqrt2; on a TDG qubit X -> (X + Y)/sqrt2 and
/// Y -> (Y - X)/sqrt2. I and Z are fixed.
inline PauliSum conjugate_tlayer(const PauliString& p,
                                 const std::vector<std::pair<std::size_t, GateKind>>& layer) {
  PauliSum sum;
  sum.terms.push_back(p);
  for (const auto& [q, kind] : layer) {
    Pauli l = p.letters.at(q);
    if (l != Pauli::X && l != Pauli::Y) continue;
    ++sum.k;
    bool dg = kind == GateKind::TDG;
    // (sign of the X term, sign of the Y term)
    int sx, sy;
    if (l == Pauli::X) {
      sx = 1;
      sy = dg ? 1 : -1;
    } else {
      sx = dg ? -1 : 1;
      sy = 1;
    }
    std::vector<PauliString> next;
    next.reserve(sum.terms.size() * 2);
    for (const PauliString& t : sum.terms) {
      PauliString a = t;
      a.letters[q] = Pauli::X;
      a.sign = t.sign * sx;
      PauliString b = t;
      b.letters[q] = Pauli::Y;
      b.sign = t.sign * sy;
      next.push_back(std::move(a));
      next.push_back(std::move(b));
    }
    sum.terms = std::move(next);
  }
  return sum;
}

/// Splits a circuit into Clifford gates, one contiguous T-stage on distinct
/// qubits, then Clifford gates. Throws NotTDepthOneShape.
inline SplitCircuit split_tdepth1(const Circuit& c) {
  SplitCircuit s{Circuit(c.n_main(), c.n_anc()), {}, Circuit(c.n_main(), c.n_anc())};
  enum { kPre, kLayer, kPost } phase = kPre;
  std::vector<bool> used(c.width(), false);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate& g = c.gates()[i];
    if (is_t_like(g.kind)) {
      if (phase == kPost) throw NotTDepthOneShape(i, "second T-stage");
      if (used[g.qubits[0]]) throw NotTDepthOneShape(i, "T-stage reuses a qubit");
      used[g.qubits[0]] = true;
      phase = kLayer;
      s.t_layer.emplace_back(g.qubits[0], g.kind);
    } else if (!is_clifford(g.kind)) {
      throw NotTDepthOneShape(i, "'" + std::string(mnemonic(g.kind)) + "' is not Clifford");
    } else if (phase == kPre) {
      s.pre_clifford.add(g);
    } else {
      phase = kPost;
      s.post_clifford.add(g);
    }
  }
  return s;
}

enum class InputState { Zero, Plus };

namespace detail {

// <phi|B|phi> for a single-qubit Pauli B: 1 or 0.
inline int pauli_expectation(Pauli b, InputState phi) {
  if (b == Pauli::I) return 1;
  if (phi == InputState::Zero) return b == Pauli::Z ? 1 : 0;
  return b == Pauli::X ? 1 : 0;
}

}  // namespace detail

/// Conjugated observable U^dagger X_0 U of a T-depth-1 circuit as a Pauli
/// sum.
inline PauliSum heisenberg_x0(const SplitCircuit& s) {
  const std::size_t n = s.pre_clifford.width();
  PauliString obs = conjugate_clifford(PauliString::single(n, 0, Pauli::X), s.post_clifford);
  PauliSum sum = conjugate_tlayer(obs, s.t_layer);
  for (PauliString& t : sum.terms) t = conjugate_clifford(std::move(t), s.pre_clifford);
  return sum;
}

/// <X on qubit 0> after running the circuit on |phi>|0...0>, evaluated by
/// Pauli-path expansion: lambda times an integer.
inline RealValue expectation_pauli_path(const SplitCircuit& s, InputState phi) {
  PauliSum sum = heisenberg_x0(s);
  BigInt total = 0;
  for (const PauliString& t : sum.terms) {
    int v = t.sign * detail::pauli_expectation(t.letters[0], phi);
    for (std::size_t q = 1; q < t.letters.size() && v != 0; ++q) {
      v *= detail::pauli_expectation(t.letters[q], InputState::Zero);
    }
    total += v;
  }
  return to_real(RingScalar(total, 0, 0, 0, sum.k));
}

/// Same expectation by exact state-vector simulation.
inline RealValue expectation_direct(const Circuit& c, InputState phi,
                                    const SimOptions& opts = {}) {
  detail::check_width(c.width(), opts.max_state_qubits);
  if (c.width() == 0) throw WidthMismatch("circuit has no qubits");
  const std::size_t msb = detail::bit_of(c.width(), 0);
  ExactState s = ExactState::basis(c.width(), 0);
  if (phi == InputState::Plus) {
    s.amplitudes[0] = RingScalar::inv_sqrt2();
    s.amplitudes[msb] = RingScalar::inv_sqrt2();
  }
  s = apply_circuit(std::move(s), c);
  RingScalar e;
  for (std::size_t x = 0; x < s.amplitudes.size(); ++x) {
    const RingScalar& a = s.amplitudes[x];
    const RingScalar& b = s.amplitudes[x ^ msb];
    if (a.is_zero() || b.is_zero()) continue;
    e += conj(a) * b;
  }
  return to_real(e);
}

enum class Conclusion { NoTDepth1Possible, Inconclusive, InapplicableEPlusZero };

inline std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::NoTDepth1Possible: return "no-tdepth1-possible";
    case Conclusion::Inconclusive: return "inconclusive";
    case Conclusion::InapplicableEPlusZero: return "inapplicable-e-plus-zero";
  }
  return "?";
}

struct Verdict {
  RealValue e_zero;
  RealValue e_plus;
  /// Empty when e_plus == 0.
  std::optional<bool> ratio_rational;
  Conclusion conclusion = Conclusion::Inconclusive;
};

/// Irrationality certificate: for any T-depth-1 Clifford+T circuit with
/// fresh ancillas, E_|0> / E_|+> of <X> on the main qubit is rational. An
/// irrational ratio here proves the single-qubit behaviour of `c` has no
/// T-depth-1 implementation; a rational one proves nothing.
inline Verdict obstruction_verdict(const Circuit& c, const SimOptions& opts = {}) {
  if (c.n_main() != 1) {
    throw WidthMismatch("obstruction test needs exactly one main qubit, got " +
                        std::to_string(c.n_main()));
  }
  Verdict v;
  v.e_zero = expectation_direct(c, InputState::Zero, opts);
  v.e_plus = expectation_direct(c, InputState::Plus, opts);
  if (v.e_plus.is_zero()) {
    v.conclusion = Conclusion::InapplicableEPlusZero;
    return v;
  }
  v.ratio_rational = ratio_is_rational(v.e_zero, v.e_plus);
  v.conclusion = *v.ratio_rational ? Conclusion::Inconclusive : Conclusion::NoTDepth1Possible;
  return v;
}

/// The single-qubit circuit T H T.
inline Circuit tht_circuit() {
  Circuit c(1);
  c.add(GateKind::T, {0}).add(GateKind::H, {0}).add(GateKind::T, {0});
  return c;
}

}  // namespace tdo
