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
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tdo/circuit.hpp"
#include "tdo/errors.hpp"
#include "tdo/ring.hpp"

// Basis ordering: qubit 0 is the most significant bit of a basis index, so
// on an n-qubit register qubit q is bit (n - 1 - q).

namespace tdo {

/// Dense square matrix with exact entries, row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  static ExactMatrix identity(std::size_t dim) {
    ExactMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = RingScalar::one();
    return m;
  }

  static ExactMatrix diagonal(const std::vector<RingScalar>& d) {
    ExactMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  /// Matrix sending basis state j to basis state perm(j).
  static ExactMatrix permutation(std::size_t dim,
                                 const std::function<std::size_t(std::size_t)>& perm) {
    ExactMatrix m(dim);
    for (std::size_t j = 0; j < dim; ++j) m(perm(j), j) = RingScalar::one();
    return m;
  }

  std::size_t dim() const { return dim_; }
  RingScalar& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  const RingScalar& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * dim_ + c];
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.dim_ != b.dim_) throw WidthMismatch("matrix dimensions differ");
    ExactMatrix r(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i) {
      for (std::size_t k = 0; k < a.dim_; ++k) {
        const RingScalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < a.dim_; ++j) {
          const RingScalar& bkj = b(k, j);
          if (bkj.is_zero()) continue;
          r(i, j) += aik * bkj;
        }
      }
    }
    return r;
  }

  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.dim_ != b.dim_) throw WidthMismatch("matrix dimensions differ");
    ExactMatrix r(a.dim_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
      r.entries_[i] = a.entries_[i] + b.entries_[i];
    }
    return r;
  }

  friend ExactMatrix operator*(const RingScalar& s, const ExactMatrix& a) {
    ExactMatrix r(a.dim_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
      r.entries_[i] = s * a.entries_[i];
    }
    return r;
  }

  ExactMatrix adjoint() const {
    ExactMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) r(j, i) = conj((*this)(i, j));
    }
    return r;
  }

  bool is_unitary() const { return (*this) * adjoint() == identity(dim_); }

  /// Kronecker product; `a` acts on the more significant qubits.
  friend ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix r(a.dim_ * b.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i) {
      for (std::size_t j = 0; j < a.dim_; ++j) {
        if (a(i, j).is_zero()) continue;
        for (std::size_t k = 0; k < b.dim_; ++k) {
          for (std::size_t l = 0; l < b.dim_; ++l) {
            r(i * b.dim_ + k, j * b.dim_ + l) = a(i, j) * b(k, l);
          }
        }
      }
    }
    return r;
  }

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<RingScalar> entries_;
};

/// n-qubit state vector with exact amplitudes.
struct ExactState {
  std::size_t n = 0;
  std::vector<RingScalar> amplitudes;

  static ExactState basis(std::size_t n, std::size_t index) {
    ExactState s{n, std::vector<RingScalar>(std::size_t{1} << n)};
    s.amplitudes.at(index) = RingScalar::one();
    return s;
  }

  /// Sum of |amp|^2.
  RingScalar norm_squared() const {
    RingScalar acc;
    for (const auto& a : amplitudes) {
      if (!a.is_zero()) acc += a * conj(a);
    }
    return acc;
  }

  friend bool operator==(const ExactState&, const ExactState&) = default;
};

struct SimOptions {
  /// Width cap for state-vector simulation (induced unitaries, expectations).
  std::size_t max_state_qubits = 14;
  /// Width cap for full unitaries.
  std::size_t max_unitary_qubits = 10;
};

/// Exact 2^arity matrix of a gate kind, controls on the high bits.
inline ExactMatrix gate_matrix(GateKind kind) {
  const RingScalar one = RingScalar::one();
  const RingScalar r = RingScalar::inv_sqrt2();
  auto diag = [](std::vector<RingScalar> d) { return ExactMatrix::diagonal(d); };
  auto perm = [](std::size_t dim, std::function<std::size_t(std::size_t)> f) {
    return ExactMatrix::permutation(dim, f);
  };
  switch (kind) {
    case GateKind::X:
      return perm(2, [](std::size_t j) { return j ^ 1u; });
    case GateKind::Y: {
      ExactMatrix m(2);
      m(0, 1) = -RingScalar::imag_unit();
      m(1, 0) = RingScalar::imag_unit();
      return m;
    }
    case GateKind::Z:
      return diag({one, -one});
    case GateKind::H: {
      ExactMatrix m(2);
      m(0, 0) = r;
      m(0, 1) = r;
      m(1, 0) = r;
      m(1, 1) = -r;
      return m;
    }
    case GateKind::S:
      return diag({one, omega_pow(2)});
    case GateKind::SDG:
      return diag({one, omega_pow(-2)});
    case GateKind::T:
      return diag({one, omega_pow(1)});
    case GateKind::TDG:
      return diag({one, omega_pow(-1)});
    case GateKind::CX:
      return perm(4, [](std::size_t j) { return (j & 2u) ? j ^ 1u : j; });
    case GateKind::CZ:
      return diag({one, one, one, -one});
    case GateKind::CS:
      return diag({one, one, one, omega_pow(2)});
    case GateKind::CSDG:
      return diag({one, one, one, omega_pow(-2)});
    case GateKind::SWAP:
      return perm(4, [](std::size_t j) { return ((j & 1u) << 1) | ((j & 2u) >> 1); });
    case GateKind::CCX:
      return perm(8, [](std::size_t j) { return (j & 6u) == 6u ? j ^ 1u : j; });
    case GateKind::CCZ:
      return diag({one, one, one, one, one, one, one, -one});
  }
  throw Error("unhandled gate kind");
}

namespace detail {

inline std::size_t bit_of(std::size_t n, std::size_t q) { return std::size_t{1} << (n - 1 - q); }

/// Multiplies amplitudes whose masked bits are all set by w^e.
inline void phase_where(std::vector<RingScalar>& amps, std::size_t mask, int e) {
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & mask) == mask && !amps[i].is_zero()) {
      amps[i] = amps[i].times_omega_pow(e);
    }
  }
}

/// Swaps amplitude pairs (i, i ^ flip) for indices with (i & mask) == want.
inline void swap_where(std::vector<RingScalar>& amps, std::size_t mask,
                       std::size_t want, std::size_t flip) {
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & mask) == want) {
      std::size_t j = i ^ flip;
      if (!amps[i].is_zero() || !amps[j].is_zero()) std::swap(amps[i], amps[j]);
    }
  }
}

inline void apply_gate(std::vector<RingScalar>& amps, std::size_t n, const Gate& g) {
  const auto& q = g.qubits;
  auto b = [&](std::size_t i) { return bit_of(n, q[i]); };
  switch (g.kind) {
    case GateKind::X:
      swap_where(amps, b(0), 0, b(0));
      break;
    case GateKind::Y: {
      std::size_t m = b(0);
      for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & m) continue;
        RingScalar a0 = std::move(amps[i]);
        RingScalar a1 = std::move(amps[i | m]);
        amps[i] = a1.times_omega_pow(-2);
        amps[i | m] = a0.times_omega_pow(2);
      }
      break;
    }
    case GateKind::Z:
      phase_where(amps, b(0), 4);
      break;
    case GateKind::H: {
      std::size_t m = b(0);
      for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & m) continue;
        RingScalar& a0 = amps[i];
        RingScalar& a1 = amps[i | m];
        if (a0.is_zero() && a1.is_zero()) continue;
        RingScalar s = (a0 + a1).times_inv_sqrt2();
        RingScalar d = (a0 - a1).times_inv_sqrt2();
        a0 = std::move(s);
        a1 = std::move(d);
      }
      break;
    }
    case GateKind::S:
      phase_where(amps, b(0), 2);
      break;
    case GateKind::SDG:
      phase_where(amps, b(0), -2);
      break;
    case GateKind::T:
      phase_where(amps, b(0), 1);
      break;
    case GateKind::TDG:
      phase_where(amps, b(0), -1);
      break;
    case GateKind::CX:
      swap_where(amps, b(0) | b(1), b(0), b(1));
      break;
    case GateKind::CZ:
      phase_where(amps, b(0) | b(1), 4);
      break;
    case GateKind::CS:
      phase_where(amps, b(0) | b(1), 2);
      break;
    case GateKind::CSDG:
      phase_where(amps, b(0) | b(1), -2);
      break;
    case GateKind::SWAP:
      swap_where(amps, b(0) | b(1), b(0), b(0) | b(1));
      break;
    case GateKind::CCX:
      swap_where(amps, b(0) | b(1) | b(2), b(0) | b(1), b(2));
      break;
    case GateKind::CCZ:
      phase_where(amps, b(0) | b(1) | b(2), 4);
      break;
  }
}

inline void check_width(std::size_t width, std::size_t cap) {
  if (width > cap) throw TooWide(width, cap);
}

}  // namespace detail

/// Applies the gates of `c` to `s` in list order.
inline ExactState apply_circuit(ExactState s, const Circuit& c) {
  if (s.n != c.width()) {
    throw WidthMismatch("state has " + std::to_string(s.n) +
                        " qubits, circuit has " + std::to_string(c.width()));
  }
  for (const Gate& g : c.gates()) detail::apply_gate(s.amplitudes, s.n, g);
  return s;
}

/// Full 2^w x 2^w unitary over every wire, ancillas included.
inline ExactMatrix unitary_of(const Circuit& c, const SimOptions& opts = {}) {
  detail::check_width(c.width(), opts.max_unitary_qubits);
  std::size_t dim = std::size_t{1} << c.width();
  ExactMatrix m(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    ExactState out = apply_circuit(ExactState::basis(c.width(), j), c);
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = std::move(out.amplitudes[i]);
  }
  return m;
}

/// Operator on the main register, after checking that every main basis input
/// leaves the ancillas in |0>. Throws AncillaContractViolated otherwise.
inline ExactMatrix induced_unitary(const Circuit& c, const SimOptions& opts = {}) {
  detail::check_width(c.width(), opts.max_state_qubits);
  std::size_t dim = std::size_t{1} << c.n_main();
  std::size_t anc_mask = (std::size_t{1} << c.n_anc()) - 1;
  ExactMatrix m(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    ExactState out = apply_circuit(ExactState::basis(c.width(), x << c.n_anc()), c);
    for (std::size_t i = 0; i < out.amplitudes.size(); ++i) {
      if ((i & anc_mask) != 0 && !out.amplitudes[i].is_zero()) {
        throw AncillaContractViolated(x);
      }
    }
    for (std::size_t y = 0; y < dim; ++y) {
      m(y, x) = std::move(out.amplitudes[y << c.n_anc()]);
    }
  }
  return m;
}

struct Equivalence {
  bool equivalent = false;
  /// j such that U1 = w^j U2, when equivalent.
  std::optional<int> phase;
};

/// Compares induced unitaries on the main register. With
/// `up_to_global_phase`, also accepts U1 = w^j U2 for j in 0..7.
inline Equivalence equivalent(const Circuit& c1, const Circuit& c2,
                              bool up_to_global_phase,
                              const SimOptions& opts = {}) {
  if (c1.n_main() != c2.n_main()) {
    throw WidthMismatch("main registers differ: " + std::to_string(c1.n_main()) +
                        " vs " + std::to_string(c2.n_main()));
  }
  ExactMatrix u1 = induced_unitary(c1, opts);
  ExactMatrix u2 = induced_unitary(c2, opts);
  if (u1 == u2) return {true, 0};
  if (!up_to_global_phase) return {false, std::nullopt};
  for (int j = 1; j < 8; ++j) {
    if (u1 == omega_pow(j) * u2) return {true, j};
  }
  return {false, std::nullopt};
}

/// Monomial test: exactly one nonzero entry in every column and every row.
inline bool is_almost_classical(const ExactMatrix& m) {
  std::vector<int> row_hits(m.dim(), 0);
  for (std::size_t j = 0; j < m.dim(); ++j) {
    int hits = 0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
      if (!m(i, j).is_zero()) {
        ++hits;
        ++row_hits[i];
      }
    }
    if (hits != 1) return false;
  }
  for (int h : row_hits) {
    if (h != 1) return false;
  }
  return true;
}

/// One term sign * parity(mask, x) of a phase polynomial.
struct PhaseTerm {
  std::vector<std::size_t> mask;  // qubit indices
  int sign = 1;
};

/// diag(w^{sum_t sign_t * parity(mask_t, x)}) on n qubits.
struct PhaseSpec {
  std::size_t n = 0;
  std::vector<PhaseTerm> terms;
};

inline ExactMatrix phase_diagonal(const PhaseSpec& spec) {
  std::size_t dim = std::size_t{1} << spec.n;
  std::vector<RingScalar> d(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    int e = 0;
    for (const PhaseTerm& t : spec.terms) {
      int parity = 0;
      for (std::size_t q : t.mask) {
        parity ^= (x & detail::bit_of(spec.n, q)) ? 1 : 0;
      }
      e += t.sign * parity;
    }
    d[x] = omega_pow(e);
  }
  return ExactMatrix::diagonal(d);
}

}  // namespace tdo
