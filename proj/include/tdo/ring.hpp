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

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <complex>
#include <cstdint>
#include <ostream>
#include <string>

#include "tdo/errors.hpp"

namespace tdo {

using BigInt = boost::multiprecision::cpp_int;

/// num / 2^exp, kept in lowest terms (num odd, or exp == 0).
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(BigInt num, unsigned exp = 0) : num_(std::move(num)), exp_(exp) {
    normalize();
  }

  const BigInt& num() const { return num_; }
  unsigned exp() const { return exp_; }
  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.sign(); }

  friend Dyadic operator+(const Dyadic& x, const Dyadic& y) {
    if (x.exp_ >= y.exp_) {
      return Dyadic(x.num_ + (y.num_ << (x.exp_ - y.exp_)), x.exp_);
    }
    return Dyadic((x.num_ << (y.exp_ - x.exp_)) + y.num_, y.exp_);
  }
  friend Dyadic operator-(const Dyadic& x) { return Dyadic(-x.num_, x.exp_); }
  friend Dyadic operator-(const Dyadic& x, const Dyadic& y) { return x + (-y); }
  friend Dyadic operator*(const Dyadic& x, const Dyadic& y) {
    return Dyadic(x.num_ * y.num_, x.exp_ + y.exp_);
  }
  friend bool operator==(const Dyadic& x, const Dyadic& y) = default;

  /// Three-way comparison of values.
  friend int compare(const Dyadic& x, const Dyadic& y) { return (x - y).sign(); }

  double to_double() const {
    return std::ldexp(num_.convert_to<double>(), -static_cast<int>(exp_));
  }

  /// Always "n/2^j", including j = 0.
  std::string to_string() const {
    return num_.str() + "/2^" + std::to_string(exp_);
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      exp_ = 0;
      return;
    }
    if (exp_ == 0) return;
    unsigned shift = std::min<unsigned>(
        exp_, static_cast<unsigned>(boost::multiprecision::lsb(abs(num_))));
    num_ >>= shift;
    exp_ -= shift;
  }

  BigInt num_ = 0;
  unsigned exp_ = 0;
};

/// Real number p + q*sqrt(2) with dyadic p and q.
class RealValue {
 public:
  RealValue() = default;
  RealValue(Dyadic p, Dyadic q) : p_(std::move(p)), q_(std::move(q)) {}

  const Dyadic& p() const { return p_; }
  const Dyadic& q() const { return q_; }
  bool is_zero() const { return p_.is_zero() && q_.is_zero(); }
  bool is_rational() const { return q_.is_zero(); }

  /// Exact sign of p + q*sqrt(2).
  int sign() const {
    int sp = p_.sign();
    int sq = q_.sign();
    if (sq == 0) return sp;
    if (sp == 0 || sp == sq) return sq;
    // Opposite signs: the term with larger square wins; equality would make
    // sqrt(2) rational.
    int c = compare(p_ * p_, Dyadic(2) * q_ * q_);
    return c > 0 ? sp : sq;
  }

  double to_double() const { return p_.to_double() + q_.to_double() * std::sqrt(2.0); }

  std::string to_string() const {
    return p_.to_string() + " + " + q_.to_string() + "*sqrt2";
  }

  friend bool operator==(const RealValue&, const RealValue&) = default;

 private:
  Dyadic p_;
  Dyadic q_;
};

/// True iff x / y is rational. Throws DivisionByZero when y == 0.
inline bool ratio_is_rational(const RealValue& x, const RealValue& y) {
  if (y.is_zero()) throw DivisionByZero();
  // x = r*y with r rational iff (p1, q1) is parallel to (p2, q2).
  return (x.q() * y.p() - x.p() * y.q()).is_zero();
}

/// Exact element (a + b*w + c*w^2 + d*w^3) / sqrt(2)^k of Z[1/sqrt2, w],
/// w = exp(i*pi/4). Always held in canonical form: k == 0 or the numerator
/// is not divisible by sqrt(2), so structural equality is value equality.
class RingScalar {
 public:
  using Coeffs = std::array<BigInt, 4>;

  RingScalar() = default;
  RingScalar(long long n) : coeffs_{BigInt(n), 0, 0, 0} {}  // NOLINT
  RingScalar(Coeffs coeffs, unsigned k) : coeffs_(std::move(coeffs)), k_(k) {
    canonicalize();
  }
  RingScalar(BigInt a, BigInt b, BigInt c, BigInt d, unsigned k)
      : RingScalar(Coeffs{std::move(a), std::move(b), std::move(c), std::move(d)}, k) {}

  static RingScalar zero() { return RingScalar(); }
  static RingScalar one() { return RingScalar(1); }
  static RingScalar omega() { return RingScalar(0, 1, 0, 0, 0); }
  static RingScalar imag_unit() { return RingScalar(0, 0, 1, 0, 0); }
  static RingScalar sqrt2() { return RingScalar(0, 1, 0, -1, 0); }
  static RingScalar inv_sqrt2() { return RingScalar(1, 0, 0, 0, 1); }
  static RingScalar from_dyadic(const Dyadic& d) {
    return RingScalar(d.num(), 0, 0, 0, 2 * d.exp());
  }

  const Coeffs& coeffs() const { return coeffs_; }
  unsigned k() const { return k_; }

  bool is_zero() const {
    return coeffs_[0].is_zero() && coeffs_[1].is_zero() &&
           coeffs_[2].is_zero() && coeffs_[3].is_zero();
  }

  friend RingScalar operator+(const RingScalar& x, const RingScalar& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    unsigned k = std::max(x.k_, y.k_);
    Coeffs xs = scaled_numerator(x, k);
    Coeffs ys = scaled_numerator(y, k);
    for (int i = 0; i < 4; ++i) xs[i] += ys[i];
    return RingScalar(std::move(xs), k);
  }

  friend RingScalar operator-(const RingScalar& x) {
    RingScalar r = x;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend RingScalar operator-(const RingScalar& x, const RingScalar& y) {
    return x + (-y);
  }

  friend RingScalar operator*(const RingScalar& x, const RingScalar& y) {
    if (x.is_zero() || y.is_zero()) return RingScalar();
    Coeffs r{0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
      if (x.coeffs_[i].is_zero()) continue;
      for (int j = 0; j < 4; ++j) {
        if (y.coeffs_[j].is_zero()) continue;
        BigInt t = x.coeffs_[i] * y.coeffs_[j];
        // w^4 = -1
        if (i + j < 4) {
          r[i + j] += t;
        } else {
          r[i + j - 4] -= t;
        }
      }
    }
    return RingScalar(std::move(r), x.k_ + y.k_);
  }

  RingScalar& operator+=(const RingScalar& y) { return *this = *this + y; }
  RingScalar& operator*=(const RingScalar& y) { return *this = *this * y; }

  /// Multiplication by w^e; units preserve canonical form.
  RingScalar times_omega_pow(int e) const {
    e = ((e % 8) + 8) % 8;
    RingScalar r = *this;
    for (int s = 0; s < e; ++s) {
      BigInt top = std::move(r.coeffs_[3]);
      r.coeffs_[3] = std::move(r.coeffs_[2]);
      r.coeffs_[2] = std::move(r.coeffs_[1]);
      r.coeffs_[1] = std::move(r.coeffs_[0]);
      r.coeffs_[0] = -top;
    }
    return r;
  }

  RingScalar times_inv_sqrt2() const { return RingScalar(coeffs_, k_ + 1); }

  /// Complex conjugate: w -> w^-1 = -w^3.
  friend RingScalar conj(const RingScalar& x) {
    RingScalar r;
    r.coeffs_ = {x.coeffs_[0], -x.coeffs_[3], -x.coeffs_[2], -x.coeffs_[1]};
    r.k_ = x.k_;
    return r;
  }

  friend bool operator==(const RingScalar&, const RingScalar&) = default;

  std::complex<double> approx() const {
    const double h = std::sqrt(0.5);
    std::complex<double> w(h, h);
    std::complex<double> v = coeffs_[0].convert_to<double>();
    std::complex<double> p = 1.0;
    for (int i = 1; i < 4; ++i) {
      p *= w;
      v += coeffs_[i].convert_to<double>() * p;
    }
    return v * std::pow(h, static_cast<double>(k_));
  }

  std::string to_string() const {
    return "(" + coeffs_[0].str() + " + " + coeffs_[1].str() + "*w + " +
           coeffs_[2].str() + "*w^2 + " + coeffs_[3].str() + "*w^3)/sqrt2^" +
           std::to_string(k_);
  }

  friend std::ostream& operator<<(std::ostream& os, const RingScalar& x) {
    return os << x.to_string();
  }

  /// True iff the numerator is divisible by sqrt(2) in Z[w].
  static bool divisible_by_sqrt2(const Coeffs& n) {
    return odd(n[0]) == odd(n[2]) && odd(n[1]) == odd(n[3]);
  }

  /// n * sqrt(2) with sqrt(2) = w - w^3.
  static Coeffs mul_sqrt2(const Coeffs& n) {
    return {n[1] - n[3], n[0] + n[2], n[1] + n[3], n[2] - n[0]};
  }

  /// n / sqrt(2); requires divisible_by_sqrt2(n).
  static Coeffs div_sqrt2(const Coeffs& n) {
    return {(n[1] - n[3]) / 2, (n[0] + n[2]) / 2, (n[1] + n[3]) / 2,
            (n[2] - n[0]) / 2};
  }

 private:
  static bool odd(const BigInt& v) {
    return !v.is_zero() && boost::multiprecision::bit_test(v, 0);
  }

  static Coeffs scaled_numerator(const RingScalar& x, unsigned k) {
    unsigned diff = k - x.k_;
    Coeffs n = (diff % 2 == 1) ? mul_sqrt2(x.coeffs_) : x.coeffs_;
    unsigned shift = diff / 2;
    if (shift > 0) {
      for (auto& c : n) c <<= shift;
    }
    return n;
  }

  void canonicalize() {
    if (is_zero()) {
      k_ = 0;
      return;
    }
    while (k_ >= 2 && !odd(coeffs_[0]) && !odd(coeffs_[1]) &&
           !odd(coeffs_[2]) && !odd(coeffs_[3])) {
      for (auto& c : coeffs_) c >>= 1;
      k_ -= 2;
    }
    while (k_ > 0 && divisible_by_sqrt2(coeffs_)) {
      coeffs_ = div_sqrt2(coeffs_);
      --k_;
    }
  }

  Coeffs coeffs_{0, 0, 0, 0};
  unsigned k_ = 0;
};

/// w^e, exponent taken modulo 8.
inline RingScalar omega_pow(int e) { return RingScalar::one().times_omega_pow(e); }

/// Real view p + q*sqrt(2) of a self-conjugate scalar. Throws NotReal.
inline RealValue to_real(const RingScalar& x) {
  if (!(x == conj(x))) throw NotReal();
  // Self-conjugate numerators have c == 0 and d == -b, i.e. a + b*sqrt(2).
  const BigInt& a = x.coeffs()[0];
  const BigInt& b = x.coeffs()[1];
  unsigned j = x.k() / 2;
  if (x.k() % 2 == 0) return RealValue(Dyadic(a, j), Dyadic(b, j));
  // (a + b*sqrt2) / (2^j sqrt2) = b/2^j + (a/2^(j+1)) sqrt2
  return RealValue(Dyadic(b, j), Dyadic(a, j + 1));
}

}  // namespace tdo
