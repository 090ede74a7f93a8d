// Copyright 2026 the divfrob authors
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

#include <cstdint>
#include <string>
#include <vector>

#include "divfrob/error.hpp"

namespace divfrob {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// ---------------------------------------------------------------------------
// scalar residues

inline u64 add_mod(u64 a, u64 b, u64 m)
{
  const u64 s = a + b;
  return (s >= m || s < a) ? s - m : s;
}

inline u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

inline u64 mul_mod(u64 a, u64 b, u64 m)
{
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 pow_mod(u64 base, u64 e, u64 m);

/// Inverse of a modulo m (any modulus). Throws InexactDivision if
/// gcd(a, m) != 1.
u64 inv_mod(u64 a, u64 m);

/// Reduces a signed integer into [0, m).
u64 reduce_signed(i64 x, u64 m);

/// Residue of the rational num/den mod p, den a unit.
u64 frac_mod(i64 num, i64 den, u64 p);

bool is_prime(u64 x);

// ---------------------------------------------------------------------------
// polynomials over F_p

/// Dense polynomial over F_p, ascending coefficients, no trailing zeros.
class FpPoly {
 public:
  FpPoly() = default;
  explicit FpPoly(u64 p) : p_(p) {}
  /// Reduces every coefficient mod p and trims.
  FpPoly(u64 p, std::vector<u64> coeffs);

  static FpPoly constant(u64 p, u64 c);
  static FpPoly monomial(u64 p, u64 c, std::size_t k);
  static FpPoly from_signed(u64 p, const std::vector<i64>& coeffs);

  u64 modulus() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<u64>& coeffs() const { return c_; }
  u64 lead() const { return c_.empty() ? 0 : c_.back(); }

  /// Coefficient of t^k; zero outside [0, deg].
  u64 operator[](long k) const
  {
    return (k < 0 || k >= static_cast<long>(c_.size())) ? 0 : c_[static_cast<std::size_t>(k)];
  }

  u64 eval(u64 x) const;

  friend bool operator==(const FpPoly& a, const FpPoly& b) = default;

 private:
  void trim();

  u64 p_ = 0;
  std::vector<u64> c_;
};

FpPoly operator+(const FpPoly& a, const FpPoly& b);
FpPoly operator-(const FpPoly& a, const FpPoly& b);
FpPoly operator-(const FpPoly& a);
FpPoly operator*(const FpPoly& a, const FpPoly& b);
FpPoly scale(const FpPoly& a, u64 c);

/// a * b mod t^order.
FpPoly mul_trunc(const FpPoly& a, const FpPoly& b, std::size_t order);
/// a mod t^order.
FpPoly truncate(const FpPoly& a, std::size_t order);
/// t^k * a.
FpPoly shift_up(const FpPoly& a, std::size_t k);
FpPoly derivative(const FpPoly& a);
/// a(t^e).
FpPoly compose_power(const FpPoly& a, std::size_t e);

struct DivMod {
  FpPoly quot;
  FpPoly rem;
};
DivMod divmod(const FpPoly& a, const FpPoly& b);

FpPoly exact_divide(const FpPoly& a, const FpPoly& b);

FpPoly fp_pow(const FpPoly& a, u64 e);
/// a^e from the coefficient recurrence of a F' = e a' F, run modulo p^N
/// with N large enough that every division by a multiple of p stays exact.
/// Linear in deg(a^e) per coefficient of a; falls back to fp_pow when
/// a(0) = 0 or p^N does not fit in 62 bits.
FpPoly fp_pow_recurrence(const FpPoly& a, u64 e);
/// a^e mod t^order.
FpPoly fp_pow_trunc(const FpPoly& a, u64 e, std::size_t order);

/// Inverse of f modulo t^order by Newton doubling.
FpPoly trunc_inverse(const FpPoly& f, std::size_t order);

struct Bezout {
  FpPoly g;
  FpPoly u;
  FpPoly w;
};
/// u*a + w*b = g with g the monic gcd.
Bezout fp_bezout(const FpPoly& a, const FpPoly& b);

std::string to_string(const FpPoly& a, char var = 't');

// ---------------------------------------------------------------------------
// polynomials over Z/p^2

/// Dense polynomial with coefficients mod p^2.
class W1Poly {
 public:
  W1Poly() = default;
  explicit W1Poly(u64 p);
  W1Poly(u64 p, std::vector<u64> coeffs);
  static W1Poly from_signed(u64 p, const std::vector<i64>& coeffs);
  /// Canonical lift of residues in [0, p).
  static W1Poly lift(const FpPoly& a);

  u64 modulus() const { return p_; }
  u64 modulus2() const { return p2_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<u64>& coeffs() const { return c_; }
  u64 operator[](long k) const
  {
    return (k < 0 || k >= static_cast<long>(c_.size())) ? 0 : c_[static_cast<std::size_t>(k)];
  }

  FpPoly reduce() const;

  friend bool operator==(const W1Poly& a, const W1Poly& b) = default;

 private:
  void trim();

  u64 p_ = 0;
  u64 p2_ = 0;
  std::vector<u64> c_;
};

W1Poly operator+(const W1Poly& a, const W1Poly& b);
W1Poly operator-(const W1Poly& a, const W1Poly& b);
W1Poly operator*(const W1Poly& a, const W1Poly& b);
W1Poly scale(const W1Poly& a, u64 c);
W1Poly w1_pow(const W1Poly& a, u64 e);
W1Poly compose_power(const W1Poly& a, std::size_t e);
W1Poly derivative(const W1Poly& a);

/// The h with g = p*h, read through Z/p^2 -> pZ/p^2 = F_p.
FpPoly w1_divp(const W1Poly& g);

/// p*h as an element of W1 (the inverse bijection of w1_divp).
W1Poly times_p(const FpPoly& h);

// ---------------------------------------------------------------------------
// Laurent polynomials

/// Finite Laurent polynomial over F_p, stored densely from exponent low().
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(u64 p) : p_(p) {}
  /// t^shift * a.
  LaurentPoly(const FpPoly& a, long shift);

  u64 modulus() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  /// Lowest stored exponent; meaningless when zero.
  long low() const { return low_; }
  /// Highest stored exponent; low() - 1 when zero.
  long high() const { return low_ + static_cast<long>(c_.size()) - 1; }

  u64 operator[](long e) const
  {
    const long k = e - low_;
    return (k < 0 || k >= static_cast<long>(c_.size())) ? 0 : c_[static_cast<std::size_t>(k)];
  }
  void add_term(long e, u64 c);

  /// Terms with exponent in [lo, hi].
  LaurentPoly slice(long lo, long hi) const;
  /// Coefficients e -> c(e + offset) for e >= 0 as an ordinary polynomial,
  /// i.e. t^{-offset} * (terms of exponent >= offset).
  FpPoly tail_from(long offset) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

 private:
  void normalize();

  u64 p_ = 0;
  long low_ = 0;
  std::vector<u64> c_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const FpPoly& b);
LaurentPoly scale(const LaurentPoly& a, u64 c);
LaurentPoly derivative(const LaurentPoly& a);
/// t -> 1/t.
LaurentPoly invert_variable(const LaurentPoly& a);

/// Element of k((t))[y]/(y^n - f) with finite support, one Laurent
/// polynomial per y-exponent 0..n-1.
class LaurentGraded {
 public:
  LaurentGraded() = default;
  LaurentGraded(u64 p, unsigned n);

  u64 modulus() const { return p_; }
  unsigned n() const { return static_cast<unsigned>(comp_.size()); }
  const LaurentPoly& operator[](unsigned j) const { return comp_.at(j); }
  LaurentPoly& operator[](unsigned j) { return comp_.at(j); }
  bool is_zero() const;

  LaurentGraded& operator+=(const LaurentGraded& o);
  LaurentGraded& operator-=(const LaurentGraded& o);

  friend bool operator==(const LaurentGraded& a, const LaurentGraded& b) = default;

 private:
  u64 p_ = 0;
  std::vector<LaurentPoly> comp_;
};

LaurentGraded scale(const LaurentGraded& a, u64 c);

}  // namespace divfrob
