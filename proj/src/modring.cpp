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
#include "divfrob/modring.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "divfrob/kernels.hpp"

namespace divfrob {

namespace {

void require_same(u64 p, u64 q)
{
  if (p != q) {
    throw Error(ErrorCode::ModulusMismatch,
                "operands over different moduli (" + std::to_string(p) + " vs " +
                    std::to_string(q) + ")");
  }
}

// Plain product of coefficient vectors, reduced mod m < 2^32, via the
// dispatched dot kernel on the reversed second factor.
std::vector<u64> convolve(const std::vector<u64>& a, const std::vector<u64>& b, u64 m,
                          std::size_t order)
{
  if (a.empty() || b.empty() || order == 0) return {};
  const std::size_t full = a.size() + b.size() - 1;
  const std::size_t len = std::min(full, order);
  std::vector<u64> out(len);
  if (std::min(a.size(), b.size()) < 8) {
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
      if (a[i] == 0) continue;
      const std::size_t top = std::min(b.size(), len - i);
      for (std::size_t j = 0; j < top; ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % m;
    }
    return out;
  }
  std::vector<u64> rb(b.rbegin(), b.rend());
  const std::size_t nb = b.size();
  for (std::size_t k = 0; k < len; ++k) {
    const std::size_t lo = k + 1 > nb ? k + 1 - nb : 0;
    const std::size_t hi = std::min(k, a.size() - 1);
    if (lo > hi) continue;
    const std::size_t cnt = hi - lo + 1;
    out[k] = kernels::dot_mod({a.data() + lo, cnt}, {rb.data() + (nb - 1 - k + lo), cnt}, m);
  }
  return out;
}

// Same, for moduli up to 2^64.
std::vector<u64> convolve_wide(const std::vector<u64>& a, const std::vector<u64>& b, u64 m)
{
  if (a.empty() || b.empty()) return {};
  std::vector<u64> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = add_mod(out[i + j], mul_mod(a[i], b[j], m), m);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

u64 pow_mod(u64 base, u64 e, u64 m)
{
  u64 r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 m)
{
  i64 r0 = static_cast<i64>(m), r1 = static_cast<i64>(a % m);
  i64 s0 = 0, s1 = 1;
  while (r1 != 0) {
    const i64 q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  if (r0 != 1) {
    throw Error(ErrorCode::InexactDivision,
                std::to_string(a) + " is not invertible mod " + std::to_string(m));
  }
  return reduce_signed(s0, m);
}

u64 reduce_signed(i64 x, u64 m)
{
  const i64 sm = static_cast<i64>(m);
  i64 r = x % sm;
  if (r < 0) r += sm;
  return static_cast<u64>(r);
}

u64 frac_mod(i64 num, i64 den, u64 p)
{
  return mul_mod(reduce_signed(num, p), inv_mod(reduce_signed(den, p), p), p);
}

bool is_prime(u64 x)
{
  if (x < 2) return false;
  for (u64 d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// FpPoly

FpPoly::FpPoly(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs))
{
  if (p_ == 0 || p_ >= (u64{1} << 32)) {
    throw Error(ErrorCode::ModulusTooLarge, "field modulus must lie in [1, 2^32)");
  }
  for (auto& x : c_) x %= p_;
  trim();
}

FpPoly FpPoly::constant(u64 p, u64 c) { return FpPoly(p, {c}); }

FpPoly FpPoly::monomial(u64 p, u64 c, std::size_t k)
{
  std::vector<u64> v(k + 1, 0);
  v[k] = c;
  return FpPoly(p, std::move(v));
}

FpPoly FpPoly::from_signed(u64 p, const std::vector<i64>& coeffs)
{
  std::vector<u64> v;
  v.reserve(coeffs.size());
  for (i64 x : coeffs) v.push_back(reduce_signed(x, p));
  return FpPoly(p, std::move(v));
}

void FpPoly::trim()
{
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

u64 FpPoly::eval(u64 x) const
{
  u64 acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * (x % p_) + *it) % p_;
  return acc;
}

FpPoly operator+(const FpPoly& a, const FpPoly& b)
{
  require_same(a.modulus(), b.modulus());
  const u64 p = a.modulus();
  std::vector<u64> v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = add_mod(a[static_cast<long>(i)], b[static_cast<long>(i)], p);
  return FpPoly(p, std::move(v));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b)
{
  require_same(a.modulus(), b.modulus());
  const u64 p = a.modulus();
  std::vector<u64> v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = sub_mod(a[static_cast<long>(i)], b[static_cast<long>(i)], p);
  return FpPoly(p, std::move(v));
}

FpPoly operator-(const FpPoly& a) { return FpPoly(a.modulus()) - a; }

FpPoly operator*(const FpPoly& a, const FpPoly& b)
{
  require_same(a.modulus(), b.modulus());
  return FpPoly(a.modulus(), convolve(a.coeffs(), b.coeffs(), a.modulus(), SIZE_MAX));
}

FpPoly scale(const FpPoly& a, u64 c)
{
  std::vector<u64> v(a.coeffs());
  c %= a.modulus();
  for (auto& x : v) x = x * c % a.modulus();
  return FpPoly(a.modulus(), std::move(v));
}

FpPoly mul_trunc(const FpPoly& a, const FpPoly& b, std::size_t order)
{
  require_same(a.modulus(), b.modulus());
  return FpPoly(a.modulus(), convolve(a.coeffs(), b.coeffs(), a.modulus(), order));
}

FpPoly truncate(const FpPoly& a, std::size_t order)
{
  if (a.coeffs().size() <= order) return a;
  return FpPoly(a.modulus(),
                std::vector<u64>(a.coeffs().begin(), a.coeffs().begin() + static_cast<long>(order)));
}

FpPoly shift_up(const FpPoly& a, std::size_t k)
{
  if (a.is_zero()) return a;
  std::vector<u64> v(k, 0);
  v.insert(v.end(), a.coeffs().begin(), a.coeffs().end());
  return FpPoly(a.modulus(), std::move(v));
}

FpPoly derivative(const FpPoly& a)
{
  const u64 p = a.modulus();
  std::vector<u64> v;
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) v.push_back(i % p * a.coeffs()[i] % p);
  return FpPoly(p, std::move(v));
}

FpPoly compose_power(const FpPoly& a, std::size_t e)
{
  if (a.is_zero() || e == 0) return e == 0 ? FpPoly::constant(a.modulus(), a.eval(1)) : a;
  std::vector<u64> v((a.coeffs().size() - 1) * e + 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) v[i * e] = a.coeffs()[i];
  return FpPoly(a.modulus(), std::move(v));
}

DivMod divmod(const FpPoly& a, const FpPoly& b)
{
  require_same(a.modulus(), b.modulus());
  if (b.is_zero()) throw Error(ErrorCode::InexactDivision, "division by the zero polynomial");
  const u64 p = a.modulus();
  if (a.degree() < b.degree()) return {FpPoly(p), a};
  std::vector<u64> r(a.coeffs());
  const std::size_t nb = b.coeffs().size();
  std::vector<u64> q(r.size() - nb + 1, 0);
  const u64 inv = inv_mod(b.lead(), p);
  for (std::size_t i = q.size(); i-- > 0;) {
    const u64 c = r[i + nb - 1] * inv % p;
    q[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < nb; ++j) r[i + j] = sub_mod(r[i + j], c * b.coeffs()[j] % p, p);
  }
  return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

FpPoly exact_divide(const FpPoly& a, const FpPoly& b)
{
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) {
    throw Error(ErrorCode::InexactDivision,
                "nonzero remainder of degree " + std::to_string(r.degree()));
  }
  return q;
}

FpPoly fp_pow(const FpPoly& a, u64 e)
{
  FpPoly result = FpPoly::constant(a.modulus(), 1);
  FpPoly base = a;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

FpPoly fp_pow_recurrence(const FpPoly& a, u64 e)
{
  const u64 p = a.modulus();
  if (a.is_zero() || a[0] == 0 || e == 0 || a.degree() == 0) return fp_pow(a, e);
  const u64 d = static_cast<u64>(a.degree());
  const u64 top = e * d;
  // Working precision: one digit survives after dividing by every k <= top.
  u64 digits = 1;
  for (u64 q = p; q <= top; q *= p) {
    digits += top / q;
    if (q > top / p) break;
  }
  u64 M = 1;
  for (u64 k = 0; k < digits; ++k) {
    if (M > (u64{1} << 62) / p) return fp_pow(a, e);
    M *= p;
  }

  // k = p^v * kk with kk a unit; invert every f0 * kk with one inv_mod.
  std::vector<u64> unit(top + 1, 1), pval(top + 1, 1), inv(top + 1, 1);
  for (u64 k = 1; k <= top; ++k) {
    u64 kk = k;
    while (kk % p == 0) {
      kk /= p;
      pval[k] *= p;
    }
    unit[k] = mul_mod(a[0], kk % M, M);
  }
  std::vector<u64> prefix(top + 1, 1);
  for (u64 k = 1; k <= top; ++k) prefix[k] = mul_mod(prefix[k - 1], unit[k], M);
  u64 run = inv_mod(prefix[top], M);
  for (u64 k = top; k >= 1; --k) {
    inv[k] = mul_mod(run, prefix[k - 1], M);
    run = mul_mod(run, unit[k], M);
  }

  // f0 k F_k = sum_i (i(e+1) - k) a_i F_{k-i} = sum_i c_i F_{k-i} - k sum_i a_i F_{k-i}
  std::vector<u64> ai(d + 1), ci(d + 1);
  const u64 e1 = (e + 1) % M;
  for (u64 i = 1; i <= d; ++i) {
    ai[i] = a.coeffs()[i] % M;
    ci[i] = mul_mod(mul_mod(i % M, e1, M), ai[i], M);
  }
  using u128 = unsigned __int128;
  std::vector<u64> F(top + 1, 0);
  F[0] = pow_mod(a[0], e, M);
  for (u64 k = 1; k <= top; ++k) {
    u128 sc = 0, sa = 0;
    const u64 lim = std::min(d, k);
    for (u64 i = 1; i <= lim; ++i) {
      sc += static_cast<u128>(ci[i]) * F[k - i];
      sa += static_cast<u128>(ai[i]) * F[k - i];
      if ((i & 7) == 0) {  // each product is below 2^124
        sc %= M;
        sa %= M;
      }
    }
    const u64 rhs = sub_mod(static_cast<u64>(sc % M), mul_mod(k % M, static_cast<u64>(sa % M), M), M);
    if (rhs % pval[k] != 0) throw Error(ErrorCode::InexactDivision, "power recurrence lost precision");
    F[k] = mul_mod(rhs / pval[k], inv[k], M);
  }
  return FpPoly(p, std::move(F));
}

FpPoly fp_pow_trunc(const FpPoly& a, u64 e, std::size_t order)
{
  FpPoly result = truncate(FpPoly::constant(a.modulus(), 1), order);
  FpPoly base = truncate(a, order);
  while (e) {
    if (e & 1) result = mul_trunc(result, base, order);
    e >>= 1;
    if (e) base = mul_trunc(base, base, order);
  }
  return result;
}

FpPoly trunc_inverse(const FpPoly& f, std::size_t order)
{
  const u64 p = f.modulus();
  if (f[0] == 0) throw Error(ErrorCode::ConstantTermZero, "constant term is zero mod p");
  if (order == 0) return FpPoly(p);
  FpPoly inv = FpPoly::constant(p, inv_mod(f[0], p));
  const FpPoly two = FpPoly::constant(p, 2);
  std::size_t prec = 1;
  while (prec < order) {
    prec = std::min(prec * 2, order);
    const FpPoly e = mul_trunc(truncate(f, prec), inv, prec);
    inv = mul_trunc(inv, two - e, prec);
  }
  return inv;
}

Bezout fp_bezout(const FpPoly& a, const FpPoly& b)
{
  require_same(a.modulus(), b.modulus());
  const u64 p = a.modulus();
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::BothZero, "gcd of two zero polynomials");
  FpPoly r0 = a, r1 = b;
  FpPoly s0 = FpPoly::constant(p, 1), s1(p);
  FpPoly t0(p), t1 = FpPoly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  const u64 inv = inv_mod(r0.lead(), p);
  return {scale(r0, inv), scale(s0, inv), scale(t0, inv)};
}

std::string to_string(const FpPoly& a, char var)
{
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    const u64 c = a.coeffs()[k];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0 || c != 1) os << c;
    if (k > 0) {
      if (c != 1) os << '*';
      os << var;
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// W1Poly

W1Poly::W1Poly(u64 p) : p_(p), p2_(p * p)
{
  if (p == 0 || p >= (u64{1} << 32)) {
    throw Error(ErrorCode::ModulusTooLarge, "p^2 must fit in 64 bits");
  }
}

W1Poly::W1Poly(u64 p, std::vector<u64> coeffs) : W1Poly(p)
{
  c_ = std::move(coeffs);
  for (auto& x : c_) x %= p2_;
  trim();
}

W1Poly W1Poly::from_signed(u64 p, const std::vector<i64>& coeffs)
{
  W1Poly out(p);
  std::vector<u64> v;
  v.reserve(coeffs.size());
  for (i64 x : coeffs) v.push_back(reduce_signed(x, out.p2_));
  return W1Poly(p, std::move(v));
}

W1Poly W1Poly::lift(const FpPoly& a) { return W1Poly(a.modulus(), a.coeffs()); }

void W1Poly::trim()
{
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly W1Poly::reduce() const { return FpPoly(p_, c_); }

W1Poly operator+(const W1Poly& a, const W1Poly& b)
{
  require_same(a.modulus(), b.modulus());
  const u64 m = a.modulus2();
  std::vector<u64> v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = add_mod(a[static_cast<long>(i)], b[static_cast<long>(i)], m);
  return W1Poly(a.modulus(), std::move(v));
}

W1Poly operator-(const W1Poly& a, const W1Poly& b)
{
  require_same(a.modulus(), b.modulus());
  const u64 m = a.modulus2();
  std::vector<u64> v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = sub_mod(a[static_cast<long>(i)], b[static_cast<long>(i)], m);
  return W1Poly(a.modulus(), std::move(v));
}

W1Poly operator*(const W1Poly& a, const W1Poly& b)
{
  require_same(a.modulus(), b.modulus());
  const u64 m = a.modulus2();
  if (m < (u64{1} << 32)) return W1Poly(a.modulus(), convolve(a.coeffs(), b.coeffs(), m, SIZE_MAX));
  return W1Poly(a.modulus(), convolve_wide(a.coeffs(), b.coeffs(), m));
}

W1Poly scale(const W1Poly& a, u64 c)
{
  std::vector<u64> v(a.coeffs());
  for (auto& x : v) x = mul_mod(x, c, a.modulus2());
  return W1Poly(a.modulus(), std::move(v));
}

W1Poly w1_pow(const W1Poly& a, u64 e)
{
  W1Poly result(a.modulus(), {1});
  W1Poly base = a;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

W1Poly compose_power(const W1Poly& a, std::size_t e)
{
  if (a.is_zero() || e == 0) {
    u64 s = 0;
    for (u64 c : a.coeffs()) s = add_mod(s, c, a.modulus2());
    return e == 0 ? W1Poly(a.modulus(), {s}) : a;
  }
  std::vector<u64> v((a.coeffs().size() - 1) * e + 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) v[i * e] = a.coeffs()[i];
  return W1Poly(a.modulus(), std::move(v));
}

W1Poly derivative(const W1Poly& a)
{
  const u64 m = a.modulus2();
  std::vector<u64> v;
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) v.push_back(mul_mod(i, a.coeffs()[i], m));
  return W1Poly(a.modulus(), std::move(v));
}

FpPoly w1_divp(const W1Poly& g)
{
  const u64 p = g.modulus();
  std::vector<u64> v;
  v.reserve(g.coeffs().size());
  for (std::size_t k = 0; k < g.coeffs().size(); ++k) {
    const u64 c = g.coeffs()[k];
    if (c % p != 0) {
      throw Error(ErrorCode::NotDivisibleByP,
                  "coefficient of degree " + std::to_string(k) + " is not divisible by p");
    }
    v.push_back(c / p);
  }
  return FpPoly(p, std::move(v));
}

W1Poly times_p(const FpPoly& h)
{
  const u64 p = h.modulus();
  std::vector<u64> v(h.coeffs());
  for (auto& x : v) x *= p;
  return W1Poly(p, std::move(v));
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(const FpPoly& a, long shift)
    : p_(a.modulus()), low_(shift), c_(a.coeffs())
{
  normalize();
}

void LaurentPoly::normalize()
{
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    low_ += static_cast<long>(lead);
  }
  if (c_.empty()) low_ = 0;
}

void LaurentPoly::add_term(long e, u64 c)
{
  c %= p_;
  if (c == 0) return;
  if (c_.empty()) {
    low_ = e;
    c_.assign(1, c);
    return;
  }
  if (e < low_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(low_ - e), 0);
    low_ = e;
  } else if (e > high()) {
    c_.resize(static_cast<std::size_t>(e - low_ + 1), 0);
  }
  auto& slot = c_[static_cast<std::size_t>(e - low_)];
  slot = add_mod(slot, c, p_);
  normalize();
}

LaurentPoly LaurentPoly::slice(long lo, long hi) const
{
  LaurentPoly out(p_);
  if (c_.empty()) return out;
  lo = std::max(lo, low_);
  hi = std::min(hi, high());
  if (lo > hi) return out;
  out.low_ = lo;
  out.c_.assign(c_.begin() + (lo - low_), c_.begin() + (hi - low_ + 1));
  out.normalize();
  return out;
}

FpPoly LaurentPoly::tail_from(long offset) const
{
  std::vector<u64> v;
  for (long e = std::max(offset, low_); e <= high(); ++e) v.push_back((*this)[e]);
  if (offset > low_ || v.empty()) return FpPoly(p_, std::move(v));
  std::vector<u64> padded(static_cast<std::size_t>(low_ - offset), 0);
  padded.insert(padded.end(), v.begin(), v.end());
  return FpPoly(p_, std::move(padded));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
  if (o.c_.empty()) return *this;
  if (p_ == 0) p_ = o.p_;
  require_same(p_, o.p_);
  if (c_.empty()) {
    *this = o;
    return *this;
  }
  const long lo = std::min(low_, o.low_);
  const long hi = std::max(high(), o.high());
  std::vector<u64> v(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t k = 0; k < c_.size(); ++k) v[static_cast<std::size_t>(low_ - lo) + k] = c_[k];
  for (std::size_t k = 0; k < o.c_.size(); ++k) {
    auto& slot = v[static_cast<std::size_t>(o.low_ - lo) + k];
    slot = add_mod(slot, o.c_[k], p_);
  }
  low_ = lo;
  c_ = std::move(v);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
  return *this += scale(o, o.p_ == 0 ? 0 : o.p_ - 1);
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b)
{
  if (a.c_.empty() || b.c_.empty()) return a.c_.empty() && b.c_.empty();
  return a.p_ == b.p_ && a.low_ == b.low_ && a.c_ == b.c_;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

LaurentPoly operator*(const LaurentPoly& a, const FpPoly& b)
{
  if (a.is_zero() || b.is_zero()) return LaurentPoly(b.modulus());
  return LaurentPoly(a.tail_from(a.low()) * b, a.low());
}

LaurentPoly scale(const LaurentPoly& a, u64 c)
{
  if (a.is_zero()) return a;
  return LaurentPoly(scale(a.tail_from(a.low()), c), a.low());
}

LaurentPoly derivative(const LaurentPoly& a)
{
  if (a.is_zero()) return a;
  const u64 p = a.modulus();
  std::vector<u64> v;
  v.reserve(static_cast<std::size_t>(a.high() - a.low() + 1));
  for (long e = a.low(); e <= a.high(); ++e) v.push_back(mul_mod(reduce_signed(e, p), a[e], p));
  return LaurentPoly(FpPoly(p, std::move(v)), a.low() - 1);
}

LaurentPoly invert_variable(const LaurentPoly& a)
{
  LaurentPoly out(a.modulus());
  if (a.is_zero()) return out;
  std::vector<u64> v;
  for (long e = a.high(); e >= a.low(); --e) v.push_back(a[e]);
  return LaurentPoly(FpPoly(a.modulus(), std::move(v)), -a.high());
}

// ---------------------------------------------------------------------------
// LaurentGraded

LaurentGraded::LaurentGraded(u64 p, unsigned n) : p_(p), comp_(n, LaurentPoly(p)) {}

bool LaurentGraded::is_zero() const
{
  return std::all_of(comp_.begin(), comp_.end(), [](const LaurentPoly& c) { return c.is_zero(); });
}

LaurentGraded& LaurentGraded::operator+=(const LaurentGraded& o)
{
  require_same(n(), o.n());
  for (unsigned j = 0; j < n(); ++j) comp_[j] += o.comp_[j];
  return *this;
}

LaurentGraded& LaurentGraded::operator-=(const LaurentGraded& o)
{
  require_same(n(), o.n());
  for (unsigned j = 0; j < n(); ++j) comp_[j] -= o.comp_[j];
  return *this;
}

LaurentGraded scale(const LaurentGraded& a, u64 c)
{
  LaurentGraded out(a.modulus(), a.n());
  for (unsigned j = 0; j < a.n(); ++j) out[j] = scale(a[j], c);
  return out;
}

}  // namespace divfrob
