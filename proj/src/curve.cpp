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
#include "divfrob/curve.hpp"

#include <charconv>
#include <numeric>

namespace divfrob {

CurveParams CurveParams::from_integers(u64 p, unsigned n, const std::vector<i64>& f)
{
  if (p < 2 || p >= (u64{1} << 32)) {
    throw Error(ErrorCode::ModulusTooLarge, "p must satisfy 2 <= p < 2^32 so that p^2 fits in 64 bits");
  }
  return {p, n, W1Poly::from_signed(p, f)};
}

CurveParams CurveParams::from_decimal(u64 p, unsigned n, const std::vector<std::string>& f)
{
  if (p < 2 || p >= (u64{1} << 32)) {
    throw Error(ErrorCode::ModulusTooLarge, "p must satisfy 2 <= p < 2^32 so that p^2 fits in 64 bits");
  }
  const u64 m = p * p;
  std::vector<u64> coeffs;
  coeffs.reserve(f.size());
  for (const auto& text : f) {
    std::size_t k = 0;
    bool neg = false;
    if (k < text.size() && (text[k] == '-' || text[k] == '+')) neg = text[k++] == '-';
    if (k == text.size()) throw Error(ErrorCode::ParseError, "empty coefficient '" + text + "'");
    u64 acc = 0;
    for (; k < text.size(); ++k) {
      if (text[k] < '0' || text[k] > '9') {
        throw Error(ErrorCode::ParseError, "not an integer: '" + text + "'");
      }
      acc = add_mod(mul_mod(acc, 10, m), static_cast<u64>(text[k] - '0') % m, m);
    }
    coeffs.push_back(neg ? sub_mod(0, acc, m) : acc);
  }
  return {p, n, W1Poly(p, std::move(coeffs))};
}

DerivedParams validate(const CurveParams& params)
{
  const u64 p = params.p;
  const unsigned n = params.n;
  if (p >= (u64{1} << 32)) throw Error(ErrorCode::ModulusTooLarge, "p^2 must fit in 64 bits");
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (n < 2) throw Error(ErrorCode::InvalidExponent, "n must be at least 2");
  if (n % p == 0) {
    throw Error(ErrorCode::NNotCoprimeToP, "p divides n = " + std::to_string(n));
  }
  if (params.f.modulus() != p) throw Error(ErrorCode::ModulusMismatch, "f is not stored mod p^2");

  const W1Poly& f = params.f;
  if (f.is_zero()) throw Error(ErrorCode::DegreeTooSmall, "f is zero");
  if (f.coeffs().back() % p == 0) {
    throw Error(ErrorCode::LeadingCoeffNotUnit, "leading coefficient of f is divisible by p",
                "drop the top coefficient or change it to a unit mod p");
  }
  const auto l = static_cast<unsigned>(f.degree());
  if ((l + 1) % n != 0) {
    throw Error(ErrorCode::BadDegreeResidue,
                "deg f = " + std::to_string(l) + " is not -1 mod n = " + std::to_string(n));
  }
  if (l % p == 0) {
    throw Error(ErrorCode::DegreeDivisibleByP, "p divides deg f = " + std::to_string(l));
  }
  const FpPoly fp = f.reduce();
  if (fp[0] == 0) {
    throw Error(ErrorCode::RootAtZero, "f(0) = 0 mod p",
                "substitute t -> t + u with u from shift_to_unit (CLI: --shift)");
  }
  if (l < 2) throw Error(ErrorCode::DegreeTooSmall, "deg f must be at least 2");
  if (fp_bezout(fp, derivative(fp)).g.degree() != 0) {
    throw Error(ErrorCode::NotSeparable, "f and f' have a common factor mod p");
  }

  DerivedParams d;
  d.p = p;
  d.n = n;
  d.l = l;
  d.r = (l + 1) / n;
  d.g = (l - 1) * (n - 1) / 2;
  d.f = f;
  std::vector<u64> rev(l + 2, 0);
  for (unsigned k = 1; k <= l + 1; ++k) rev[k] = f[static_cast<long>(l + 1 - k)];
  d.f2 = W1Poly(p, std::move(rev));
  d.f_modp = fp;
  d.f2_modp = d.f2.reduce();
  d.n_inv = inv_mod(n % p, p);
  return d;
}

ShiftResult shift_to_unit(u64 p, const W1Poly& f)
{
  const FpPoly fp = f.reduce();
  for (u64 u = 0; u < p; ++u) {
    if (fp.eval(u) == 0) continue;
    const W1Poly lin(p, {u, 1});
    W1Poly acc(p);
    for (long k = f.degree(); k >= 0; --k) acc = acc * lin + W1Poly(p, {f[k]});
    return {u, acc};
  }
  throw Error(ErrorCode::NoShiftExists, "f vanishes at every point of F_" + std::to_string(p),
              "a field extension is required, which is not supported");
}

EuclidPj euclid_pj(u64 p, unsigned j, unsigned n)
{
  const u64 pj = p * j;
  EuclidPj e{static_cast<unsigned>(pj / n), static_cast<unsigned>(pj % n)};
  if (e.b == 0) throw Error(ErrorCode::NNotCoprimeToP, "pj divisible by n");
  return e;
}

unsigned h0_class_size(const DerivedParams& d, unsigned j)
{
  return d.r * j >= 1 ? d.r * j - 1 : 0;
}

std::vector<BasisElement> enumerate_basis(const DerivedParams& d)
{
  std::vector<BasisElement> out;
  out.reserve(2 * d.g);
  for (unsigned j = 1; j < d.n; ++j)
    for (long i = 0; i + 2 <= static_cast<long>(d.r * j); ++i) out.push_back({Block::H0, j, i});
  for (unsigned j = 1; j < d.n; ++j)
    for (long i = 1; i + 1 <= static_cast<long>(d.r * j); ++i) out.push_back({Block::H1, j, i});
  return out;
}

std::vector<std::size_t> isotypic_permutation(const DerivedParams& d)
{
  const auto basis = enumerate_basis(d);
  std::vector<std::size_t> perm;
  perm.reserve(basis.size());
  for (unsigned j = 1; j < d.n; ++j) {
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (basis[k].block == Block::H0 && basis[k].j == j) perm.push_back(k);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (basis[k].block == Block::H1 && basis[k].j == d.n - j) perm.push_back(k);
  }
  return perm;
}

std::string basis_label(const BasisElement& e)
{
  std::string out;
  auto power = [&](char var, long k) {
    if (k == 0) return;
    if (!out.empty()) out += '*';
    out += var;
    if (k != 1) out += '^' + std::to_string(k);
  };
  if (e.block == Block::H0) {
    power('t', e.i);
    power('y', -static_cast<long>(e.j));
    out += "*dt";
  } else {
    power('t', -e.i);
    power('y', static_cast<long>(e.j));
  }
  return out;
}

std::optional<BasisElement> parse_basis_label(std::string_view label)
{
  long te = 0, ye = 0;
  bool dt = false, seen_t = false, seen_y = false;
  while (!label.empty()) {
    const auto star = label.find('*');
    const std::string_view tok = label.substr(0, star);
    label = star == std::string_view::npos ? std::string_view{} : label.substr(star + 1);
    if (tok == "dt") {
      if (dt || !label.empty()) return std::nullopt;
      dt = true;
      continue;
    }
    if (tok.empty() || (tok[0] != 't' && tok[0] != 'y')) return std::nullopt;
    long k = 1;
    if (tok.size() > 1) {
      if (tok[1] != '^') return std::nullopt;
      const char* first = tok.data() + 2;
      const char* last = tok.data() + tok.size();
      auto [ptr, ec] = std::from_chars(first, last, k);
      if (ec != std::errc() || ptr != last) return std::nullopt;
    }
    if (tok[0] == 't') {
      if (seen_t || seen_y) return std::nullopt;
      seen_t = true;
      te = k;
    } else {
      if (seen_y) return std::nullopt;
      seen_y = true;
      ye = k;
    }
  }
  if (dt) {
    if (ye >= 0 || te < 0) return std::nullopt;
    return BasisElement{Block::H0, static_cast<unsigned>(-ye), te};
  }
  if (ye <= 0 || te >= 0) return std::nullopt;
  return BasisElement{Block::H1, static_cast<unsigned>(ye), -te};
}

}  // namespace divfrob
