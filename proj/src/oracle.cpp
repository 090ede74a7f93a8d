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
#include "divfrob/oracle.hpp"

#include <cstdio>

namespace divfrob::oracle {

namespace {

Function v_at_infinity(const DerivedParams& d, const LaurentPoly& terms, unsigned j)
{
  // t^{-a} y^j with a >= rj, rewritten as s^{a-rj} z^j.
  Function out = make_function(d, Chart::U);
  out.c[j] = terms;
  return to_chart(d, out, Chart::V);
}

ColumnVector h0_column(const DerivedParams& d, const FrobeniusLift& lift, long i, unsigned j,
                       std::size_t order)
{
  const long p = static_cast<long>(d.p);
  const EuclidPj e = euclid_pj(d.p, j, d.n);
  const unsigned c2 = d.n - e.b;
  const long need = lift.v.degree() - p * (i + 2);
  if (need > static_cast<long>(order)) {
    throw Error(ErrorCode::TruncationInsufficient,
                "series order " + std::to_string(order) + " below " + std::to_string(need));
  }
  const DiComponents di = di1_components(d, lift, i, j, order);
  const LaurentPoly& hpoly = di.h.c[c2];

  ColumnVector col{{Block::H0, j, i}, {}};
  const ColumnVector cls = cech_h1_class(d, di.h);
  col.entries = cls.entries;

  // h = h_U + class + h_V; only h_V and the class feed the V side.
  Differential total = di.fV;
  for (const auto& [el, c] : cls.entries) {
    const TauSplit ts = tau_split(d, el.i, el.j);
    total.c += scale(ts.alpha_v.c, c);
  }
  const long split = -static_cast<long>(d.r * c2);
  const Function hv = v_at_infinity(d, hpoly.slice(hpoly.low(), split), c2);
  total.c += exterior_derivative(d, hv).c;

  const H0Projection pr = project_h0(d, total, Chart::V);
  if (pr.residual_terms != 0) {
    throw Error(ErrorCode::OracleMismatch,
                "H0 column image is not a global differential at (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
  }
  for (const auto& [el, c] : pr.column.entries) col.add(el, c, d.p);
  return col;
}

ColumnVector h1_column(const DerivedParams& d, long i, unsigned j)
{
  const long p = static_cast<long>(d.p);
  const EuclidPj e = euclid_pj(d.p, j, d.n);
  const unsigned b = e.b;
  Function hp = make_function(d, Chart::U);
  hp.c[b] = LaurentPoly(fp_pow(d.f_modp, e.a), -p * i);

  ColumnVector col{{Block::H1, j, i}, {}};
  const ColumnVector cls = cech_h1_class(d, hp);
  col.entries = cls.entries;

  const LaurentPoly& poly = hp.c[b];
  Function hu = make_function(d, Chart::U);
  hu.c[b] = poly.slice(0, poly.high());
  const Function hv = v_at_infinity(d, poly.slice(poly.low(), -static_cast<long>(d.r * b)), b);

  Differential total = make_differential(d, Chart::U);
  Differential total_v = make_differential(d, Chart::V);
  for (const auto& [el, c] : cls.entries) {
    const TauSplit ts = tau_split(d, el.i, el.j);
    total.c -= scale(ts.alpha_u.c, c);
    total_v.c += scale(ts.alpha_v.c, c);
  }
  total.c -= exterior_derivative(d, hu).c;
  total_v.c += exterior_derivative(d, hv).c;

  const H0Projection pr = project_h0(d, total, Chart::U);
  if (pr.residual_terms != 0) {
    throw Error(ErrorCode::OracleMismatch,
                "H1 column image is not a global differential at (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
  }
  if (!(to_chart(d, total_v, Chart::U).c == total.c)) {
    throw Error(ErrorCode::OracleMismatch, "the two chart representatives of the H1 column image differ");
  }
  for (const auto& [el, c] : pr.column.entries) col.add(el, c, d.p);
  return col;
}

}  // namespace

DiComponents di1_components(const DerivedParams& d, const FrobeniusLift& lift, long i, unsigned j,
                            std::size_t order)
{
  const long p = static_cast<long>(d.p);
  const EuclidPj e = euclid_pj(d.p, j, d.n);
  const unsigned c = d.n - 1 - e.b;  // dt / y^b
  const FpPoly inv = trunc_inverse(d.f_modp, order);

  DiComponents out{make_differential(d, Chart::U), make_differential(d, Chart::V),
                   make_function(d, Chart::U), order};
  out.fU.c[c] = LaurentPoly(fp_pow_trunc(inv, e.a, order), p * (i + 1) - 1);

  const FpPoly qc = qcart(d, lift, j);
  out.fV.c[c] = scale(LaurentPoly(qc, p * static_cast<long>(d.r * j) - p * (i + 2)), d.p - 1);

  // t^{p(i+2)} f^{-(a+1)} v(1/t) y^{n-b}
  const LaurentPoly vinv = invert_variable(LaurentPoly(lift.v, 0));
  const FpPoly ip = fp_pow_trunc(inv, e.a + 1, order);
  out.h.c[d.n - e.b] = LaurentPoly((vinv * ip).tail_from(vinv.low()), vinv.low() + p * (i + 2));
  return out;
}

ColumnVector cech_h1_class(const DerivedParams& d, const Function& x)
{
  if (x.chart != Chart::U) throw Error(ErrorCode::ChartMismatch, "Cech classes are read in chart U");
  ColumnVector col;
  for (unsigned j = 1; j < d.n; ++j) {
    const LaurentPoly& poly = x.c[j];
    for (long a = 1; a <= static_cast<long>(d.r * j) - 1; ++a)
      col.add({Block::H1, j, a}, poly[-a], d.p);
  }
  return col;
}

DividedFrobeniusMatrix structural_phi(const DerivedParams& d, const FrobeniusLift& lift,
                                      StructuralOptions opts)
{
  std::size_t order = opts.order != 0 ? opts.order : series_order(lift);
  const auto basis = enumerate_basis(d);
  for (unsigned attempt = 0;; ++attempt) {
    std::vector<ColumnVector> cols(basis.size());
    try {
      parallel_for(basis.size(), opts.threads, [&](std::size_t k) {
        const BasisElement& e = basis[k];
        cols[k] = e.block == Block::H0 ? h0_column(d, lift, e.i, e.j, order) : h1_column(d, e.i, e.j);
      });
    } catch (const Error& err) {
      if (err.code() != ErrorCode::TruncationInsufficient || attempt >= opts.max_retries) throw;
      std::fprintf(stderr, "divfrob: %s; retrying at order %zu\n", err.what(), 2 * order);
      order *= 2;
      continue;
    }
    return from_columns(d, cols);
  }
}

FpMatrix hyperelliptic_hw(const DerivedParams& d)
{
  if (d.n != 2 || d.p == 2) {
    throw Error(ErrorCode::NotHyperelliptic, "classical formula needs n = 2 and odd p");
  }
  const FpPoly h = fp_pow(d.f_modp, (d.p - 1) / 2);
  FpMatrix m(d.p, d.g);
  const long p = static_cast<long>(d.p);
  for (std::size_t k = 1; k <= d.g; ++k)
    for (std::size_t i = 1; i <= d.g; ++i)
      m.at(k - 1, i - 1) = h[p * static_cast<long>(i) - static_cast<long>(k)];
  return m;
}

}  // namespace divfrob::oracle
