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
#include "divfrob/charts.hpp"

namespace divfrob {

void ColumnVector::add(const BasisElement& e, u64 c, u64 p)
{
  c %= p;
  if (c == 0) return;
  auto [it, inserted] = entries.emplace(e, c);
  if (!inserted) {
    it->second = add_mod(it->second, c, p);
    if (it->second == 0) entries.erase(it);
  }
}

Function make_function(const DerivedParams& d, Chart chart) { return {chart, LaurentGraded(d.p, d.n)}; }

Differential make_differential(const DerivedParams& d, Chart chart)
{
  return {chart, LaurentGraded(d.p, d.n)};
}

Differential exterior_derivative(const DerivedParams& d, const Function& h)
{
  const FpPoly& f = h.chart == Chart::U ? d.f_modp : d.f2_modp;
  const FpPoly df = derivative(f);
  Differential out = make_differential(d, h.chart);
  for (unsigned j = 0; j < d.n; ++j) {
    const LaurentPoly& c = h.c[j];
    if (c.is_zero()) continue;
    if (j == 0) {
      out.c[d.n - 1] += derivative(c);
      continue;
    }
    const u64 jn = mul_mod(j, d.n_inv, d.p);
    out.c[j - 1] += derivative(c) * f;
    out.c[j - 1] += scale(c * df, jn);
  }
  return out;
}

Function to_chart(const DerivedParams& d, const Function& h, Chart target)
{
  if (h.chart == target) return h;
  // s^a z^j = t^{-a-rj} y^j and symmetrically t^a y^j = s^{-a-rj} z^j.
  Function out = make_function(d, target);
  for (unsigned j = 0; j < d.n; ++j) {
    const LaurentPoly inv = invert_variable(h.c[j]);
    if (inv.is_zero()) continue;
    out.c[j] = LaurentPoly(inv.tail_from(inv.low()), inv.low() - static_cast<long>(d.r * j));
  }
  return out;
}

Differential to_chart(const DerivedParams& d, const Differential& w, Chart target)
{
  if (w.chart == target) return w;
  // The rule is an involution: both directions read
  // x^m w^j dx/w^{n-1} = -x'^{r(n-1-j)-2-m} w'^j dx'/w'^{n-1}.
  Differential out = make_differential(d, target);
  for (unsigned j = 0; j < d.n; ++j) {
    const LaurentPoly inv = invert_variable(w.c[j]);
    if (inv.is_zero()) continue;
    const long shift = static_cast<long>(d.r * (d.n - 1 - j)) - 2;
    out.c[j] = scale(LaurentPoly(inv.tail_from(inv.low()), inv.low() + shift), d.p - 1);
  }
  return out;
}

H0Projection project_h0(const DerivedParams& d, const Differential& w, Chart chart)
{
  if (w.chart != chart) throw Error(ErrorCode::ChartMismatch, "differential is in the other chart");
  H0Projection out;
  for (unsigned c = 0; c < d.n; ++c) {
    const LaurentPoly& poly = w.c[c];
    if (poly.is_zero()) continue;
    const unsigned j = d.n - 1 - c;
    const long top = static_cast<long>(d.r * j) - 2;
    for (long e = poly.low(); e <= poly.high(); ++e) {
      const u64 x = poly[e];
      if (x == 0) continue;
      if (j == 0 || e < 0 || e > top) {
        ++out.residual_terms;
        continue;
      }
      if (chart == Chart::U) {
        out.column.add({Block::H0, j, e}, x, d.p);
      } else {
        out.column.add({Block::H0, j, top - e}, d.p - x, d.p);
      }
    }
  }
  return out;
}

TauSplit tau_split(const DerivedParams& d, long i, unsigned j)
{
  const u64 p = d.p;
  const FpPoly& f = d.f_modp;
  const long n = d.n;
  TauSplit out{make_differential(d, Chart::U), make_differential(d, Chart::V)};
  LaurentPoly& au = out.alpha_u.c[j - 1];
  LaurentPoly& av = out.alpha_v.c[j - 1];
  au = LaurentPoly(p);
  av = LaurentPoly(p);
  const long aj = static_cast<long>((d.n - j) * d.r) - 2;
  for (long k = i + 1; k <= static_cast<long>(d.l); ++k) {
    const u64 coef = frac_mod(static_cast<i64>(j) * k - i * n, n, p);
    au.add_term(k - i - 1, mul_mod(coef, f[k], p));
  }
  for (long k = 0; k <= i; ++k) {
    const u64 coef = frac_mod(i * n - static_cast<i64>(j) * k, n, p);
    av.add_term(i + 1 + aj - k, mul_mod(coef, f[k], p));
  }
  return out;
}

}  // namespace divfrob
