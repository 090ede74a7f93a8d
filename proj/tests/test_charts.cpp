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
#include "doctest.h"
#include "support.hpp"

using namespace divfrob;

namespace {

// d(t^{-i} y^j) straight from the quotient rule and n y^{n-1} dy = f' dt.
Differential d_of_h(const DerivedParams& d, long i, unsigned j)
{
  const u64 p = d.p;
  Differential out = make_differential(d, Chart::U);
  LaurentPoly& c = out.c[j - 1];
  c = LaurentPoly(p);
  for (long k = 0; k <= static_cast<long>(d.l); ++k) {
    const u64 fk = d.f_modp[k];
    c.add_term(k - i - 1, mul_mod(reduce_signed(-i, p), fk, p));
    c.add_term(k - i - 1, mul_mod(frac_mod(static_cast<i64>(j) * k, d.n, p), fk, p));
  }
  return out;
}

}  // namespace

TEST_CASE("tau_split sums to the exterior derivative")
{
  auto check_curve = [](const DerivedParams& d) {
    for (const auto& e : enumerate_basis(d)) {
      if (e.block != Block::H1) continue;
      const TauSplit ts = tau_split(d, e.i, e.j);
      CHECK(ts.alpha_u.chart == Chart::U);
      CHECK(ts.alpha_v.chart == Chart::V);
      Differential sum = ts.alpha_u;
      sum.c += to_chart(d, ts.alpha_v, Chart::U).c;
      CHECK(sum.c == d_of_h(d, e.i, e.j).c);

      Function h = make_function(d, Chart::U);
      h.c[e.j] = LaurentPoly(FpPoly::constant(d.p, 1), -e.i);
      CHECK(exterior_derivative(d, h).c == sum.c);
      // alpha_u regular on U (no negative t powers), alpha_v regular on V
      CHECK((ts.alpha_u.c[e.j - 1].is_zero() || ts.alpha_u.c[e.j - 1].low() >= 0));
      CHECK((ts.alpha_v.c[e.j - 1].is_zero() || ts.alpha_v.c[e.j - 1].low() >= 0));
    }
  };
  check_curve(support::curve(17, 3, fixtures::kQuintic));
  check_curve(support::curve(13, 4, fixtures::kSeptic));
  for (const auto& rc : support::random_corpus(41, 25)) check_curve(rc.d);
}

TEST_CASE("tau_split index split")
{
  const auto d = support::curve(17, 3, fixtures::kQuintic);
  // i = 1: alpha_v uses k = 0, 1 only, so it has exactly the two exponents i+1+a_j-k
  const TauSplit ts = tau_split(d, 1, 2);
  const long aj = static_cast<long>((3 - 2) * 2) - 2;
  CHECK(ts.alpha_v.c[1].high() <= 2 + aj);
  CHECK(ts.alpha_v.c[1].low() >= 1 + aj);
  // alpha_u has exponents k - i - 1 for k = i+1..l
  CHECK(ts.alpha_u.c[1].high() <= 5 - 2);
}

TEST_CASE("chart changes are involutions and respect d")
{
  const auto d = support::curve(13, 4, fixtures::kSeptic);
  Function h = make_function(d, Chart::U);
  h.c[0] = LaurentPoly(FpPoly(13, {1, 2, 3}), -4);
  h.c[2] = LaurentPoly(FpPoly(13, {5, 0, 7}), -9);
  h.c[3] = LaurentPoly(FpPoly(13, {4}), 3);
  const Function hv = to_chart(d, h, Chart::V);
  CHECK(to_chart(d, hv, Chart::U).c == h.c);
  // d commutes with the change of chart
  CHECK(to_chart(d, exterior_derivative(d, hv), Chart::U).c == exterior_derivative(d, h).c);

  Differential w = make_differential(d, Chart::V);
  w.c[1] = LaurentPoly(FpPoly(13, {1, 1}), 2);
  CHECK(to_chart(d, to_chart(d, w, Chart::U), Chart::V).c == w.c);
}

TEST_CASE("project_h0 is the identity on the basis in both charts")
{
  const auto d = support::curve(13, 4, fixtures::kSeptic);
  for (const auto& e : enumerate_basis(d)) {
    if (e.block != Block::H0) continue;
    Differential w = make_differential(d, Chart::U);
    w.c[d.n - 1 - e.j] = LaurentPoly(FpPoly::constant(d.p, 1), e.i);
    auto pu = project_h0(d, w, Chart::U);
    CHECK(pu.residual_terms == 0);
    CHECK(pu.column.entries.size() == 1);
    CHECK(pu.column.at(e) == 1);
    auto pv = project_h0(d, to_chart(d, w, Chart::V), Chart::V);
    CHECK(pv.residual_terms == 0);
    CHECK(pv.column.entries == pu.column.entries);
  }
  Differential outside = make_differential(d, Chart::U);
  outside.c[d.n - 2] = LaurentPoly(FpPoly::constant(d.p, 1), static_cast<long>(d.r) - 1);  // t^{rj-1}dt/y
  auto po = project_h0(d, outside, Chart::U);
  CHECK(po.column.entries.empty());
  CHECK(po.residual_terms == 1);
  try {
    project_h0(d, outside, Chart::V);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ChartMismatch);
  }
}
