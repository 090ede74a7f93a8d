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
#include "divfrob/froblift.hpp"

namespace divfrob {

namespace {

FpPoly s_pow_p_minus_1_plus_dv(const DerivedParams& d, const FpPoly& v)
{
  return FpPoly::monomial(d.p, 1, d.p - 1) + derivative(v);
}

bool relation_holds(const DerivedParams& d, const FpPoly& v, const FpPoly& b)
{
  const u64 p = d.p;
  const W1Poly lhs = w1_pow(d.f2, p) - compose_power(d.f2, p);
  const FpPoly f2p = compose_power(d.f2_modp, p);
  const FpPoly df2p = compose_power(derivative(d.f2_modp), p);
  const FpPoly inner = v * df2p - scale(b * f2p, d.n % p);
  return lhs == times_p(inner);
}

}  // namespace

FpPoly pcal(const DerivedParams& d)
{
  return w1_divp(compose_power(d.f, d.p) - w1_pow(d.f, d.p));
}

VbPair vb_pair(const DerivedParams& d)
{
  const u64 p = d.p;
  VbPair out;
  out.qlift = w1_divp(w1_pow(d.f2, p) - compose_power(d.f2, p));
  const Bezout bz = fp_bezout(derivative(d.f2_modp), d.f2_modp);
  if (bz.g.degree() != 0) {
    throw Error(ErrorCode::LiftIdentityFailed, "f2 and f2' are not coprime mod p");
  }
  // Over F_p, x -> x^p fixes coefficients, so u^p = u(s^p).
  const FpPoly v0 = compose_power(bz.u, p);
  const FpPoly b0 = compose_power(bz.w, p);
  out.v = out.qlift * v0;
  out.b = scale(out.qlift * b0, p - d.n_inv);
  if (!relation_holds(d, out.v, out.b)) {
    throw Error(ErrorCode::LiftIdentityFailed, "v f2'^p - n b f2^p differs from the lift defect");
  }
  return out;
}

FrobeniusLift compute_lift(const DerivedParams& d)
{
  FrobeniusLift lift;
  lift.pcal = pcal(d);
  auto [q, v, b] = vb_pair(d);
  lift.qlift = std::move(q);
  lift.v = std::move(v);
  lift.b = std::move(b);
  const long excess = lift.v.degree() - 2 * static_cast<long>(d.p);
  lift.dv = excess > 0 ? static_cast<unsigned>(excess) : 0;
  return lift;
}

FpPoly qcart(const DerivedParams& d, const FrobeniusLift& lift, unsigned j)
{
  const EuclidPj e = euclid_pj(d.p, j, d.n);
  return exact_divide(s_pow_p_minus_1_plus_dv(d, lift.v), fp_pow(d.f2_modp, e.a));
}

LiftReport check_lift(const DerivedParams& d, const FrobeniusLift& lift)
{
  LiftReport rep;
  rep.relation = relation_holds(d, lift.v, lift.b);
  const FpPoly target = s_pow_p_minus_1_plus_dv(d, lift.v);
  rep.divisibility = divmod(target, fp_pow(d.f2_modp, d.p - 1)).rem.is_zero();
  rep.fu_consistency = compose_power(d.f, d.p) == w1_pow(d.f, d.p) + times_p(lift.pcal);
  return rep;
}

}  // namespace divfrob
