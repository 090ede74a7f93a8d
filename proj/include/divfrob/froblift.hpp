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

#include "divfrob/curve.hpp"
#include "divfrob/modring.hpp"

namespace divfrob {

/// Frobenius lifts mod p^2 on the two affine charts.
///
/// On the chart where y is invertible, t -> t^p and
/// y -> y^p (1 + p*pcal(t) / (n y^{np})).  At infinity, s -> s^p + p*v(s)
/// and z is fixed by b(s) through
///   f2(s)^p - f2(s^p) = p (v f2'^p - n b f2^p).
struct FrobeniusLift {
  FpPoly pcal;
  FpPoly qlift;
  FpPoly v;
  FpPoly b;
  unsigned dv = 0;  // max(0, deg v - 2p)
};

/// (f(t^p) - f(t)^p) / p.
FpPoly pcal(const DerivedParams& d);

struct VbPair {
  FpPoly qlift;
  FpPoly v;
  FpPoly b;
};

/// Throws LiftIdentityFailed if the defining relation does not hold.
VbPair vb_pair(const DerivedParams& d);

FrobeniusLift compute_lift(const DerivedParams& d);

/// (s^{p-1} + v'(s)) / f2(s)^a with a from euclid_pj(p, j, n).
FpPoly qcart(const DerivedParams& d, const FrobeniusLift& lift, unsigned j);

struct LiftReport {
  bool relation = false;      // the W1[s] relation between v, b and f2
  bool divisibility = false;  // f2^{p-1} | v' + s^{p-1}
  bool fu_consistency = false;  // f(t^p) = f(t)^p + p*pcal in W1[t]

  bool all() const { return relation && divisibility && fu_consistency; }
};

LiftReport check_lift(const DerivedParams& d, const FrobeniusLift& lift);

}  // namespace divfrob
