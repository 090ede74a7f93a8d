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

#include <cstddef>

#include "divfrob/blocks.hpp"
#include "divfrob/charts.hpp"

namespace divfrob::oracle {

/// Degree-one data of the Deligne-Illusie morphism on omega_{i,j}:
/// fU - fV = dh on the overlap.
struct DiComponents {
  Differential fU;  // chart U, f^{-a} expanded to the series order
  Differential fV;  // chart V, exact
  Function h;       // chart U
  std::size_t order = 0;
};

DiComponents di1_components(const DerivedParams& d, const FrobeniusLift& lift, long i, unsigned j,
                            std::size_t order);

/// Keeps the coefficients of t^{-a} y^j with 1 <= a <= rj - 1.
ColumnVector cech_h1_class(const DerivedParams& d, const Function& x);

struct StructuralOptions {
  std::size_t order = 0;  // 0: dv + 1
  unsigned threads = 0;
  unsigned max_retries = 4;
};

/// Full matrix by the chart-by-chart recipe, in filtration order.
/// Throws OracleMismatch if an intermediate that must be a global
/// differential is not, and TruncationInsufficient if retries run out.
DividedFrobeniusMatrix structural_phi(const DerivedParams& d, const FrobeniusLift& lift,
                                      StructuralOptions opts = {});

/// Classical Hasse-Witt matrix of y^2 = f: entry (k, i) = f^{(p-1)/2}[pi - k].
FpMatrix hyperelliptic_hw(const DerivedParams& d);

}  // namespace divfrob::oracle
