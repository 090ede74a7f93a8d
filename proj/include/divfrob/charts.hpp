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

#include <map>

#include "divfrob/curve.hpp"
#include "divfrob/modring.hpp"

namespace divfrob {

/// U: coordinates (t, y), y^n = f(t).  V: coordinates (s, z) at infinity,
/// s = 1/t, z = t^{-r} y, z^n = f2(s).
enum class Chart { U, V };

/// sum_j c_j * y^j (or z^j on V).
struct Function {
  Chart chart = Chart::U;
  LaurentGraded c;
};

/// sum_j c_j * y^j dt / y^{n-1} (or z^j ds / z^{n-1} on V).  Component j
/// therefore carries the class dt / y^{n-1-j}.
struct Differential {
  Chart chart = Chart::U;
  LaurentGraded c;
};

/// Sparse column of the Frobenius matrix.
struct ColumnVector {
  BasisElement source;
  std::map<BasisElement, u64> entries;

  u64 at(const BasisElement& e) const
  {
    auto it = entries.find(e);
    return it == entries.end() ? 0 : it->second;
  }
  void add(const BasisElement& e, u64 c, u64 p);
};

Function make_function(const DerivedParams& d, Chart chart);
Differential make_differential(const DerivedParams& d, Chart chart);

/// Uses n y^{n-1} dy = f'(t) dt (resp. f2 on V).
Differential exterior_derivative(const DerivedParams& d, const Function& h);

/// s^a z^j = t^{-a-rj} y^j.
Function to_chart(const DerivedParams& d, const Function& h, Chart target);
/// s^m z^j ds/z^{n-1} = -t^{r(n-1-j)-2-m} y^j dt/y^{n-1}.
Differential to_chart(const DerivedParams& d, const Differential& w, Chart target);

struct H0Projection {
  ColumnVector column;
  /// Number of nonzero terms outside the H0 summand.
  std::size_t residual_terms = 0;
};

/// H0 component of w in the chart decomposition; throws ChartMismatch if
/// w is not expressed in the requested chart.
H0Projection project_h0(const DerivedParams& d, const Differential& w, Chart chart);

struct TauSplit {
  Differential alpha_u;  // chart U
  Differential alpha_v;  // chart V
};

/// d(t^{-i} y^j) = alpha_u + alpha_v with alpha_u regular on U and
/// alpha_v regular on V.
TauSplit tau_split(const DerivedParams& d, long i, unsigned j);

}  // namespace divfrob
