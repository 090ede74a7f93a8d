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
#include <functional>
#include <string_view>
#include <vector>

#include "divfrob/charts.hpp"
#include "divfrob/curve.hpp"
#include "divfrob/froblift.hpp"
#include "divfrob/linalg.hpp"

namespace divfrob {

enum class Order { Filtration, Isotypic };

std::string_view order_name(Order o);

/// Data shared by every column of class j.
struct ClassData {
  unsigned j = 0;
  unsigned a = 0;
  unsigned b = 0;
  FpPoly F;   // f^a
  FpPoly IP;  // trunc_inverse(f, N)^{a+1} mod t^N
  FpPoly Qc;  // qcart(j)
};

/// Series order used for H0 columns: dv + 1 + extra.
std::size_t series_order(const FrobeniusLift& lift, std::size_t extra = 0);

ClassData class_data(const DerivedParams& d, const FrobeniusLift& lift, unsigned j,
                     std::size_t extra_order = 0);

ColumnVector hw_column(const DerivedParams& d, long i, unsigned j);
ColumnVector hw_column(const DerivedParams& d, const ClassData& cd, long i);

ColumnVector upper_right_column(const DerivedParams& d, long i, unsigned j);
ColumnVector upper_right_column(const DerivedParams& d, const ClassData& cd, long i);

ColumnVector lower_left_column(const DerivedParams& d, const FrobeniusLift& lift, long i,
                               unsigned j);
ColumnVector lower_left_column(const DerivedParams& d, const FrobeniusLift& lift,
                               const ClassData& cd, long i);

ColumnVector cartier_column(const DerivedParams& d, const FrobeniusLift& lift, long i, unsigned j);
ColumnVector cartier_column(const DerivedParams& d, const FrobeniusLift& lift,
                            const ClassData& cd, long i);

struct DividedFrobeniusMatrix {
  DerivedParams curve;
  Order order = Order::Filtration;
  FpMatrix m;
  std::vector<BasisElement> labels;  // rows and columns share the basis
};

struct AssembleOptions {
  unsigned threads = 0;         // 0: hardware concurrency
  std::size_t extra_order = 0;  // added to the series order dv + 1
  bool require_invertible = true;
};

/// Throws SingularMatrix if require_invertible and det = 0.
DividedFrobeniusMatrix assemble(const DerivedParams& d, const FrobeniusLift& lift,
                                Order order = Order::Filtration, AssembleOptions opts = {});

/// Builds a filtration-ordered matrix from one column per basis element.
DividedFrobeniusMatrix from_columns(const DerivedParams& d, const std::vector<ColumnVector>& cols);

DividedFrobeniusMatrix reorder(const DividedFrobeniusMatrix& mat, Order order);

enum class Quadrant { Cartier, UpperRight, LowerLeft, HasseWitt };

/// g x g quadrant of a filtration-ordered matrix.
FpMatrix quadrant(const DividedFrobeniusMatrix& mat, Quadrant q);

/// y-exponent class the image of a basis element is supported on.
unsigned image_class(const DerivedParams& d, const BasisElement& src);

/// True if every column is supported on image_class(source) only, with
/// H0 sources hitting the classes b (H0 rows) and n-b (H1 rows) and H1
/// sources hitting n-b (H0 rows) and b (H1 rows).
bool support_ok(const DividedFrobeniusMatrix& mat);

/// Runs body(k) for k in [0, count) on up to threads workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace divfrob
