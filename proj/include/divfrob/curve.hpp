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

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "divfrob/modring.hpp"

namespace divfrob {

/// User input: y^n = f(t) with f stored mod p^2.
struct CurveParams {
  u64 p = 0;
  unsigned n = 0;
  W1Poly f;

  static CurveParams from_integers(u64 p, unsigned n, const std::vector<i64>& f);
  /// Accepts decimal integers of any length (optionally signed).
  static CurveParams from_decimal(u64 p, unsigned n, const std::vector<std::string>& f);
};

struct DerivedParams {
  u64 p = 0;
  unsigned n = 0;
  unsigned l = 0;
  unsigned r = 0;
  unsigned g = 0;
  W1Poly f;
  W1Poly f2;
  FpPoly f_modp;
  FpPoly f2_modp;
  u64 n_inv = 0;  // n^{-1} mod p
};

DerivedParams validate(const CurveParams& params);

struct ShiftResult {
  u64 u = 0;
  W1Poly shifted;
};

/// Smallest u in [0, p) with f(u) != 0 mod p, and f(t + u).
ShiftResult shift_to_unit(u64 p, const W1Poly& f);

struct EuclidPj {
  unsigned a = 0;
  unsigned b = 0;
};

/// pj = a*n + b with 1 <= b <= n-1.
EuclidPj euclid_pj(u64 p, unsigned j, unsigned n);

enum class Block { H0, H1 };

/// H0: omega_{i,j} = t^i dt / y^j.  H1: h_{i,j} = y^j / t^i.
struct BasisElement {
  Block block = Block::H0;
  unsigned j = 0;
  long i = 0;

  auto operator<=>(const BasisElement&) const = default;
};

/// H0 by (j, i), then H1 by (j, i).
std::vector<BasisElement> enumerate_basis(const DerivedParams& d);

/// perm[new_position] = old_position; groups each class j of H0 with the
/// H1 elements of y-exponent n - j.
std::vector<std::size_t> isotypic_permutation(const DerivedParams& d);

/// Number of H0 basis elements of class j (equals rj - 1, possibly 0).
unsigned h0_class_size(const DerivedParams& d, unsigned j);

/// "t^2*y^-2*dt", "y^-1*dt", "t^-3*y^2".
std::string basis_label(const BasisElement& e);
std::optional<BasisElement> parse_basis_label(std::string_view label);

}  // namespace divfrob
