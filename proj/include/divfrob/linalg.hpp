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
#include <vector>

#include "divfrob/modring.hpp"

namespace divfrob {

/// Square matrix over F_p, row-major.
struct FpMatrix {
  u64 p = 0;
  std::size_t dim = 0;
  std::vector<u64> a;

  FpMatrix() = default;
  FpMatrix(u64 p_, std::size_t dim_) : p(p_), dim(dim_), a(dim_ * dim_, 0) {}

  u64& at(std::size_t r, std::size_t c) { return a[r * dim + c]; }
  u64 at(std::size_t r, std::size_t c) const { return a[r * dim + c]; }

  /// Submatrix on the given row and column indices.
  FpMatrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
};

u64 det_mod_p(FpMatrix m);
std::size_t rank_mod_p(FpMatrix m);

}  // namespace divfrob
