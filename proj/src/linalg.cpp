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
#include "divfrob/linalg.hpp"

#include <utility>

namespace divfrob {

FpMatrix FpMatrix::select(const std::vector<std::size_t>& rows,
                          const std::vector<std::size_t>& cols) const
{
  FpMatrix out(p, rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size() && c < rows.size(); ++c)
      out.at(r, c) = at(rows[r], cols[c]);
  return out;
}

namespace {

// Row reduction in place; returns (rank, determinant).
std::pair<std::size_t, u64> eliminate(FpMatrix& m)
{
  const u64 p = m.p;
  const std::size_t n = m.dim;
  u64 det = 1 % p;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && m.at(piv, col) == 0) ++piv;
    if (piv == n) {
      det = 0;
      continue;
    }
    if (piv != rank) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m.at(piv, c), m.at(rank, c));
      det = det == 0 ? 0 : p - det;
      if (det == p) det = 0;
    }
    const u64 pv = m.at(rank, col);
    det = mul_mod(det, pv, p);
    const u64 inv = inv_mod(pv, p);
    for (std::size_t r = rank + 1; r < n; ++r) {
      const u64 factor = mul_mod(m.at(r, col), inv, p);
      if (factor == 0) continue;
      for (std::size_t c = col; c < n; ++c)
        m.at(r, c) = sub_mod(m.at(r, c), mul_mod(factor, m.at(rank, c), p), p);
    }
    ++rank;
  }
  return {rank, rank == n ? det : 0};
}

}  // namespace

u64 det_mod_p(FpMatrix m)
{
  if (m.dim == 0) return 1 % m.p;
  return eliminate(m).second;
}

std::size_t rank_mod_p(FpMatrix m) { return eliminate(m).first; }

}  // namespace divfrob
