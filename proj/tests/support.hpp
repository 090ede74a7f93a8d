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

#include <cstdint>
#include <random>
#include <vector>

#include "divfrob/blocks.hpp"
#include "divfrob/curve.hpp"
#include "divfrob/froblift.hpp"
#include "fixtures.hpp"

namespace support {

using divfrob::u64;

inline divfrob::DerivedParams curve(u64 p, unsigned n, const std::vector<long long>& f)
{
  std::vector<divfrob::i64> c(f.begin(), f.end());
  return divfrob::validate(divfrob::CurveParams::from_integers(p, n, c));
}

inline fixtures::Matrix rows(const divfrob::FpMatrix& m)
{
  fixtures::Matrix out(m.dim, std::vector<std::uint64_t>(m.dim));
  for (std::size_t r = 0; r < m.dim; ++r)
    for (std::size_t c = 0; c < m.dim; ++c) out[r][c] = m.at(r, c);
  return out;
}

// Schoolbook product of plain coefficient vectors mod m, written without
// the library's multiplication so it can serve as a reference.
inline std::vector<u64> naive_mul(const std::vector<u64>& a, const std::vector<u64>& b, u64 m)
{
  if (a.empty() || b.empty()) return {};
  std::vector<u64> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<u64>((out[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % m);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

inline std::vector<u64> naive_pow(const std::vector<u64>& a, u64 e, u64 m)
{
  std::vector<u64> out{1 % m};
  for (u64 k = 0; k < e; ++k) out = naive_mul(out, a, m);
  return out;
}

// Inverse mod t^order by solving the triangular system f * I = 1 one
// coefficient at a time.
inline std::vector<u64> long_division_inverse(const std::vector<u64>& f, std::size_t order, u64 p)
{
  std::vector<u64> inv(order, 0);
  const u64 f0inv = divfrob::inv_mod(f[0], p);
  for (std::size_t k = 0; k < order; ++k) {
    u64 s = k == 0 ? 1 : 0;
    for (std::size_t i = 1; i <= k && i < f.size(); ++i) s = (s + p - f[i] * inv[k - i] % p) % p;
    inv[k] = s * f0inv % p;
  }
  while (!inv.empty() && inv.back() == 0) inv.pop_back();
  return inv;
}

inline const std::vector<u64>& small_primes()
{
  static const std::vector<u64> primes = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  return primes;
}

struct RandomCurve {
  u64 p;
  unsigned n;
  std::vector<long long> f;
  divfrob::DerivedParams d;
};

// Valid curves with p <= 50, n <= max_n, deg f <= 13; coefficients are
// random mod p^2. fixed_n = 0 draws n from [2, max_n].
inline std::vector<RandomCurve> random_corpus(std::uint64_t seed, std::size_t count,
                                              unsigned fixed_n = 0, unsigned max_n = 5,
                                              unsigned max_l = 13)
{
  std::mt19937_64 rng(seed);
  std::vector<RandomCurve> out;
  while (out.size() < count) {
    const auto& ps = small_primes();
    const u64 p = ps[rng() % ps.size()];
    const unsigned n = fixed_n ? fixed_n : 2 + static_cast<unsigned>(rng() % (max_n - 1));
    if (n % p == 0) continue;
    std::vector<unsigned> ls;
    for (unsigned l = 2; l <= max_l; ++l)
      if ((l + 1) % n == 0 && l % p != 0) ls.push_back(l);
    if (ls.empty()) continue;
    const unsigned l = ls[rng() % ls.size()];
    std::vector<long long> f(l + 1);
    for (auto& c : f) c = static_cast<long long>(rng() % (p * p));
    f[l] = static_cast<long long>(1 + rng() % (p - 1) + p * (rng() % p));
    try {
      auto d = curve(p, n, f);
      out.push_back({p, n, std::move(f), std::move(d)});
    } catch (const divfrob::Error&) {
    }
  }
  return out;
}

}  // namespace support
