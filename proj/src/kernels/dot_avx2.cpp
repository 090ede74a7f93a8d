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

#include "divfrob/kernels.hpp"

#include <immintrin.h>

namespace divfrob::kernels {

// Four 64-bit lanes; _mm256_mul_epu32 multiplies the low 32 bits of each
// lane, which hold the whole residue because p < 2^32.
std::uint64_t dot_mod_avx2(const std::uint64_t* x, const std::uint64_t* y, std::size_t len,
                           std::uint64_t p)
{
  const std::uint64_t batch = lazy_batch(p);
  __m256i acc = _mm256_setzero_si256();
  std::uint64_t folded = 0;
  std::uint64_t pending = 0;
  std::size_t k = 0;

  auto fold = [&] {
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    folded = (folded + lanes[0] % p + lanes[1] % p + lanes[2] % p + lanes[3] % p) % p;
    acc = _mm256_setzero_si256();
    pending = 0;
  };

  for (; k + 4 <= len; k += 4) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + k));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + k));
    acc = _mm256_add_epi64(acc, _mm256_mul_epu32(a, b));
    if (++pending == batch) fold();
  }
  fold();

  std::uint64_t tail = 0;
  for (; k < len; ++k) tail = (tail + (x[k] * y[k]) % p) % p;
  return (folded + tail) % p;
}

}  // namespace divfrob::kernels
