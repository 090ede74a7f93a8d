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

#include <limits>

namespace divfrob::kernels {

std::uint64_t lazy_batch(std::uint64_t p)
{
  const std::uint64_t m = p - 1;
  if (m == 0) return std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t sq = m * m;  // < 2^64 since p < 2^32
  // acc < p before the batch, so leave room for it.
  const std::uint64_t room = std::numeric_limits<std::uint64_t>::max() - m;
  const std::uint64_t batch = room / sq;
  return batch == 0 ? 1 : batch;
}

std::uint64_t dot_mod_scalar(const std::uint64_t* x, const std::uint64_t* y, std::size_t len,
                             std::uint64_t p)
{
  const std::uint64_t batch = lazy_batch(p);
  std::uint64_t acc = 0;
  std::uint64_t pending = 0;
  for (std::size_t k = 0; k < len; ++k) {
    acc += x[k] * y[k];
    if (++pending == batch) {
      acc %= p;
      pending = 0;
    }
  }
  return acc % p;
}

}  // namespace divfrob::kernels
