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
#include <cstdint>
#include <span>
#include <string_view>

namespace divfrob::kernels {

/// Instruction set a kernel table was built for.
enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

/// Sum of x[k] * y[k] reduced mod p.
///
/// Inputs are residues in [0, p) with p < 2^32, stored in 64-bit slots.
/// Products are accumulated lazily in 64-bit lanes and folded mod p only
/// when the next product could overflow, so the result is exact for every
/// supported modulus.
using DotModFn = std::uint64_t (*)(const std::uint64_t* x, const std::uint64_t* y,
                                   std::size_t len, std::uint64_t p);

std::uint64_t dot_mod_scalar(const std::uint64_t* x, const std::uint64_t* y, std::size_t len,
                             std::uint64_t p);
#if defined(DIVFROB_HAVE_AVX2)
std::uint64_t dot_mod_avx2(const std::uint64_t* x, const std::uint64_t* y, std::size_t len,
                           std::uint64_t p);
#endif

/// Number of products of two residues mod p that fit in an unsigned 64-bit
/// accumulator that starts below p.
std::uint64_t lazy_batch(std::uint64_t p);

/// Best ISA supported by the running CPU (and compiled in).
Isa detect_isa();

/// ISA currently used by dot_mod(). Defaults to detect_isa(); the
/// DIVFROB_ISA environment variable ("scalar" or "avx2") overrides it at
/// first use.
Isa active_isa();

/// Forces the dispatch target. Returns false if the ISA is unavailable.
bool set_active_isa(Isa isa);

bool isa_available(Isa isa);

DotModFn dot_mod_for(Isa isa);

extern DotModFn g_dot_mod;

inline std::uint64_t dot_mod(std::span<const std::uint64_t> x, std::span<const std::uint64_t> y,
                             std::uint64_t p)
{
  const std::size_t len = x.size() < y.size() ? x.size() : y.size();
  return g_dot_mod(x.data(), y.data(), len, p);
}

}  // namespace divfrob::kernels
