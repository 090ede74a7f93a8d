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

#include <cstdlib>
#include <cstring>

namespace divfrob::kernels {

namespace {

DotModFn initial_dot_mod()
{
  Isa isa = detect_isa();
  if (const char* env = std::getenv("DIVFROB_ISA")) {
    if (std::strcmp(env, "scalar") == 0) isa = Isa::Scalar;
    if (std::strcmp(env, "avx2") == 0 && isa_available(Isa::Avx2)) isa = Isa::Avx2;
  }
  return dot_mod_for(isa);
}

}  // namespace

DotModFn g_dot_mod = initial_dot_mod();

std::string_view isa_name(Isa isa)
{
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa)
{
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(DIVFROB_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa detect_isa()
{
  return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

DotModFn dot_mod_for(Isa isa)
{
#if defined(DIVFROB_HAVE_AVX2)
  if (isa == Isa::Avx2) return &dot_mod_avx2;
#endif
  (void)isa;
  return &dot_mod_scalar;
}

Isa active_isa()
{
#if defined(DIVFROB_HAVE_AVX2)
  if (g_dot_mod == &dot_mod_avx2) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

bool set_active_isa(Isa isa)
{
  if (!isa_available(isa)) return false;
  g_dot_mod = dot_mod_for(isa);
  return true;
}

}  // namespace divfrob::kernels
