// Copyright 2026 The Parlab Authors
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

#include "parlab/simd/kernels.h"

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "kernels_internal.h"

namespace parlab::simd {
namespace {

const KernelTable kScalarTable = internal::MakeScalarTable();

std::atomic<const KernelTable*> g_active{nullptr};
std::atomic<Isa> g_isa{Isa::kScalar};

Isa DefaultIsa() {
  const char* env = std::getenv("PARLAB_ISA");
  if (env != nullptr && std::string_view(env) == "scalar") return Isa::kScalar;
  return CpuHasAvx2() ? Isa::kAvx2 : Isa::kScalar;
}

}  // namespace

bool CpuHasAvx2() {
#if defined(__x86_64__) || defined(__i386__)
  static const bool has = __builtin_cpu_supports("avx2") &&
                          __builtin_cpu_supports("fma");
  return has;
#else
  return false;
#endif
}

const KernelTable& ScalarKernels() { return kScalarTable; }

const KernelTable& Avx2Kernels() {
  static const KernelTable table =
      CpuHasAvx2() ? internal::MakeAvx2Table() : kScalarTable;
  return table;
}

Isa ForceIsa(Isa isa) {
  if (isa == Isa::kAvx2 && !CpuHasAvx2()) isa = Isa::kScalar;
  g_active.store(isa == Isa::kAvx2 ? &Avx2Kernels() : &kScalarTable);
  g_isa.store(isa);
  return isa;
}

Isa ActiveIsa() {
  Kernels();
  return g_isa.load();
}

const KernelTable& Kernels() {
  const KernelTable* t = g_active.load(std::memory_order_acquire);
  if (t != nullptr) return *t;
  ForceIsa(DefaultIsa());
  return *g_active.load();
}

std::string_view IsaName(Isa isa) {
  return isa == Isa::kAvx2 ? "avx2" : "scalar";
}

}  // namespace parlab::simd
