/* Copyright 2026 The Equilat Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <atomic>

#include "equilat/kernels.hpp"

namespace equilat::kernels {

namespace {

Isa probe() {
#if defined(EQUILAT_HAVE_AVX2_KERNELS)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return Isa::kAvx2;
#endif
  return Isa::kScalar;
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{detected_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
  }
  return "unknown";
}

Isa detected_isa() {
  static const Isa isa = probe();
  return isa;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

Isa set_active_isa(Isa isa) {
  if (isa == Isa::kAvx2 && detected_isa() != Isa::kAvx2) isa = Isa::kScalar;
  active().store(isa, std::memory_order_relaxed);
  return isa;
}

std::size_t first_unlinked(std::uint64_t a, std::uint64_t b,
                           std::span<const std::uint64_t> as,
                           std::span<const std::uint64_t> bs) {
#if defined(EQUILAT_HAVE_AVX2_KERNELS)
  if (active_isa() == Isa::kAvx2) return first_unlinked_avx2(a, b, as, bs);
#endif
  return first_unlinked_scalar(a, b, as, bs);
}

}  // namespace equilat::kernels
