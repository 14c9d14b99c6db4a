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

// Compiled with -mavx2; only reached through dispatch after a cpuid check.

#include <immintrin.h>

#include "equilat/kernels.hpp"

namespace equilat::kernels {

std::size_t first_unlinked_avx2(std::uint64_t a, std::uint64_t b,
                                std::span<const std::uint64_t> as,
                                std::span<const std::uint64_t> bs) {
  const std::size_t m = as.size();
  const __m256i va = _mm256_set1_epi64x(static_cast<long long>(a));
  const __m256i vb = _mm256_set1_epi64x(static_cast<long long>(b));
  const __m256i zero = _mm256_setzero_si256();

  std::size_t j = 0;
  for (; j + 4 <= m; j += 4) {
    const __m256i ma = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(as.data() + j));
    const __m256i mb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bs.data() + j));
    const __m256i cross = _mm256_or_si256(_mm256_and_si256(va, mb), _mm256_and_si256(ma, vb));
    const int hits = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(cross, zero)));
    if (hits != 0) return j + static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(hits)));
  }
  for (; j < m; ++j) {
    if (((a & bs[j]) | (as[j] & b)) == 0) return j;
  }
  return m;
}

}  // namespace equilat::kernels
