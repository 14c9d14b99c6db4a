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

#include "equilat/kernels.hpp"

namespace equilat::kernels {

std::size_t first_unlinked_scalar(std::uint64_t a, std::uint64_t b,
                                  std::span<const std::uint64_t> as,
                                  std::span<const std::uint64_t> bs) {
  const std::size_t m = as.size();
  for (std::size_t j = 0; j < m; ++j) {
    if (((a & bs[j]) | (as[j] & b)) == 0) return j;
  }
  return m;
}

}  // namespace equilat::kernels
