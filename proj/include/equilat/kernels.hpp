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

#pragma once

// Bitmask cross-intersection kernels.
//
// A pair (A, B) of subsets of a ground set of at most 64 elements is stored as
// two uint64 masks. Two pairs are linked when A1 & B2 or A2 & B1 is nonzero.
// The inner loop "does one candidate link with every member of a family" is
// the only data-parallel loop of the library; it has a scalar reference and
// an AVX2 variant, selected at runtime.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace equilat::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

/// Best ISA the running CPU supports (and this build was compiled for).
Isa detected_isa();

/// ISA currently used by the dispatching entry points.
Isa active_isa();

/// Pins the dispatch target. Requesting an unsupported ISA falls back to
/// scalar. Returns the ISA actually selected.
Isa set_active_isa(Isa isa);

/// Index of the first member j with (a & bs[j]) == 0 and (as[j] & b) == 0,
/// or as.size() when the candidate links with every member.
/// `as` and `bs` must have equal length.
std::size_t first_unlinked(std::uint64_t a, std::uint64_t b,
                           std::span<const std::uint64_t> as,
                           std::span<const std::uint64_t> bs);

std::size_t first_unlinked_scalar(std::uint64_t a, std::uint64_t b,
                                  std::span<const std::uint64_t> as,
                                  std::span<const std::uint64_t> bs);

#if defined(__x86_64__) || defined(_M_X64)
#define EQUILAT_HAVE_AVX2_KERNELS 1
std::size_t first_unlinked_avx2(std::uint64_t a, std::uint64_t b,
                                std::span<const std::uint64_t> as,
                                std::span<const std::uint64_t> bs);
#endif

}  // namespace equilat::kernels
