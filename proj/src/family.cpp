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

#include "equilat/family.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <set>
#include <string>
#include <thread>

#include "equilat/error.hpp"
#include "equilat/kernels.hpp"

namespace equilat {

Mask full_mask(int n) {
  require(n >= 0 && n <= kMaxGroundSize, ErrorCode::kInvalidArgument,
          "ground size out of range: " + std::to_string(n));
  return n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

Mask mask_of(std::span<const int> elements) {
  Mask m = 0;
  for (int e : elements) {
    require(e >= 0 && e < kMaxGroundSize, ErrorCode::kInvalidArgument,
            "ground element out of range: " + std::to_string(e));
    m |= Mask{1} << e;
  }
  return m;
}

std::vector<int> elements_of(Mask mask) {
  std::vector<int> out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

PairFamily::PairFamily(int ground_size, std::vector<Pair> pairs, Duplicates duplicates)
    : ground_size_(ground_size), pairs_(std::move(pairs)) {
  require(ground_size >= 1 && ground_size <= kMaxGroundSize, ErrorCode::kInvalidArgument,
          "ground size must be in [1, 64], got " + std::to_string(ground_size));
  const Mask ground = full_mask(ground_size);
  for (const Pair& p : pairs_) {
    require(((p.a | p.b) & ~ground) == 0, ErrorCode::kInvalidArgument,
            "pair refers to an element outside the ground set");
    require((p.a & p.b) == 0, ErrorCode::kInvalidArgument, "pair sides are not disjoint");
  }
  if (duplicates == Duplicates::kReject) {
    require(!has_duplicates(), ErrorCode::kInvalidArgument, "family contains a repeated pair");
  }
}

bool PairFamily::has_duplicates() const {
  std::vector<Pair> sorted(pairs_);
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

PairFamily PairFamily::with(const Pair& p) const {
  std::vector<Pair> pairs(pairs_);
  pairs.push_back(p);
  return PairFamily(ground_size_, std::move(pairs));
}

bool operator==(const PairFamily& lhs, const PairFamily& rhs) {
  if (lhs.ground_size_ != rhs.ground_size_ || lhs.pairs_.size() != rhs.pairs_.size()) return false;
  std::vector<Pair> l(lhs.pairs_), r(rhs.pairs_);
  std::sort(l.begin(), l.end());
  std::sort(r.begin(), r.end());
  return l == r;
}

PairFamily mirror(const PairFamily& family) {
  std::vector<Pair> pairs;
  pairs.reserve(family.size());
  for (const Pair& p : family.pairs()) pairs.push_back({p.b, p.a});
  return PairFamily(family.ground_size(), std::move(pairs), PairFamily::Duplicates::kAllow);
}

PairFamily restrict_to(const PairFamily& family, int n) {
  require(n >= 1 && n <= family.ground_size(), ErrorCode::kInvalidArgument,
          "restriction size out of range");
  const Mask keep = full_mask(n);
  std::vector<Pair> pairs;
  pairs.reserve(family.size());
  for (const Pair& p : family.pairs()) pairs.push_back({p.a & keep, p.b & keep});
  return PairFamily(n, std::move(pairs), PairFamily::Duplicates::kAllow);
}

namespace {

struct SplitMasks {
  std::vector<Mask> as;
  std::vector<Mask> bs;
};

SplitMasks split(std::span<const Pair> pairs) {
  SplitMasks s;
  s.as.reserve(pairs.size());
  s.bs.reserve(pairs.size());
  for (const Pair& p : pairs) {
    s.as.push_back(p.a);
    s.bs.push_back(p.b);
  }
  return s;
}

void require_linked(const PairFamily& family, const char* op) {
  require(is_linked(family), ErrorCode::kNotLinked, std::string(op) + ": family is not linked");
}

}  // namespace

bool is_linked(const PairFamily& family) {
  const auto pairs = family.pairs();
  if (std::any_of(pairs.begin(), pairs.end(), [](const Pair& p) { return p.empty(); })) {
    return false;
  }
  const SplitMasks s = split(pairs);
  const std::size_t m = pairs.size();
  for (std::size_t i = 0; i + 1 < m; ++i) {
    auto as = std::span<const Mask>(s.as).subspan(i + 1);
    auto bs = std::span<const Mask>(s.bs).subspan(i + 1);
    if (kernels::first_unlinked(pairs[i].a, pairs[i].b, as, bs) != as.size()) return false;
  }
  return true;
}

bool is_nonempty_linked(const PairFamily& family) {
  const auto pairs = family.pairs();
  return std::all_of(pairs.begin(), pairs.end(), [](const Pair& p) { return p.nonempty_sides(); }) &&
         is_linked(family);
}

bool family_facts_check(const PairFamily& family) {
  require_linked(family, "family_facts_check");
  std::set<Mask> as, bs;
  int empty_a = 0, empty_b = 0;
  for (const Pair& p : family.pairs()) {
    if (!as.insert(p.a).second || !bs.insert(p.b).second) return false;
    empty_a += p.a == 0;
    empty_b += p.b == 0;
  }
  return empty_a <= 1 && empty_b <= 1;
}

PairFamily augment_with_extremes(const PairFamily& family) {
  require(is_nonempty_linked(family), ErrorCode::kPreconditionViolated,
          "augment_with_extremes: family is not nonempty-linked");
  std::vector<Pair> pairs(family.pairs().begin(), family.pairs().end());
  const Mask ground = family.ground_mask();
  pairs.push_back({ground, 0});
  pairs.push_back({0, ground});
  return PairFamily(family.ground_size(), std::move(pairs));
}

namespace {

// Least B (ascending) such that (a, B) is a valid extension, for fixed a.
std::optional<Mask> least_b_for(Mask a, Mask ground, const SplitMasks& s) {
  const Mask free = ground & ~a;
  // Ascending enumeration of the submasks of `free`, starting at 0.
  Mask b = 0;
  while (true) {
    if ((a | b) != 0 && kernels::first_unlinked(a, b, s.as, s.bs) == s.as.size()) return b;
    if (b == free) return std::nullopt;
    b = (b - free) & free;
  }
}

}  // namespace

std::optional<Pair> find_family_extension(const PairFamily& family, const FamilySearchCaps& caps) {
  require_linked(family, "find_family_extension");
  const int n = family.ground_size();
  require(n <= caps.max_ground_size, ErrorCode::kCapExceeded,
          "find_family_extension: ground size " + std::to_string(n) + " exceeds cap " +
              std::to_string(caps.max_ground_size));
  require(n <= 32, ErrorCode::kCapExceeded, "find_family_extension: ground size above 32");

  const SplitMasks s = split(family.pairs());
  const Mask ground = family.ground_mask();
  const Mask a_end = Mask{1} << n;

  unsigned workers = caps.workers != 0 ? caps.workers : std::max(1u, std::thread::hardware_concurrency());
  if (n < 12) workers = 1;

  if (workers == 1) {
    for (Mask a = 0; a < a_end; ++a) {
      if (auto b = least_b_for(a, ground, s)) return Pair{a, *b};
    }
    return std::nullopt;
  }

  // Chunks of A values are handed out in ascending order; the least A with
  // any valid B wins, and each A is scanned by exactly one worker, so the
  // result does not depend on scheduling.
  constexpr Mask kChunk = 64;
  std::atomic<Mask> next_chunk{0};
  std::atomic<Mask> best_a{a_end};
  std::mutex best_mutex;
  std::optional<Pair> best;

  auto work = [&] {
    while (true) {
      const Mask start = next_chunk.fetch_add(kChunk);
      if (start >= a_end || start > best_a.load()) return;
      const Mask stop = std::min(a_end, start + kChunk);
      for (Mask a = start; a < stop && a < best_a.load(); ++a) {
        if (auto b = least_b_for(a, ground, s)) {
          std::lock_guard lock(best_mutex);
          if (!best || a < best->a) {
            best = Pair{a, *b};
            best_a.store(a);
          }
          break;
        }
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return best;
}

bool is_maximal_linked(const PairFamily& family, const FamilySearchCaps& caps) {
  return !find_family_extension(family, caps).has_value();
}

WeakSeparationWitness::WeakSeparationWitness(std::vector<WeakSeparationItem> items)
    : items_(std::move(items)) {
  for (const auto& item : items_) {
    require(item.f != 0, ErrorCode::kInvalidArgument, "weak separation item with empty F");
    require((item.f & ~item.v) == 0, ErrorCode::kInvalidArgument,
            "weak separation item with F not contained in V");
  }
}

bool is_weakly_separated(const WeakSeparationWitness& witness) {
  const auto items = witness.items();
  auto inside = [](Mask x, Mask y) { return (x & ~y) == 0; };
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      if (inside(items[i].f, items[j].v) && inside(items[j].f, items[i].v)) return false;
    }
  }
  return true;
}

WeakSeparationWitness weak_separation_from_family(const PairFamily& family) {
  for (const Pair& p : family.pairs()) {
    require(p.b != 0, ErrorCode::kPreconditionViolated,
            "weak_separation_from_family: pair with empty B side");
  }
  require(is_nonempty_linked(family), ErrorCode::kPreconditionViolated,
          "weak_separation_from_family: family is not nonempty-linked");
  const Mask ground = family.ground_mask();
  std::vector<WeakSeparationItem> items;
  items.reserve(family.size());
  for (const Pair& p : family.pairs()) items.push_back({p.b, ground & ~p.a});
  return WeakSeparationWitness(std::move(items));
}

PairFamily family_from_weak_separation(const WeakSeparationWitness& witness, int ground_size) {
  const Mask ground = full_mask(ground_size);
  for (const auto& item : witness.items()) {
    require((item.v & ~ground) == 0, ErrorCode::kInvalidArgument,
            "family_from_weak_separation: item outside the ground set");
  }
  require(is_weakly_separated(witness), ErrorCode::kPreconditionViolated,
          "family_from_weak_separation: witness is not weakly separated");
  std::vector<Pair> pairs;
  pairs.reserve(witness.size());
  for (const auto& item : witness.items()) pairs.push_back({ground & ~item.v, item.f});
  return PairFamily(ground_size, std::move(pairs));
}

}  // namespace equilat
