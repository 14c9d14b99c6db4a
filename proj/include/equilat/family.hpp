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

// Families of disjoint pairs over a finite ground set {0, ..., n-1}.
//
// Subsets are uint64 bitmasks (bit i = element i), so n <= 64. A family is
// linked when every pair has A u B nonempty and any two distinct pairs
// cross-intersect: A_i & B_j or A_j & B_i is nonempty.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace equilat {

using Mask = std::uint64_t;

inline constexpr int kMaxGroundSize = 64;

Mask full_mask(int n);
Mask mask_of(std::span<const int> elements);
std::vector<int> elements_of(Mask mask);

struct Pair {
  Mask a = 0;
  Mask b = 0;

  bool empty() const { return (a | b) == 0; }
  bool nonempty_sides() const { return a != 0 && b != 0; }

  friend bool operator==(const Pair&, const Pair&) = default;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

/// True when p and q cross-intersect.
inline bool links(const Pair& p, const Pair& q) {
  return ((p.a & q.b) | (q.a & p.b)) != 0;
}

class PairFamily {
 public:
  enum class Duplicates { kReject, kAllow };

  /// Validates 1 <= ground_size <= 64, masks inside the ground set, A & B == 0,
  /// and (by default) that no pair occurs twice.
  PairFamily(int ground_size, std::vector<Pair> pairs,
             Duplicates duplicates = Duplicates::kReject);

  int ground_size() const { return ground_size_; }
  Mask ground_mask() const { return full_mask(ground_size_); }
  std::span<const Pair> pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  const Pair& operator[](std::size_t i) const { return pairs_[i]; }

  bool has_duplicates() const;

  /// Copy with `p` appended; rejects duplicates.
  PairFamily with(const Pair& p) const;

  /// Families compare as sets of pairs over the same ground set.
  friend bool operator==(const PairFamily& lhs, const PairFamily& rhs);

 private:
  int ground_size_;
  std::vector<Pair> pairs_;
};

/// Swaps the two sides of every pair. Linkedness is invariant under this map.
PairFamily mirror(const PairFamily& family);

/// Keeps only ground elements 0..n-1 of every pair (duplicates allowed).
PairFamily restrict_to(const PairFamily& family, int n);

bool is_linked(const PairFamily& family);
bool is_nonempty_linked(const PairFamily& family);

/// Distinct A sides, distinct B sides, at most one empty A and at most one
/// empty B. Throws kNotLinked on a family that is not linked.
bool family_facts_check(const PairFamily& family);

/// F u {(ground, {}), ({}, ground)}. Requires a nonempty-linked family.
PairFamily augment_with_extremes(const PairFamily& family);

struct FamilySearchCaps {
  int max_ground_size = 20;
  unsigned workers = 0;  // 0: hardware concurrency
};

/// Least pair (A ascending, then B ascending, as integers) that can be added
/// to a linked family keeping it linked, or nullopt when the family is
/// maximal. Brute force over all 3^n - 1 candidates.
std::optional<Pair> find_family_extension(const PairFamily& family,
                                          const FamilySearchCaps& caps = {});

bool is_maximal_linked(const PairFamily& family, const FamilySearchCaps& caps = {});

// Weak separation on a finite discrete space: items (F_i, V_i) with
// F_i nonempty, F_i subset of V_i; weakly separated when for all i != j,
// F_i is not inside V_j or F_j is not inside V_i.

struct WeakSeparationItem {
  Mask f = 0;
  Mask v = 0;

  friend bool operator==(const WeakSeparationItem&, const WeakSeparationItem&) = default;
};

class WeakSeparationWitness {
 public:
  explicit WeakSeparationWitness(std::vector<WeakSeparationItem> items);

  std::span<const WeakSeparationItem> items() const { return items_; }
  std::size_t size() const { return items_.size(); }

  friend bool operator==(const WeakSeparationWitness&, const WeakSeparationWitness&) = default;

 private:
  std::vector<WeakSeparationItem> items_;
};

bool is_weakly_separated(const WeakSeparationWitness& witness);

/// Items (B_i, ground \ A_i). Requires a nonempty-linked family.
WeakSeparationWitness weak_separation_from_family(const PairFamily& family);

/// Pairs (ground \ V_i, F_i). Requires a weakly separated witness whose
/// sets lie inside the ground set.
PairFamily family_from_weak_separation(const WeakSeparationWitness& witness, int ground_size);

}  // namespace equilat
