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

// Exact maximality decisions for 1-equilateral sets in (R^d, sup norm).
//
// For a 1-equilateral set S the points at distance exactly 1 from every
// member form a finite union of axis-aligned boxes: inside the bounding box
// prod_a [max_k p_k(a) - 1, min_k p_k(a) + 1] every coordinate gap is at
// most 1, so distance 1 to p_k means some coordinate a has
// alpha_a = p_k(a) +- 1. Choosing one such (coordinate, sign) witness per
// member and intersecting the pinned equalities gives one box per choice.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "equilat/supnorm.hpp"

namespace equilat {

struct Box {
  std::vector<Rational> lo;
  std::vector<Rational> hi;

  int dim() const { return static_cast<int>(lo.size()); }
  bool contains(const SupPoint& p) const;
  bool contains(const Box& other) const;
  SupPoint lower_corner() const { return SupPoint(lo); }

  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

/// Union of boxes with no box inside another, sorted by (lo, hi).
class Region {
 public:
  Region(int dim, std::vector<Box> boxes);

  int dim() const { return dim_; }
  bool empty() const { return boxes_.empty(); }
  const std::vector<Box>& boxes() const { return boxes_; }
  bool contains(const SupPoint& p) const;

  friend bool operator==(const Region&, const Region&) = default;

 private:
  int dim_;
  std::vector<Box> boxes_;
};

struct DeciderCaps {
  std::size_t max_points = 12;
  int max_dim = 8;
  std::uint64_t max_grid_tuples = 5'000'000;
};

/// All alpha with sup_distance(alpha, p) == 1 for every p in S.
Region extension_region(const PointSet& set, const DeciderCaps& caps = {});

/// Lexicographically least point of the extension region, if any.
std::optional<SupPoint> find_extension(const PointSet& set, const DeciderCaps& caps = {});

bool is_maximal_equilateral(const PointSet& set, const DeciderCaps& caps = {});

/// Independent check: scans every tuple of per-coordinate critical values
/// {p_k(a) - 1, p_k(a), p_k(a) + 1} in lexicographic order and returns the
/// first one at distance exactly 1 from every member.
std::optional<SupPoint> grid_oracle_extension(const PointSet& set, const DeciderCaps& caps = {});

struct Interval {
  Rational lo;
  Rational hi;

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct CoordinateForcing {
  enum class Kind { kNoExtension, kPinned, kFree };

  Kind kind = Kind::kNoExtension;
  Interval hull;                    // kPinned: lo == hi == the forced value
  std::vector<Interval> projection;  // merged projection of the region

  friend bool operator==(const CoordinateForcing&, const CoordinateForcing&) = default;
};

std::string forcing_kind_name(CoordinateForcing::Kind kind);

std::vector<CoordinateForcing> forced_coordinates(const PointSet& set, const DeciderCaps& caps = {});

// Minimum size of a maximal equilateral set in (R^d, sup norm).

/// Interior values used to realize skeletons, in sweep order.
const std::vector<Rational>& interior_sweep();

struct SizeTrials {
  int size = 0;
  std::size_t skeletons = 0;      // linked families of this size on d elements
  std::size_t realizations = 0;   // skeleton x interior realizations decided
  int trials = 0;
  int failures = 0;               // sampled sets that did not extend
};

struct MSearchReport {
  int dim = 0;
  int k_max = 0;
  std::optional<int> first_maximal_size;
  std::optional<PointSet> certificate;
  std::optional<PairFamily> certificate_skeleton;
  std::optional<Rational> certificate_interior;
  bool oracle_confirms_certificate = false;
  std::vector<SizeTrials> below;  // one entry per size tried without a certificate

  /// True when a certificate exists, the oracle agrees it is maximal, and
  /// every sampled set below its size extended.
  bool claims_minimum() const;
};

struct MSearchCaps {
  int max_dim = 4;
  int max_k_over_dim = 2;
};

MSearchReport m_search(int dim, int k_max, int trials, std::uint64_t seed,
                       const MSearchCaps& caps = {});

}  // namespace equilat
