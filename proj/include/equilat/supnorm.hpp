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

// Exact points of (R^d, sup norm) and the conversions between point sets and
// pair families.

#include <compare>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "equilat/family.hpp"
#include "equilat/rational.hpp"

namespace equilat {

class SupPoint {
 public:
  SupPoint() = default;
  explicit SupPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  SupPoint(std::initializer_list<Rational> coords) : coords_(coords) {}

  static SupPoint constant(int dim, const Rational& value) {
    return SupPoint(std::vector<Rational>(static_cast<std::size_t>(dim), value));
  }

  int dim() const { return static_cast<int>(coords_.size()); }
  const Rational& operator[](int a) const { return coords_[static_cast<std::size_t>(a)]; }
  Rational& operator[](int a) { return coords_[static_cast<std::size_t>(a)]; }
  std::span<const Rational> coords() const { return coords_; }

  friend bool operator==(const SupPoint&, const SupPoint&) = default;
  friend auto operator<=>(const SupPoint&, const SupPoint&) = default;

 private:
  std::vector<Rational> coords_;
};

/// Finite ordered set of distinct points of a common dimension >= 1.
class PointSet {
 public:
  explicit PointSet(int dim, std::vector<SupPoint> points = {});

  int dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  std::span<const SupPoint> points() const { return points_; }
  const SupPoint& operator[](std::size_t i) const { return points_[i]; }

  bool contains(const SupPoint& p) const;
  PointSet with(SupPoint p) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  int dim_;
  std::vector<SupPoint> points_;
};

Rational sup_distance(const SupPoint& x, const SupPoint& y);
Rational sup_norm(const SupPoint& x);

bool is_equilateral(const PointSet& set, const Rational& lambda);
bool is_separated(const PointSet& set, const Rational& delta);

/// Largest pairwise distance (0 for fewer than two points).
Rational diameter(const PointSet& set);

/// Shifts every coordinate by its minimum over the set. Requires every
/// pairwise distance <= 1; the result lies in [0,1]^d.
PointSet reduce_to_unit_box(const PointSet& set);

/// {(x - x0) / lambda : x in set}. Requires a lambda-equilateral set and x0 in it.
PointSet normalize_to_sphere(const PointSet& set, const Rational& lambda, const SupPoint& x0);

struct PointFamily {
  PairFamily family;  // pair k belongs to point k; may repeat pairs
  bool linked;
};

/// Zero set and one set of every point. Requires coordinates in [0,1].
PointFamily family_from_points(const PointSet& set);

/// Realization of a linked family with value 0 on A, 1 on B and `interior`
/// elsewhere, except that a pair with one empty side gets the opposite
/// extreme value at the least element outside the other side (constant 1 or
/// 0 when that side is the whole ground set). Requires 0 < interior < 1.
PointSet points_from_family(const PairFamily& family, const Rational& interior);

/// Realization with value 0 on A, 1 on B, and interior(k, a) at coordinate a
/// of point k elsewhere. For a linked family and interior values in (0,1)
/// the zero/one sets of the output are exactly the input pairs.
PointSet points_from_family_exact(const PairFamily& family,
                                  const std::function<Rational(std::size_t, int)>& interior);
PointSet points_from_family_exact(const PairFamily& family, const Rational& interior);

/// Values in [-1,1]: +1 on A, -1 on B, 0 elsewhere, with the same handling
/// of one-sided pairs as points_from_family. Pairwise distances are 2.
PointSet two_equilateral_from_family(const PairFamily& family);

/// Thresholds each point at -eps/2 and eps/2. Requires eps > 0, coordinates
/// in [-1,1], pairwise distances >= 1 + eps and every sup norm >= eps/2.
PairFamily separated_to_family(const PointSet& set, const Rational& eps);

/// set u {e_coord}. Requires a 1-equilateral set in the unit ball whose
/// points all vanish at `coord`, not already containing e_coord.
PointSet fresh_coordinate_extension(const PointSet& set, int coord);

}  // namespace equilat
