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

#include "equilat/supnorm.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "equilat/error.hpp"

namespace equilat {

PointSet::PointSet(int dim, std::vector<SupPoint> points) : dim_(dim), points_(std::move(points)) {
  require(dim >= 1, ErrorCode::kInvalidArgument, "point set dimension must be positive");
  for (const SupPoint& p : points_) {
    require(p.dim() == dim_, ErrorCode::kDimensionMismatch,
            "point of dimension " + std::to_string(p.dim()) + " in a set of dimension " +
                std::to_string(dim_));
  }
  std::vector<SupPoint> sorted(points_);
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
          ErrorCode::kInvalidArgument, "point set contains a repeated point");
}

bool PointSet::contains(const SupPoint& p) const {
  return std::find(points_.begin(), points_.end(), p) != points_.end();
}

PointSet PointSet::with(SupPoint p) const {
  std::vector<SupPoint> points(points_);
  points.push_back(std::move(p));
  return PointSet(dim_, std::move(points));
}

Rational sup_distance(const SupPoint& x, const SupPoint& y) {
  require(x.dim() == y.dim(), ErrorCode::kDimensionMismatch, "sup_distance: dimension mismatch");
  Rational best(0);
  for (int a = 0; a < x.dim(); ++a) best = std::max(best, abs(x[a] - y[a]));
  return best;
}

Rational sup_norm(const SupPoint& x) {
  Rational best(0);
  for (const Rational& v : x.coords()) best = std::max(best, abs(v));
  return best;
}

namespace {

template <typename Pred>
bool all_pairs(const PointSet& set, Pred pred) {
  const auto pts = set.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (!pred(sup_distance(pts[i], pts[j]))) return false;
    }
  }
  return true;
}

bool in_closed(const SupPoint& p, const Rational& lo, const Rational& hi) {
  return std::all_of(p.coords().begin(), p.coords().end(),
                     [&](const Rational& v) { return lo <= v && v <= hi; });
}

}  // namespace

bool is_equilateral(const PointSet& set, const Rational& lambda) {
  require(lambda.sign() > 0, ErrorCode::kInvalidArgument, "is_equilateral: lambda must be positive");
  return all_pairs(set, [&](const Rational& d) { return d == lambda; });
}

bool is_separated(const PointSet& set, const Rational& delta) {
  require(delta.sign() > 0, ErrorCode::kInvalidArgument, "is_separated: delta must be positive");
  return all_pairs(set, [&](const Rational& d) { return d >= delta; });
}

Rational diameter(const PointSet& set) {
  Rational best(0);
  all_pairs(set, [&](const Rational& d) {
    best = std::max(best, d);
    return true;
  });
  return best;
}

PointSet reduce_to_unit_box(const PointSet& set) {
  require(diameter(set) <= Rational(1), ErrorCode::kPreconditionViolated,
          "reduce_to_unit_box: some pair is at distance > 1");
  if (set.empty()) return set;
  SupPoint lows = set[0];
  for (const SupPoint& p : set.points()) {
    for (int a = 0; a < set.dim(); ++a) lows[a] = std::min(lows[a], p[a]);
  }
  std::vector<SupPoint> out;
  out.reserve(set.size());
  for (SupPoint p : set.points()) {
    for (int a = 0; a < set.dim(); ++a) p[a] -= lows[a];
    out.push_back(std::move(p));
  }
  return PointSet(set.dim(), std::move(out));
}

PointSet normalize_to_sphere(const PointSet& set, const Rational& lambda, const SupPoint& x0) {
  require(set.contains(x0), ErrorCode::kPreconditionViolated,
          "normalize_to_sphere: base point is not a member of the set");
  require(is_equilateral(set, lambda), ErrorCode::kNotEquilateral,
          "normalize_to_sphere: set is not lambda-equilateral");
  std::vector<SupPoint> out;
  out.reserve(set.size());
  for (SupPoint p : set.points()) {
    for (int a = 0; a < set.dim(); ++a) p[a] = (p[a] - x0[a]) / lambda;
    out.push_back(std::move(p));
  }
  return PointSet(set.dim(), std::move(out));
}

PointFamily family_from_points(const PointSet& set) {
  require(set.dim() <= kMaxGroundSize, ErrorCode::kCapExceeded,
          "family_from_points: dimension above 64");
  std::vector<Pair> pairs;
  pairs.reserve(set.size());
  for (const SupPoint& p : set.points()) {
    require(in_closed(p, Rational(0), Rational(1)), ErrorCode::kPreconditionViolated,
            "family_from_points: coordinate outside [0,1]");
    Pair pair;
    for (int a = 0; a < set.dim(); ++a) {
      if (p[a] == Rational(0)) pair.a |= Mask{1} << a;
      if (p[a] == Rational(1)) pair.b |= Mask{1} << a;
    }
    pairs.push_back(pair);
  }
  PairFamily family(set.dim(), std::move(pairs), PairFamily::Duplicates::kAllow);
  const bool linked = is_linked(family);
  return {std::move(family), linked};
}

namespace {

bool has(Mask m, int a) { return ((m >> a) & 1) != 0; }

// Urysohn-style realization with values low on A, high on B, mid elsewhere.
PointSet urysohn_realization(const PairFamily& family, const Rational& low, const Rational& high,
                             const Rational& mid) {
  require(is_linked(family), ErrorCode::kNotLinked, "realization requires a linked family");
  const int n = family.ground_size();
  const Mask ground = family.ground_mask();
  std::vector<SupPoint> out;
  out.reserve(family.size());
  for (const Pair& p : family.pairs()) {
    SupPoint f = SupPoint::constant(n, mid);
    if (p.a == 0 && p.b == ground) {
      f = SupPoint::constant(n, high);
    } else if (p.b == 0 && p.a == ground) {
      f = SupPoint::constant(n, low);
    } else {
      for (int a = 0; a < n; ++a) {
        if (has(p.a, a)) f[a] = low;
        if (has(p.b, a)) f[a] = high;
      }
      if (p.a == 0) f[std::countr_zero(ground & ~p.b)] = low;
      if (p.b == 0) f[std::countr_zero(ground & ~p.a)] = high;
    }
    out.push_back(std::move(f));
  }
  return PointSet(n, std::move(out));
}

}  // namespace

PointSet points_from_family(const PairFamily& family, const Rational& interior) {
  require(Rational(0) < interior && interior < Rational(1), ErrorCode::kInvalidArgument,
          "points_from_family: interior value must lie in (0,1)");
  return urysohn_realization(family, Rational(0), Rational(1), interior);
}

PointSet points_from_family_exact(const PairFamily& family,
                                  const std::function<Rational(std::size_t, int)>& interior) {
  require(is_linked(family), ErrorCode::kNotLinked, "realization requires a linked family");
  const int n = family.ground_size();
  std::vector<SupPoint> out;
  out.reserve(family.size());
  for (std::size_t k = 0; k < family.size(); ++k) {
    const Pair& p = family[k];
    SupPoint f = SupPoint::constant(n, Rational(0));
    for (int a = 0; a < n; ++a) {
      if (has(p.a, a)) {
        f[a] = Rational(0);
      } else if (has(p.b, a)) {
        f[a] = Rational(1);
      } else {
        Rational v = interior(k, a);
        require(Rational(0) < v && v < Rational(1), ErrorCode::kInvalidArgument,
                "points_from_family_exact: interior value must lie in (0,1)");
        f[a] = v;
      }
    }
    out.push_back(std::move(f));
  }
  return PointSet(n, std::move(out));
}

PointSet points_from_family_exact(const PairFamily& family, const Rational& interior) {
  return points_from_family_exact(family, [&](std::size_t, int) { return interior; });
}

PointSet two_equilateral_from_family(const PairFamily& family) {
  return urysohn_realization(family, Rational(1), Rational(-1), Rational(0));
}

PairFamily separated_to_family(const PointSet& set, const Rational& eps) {
  require(eps.sign() > 0, ErrorCode::kInvalidArgument, "separated_to_family: eps must be positive");
  require(set.dim() <= kMaxGroundSize, ErrorCode::kCapExceeded,
          "separated_to_family: dimension above 64");
  for (const SupPoint& p : set.points()) {
    require(in_closed(p, Rational(-1), Rational(1)), ErrorCode::kPreconditionViolated,
            "separated_to_family: point outside the unit ball");
  }
  require(is_separated(set, Rational(1) + eps), ErrorCode::kPreconditionViolated,
          "separated_to_family: set is not (1+eps)-separated");
  const Rational half = eps / Rational(2);
  std::vector<Pair> pairs;
  pairs.reserve(set.size());
  for (const SupPoint& p : set.points()) {
    Pair pair;
    for (int a = 0; a < set.dim(); ++a) {
      if (p[a] <= -half) pair.a |= Mask{1} << a;
      if (p[a] >= half) pair.b |= Mask{1} << a;
    }
    require(!pair.empty(), ErrorCode::kPreconditionViolated,
            "separated_to_family: point with sup norm below eps/2");
    pairs.push_back(pair);
  }
  return PairFamily(set.dim(), std::move(pairs), PairFamily::Duplicates::kAllow);
}

PointSet fresh_coordinate_extension(const PointSet& set, int coord) {
  require(coord >= 0 && coord < set.dim(), ErrorCode::kInvalidArgument,
          "fresh_coordinate_extension: coordinate index out of range");
  require(is_equilateral(set, Rational(1)), ErrorCode::kNotEquilateral,
          "fresh_coordinate_extension: set is not 1-equilateral");
  for (const SupPoint& p : set.points()) {
    require(sup_norm(p) <= Rational(1), ErrorCode::kPreconditionViolated,
            "fresh_coordinate_extension: point outside the unit ball");
    require(p[coord] == Rational(0), ErrorCode::kPreconditionViolated,
            "fresh_coordinate_extension: point does not vanish at the fresh coordinate");
  }
  SupPoint basis = SupPoint::constant(set.dim(), Rational(0));
  basis[coord] = Rational(1);
  require(!set.contains(basis), ErrorCode::kPreconditionViolated,
          "fresh_coordinate_extension: basis vector already in the set");
  return set.with(std::move(basis));
}

}  // namespace equilat
