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

#include <doctest.h>

#include <random>
#include <vector>

#include "equilat/error.hpp"
#include "equilat/supnorm.hpp"
#include "oracles.hpp"

using namespace equilat;

namespace {

using R = Rational;

Pair pr(std::vector<int> a, std::vector<int> b) { return {mask_of(a), mask_of(b)}; }

PairFamily triangle() { return PairFamily(3, {pr({0}, {1}), pr({1}, {2}), pr({2}, {0})}); }

PairFamily complement2() {
  return PairFamily(2, {pr({}, {0, 1}), pr({0}, {1}), pr({1}, {0}), pr({0, 1}, {})});
}

}  // namespace

TEST_CASE("distances") {
  CHECK(sup_distance({0, 1}, {1, 0}) == 1);
  CHECK(sup_distance({R(1, 3), 2}, {R(1, 3), 2}) == 0);
  CHECK(sup_distance({0, R(1, 3), R(1, 3)}, {1, 1, R(1, 2)}) == 1);
  CHECK(sup_norm({R(-3, 2), 1}) == R(3, 2));
  CHECK_THROWS_AS(sup_distance({0}, {0, 1}), Error);
}

TEST_CASE("point sets reject malformed input") {
  CHECK_THROWS_AS(PointSet(0), Error);
  CHECK_THROWS_AS(PointSet(2, {{0, 1}, {0, 1}}), Error);
  CHECK_THROWS_AS(PointSet(2, {{0, 1}, {0}}), Error);
  const PointSet s(2, {{0, 1}});
  CHECK(s.contains({0, 1}));
  CHECK(s.with({1, 0}).size() == 2);
  CHECK_THROWS_AS(s.with({0, 1}), Error);
}

TEST_CASE("equilateral and separated predicates") {
  CHECK(is_equilateral(PointSet(2, {{0, 1}, {1, 0}, {0, 0}, {1, 1}}), 1));
  CHECK(is_equilateral(PointSet(3, {{0, R(1, 3), R(1, 3)}, {1, 1, R(1, 2)}, {1, 0, 0}}), 1));
  CHECK(!is_equilateral(PointSet(2, {{0, 0}, {1, 0}, {3, 0}}), 1));
  CHECK_THROWS_AS(is_equilateral(PointSet(1, {{0}}), 0), Error);

  CHECK(is_separated(PointSet(2, {{1, -1}, {-1, 1}}), 2));
  CHECK(is_separated(PointSet(2, {{0, 1}, {1, 0}, {0, 0}}), 1));
  CHECK(!is_separated(PointSet(2, {{0, 0}, {R(1, 2), 0}}), 1));
  CHECK_THROWS_AS(is_separated(PointSet(1, {{0}}), R(-1)), Error);
  CHECK(diameter(PointSet(2, {{0, 0}, {R(1, 2), 3}})) == 3);
  CHECK(diameter(PointSet(2, {{0, 0}})) == 0);
}

TEST_CASE("reduce to the unit box") {
  CHECK(reduce_to_unit_box(PointSet(2, {{0, 1}, {1, 0}})) == PointSet(2, {{0, 1}, {1, 0}}));
  CHECK(reduce_to_unit_box(PointSet(2, {{5, 3}, {4, 4}})) == PointSet(2, {{1, 0}, {0, 1}}));
  CHECK(reduce_to_unit_box(PointSet(2, {{R(1, 2), R(1, 2)}, {R(3, 2), R(1, 2)}, {R(1, 2), R(3, 2)}})) ==
        PointSet(2, {{0, 0}, {1, 0}, {0, 1}}));
  CHECK_THROWS_AS(reduce_to_unit_box(PointSet(1, {{0}, {2}})), Error);

  std::mt19937_64 rng(41);
  for (int round = 0; round < 300; ++round) {
    const int d = 1 + static_cast<int>(rng() % 5);
    std::vector<SupPoint> pts;
    const SupPoint base = SupPoint::constant(d, R(static_cast<std::int64_t>(rng() % 9) - 4, 3));
    while (pts.size() < 1 + rng() % 5) {
      SupPoint x = base;
      for (int a = 0; a < d; ++a) x[a] = x[a] + oracle::random_rational(rng, 6);
      if (std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(x);
    }
    const PointSet s(d, pts);
    const PointSet r = reduce_to_unit_box(s);
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (int a = 0; a < d; ++a) CHECK((r[i][a] >= 0 && r[i][a] <= 1));
      for (std::size_t j = 0; j < s.size(); ++j) CHECK(oracle::distance(r[i], r[j]) == oracle::distance(s[i], s[j]));
    }
  }
}

TEST_CASE("normalize to the sphere") {
  CHECK(normalize_to_sphere(PointSet(2, {{0, 0}, {2, 0}, {0, 2}}), 2, {0, 0}) ==
        PointSet(2, {{0, 0}, {1, 0}, {0, 1}}));
  const PointSet unit(2, {{0, 0}, {1, 0}, {0, 1}});
  CHECK(normalize_to_sphere(unit, 1, {0, 0}) == unit);
  CHECK_THROWS_AS(normalize_to_sphere(unit, 1, {5, 5}), Error);
  CHECK_THROWS_AS(normalize_to_sphere(unit, 2, {0, 0}), Error);

  std::mt19937_64 rng(42);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const PairFamily f = oracle::random_linked_family(rng, n, 6);
    const PointSet two = two_equilateral_from_family(f);
    const SupPoint x0 = two[rng() % two.size()];
    const PointSet s = normalize_to_sphere(two, 2, x0);
    CHECK(s.size() == two.size());
    CHECK(oracle::equilateral(s, 1));
    for (const SupPoint& x : s.points()) {
      const R norm = oracle::distance(x, SupPoint::constant(n, 0));
      CHECK((norm == 1 || x == SupPoint::constant(n, 0)));
    }
    CHECK(s.contains(SupPoint::constant(n, 0)));
  }
}

TEST_CASE("family from points") {
  const PointFamily a = family_from_points(PointSet(2, {{0, 1}, {1, 0}}));
  CHECK(a.family == PairFamily(2, {pr({0}, {1}), pr({1}, {0})}));
  CHECK(a.linked);

  const PointFamily b = family_from_points(PointSet(3, {{0, R(1, 3), R(1, 3)}, {1, 1, R(1, 2)}, {1, 0, 0}}));
  CHECK(b.family[0] == pr({0}, {}));
  CHECK(b.family[1] == pr({}, {0, 1}));
  CHECK(b.family[2] == pr({1, 2}, {0}));
  CHECK(b.linked);

  const PointFamily c = family_from_points(PointSet(2, {{R(1, 2), R(1, 2)}, {R(1, 2), R(5, 6)}}));
  CHECK(c.family.size() == 2);
  CHECK(c.family.has_duplicates());
  CHECK(!c.linked);
  CHECK(!is_equilateral(PointSet(2, {{R(1, 2), R(1, 2)}, {R(1, 2), R(5, 6)}}), 1));

  CHECK_THROWS_AS(family_from_points(PointSet(1, {{R(3, 2)}})), Error);
  CHECK_THROWS_AS(family_from_points(PointSet(1, {{R(-1, 2)}})), Error);
}

TEST_CASE("urysohn realization") {
  CHECK(points_from_family(triangle(), R(1, 2)) ==
        PointSet(3, {{0, 1, R(1, 2)}, {R(1, 2), 0, 1}, {1, R(1, 2), 0}}));
  CHECK(points_from_family(PairFamily(2, {pr({}, {0})}), R(1, 3)) == PointSet(2, {{1, 0}}));
  CHECK(points_from_family(PairFamily(2, {pr({}, {0, 1})}), R(1, 3)) == PointSet(2, {{1, 1}}));
  CHECK(points_from_family(PairFamily(2, {pr({1}, {})}), R(1, 3)) == PointSet(2, {{1, 0}}));
  CHECK(points_from_family(PairFamily(2, {pr({0, 1}, {})}), R(1, 3)) == PointSet(2, {{0, 0}}));
  CHECK_THROWS_AS(points_from_family(triangle(), 1), Error);
  CHECK_THROWS_AS(points_from_family(triangle(), 0), Error);
  CHECK_THROWS_AS(points_from_family(PairFamily(4, {pr({0}, {1}), pr({2}, {3})}), R(1, 2)), Error);
}

TEST_CASE("urysohn realization inflates pairs and stays equilateral") {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 500; ++round) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const PairFamily f = oracle::random_linked_family(rng, n, 8);
    const R t(1 + static_cast<std::int64_t>(rng() % 6), 7);
    const PointSet s = points_from_family(f, t);
    REQUIRE(s.size() == f.size());
    CHECK(oracle::equilateral(s, 1));
    const PointFamily back = family_from_points(s);
    CHECK(back.linked);
    CHECK(oracle::linked(oracle::to_sets(back.family)));
    for (std::size_t k = 0; k < f.size(); ++k) {
      CHECK((f[k].a & ~back.family[k].a) == 0);
      CHECK((f[k].b & ~back.family[k].b) == 0);
    }
    const PointSet exact = points_from_family_exact(f, t);
    CHECK(family_from_points(exact).family == f);
    CHECK(oracle::equilateral(exact, 1));
  }
}

TEST_CASE("two-equilateral realization") {
  CHECK(two_equilateral_from_family(triangle()) == PointSet(3, {{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}}));
  CHECK(two_equilateral_from_family(PairFamily(2, {pr({0, 1}, {})})) == PointSet(2, {{1, 1}}));
  const PointSet c = two_equilateral_from_family(complement2());
  CHECK(c.size() == 4);
  CHECK(oracle::equilateral(c, 2));
  CHECK_THROWS_AS(two_equilateral_from_family(PairFamily(4, {pr({0}, {1}), pr({2}, {3})})), Error);
}

TEST_CASE("thresholding separated sets") {
  CHECK(separated_to_family(PointSet(2, {{1, -1}, {-1, 1}}), 1) == PairFamily(2, {pr({1}, {0}), pr({0}, {1})}));
  CHECK(separated_to_family(PointSet(2, {{1, R(-1, 4)}, {R(-1, 2), 1}}), R(1, 2)) ==
        PairFamily(2, {pr({1}, {0}), pr({0}, {1})}));
  CHECK_THROWS_AS(separated_to_family(PointSet(2, {{0, 0}, {1, -1}, {-1, 1}}), 1), Error);
  CHECK_THROWS_AS(separated_to_family(PointSet(1, {{2}, {-1}}), 1), Error);
  CHECK_THROWS_AS(separated_to_family(PointSet(1, {{1}, {R(1, 2)}}), 1), Error);
  CHECK_THROWS_AS(separated_to_family(PointSet(1, {{1}, {-1}}), 0), Error);
}

TEST_CASE("fresh coordinate extension") {
  CHECK(fresh_coordinate_extension(PointSet(3, {{0, 1, 0}, {1, 0, 0}}), 2) ==
        PointSet(3, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
  const PointSet s = fresh_coordinate_extension(PointSet(2, {{R(1, 2), 0}}), 1);
  CHECK(s == PointSet(2, {{R(1, 2), 0}, {0, 1}}));
  CHECK(is_equilateral(s, 1));
  CHECK_THROWS_AS(fresh_coordinate_extension(PointSet(2, {{0, R(1, 2)}}), 1), Error);
  CHECK_THROWS_AS(fresh_coordinate_extension(PointSet(2, {{0, 0}, {0, R(1, 2)}}), 0), Error);
  CHECK_THROWS_AS(fresh_coordinate_extension(PointSet(2, {{2, 0}}), 1), Error);
  CHECK_THROWS_AS(fresh_coordinate_extension(PointSet(2, {{0, 1}}), 1), Error);
  CHECK_THROWS_AS(fresh_coordinate_extension(PointSet(2, {{0, 0}}), 2), Error);
}
