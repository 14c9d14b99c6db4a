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
#include "equilat/generators.hpp"
#include "oracles.hpp"

using namespace equilat;

namespace {

using R = Rational;

std::vector<TreeNode> words(std::initializer_list<const char*> texts) {
  std::vector<TreeNode> out;
  for (const char* t : texts) out.push_back(TreeNode::parse(t));
  return out;
}

Pair pr(std::vector<int> a, std::vector<int> b) { return {mask_of(a), mask_of(b)}; }

const R kHalf(1, 2);

}  // namespace

TEST_CASE("tree words") {
  const TreeNode s = TreeNode::parse("101");
  CHECK(s.length() == 3);
  CHECK(s.at(1) == 1);
  CHECK(s.at(2) == 0);
  CHECK(s.str() == "101");
  CHECK(TreeNode::parse("10").is_prefix_of(s));
  CHECK(s.is_prefix_of(s));
  CHECK(!TreeNode::parse("11").is_prefix_of(s));
  CHECK(comparable(TreeNode::parse("1"), s));
  CHECK(!comparable(TreeNode::parse("0"), s));
  CHECK_THROWS_AS(TreeNode::parse("12"), Error);
}

TEST_CASE("antichain predicate") {
  CHECK(is_antichain(words({"1", "01", "00"})));
  CHECK(!is_antichain(words({"1", "10"})));
  CHECK(is_antichain({}));
  CHECK(!is_antichain(words({"01", "01"})));
  CHECK_THROWS_AS(Antichain(words({"1", "10"})), Error);
}

TEST_CASE("sequences") {
  const SigmaSequence plain = SigmaSequence::parse("101");
  CHECK(!plain.eventually_constant());
  CHECK(plain.at(3) == 1);
  CHECK(!plain.defined_through(4));
  CHECK_THROWS_AS(plain.at(4), Error);
  CHECK_THROWS_AS(plain.at(0), Error);

  const SigmaSequence tail = SigmaSequence::parse("101", SigmaSequence::Tail{4, 0});
  CHECK(tail.at(4) == 0);
  CHECK(tail.at(100) == 0);
  CHECK(tail.tail_start() == 3);
  CHECK(tail == SigmaSequence::eventually({1, 0, 1}, 0));
  CHECK(SigmaSequence::parse("100", SigmaSequence::Tail{2, 0}).tail_start() == 1);
  CHECK_THROWS_AS(SigmaSequence::parse("101", SigmaSequence::Tail{2, 0}), Error);
  CHECK_THROWS_AS(SigmaSequence::parse("101", SigmaSequence::Tail{5, 0}), Error);
  CHECK_THROWS_AS(SigmaSequence::parse("1a"), Error);
}

TEST_CASE("branch and antichain of a sequence") {
  const SigmaSequence s = SigmaSequence::parse("101");
  CHECK(branch_from_sigma(s, 3) == words({"1", "10", "101"}));
  CHECK(branch_from_sigma(s, 1) == words({"1"}));
  CHECK(branch_from_sigma(SigmaSequence::eventually({1, 0, 1}, 0), 5) == words({"1", "10", "101", "1010", "10100"}));
  CHECK_THROWS_AS(branch_from_sigma(s, 4), Error);

  CHECK(antichain_from_sigma(s, 3) == Antichain(words({"0", "11", "100"})));
  CHECK(antichain_from_sigma(s, 1) == Antichain(words({"0"})));

  for (int w = 0; w < 64; ++w) {
    std::vector<std::uint8_t> bits;
    for (int k = 0; k < 6; ++k) bits.push_back(static_cast<std::uint8_t>((w >> k) & 1));
    const SigmaSequence sigma(bits);
    for (std::size_t n = 1; n <= 6; ++n) {
      const Antichain a = antichain_from_sigma(sigma, n);
      CHECK(is_antichain(a.nodes()));
      const auto branch = branch_from_sigma(sigma, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) CHECK(!comparable(a.nodes()[i], branch[j]));
        CHECK(a.nodes()[i].at(i + 1) != branch[i].at(i + 1));
      }
    }
  }
}

TEST_CASE("antichain families") {
  const AntichainFamily a = family_from_antichain(words({"0", "11", "100"}), 3);
  CHECK(a.antichain);
  CHECK(a.family == PairFamily(3, {pr({}, {0}), pr({0, 1}, {}), pr({0}, {1, 2})}));
  CHECK(is_linked(a.family));

  const AntichainFamily b = family_from_antichain(words({"1", "01", "00"}), 2);
  CHECK(b.family == PairFamily(2, {pr({0}, {}), pr({1}, {0}), pr({}, {0, 1})}));
  CHECK(is_linked(b.family));

  const AntichainFamily chain = family_from_antichain(words({"1", "10"}), 2);
  CHECK(!chain.antichain);
  CHECK(!is_linked(chain.family));

  CHECK_THROWS_AS(family_from_antichain(words({"101"}), 2), Error);
  CHECK_THROWS_AS(family_from_antichain(std::vector<TreeNode>{TreeNode()}, 2), Error);
}

TEST_CASE("antichain enumeration") {
  CHECK(count_antichains(0) == 1);
  CHECK(count_antichains(1) == 4);
  CHECK(count_antichains(2) == 25);
  CHECK(count_antichains(3) == 676);
  CHECK(count_antichains(4) == 458329);
  CHECK(count_antichains(5) == 210066388900ULL);
  CHECK_THROWS_AS(count_antichains(6), Error);

  CHECK(enumerate_antichains(0) == std::vector<Antichain>{Antichain()});
  CHECK(enumerate_antichains(1) ==
        std::vector<Antichain>{Antichain(), Antichain(words({"0"})), Antichain(words({"1"})), Antichain(words({"0", "1"}))});
  CHECK_THROWS_AS(enumerate_antichains(5), Error);

  for (int depth = 0; depth <= 4; ++depth) {
    const auto all = enumerate_antichains(depth);
    CHECK(all.size() == count_antichains(depth));
    std::set<std::vector<TreeNode>> distinct;
    for (const Antichain& a : all) {
      CHECK(is_antichain(a.nodes()));
      distinct.insert({a.nodes().begin(), a.nodes().end()});
    }
    CHECK(distinct.size() == all.size());
  }

  std::uint64_t seen = 0;
  CHECK(!for_each_antichain(5, [&](std::span<const TreeNode>) { return ++seen < 1000; }));
  CHECK(seen == 1000);
}

TEST_CASE("sequence points") {
  const SigmaSequence s = SigmaSequence::eventually({1, 0, 1}, 0);
  const std::vector<R> t = {R(1, 3), R(1, 2), R(1, 4)};
  const PointSet e = example2_points(s, t, 3, 4);
  CHECK(e == PointSet(4, {{0, R(1, 3), R(1, 3), R(1, 3)}, {1, 1, kHalf, kHalf}, {1, 0, 0, R(1, 4)}, {1, 0, 1, 0}}));
  CHECK(oracle::equilateral(e, 1));
  CHECK(example2_points(SigmaSequence::parse("10"), std::vector<R>{kHalf}, 1, 2) == PointSet(2, {{0, kHalf}, {1, 0}}));
  CHECK_THROWS_AS(example2_points(s, std::vector<R>{1, kHalf, kHalf}, 3, 4), Error);
  CHECK_THROWS_AS(example2_points(s, t, 3, 3), Error);
  CHECK(default_interiors(3) == std::vector<R>{R(1, 3), R(1, 4), R(1, 5)});
}

TEST_CASE("compactification models") {
  const SigmaSequence s = SigmaSequence::eventually({1}, 0);
  CHECK(theorem6_points(s, std::vector<R>{kHalf, kHalf, kHalf}, 3) ==
        PointSet(4, {{0, kHalf, kHalf, kHalf}, {1, 1, kHalf, kHalf}, {1, 0, 1, kHalf}, {1, 0, 0, 0}}));
  CHECK(theorem6_points(s, std::vector<R>{kHalf}, 1) == PointSet(2, {{0, kHalf}, {1, 0}}));
  CHECK_THROWS_AS(theorem6_points(SigmaSequence::parse("10"), std::vector<R>{kHalf, kHalf}, 2), Error);

  const CompactModel m = CompactModel::sized(2, false, 1);
  CHECK(m.labels() == std::vector<std::string>{"x1", "x2", "k1"});
  const std::vector<R> t = {R(1, 3), R(1, 2)};
  CHECK(theorem7_points(SigmaSequence::parse("10"), t, m, 2) ==
        PointSet(3, {{0, R(1, 3), R(1, 3)}, {1, 1, kHalf}, {1, 0, R(1, 3)}}));
  const PointSet one = theorem7_points(SigmaSequence::parse("10"), t, m, 1);
  CHECK(one.size() == 2);
  CHECK(oracle::equilateral(one, 1));
  CHECK_THROWS_AS(theorem7_points(SigmaSequence::parse("10"), std::vector<R>{kHalf, kHalf}, m, 2), Error);
  CHECK_THROWS_AS(theorem7_points(SigmaSequence::parse("11"), t, m, 2), Error);
  CHECK_THROWS_AS(theorem7_points(SigmaSequence::eventually({1, 0}, 0), t, m, 2), Error);
  CompactModel dup = m;
  dup.rest.push_back("x1");
  CHECK_THROWS_AS(dup.validate(), Error);

  const PointSet r = remark53_points(s, 1, 2);
  CHECK(r == PointSet(4, {{0, kHalf, kHalf, kHalf}, {1, 1, kHalf, kHalf}, {1, 0, 0, kHalf}}));
  CHECK(family_from_points(r).linked);
  CHECK(remark53_points(s, 2, 1).size() == 2);
  CHECK_THROWS_AS(remark53_points(s, 0, 2), Error);
}

TEST_CASE("example points are equilateral and match the antichain family") {
  std::mt19937_64 rng(61);
  for (int round = 0; round < 200; ++round) {
    const std::size_t dim = 2 + rng() % 7;
    const std::size_t count = 1 + rng() % std::min<std::size_t>(5, dim - 1);
    std::vector<std::uint8_t> bits;
    for (std::size_t i = 0; i < dim; ++i) bits.push_back(static_cast<std::uint8_t>(rng() % 2));
    const SigmaSequence sigma(bits);
    std::vector<R> t;
    for (std::size_t i = 0; i < count; ++i) t.push_back(R(1 + static_cast<std::int64_t>(rng() % 9), 10));
    const PointSet e = example2_points(sigma, t, count, dim);
    REQUIRE(oracle::equilateral(e, 1));

    // Zero sets play the role of A in the point family and of B in the
    // antichain family, so the two agree up to mirroring.
    const Antichain a = antichain_from_sigma(sigma, count);
    Mask ones = 0, zeros = 0;
    for (std::size_t k = 1; k <= count; ++k) (sigma.at(k) ? ones : zeros) |= Mask{1} << (k - 1);
    const PairFamily from_tree = family_from_antichain(a.nodes(), static_cast<int>(count)).family;
    std::vector<Pair> expected(from_tree.pairs().begin(), from_tree.pairs().end());
    expected.push_back({ones, zeros});
    const PairFamily restricted = restrict_to(family_from_points(e).family, static_cast<int>(count));
    CHECK(restricted == mirror(PairFamily(static_cast<int>(count), expected)));
  }
}
