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

// Dyadic tree words, chains and antichains, and the explicit equilateral
// constructions built from a 0/1 sequence.
//
// Tree words are 1-indexed in the math (s(1), ..., s(|s|)); position k maps to
// ground element k - 1 everywhere in this library.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "equilat/family.hpp"
#include "equilat/supnorm.hpp"

namespace equilat {

class TreeNode {
 public:
  TreeNode() = default;
  explicit TreeNode(std::vector<std::uint8_t> bits);

  /// Parses a word such as "101".
  static TreeNode parse(std::string_view text);

  std::size_t length() const { return bits_.size(); }
  /// 1-indexed position.
  std::uint8_t at(std::size_t position) const { return bits_[position - 1]; }
  std::span<const std::uint8_t> bits() const { return bits_; }
  std::string str() const;

  /// True when this word is an initial segment of `other` (including equal).
  bool is_prefix_of(const TreeNode& other) const;

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
  friend auto operator<=>(const TreeNode&, const TreeNode&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

inline bool comparable(const TreeNode& s, const TreeNode& t) {
  return s.is_prefix_of(t) || t.is_prefix_of(s);
}

bool is_antichain(std::span<const TreeNode> nodes);

/// Pairwise-incomparable list of words.
class Antichain {
 public:
  Antichain() = default;
  explicit Antichain(std::vector<TreeNode> nodes);

  std::span<const TreeNode> nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }

  friend bool operator==(const Antichain&, const Antichain&) = default;

 private:
  std::vector<TreeNode> nodes_;
};

inline constexpr std::uint8_t flip_bit(std::uint8_t bit) { return bit == 0 ? 1 : 0; }

/// A 0/1 word sigma_1..sigma_N, optionally continued by a constant value from
/// index `onset` on (onset <= N + 1; explicit bits at or after onset must
/// already equal the tail value).
class SigmaSequence {
 public:
  struct Tail {
    std::size_t onset;
    std::uint8_t value;

    friend bool operator==(const Tail&, const Tail&) = default;
  };

  explicit SigmaSequence(std::vector<std::uint8_t> bits, std::optional<Tail> tail = std::nullopt);

  /// "101" plus an optional tail.
  static SigmaSequence parse(std::string_view bits, std::optional<Tail> tail = std::nullopt);

  /// Explicit bits sigma_1..sigma_n, then `value` forever.
  static SigmaSequence eventually(std::vector<std::uint8_t> bits, std::uint8_t value);

  std::span<const std::uint8_t> bits() const { return bits_; }
  const std::optional<Tail>& tail() const { return tail_; }
  bool eventually_constant() const { return tail_.has_value(); }

  /// Last index before the constant tail starts (the N with sigma_n = i for n > N).
  std::size_t tail_start() const;

  bool defined_through(std::size_t n) const { return tail_ || n <= bits_.size(); }

  /// 1-indexed value; throws when undefined.
  std::uint8_t at(std::size_t n) const;

  std::string bit_string() const;

  friend bool operator==(const SigmaSequence&, const SigmaSequence&) = default;

 private:
  std::vector<std::uint8_t> bits_;
  std::optional<Tail> tail_;
};

/// (sigma_1), (sigma_1, sigma_2), ..., first `depth` initial segments.
std::vector<TreeNode> branch_from_sigma(const SigmaSequence& sigma, std::size_t depth);

/// (flip sigma_1), (sigma_1, flip sigma_2), ..., first `depth` members.
Antichain antichain_from_sigma(const SigmaSequence& sigma, std::size_t depth);

struct AntichainFamily {
  PairFamily family;
  bool antichain;  // false: input was not an antichain, linkedness not guaranteed
};

/// One pair per word: A = positions holding 1, B = positions holding 0.
AntichainFamily family_from_antichain(std::span<const TreeNode> nodes, int ground_size);

/// Number of antichains (including the empty one) on levels 1..depth.
std::uint64_t count_antichains(int depth);

/// Visits every antichain on levels 1..depth in a fixed order starting with
/// the empty one; members are reported in (length, word) order. The visitor
/// returns false to stop. Returns false if stopped early.
bool for_each_antichain(int depth, const std::function<bool(std::span<const TreeNode>)>& visit);

/// Materializes for_each_antichain. Depth is capped at `max_depth` (default 4:
/// level 5 has about 2.1e11 antichains).
std::vector<Antichain> enumerate_antichains(int depth, int max_depth = 4);

/// Example sequence points p_1..p_N in dimension M, then p_omega = (sigma_1..sigma_M).
/// p_n = (sigma_1, ..., sigma_{n-1}, flip sigma_n, t_n, ..., t_n).
PointSet example2_points(const SigmaSequence& sigma, std::span<const Rational> t, std::size_t count,
                         std::size_t dim);

/// Default interior sequence t_n = 1/(n+2), n = 1..count.
std::vector<Rational> default_interiors(std::size_t count);

/// Finite model of a compactification of N: coordinates 1..M plus one
/// remainder coordinate. f_1..f_M as in example2_points (constant t_n on the
/// tail block, remainder included), f_omega = (sigma_1..sigma_M, i).
PointSet theorem6_points(const SigmaSequence& sigma, std::span<const Rational> t, std::size_t isolated);

/// Finite stand-in for a compact space with isolated points x_1.. and their
/// limit. Coordinates are laid out as isolated, limit (if any), rest.
struct CompactModel {
  std::vector<std::string> isolated;
  std::optional<std::string> limit;
  std::vector<std::string> rest;

  static CompactModel sized(std::size_t isolated, bool limit, std::size_t rest);

  std::size_t dim() const { return isolated.size() + (limit ? 1 : 0) + rest.size(); }
  std::vector<std::string> labels() const;
  void validate() const;
};

/// f_n = sigma on x_1..x_{n-1}, flip sigma_n at x_n, t_n elsewhere (n <= count);
/// f_omega = sigma_n at every x_n, t_1 off the isolated points. The sequence
/// must not be eventually constant and t_1..t_count must be distinct.
PointSet theorem7_points(const SigmaSequence& sigma, std::span<const Rational> t,
                         const CompactModel& model, std::size_t count);

/// Coordinates: 1..M, then infinity, then a block of k_size points. f_n as in
/// theorem6_points with interior 1/2 everywhere off 1..n; f_omega = sigma on
/// 1..M, i at infinity, 1/2 on the block.
PointSet remark53_points(const SigmaSequence& sigma, std::size_t k_size, std::size_t isolated);

}  // namespace equilat
