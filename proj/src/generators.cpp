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

#include "equilat/generators.hpp"

#include <algorithm>
#include <set>

#include "equilat/error.hpp"

namespace equilat {

namespace {

void check_bits(std::span<const std::uint8_t> bits) {
  for (std::uint8_t b : bits) {
    require(b <= 1, ErrorCode::kInvalidArgument, "tree words and sequences are over {0,1}");
  }
}

std::vector<std::uint8_t> parse_bits(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    require(c == '0' || c == '1', ErrorCode::kParse,
            "expected a 0/1 word, got '" + std::string(text) + "'");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return bits;
}

void check_open_unit(const Rational& t, const char* op) {
  require(Rational(0) < t && t < Rational(1), ErrorCode::kInvalidArgument,
          std::string(op) + ": interior value " + t.str() + " is not in (0,1)");
}

}  // namespace

TreeNode::TreeNode(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) { check_bits(bits_); }

TreeNode TreeNode::parse(std::string_view text) { return TreeNode(parse_bits(text)); }

std::string TreeNode::str() const {
  std::string out;
  for (std::uint8_t b : bits_) out.push_back(static_cast<char>('0' + b));
  return out;
}

bool TreeNode::is_prefix_of(const TreeNode& other) const {
  return bits_.size() <= other.bits_.size() &&
         std::equal(bits_.begin(), bits_.end(), other.bits_.begin());
}

bool is_antichain(std::span<const TreeNode> nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (comparable(nodes[i], nodes[j])) return false;
    }
  }
  return true;
}

Antichain::Antichain(std::vector<TreeNode> nodes) : nodes_(std::move(nodes)) {
  require(is_antichain(nodes_), ErrorCode::kInvalidArgument, "words are not pairwise incomparable");
}

SigmaSequence::SigmaSequence(std::vector<std::uint8_t> bits, std::optional<Tail> tail)
    : bits_(std::move(bits)), tail_(tail) {
  check_bits(bits_);
  if (tail_) {
    require(tail_->value <= 1, ErrorCode::kInvalidArgument, "tail value must be 0 or 1");
    require(tail_->onset >= 1 && tail_->onset <= bits_.size() + 1, ErrorCode::kInvalidArgument,
            "tail onset must lie in [1, |bits| + 1]");
    for (std::size_t n = tail_->onset; n <= bits_.size(); ++n) {
      require(bits_[n - 1] == tail_->value, ErrorCode::kInvalidArgument,
              "explicit bits disagree with the constant tail");
    }
  }
}

SigmaSequence SigmaSequence::parse(std::string_view bits, std::optional<Tail> tail) {
  return SigmaSequence(parse_bits(bits), tail);
}

SigmaSequence SigmaSequence::eventually(std::vector<std::uint8_t> bits, std::uint8_t value) {
  const std::size_t onset = bits.size() + 1;
  return SigmaSequence(std::move(bits), Tail{onset, value});
}

std::size_t SigmaSequence::tail_start() const {
  require(tail_.has_value(), ErrorCode::kPreconditionViolated, "sequence is not eventually constant");
  return tail_->onset - 1;
}

std::uint8_t SigmaSequence::at(std::size_t n) const {
  require(n >= 1, ErrorCode::kInvalidArgument, "sequence positions start at 1");
  if (n <= bits_.size()) return bits_[n - 1];
  require(tail_.has_value(), ErrorCode::kInvalidArgument,
          "sequence is undefined at position " + std::to_string(n));
  return tail_->value;
}

std::string SigmaSequence::bit_string() const {
  std::string out;
  for (std::uint8_t b : bits_) out.push_back(static_cast<char>('0' + b));
  return out;
}

std::vector<TreeNode> branch_from_sigma(const SigmaSequence& sigma, std::size_t depth) {
  require(sigma.defined_through(depth), ErrorCode::kInvalidArgument,
          "branch_from_sigma: sequence undefined at the requested depth");
  std::vector<TreeNode> out;
  std::vector<std::uint8_t> word;
  for (std::size_t n = 1; n <= depth; ++n) {
    word.push_back(sigma.at(n));
    out.emplace_back(word);
  }
  return out;
}

Antichain antichain_from_sigma(const SigmaSequence& sigma, std::size_t depth) {
  require(sigma.defined_through(depth), ErrorCode::kInvalidArgument,
          "antichain_from_sigma: sequence undefined at the requested depth");
  std::vector<TreeNode> out;
  std::vector<std::uint8_t> prefix;
  for (std::size_t n = 1; n <= depth; ++n) {
    std::vector<std::uint8_t> word(prefix);
    word.push_back(flip_bit(sigma.at(n)));
    out.emplace_back(std::move(word));
    prefix.push_back(sigma.at(n));
  }
  return Antichain(std::move(out));
}

AntichainFamily family_from_antichain(std::span<const TreeNode> nodes, int ground_size) {
  std::vector<Pair> pairs;
  pairs.reserve(nodes.size());
  for (const TreeNode& s : nodes) {
    require(s.length() >= 1, ErrorCode::kInvalidArgument,
            "family_from_antichain: the empty word carries no pair");
    require(s.length() <= static_cast<std::size_t>(ground_size), ErrorCode::kInvalidArgument,
            "family_from_antichain: ground set shorter than a word");
    Pair p;
    for (std::size_t k = 1; k <= s.length(); ++k) {
      (s.at(k) == 1 ? p.a : p.b) |= Mask{1} << (k - 1);
    }
    pairs.push_back(p);
  }
  return {PairFamily(ground_size, std::move(pairs), PairFamily::Duplicates::kAllow),
          is_antichain(nodes)};
}

std::uint64_t count_antichains(int depth) {
  require(depth >= 0 && depth <= 5, ErrorCode::kCapExceeded, "count_antichains: depth must be in [0, 5]");
  if (depth == 0) return 1;
  // f(h): antichains of a full binary tree of height h, root included.
  std::uint64_t f = 2;
  for (int h = 1; h < depth; ++h) f = f * f + 1;
  return f * f;
}

namespace {

std::vector<TreeNode> levels(int depth) {
  std::vector<TreeNode> out;
  for (int len = 1; len <= depth; ++len) {
    for (std::uint32_t code = 0; code < (1u << len); ++code) {
      std::vector<std::uint8_t> word(static_cast<std::size_t>(len));
      for (int k = 0; k < len; ++k) word[static_cast<std::size_t>(k)] = (code >> (len - 1 - k)) & 1;
      out.emplace_back(std::move(word));
    }
  }
  return out;
}

class AntichainWalk {
 public:
  AntichainWalk(int depth, const std::function<bool(std::span<const TreeNode>)>& visit)
      : nodes_(levels(depth)), visit_(visit) {}

  bool run() { return descend(nodes_.size()); }

 private:
  // Decides nodes_[remaining-1] and below; the last node is the outermost
  // decision, excluded before included.
  bool descend(std::size_t remaining) {
    if (remaining == 0) {
      ordered_.assign(chosen_.rbegin(), chosen_.rend());
      return visit_(ordered_);
    }
    const TreeNode& node = nodes_[remaining - 1];
    if (!descend(remaining - 1)) return false;
    for (const TreeNode& c : chosen_) {
      if (comparable(node, c)) return true;
    }
    chosen_.push_back(node);
    const bool go_on = descend(remaining - 1);
    chosen_.pop_back();
    return go_on;
  }

  std::vector<TreeNode> nodes_;
  const std::function<bool(std::span<const TreeNode>)>& visit_;
  std::vector<TreeNode> chosen_;
  std::vector<TreeNode> ordered_;
};

}  // namespace

bool for_each_antichain(int depth, const std::function<bool(std::span<const TreeNode>)>& visit) {
  require(depth >= 0 && depth <= 5, ErrorCode::kCapExceeded,
          "for_each_antichain: depth must be in [0, 5]");
  return AntichainWalk(depth, visit).run();
}

std::vector<Antichain> enumerate_antichains(int depth, int max_depth) {
  require(depth >= 0, ErrorCode::kInvalidArgument, "enumerate_antichains: negative depth");
  require(depth <= max_depth && depth <= 5, ErrorCode::kCapExceeded,
          "enumerate_antichains: depth " + std::to_string(depth) + " exceeds the cap (" +
              std::to_string(max_depth) + ")");
  std::vector<Antichain> out;
  for_each_antichain(depth, [&](std::span<const TreeNode> nodes) {
    out.emplace_back(std::vector<TreeNode>(nodes.begin(), nodes.end()));
    return true;
  });
  return out;
}

std::vector<Rational> default_interiors(std::size_t count) {
  std::vector<Rational> out;
  for (std::size_t n = 1; n <= count; ++n) out.emplace_back(1, static_cast<std::int64_t>(n + 2));
  return out;
}

namespace {

// f_n on the first `sequence_len` coordinates: sigma_1..sigma_{n-1},
// flip sigma_n, then `fill` on every remaining coordinate of `dim`.
SupPoint staircase_point(const SigmaSequence& sigma, std::size_t n, std::size_t dim,
                         const Rational& fill) {
  SupPoint f = SupPoint::constant(static_cast<int>(dim), fill);
  for (std::size_t k = 1; k < n; ++k) f[static_cast<int>(k - 1)] = Rational(sigma.at(k));
  f[static_cast<int>(n - 1)] = Rational(flip_bit(sigma.at(n)));
  return f;
}

}  // namespace

PointSet example2_points(const SigmaSequence& sigma, std::span<const Rational> t, std::size_t count,
                         std::size_t dim) {
  require(count >= 1 && count < dim, ErrorCode::kInvalidArgument,
          "example2_points: need 1 <= N < M");
  require(t.size() >= count, ErrorCode::kInvalidArgument, "example2_points: too few interior values");
  require(sigma.defined_through(dim), ErrorCode::kInvalidArgument,
          "example2_points: sequence undefined through the dimension");
  std::vector<SupPoint> points;
  for (std::size_t n = 1; n <= count; ++n) {
    check_open_unit(t[n - 1], "example2_points");
    points.push_back(staircase_point(sigma, n, dim, t[n - 1]));
  }
  SupPoint omega = SupPoint::constant(static_cast<int>(dim), Rational(0));
  for (std::size_t k = 1; k <= dim; ++k) omega[static_cast<int>(k - 1)] = Rational(sigma.at(k));
  points.push_back(std::move(omega));
  return PointSet(static_cast<int>(dim), std::move(points));
}

PointSet theorem6_points(const SigmaSequence& sigma, std::span<const Rational> t, std::size_t isolated) {
  require(sigma.eventually_constant(), ErrorCode::kPreconditionViolated,
          "theorem6_points: sequence must be eventually constant");
  const std::size_t tail_from = sigma.tail_start();
  require(isolated >= 1 && isolated >= tail_from, ErrorCode::kInvalidArgument,
          "theorem6_points: need M >= max(1, N)");
  require(t.size() >= isolated, ErrorCode::kInvalidArgument, "theorem6_points: too few interior values");
  const std::size_t dim = isolated + 1;
  std::vector<SupPoint> points;
  for (std::size_t n = 1; n <= isolated; ++n) {
    check_open_unit(t[n - 1], "theorem6_points");
    points.push_back(staircase_point(sigma, n, dim, t[n - 1]));
  }
  SupPoint omega = SupPoint::constant(static_cast<int>(dim), Rational(sigma.tail()->value));
  for (std::size_t k = 1; k <= isolated; ++k) omega[static_cast<int>(k - 1)] = Rational(sigma.at(k));
  points.push_back(std::move(omega));
  return PointSet(static_cast<int>(dim), std::move(points));
}

CompactModel CompactModel::sized(std::size_t isolated, bool limit, std::size_t rest) {
  CompactModel m;
  for (std::size_t i = 1; i <= isolated; ++i) m.isolated.push_back("x" + std::to_string(i));
  if (limit) m.limit = "inf";
  for (std::size_t i = 1; i <= rest; ++i) m.rest.push_back("k" + std::to_string(i));
  return m;
}

std::vector<std::string> CompactModel::labels() const {
  std::vector<std::string> out(isolated);
  if (limit) out.push_back(*limit);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

void CompactModel::validate() const {
  const auto all = labels();
  require(!all.empty(), ErrorCode::kInvalidArgument, "compact model has no points");
  std::set<std::string> seen(all.begin(), all.end());
  require(seen.size() == all.size(), ErrorCode::kInvalidArgument, "compact model labels repeat");
}

PointSet theorem7_points(const SigmaSequence& sigma, std::span<const Rational> t,
                         const CompactModel& model, std::size_t count) {
  model.validate();
  const std::size_t isolated = model.isolated.size();
  require(!sigma.eventually_constant(), ErrorCode::kPreconditionViolated,
          "theorem7_points: sequence must not be eventually constant");
  require(sigma.defined_through(isolated), ErrorCode::kInvalidArgument,
          "theorem7_points: sequence undefined on some isolated point");
  const auto bits = sigma.bits().first(isolated);
  require(std::count(bits.begin(), bits.end(), std::uint8_t{0}) > 0 &&
              std::count(bits.begin(), bits.end(), std::uint8_t{1}) > 0,
          ErrorCode::kPreconditionViolated,
          "theorem7_points: sequence is constant on the isolated points");
  require(count >= 1 && count <= isolated, ErrorCode::kInvalidArgument,
          "theorem7_points: need 1 <= N <= number of isolated points");
  require(t.size() >= count, ErrorCode::kInvalidArgument, "theorem7_points: too few interior values");
  std::set<Rational, std::less<>> distinct;
  for (std::size_t n = 0; n < count; ++n) {
    check_open_unit(t[n], "theorem7_points");
    require(distinct.insert(t[n]).second, ErrorCode::kInvalidArgument,
            "theorem7_points: interior values must be pairwise distinct");
  }
  const std::size_t dim = model.dim();
  std::vector<SupPoint> points;
  for (std::size_t n = 1; n <= count; ++n) points.push_back(staircase_point(sigma, n, dim, t[n - 1]));
  SupPoint omega = SupPoint::constant(static_cast<int>(dim), t[0]);
  for (std::size_t k = 1; k <= isolated; ++k) omega[static_cast<int>(k - 1)] = Rational(sigma.at(k));
  points.push_back(std::move(omega));
  return PointSet(static_cast<int>(dim), std::move(points));
}

PointSet remark53_points(const SigmaSequence& sigma, std::size_t k_size, std::size_t isolated) {
  require(sigma.eventually_constant(), ErrorCode::kPreconditionViolated,
          "remark53_points: sequence must be eventually constant");
  require(isolated >= 1 && isolated >= sigma.tail_start(), ErrorCode::kInvalidArgument,
          "remark53_points: need M >= max(1, N)");
  require(k_size >= 1, ErrorCode::kInvalidArgument, "remark53_points: the K block must be nonempty");
  const std::size_t dim = isolated + 1 + k_size;
  const Rational half(1, 2);
  std::vector<SupPoint> points;
  for (std::size_t n = 1; n <= isolated; ++n) points.push_back(staircase_point(sigma, n, dim, half));
  SupPoint omega = SupPoint::constant(static_cast<int>(dim), half);
  for (std::size_t k = 1; k <= isolated; ++k) omega[static_cast<int>(k - 1)] = Rational(sigma.at(k));
  omega[static_cast<int>(isolated)] = Rational(sigma.tail()->value);
  points.push_back(std::move(omega));
  return PointSet(static_cast<int>(dim), std::move(points));
}

}  // namespace equilat
