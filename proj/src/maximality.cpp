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

#include "equilat/maximality.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <string>

#include "equilat/error.hpp"
#include "equilat/kernels.hpp"

namespace equilat {

bool Box::contains(const SupPoint& p) const {
  if (p.dim() != dim()) return false;
  for (int a = 0; a < dim(); ++a) {
    if (p[a] < lo[static_cast<std::size_t>(a)] || hi[static_cast<std::size_t>(a)] < p[a]) return false;
  }
  return true;
}

bool Box::contains(const Box& other) const {
  if (other.dim() != dim()) return false;
  for (std::size_t a = 0; a < lo.size(); ++a) {
    if (other.lo[a] < lo[a] || hi[a] < other.hi[a]) return false;
  }
  return true;
}

Region::Region(int dim, std::vector<Box> boxes) : dim_(dim) {
  for (const Box& b : boxes) {
    require(b.dim() == dim && b.hi.size() == b.lo.size(), ErrorCode::kDimensionMismatch,
            "region box of the wrong dimension");
    for (std::size_t a = 0; a < b.lo.size(); ++a) {
      require(b.lo[a] <= b.hi[a], ErrorCode::kInvalidArgument, "region box with lo > hi");
    }
  }
  std::sort(boxes.begin(), boxes.end());
  boxes.erase(std::unique(boxes.begin(), boxes.end()), boxes.end());
  std::vector<bool> covered(boxes.size(), false);
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    for (std::size_t j = 0; j < boxes.size() && !covered[i]; ++j) {
      if (i != j && !covered[j] && boxes[j].contains(boxes[i])) covered[i] = true;
    }
  }
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    if (!covered[i]) boxes_.push_back(std::move(boxes[i]));
  }
}

bool Region::contains(const SupPoint& p) const {
  return std::any_of(boxes_.begin(), boxes_.end(), [&](const Box& b) { return b.contains(p); });
}

namespace {

void check_decider_input(const PointSet& set, const DeciderCaps& caps, const char* op) {
  require(!set.empty(), ErrorCode::kInvalidArgument, std::string(op) + ": empty point set");
  require(set.size() <= caps.max_points, ErrorCode::kCapExceeded,
          std::string(op) + ": " + std::to_string(set.size()) + " points exceed the cap of " +
              std::to_string(caps.max_points));
  require(set.dim() <= caps.max_dim, ErrorCode::kCapExceeded,
          std::string(op) + ": dimension " + std::to_string(set.dim()) + " exceeds the cap of " +
              std::to_string(caps.max_dim));
  require(is_equilateral(set, Rational(1)), ErrorCode::kNotEquilateral,
          std::string(op) + ": set is not 1-equilateral");
}

class WitnessSearch {
 public:
  explicit WitnessSearch(const PointSet& set) : set_(set), dim_(set.dim()) {}

  std::vector<Box> run() {
    const auto& first = set_[0];
    lo_.assign(first.coords().begin(), first.coords().end());
    hi_ = lo_;
    for (const SupPoint& p : set_.points()) {
      for (int a = 0; a < dim_; ++a) {
        lo_[idx(a)] = std::max(lo_[idx(a)], p[a]);
        hi_[idx(a)] = std::min(hi_[idx(a)], p[a]);
      }
    }
    for (int a = 0; a < dim_; ++a) {
      lo_[idx(a)] -= Rational(1);
      hi_[idx(a)] += Rational(1);
      if (hi_[idx(a)] < lo_[idx(a)]) return {};
    }
    descend(0);
    return std::move(boxes_);
  }

 private:
  static std::size_t idx(int a) { return static_cast<std::size_t>(a); }

  bool already_witnessed(const SupPoint& p) const {
    for (int a = 0; a < dim_; ++a) {
      if (lo_[idx(a)] == hi_[idx(a)] && abs(lo_[idx(a)] - p[a]) == Rational(1)) return true;
    }
    return false;
  }

  void descend(std::size_t k) {
    if (k == set_.size()) {
      boxes_.push_back(Box{lo_, hi_});
      return;
    }
    const SupPoint& p = set_[k];
    // Any other witness choice for p only shrinks the current box.
    if (already_witnessed(p)) {
      descend(k + 1);
      return;
    }
    for (int a = 0; a < dim_; ++a) {
      for (int s : {-1, 1}) {
        const Rational v = p[a] + Rational(s);
        if (v < lo_[idx(a)] || hi_[idx(a)] < v) continue;
        const Rational save_lo = lo_[idx(a)];
        const Rational save_hi = hi_[idx(a)];
        lo_[idx(a)] = v;
        hi_[idx(a)] = v;
        descend(k + 1);
        lo_[idx(a)] = save_lo;
        hi_[idx(a)] = save_hi;
      }
    }
  }

  const PointSet& set_;
  int dim_;
  std::vector<Rational> lo_;
  std::vector<Rational> hi_;
  std::vector<Box> boxes_;
};

}  // namespace

Region extension_region(const PointSet& set, const DeciderCaps& caps) {
  check_decider_input(set, caps, "extension_region");
  // Members sit at distance 0 from themselves, so none can lie in the region.
  return Region(set.dim(), WitnessSearch(set).run());
}

std::optional<SupPoint> find_extension(const PointSet& set, const DeciderCaps& caps) {
  const Region region = extension_region(set, caps);
  if (region.empty()) return std::nullopt;
  SupPoint best = region.boxes().front().lower_corner();
  for (const Box& b : region.boxes()) best = std::min(best, b.lower_corner());
  return best;
}

bool is_maximal_equilateral(const PointSet& set, const DeciderCaps& caps) {
  return extension_region(set, caps).empty();
}

std::optional<SupPoint> grid_oracle_extension(const PointSet& set, const DeciderCaps& caps) {
  check_decider_input(set, caps, "grid_oracle_extension");
  const int d = set.dim();
  std::vector<std::vector<Rational>> critical(static_cast<std::size_t>(d));
  std::uint64_t tuples = 1;
  for (int a = 0; a < d; ++a) {
    auto& values = critical[static_cast<std::size_t>(a)];
    for (const SupPoint& p : set.points()) {
      values.push_back(p[a] - Rational(1));
      values.push_back(p[a]);
      values.push_back(p[a] + Rational(1));
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    tuples *= values.size();
    require(tuples <= caps.max_grid_tuples, ErrorCode::kCapExceeded,
            "grid_oracle_extension: critical grid exceeds the tuple cap");
  }

  std::vector<std::size_t> odometer(static_cast<std::size_t>(d), 0);
  SupPoint candidate = SupPoint::constant(d, Rational(0));
  while (true) {
    for (int a = 0; a < d; ++a) {
      candidate[a] = critical[static_cast<std::size_t>(a)][odometer[static_cast<std::size_t>(a)]];
    }
    const bool valid = std::all_of(set.points().begin(), set.points().end(), [&](const SupPoint& p) {
      return sup_distance(candidate, p) == Rational(1);
    });
    if (valid) return candidate;
    int a = d - 1;
    while (a >= 0) {
      auto& digit = odometer[static_cast<std::size_t>(a)];
      if (++digit < critical[static_cast<std::size_t>(a)].size()) break;
      digit = 0;
      --a;
    }
    if (a < 0) return std::nullopt;
  }
}

std::string forcing_kind_name(CoordinateForcing::Kind kind) {
  switch (kind) {
    case CoordinateForcing::Kind::kNoExtension: return "no-extension";
    case CoordinateForcing::Kind::kPinned: return "pinned";
    case CoordinateForcing::Kind::kFree: return "interval";
  }
  return "unknown";
}

std::vector<CoordinateForcing> forced_coordinates(const PointSet& set, const DeciderCaps& caps) {
  const Region region = extension_region(set, caps);
  std::vector<CoordinateForcing> out(static_cast<std::size_t>(set.dim()));
  if (region.empty()) return out;
  for (int a = 0; a < set.dim(); ++a) {
    const auto ua = static_cast<std::size_t>(a);
    std::vector<Interval> spans;
    for (const Box& b : region.boxes()) spans.push_back({b.lo[ua], b.hi[ua]});
    std::sort(spans.begin(), spans.end(),
              [](const Interval& l, const Interval& r) { return l.lo < r.lo || (l.lo == r.lo && l.hi < r.hi); });
    CoordinateForcing& f = out[ua];
    for (const Interval& s : spans) {
      if (!f.projection.empty() && s.lo <= f.projection.back().hi) {
        f.projection.back().hi = std::max(f.projection.back().hi, s.hi);
      } else {
        f.projection.push_back(s);
      }
    }
    f.hull = {f.projection.front().lo, f.projection.back().hi};
    f.kind = f.hull.lo == f.hull.hi ? CoordinateForcing::Kind::kPinned : CoordinateForcing::Kind::kFree;
  }
  return out;
}

const std::vector<Rational>& interior_sweep() {
  static const std::vector<Rational> sweep{Rational(1, 2), Rational(1, 3), Rational(2, 3),
                                           Rational(1, 4), Rational(3, 4)};
  return sweep;
}

bool MSearchReport::claims_minimum() const {
  if (!first_maximal_size || !oracle_confirms_certificate) return false;
  return std::all_of(below.begin(), below.end(), [](const SizeTrials& t) { return t.failures == 0; });
}

namespace {

// Candidate pairs on d elements: disjoint, nonempty union, (A, B) ascending.
std::vector<Pair> candidate_pairs(int d) {
  std::vector<Pair> out;
  const Mask ground = full_mask(d);
  for (Mask a = 0; a <= ground; ++a) {
    for (Mask b = 0; b <= ground; ++b) {
      if ((a & b) == 0 && (a | b) != 0 && ((a | b) & ~ground) == 0) out.push_back({a, b});
    }
  }
  return out;
}

// Image of a pair under a coordinate permutation, optionally mirrored.
Pair transform(const Pair& p, const std::vector<int>& perm, bool flip) {
  Pair q;
  for (std::size_t a = 0; a < perm.size(); ++a) {
    if ((p.a >> a) & 1) q.a |= Mask{1} << perm[a];
    if ((p.b >> a) & 1) q.b |= Mask{1} << perm[a];
  }
  if (flip) std::swap(q.a, q.b);
  return q;
}

// Enumerates linked families of a fixed size that are least in their orbit
// under coordinate permutations and the global A<->B mirror. Both maps are
// isometries of the realization (x -> 1 - x swaps the roles of A and B and
// the interior sweep is closed under t -> 1 - t).
class SkeletonEnumerator {
 public:
  SkeletonEnumerator(int dim, int size) : dim_(dim), size_(size), candidates_(candidate_pairs(dim)) {
    std::vector<int> perm(static_cast<std::size_t>(dim));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      perms_.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  template <typename Visit>
  bool for_each(Visit&& visit) {
    chosen_.clear();
    as_.clear();
    bs_.clear();
    return descend(0, visit);
  }

 private:
  bool canonical() const {
    std::vector<Pair> image(chosen_.size());
    for (const auto& perm : perms_) {
      for (bool flip : {false, true}) {
        for (std::size_t i = 0; i < chosen_.size(); ++i) image[i] = transform(chosen_[i], perm, flip);
        std::sort(image.begin(), image.end());
        if (image < chosen_) return false;
      }
    }
    return true;
  }

  template <typename Visit>
  bool descend(std::size_t start, Visit& visit) {
    if (static_cast<int>(chosen_.size()) == size_) {
      if (!canonical()) return true;
      return visit(PairFamily(dim_, chosen_));
    }
    for (std::size_t c = start; c < candidates_.size(); ++c) {
      const Pair& p = candidates_[c];
      if (kernels::first_unlinked(p.a, p.b, as_, bs_) != as_.size()) continue;
      chosen_.push_back(p);
      as_.push_back(p.a);
      bs_.push_back(p.b);
      const bool go_on = descend(c + 1, visit);
      chosen_.pop_back();
      as_.pop_back();
      bs_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  int dim_;
  int size_;
  std::vector<Pair> candidates_;
  std::vector<std::vector<int>> perms_;
  std::vector<Pair> chosen_;
  std::vector<Mask> as_;
  std::vector<Mask> bs_;
};

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

std::optional<PairFamily> random_skeleton(int dim, int size, const std::vector<Pair>& candidates,
                                          std::mt19937_64& rng) {
  std::vector<Pair> pool(candidates);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[draw(rng, i)]);
    std::vector<Pair> chosen;
    for (const Pair& p : pool) {
      if (std::all_of(chosen.begin(), chosen.end(), [&](const Pair& q) { return links(p, q); })) {
        chosen.push_back(p);
        if (static_cast<int>(chosen.size()) == size) return PairFamily(dim, std::move(chosen));
      }
    }
  }
  return std::nullopt;
}

Rational random_interior(std::mt19937_64& rng) {
  const auto den = static_cast<std::int64_t>(2 + draw(rng, 63));
  const auto num = static_cast<std::int64_t>(1 + draw(rng, static_cast<std::uint64_t>(den - 1)));
  return Rational(num, den);
}

}  // namespace

MSearchReport m_search(int dim, int k_max, int trials, std::uint64_t seed, const MSearchCaps& caps) {
  require(dim >= 1 && k_max >= 1 && trials >= 1, ErrorCode::kInvalidArgument,
          "m_search: dimension, k_max and trials must be positive");
  require(dim <= caps.max_dim, ErrorCode::kCapExceeded,
          "m_search: dimension " + std::to_string(dim) + " exceeds the cap of " +
              std::to_string(caps.max_dim));
  require(k_max <= dim + caps.max_k_over_dim, ErrorCode::kCapExceeded,
          "m_search: k_max exceeds dimension + " + std::to_string(caps.max_k_over_dim));

  DeciderCaps decider;
  decider.max_points = std::max<std::size_t>(decider.max_points, static_cast<std::size_t>(k_max));
  decider.max_dim = std::max(decider.max_dim, dim);

  MSearchReport report;
  report.dim = dim;
  report.k_max = k_max;
  std::mt19937_64 rng(seed);
  const std::vector<Pair> candidates = candidate_pairs(dim);

  for (int k = 1; k <= k_max; ++k) {
    SizeTrials stats;
    stats.size = k;
    SkeletonEnumerator skeletons(dim, k);
    skeletons.for_each([&](const PairFamily& family) {
      ++stats.skeletons;
      for (const Rational& t : interior_sweep()) {
        PointSet realized = points_from_family_exact(family, t);
        ++stats.realizations;
        if (is_maximal_equilateral(realized, decider)) {
          report.first_maximal_size = k;
          report.certificate_skeleton = family;
          report.certificate_interior = t;
          report.oracle_confirms_certificate = !grid_oracle_extension(realized, decider).has_value();
          report.certificate = std::move(realized);
          return false;
        }
      }
      return true;
    });
    if (report.first_maximal_size) return report;

    if (stats.skeletons > 0) {
      for (int trial = 0; trial < trials; ++trial) {
        auto family = random_skeleton(dim, k, candidates, rng);
        require(family.has_value(), ErrorCode::kPreconditionViolated,
                "m_search: failed to sample a linked skeleton");
        PointSet sample =
            points_from_family_exact(*family, [&](std::size_t, int) { return random_interior(rng); });
        ++stats.trials;
        auto extension = find_extension(sample, decider);
        if (!extension || !is_equilateral(sample.with(*extension), Rational(1))) ++stats.failures;
      }
    }
    report.below.push_back(stats);
  }
  return report;
}

}  // namespace equilat
