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

// Test-only reference implementations. These work on std::set and plain
// loops and deliberately avoid the library's bitmask kernels, witness search
// and realization helpers.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "equilat/family.hpp"
#include "equilat/rational.hpp"
#include "equilat/supnorm.hpp"

namespace equilat::oracle {

using IntSet = std::set<int>;

struct SetPair {
  IntSet a;
  IntSet b;
  friend bool operator==(const SetPair&, const SetPair&) = default;
};

inline IntSet to_set(Mask m) {
  IntSet s;
  for (int i = 0; i < 64; ++i) {
    if ((m >> i) & 1) s.insert(i);
  }
  return s;
}

inline bool meets(const IntSet& x, const IntSet& y) {
  return std::any_of(x.begin(), x.end(), [&](int e) { return y.count(e) > 0; });
}

inline std::vector<SetPair> to_sets(const PairFamily& f) {
  std::vector<SetPair> out;
  for (const Pair& p : f.pairs()) out.push_back({to_set(p.a), to_set(p.b)});
  return out;
}

/// Linkedness straight from the definition.
inline bool linked(const std::vector<SetPair>& fam) {
  for (const auto& p : fam) {
    if (p.a.empty() && p.b.empty()) return false;
  }
  for (std::size_t i = 0; i < fam.size(); ++i) {
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      if (!meets(fam[i].a, fam[j].b) && !meets(fam[j].a, fam[i].b)) return false;
    }
  }
  return true;
}

/// Every disjoint pair with nonempty union, in (A mask, B mask) order.
inline std::vector<Pair> all_candidates(int n) {
  std::vector<Pair> out;
  for (Mask a = 0; a < (Mask{1} << n); ++a) {
    for (Mask b = 0; b < (Mask{1} << n); ++b) {
      if ((a & b) == 0 && (a | b) != 0) out.push_back({a, b});
    }
  }
  return out;
}

/// Every linked family on n elements (pairs in candidate order).
inline std::vector<PairFamily> all_linked_families(int n) {
  const auto cands = all_candidates(n);
  std::vector<PairFamily> out;
  std::vector<Pair> chosen;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    out.emplace_back(n, chosen);
    for (std::size_t i = start; i < cands.size(); ++i) {
      std::vector<SetPair> trial;
      for (const Pair& p : chosen) trial.push_back({to_set(p.a), to_set(p.b)});
      trial.push_back({to_set(cands[i].a), to_set(cands[i].b)});
      if (!linked(trial)) continue;
      chosen.push_back(cands[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline Rational distance(const SupPoint& x, const SupPoint& y) {
  Rational best(0);
  for (int a = 0; a < x.dim(); ++a) {
    Rational gap = x[a] - y[a];
    if (gap < Rational(0)) gap = -gap;
    if (best < gap) best = gap;
  }
  return best;
}

inline bool equilateral(const PointSet& s, const Rational& lambda) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (distance(s[i], s[j]) != lambda) return false;
    }
  }
  return true;
}

inline Rational random_rational(std::mt19937_64& rng, std::int64_t max_den = 12) {
  const auto den = static_cast<std::int64_t>(1 + rng() % static_cast<std::uint64_t>(max_den));
  const auto num = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(den + 1));
  return Rational(num, den);
}

/// Random linked family on n elements with up to `max_size` pairs.
inline PairFamily random_linked_family(std::mt19937_64& rng, int n, std::size_t max_size) {
  auto cands = all_candidates(n);
  std::shuffle(cands.begin(), cands.end(), rng);
  const std::size_t target = 1 + rng() % max_size;
  std::vector<Pair> chosen;
  for (const Pair& c : cands) {
    if (chosen.size() == target) break;
    if (std::all_of(chosen.begin(), chosen.end(), [&](const Pair& q) { return links(c, q); })) {
      chosen.push_back(c);
    }
  }
  return PairFamily(n, chosen);
}

}  // namespace equilat::oracle
