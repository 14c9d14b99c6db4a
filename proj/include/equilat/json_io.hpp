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

// JSON documents. Rationals are always strings ("p/q" or "p"); sets are
// sorted ascending integer arrays.
//
//   family:  {"ground_size": n, "pairs": [{"A": [...], "B": [...]}, ...]}
//   points:  {"dim": d, "points": [["p/q", ...], ...]}
//   witness: {"ground_size": n, "items": [{"F": [...], "V": [...]}, ...]}
//   region:  {"empty": bool, "boxes": [{"lo": [...], "hi": [...]}, ...]}
//   sigma:   {"bits": "101", "tail": {"onset": 4, "value": 0}}
//   antichain: ["0", "11", "100"]

#include <json.hpp>
#include <string>
#include <string_view>

#include "equilat/family.hpp"
#include "equilat/generators.hpp"
#include "equilat/maximality.hpp"
#include "equilat/supnorm.hpp"

namespace equilat::io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "equilat/1";

Json parse_text(std::string_view text);
Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& doc);

/// Stable text form: two-space indentation and a trailing newline.
std::string dump(const Json& doc);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json set_to_json(Mask mask);
Mask set_from_json(const Json& j, int ground_size);

Json point_to_json(const SupPoint& p);
SupPoint point_from_json(const Json& j);

Json family_to_json(const PairFamily& family);
/// Pairs may repeat only when `duplicates` allows it.
PairFamily family_from_json(const Json& j,
                            PairFamily::Duplicates duplicates = PairFamily::Duplicates::kReject);

Json points_to_json(const PointSet& set);
PointSet points_from_json(const Json& j);

Json witness_to_json(const WeakSeparationWitness& witness, int ground_size);
WeakSeparationWitness witness_from_json(const Json& j, int* ground_size = nullptr);

Json region_to_json(const Region& region);
Region region_from_json(const Json& j, int dim);

Json sigma_to_json(const SigmaSequence& sigma);
SigmaSequence sigma_from_json(const Json& j);

Json nodes_to_json(std::span<const TreeNode> nodes);
std::vector<TreeNode> nodes_from_json(const Json& j);

Json forcing_to_json(std::span<const CoordinateForcing> forcing);
Json msearch_to_json(const MSearchReport& report);

enum class DocumentKind { kFamily, kPoints, kWitness, kUnknown };
DocumentKind classify(const Json& j);

}  // namespace equilat::io
