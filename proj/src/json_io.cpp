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

#include "equilat/json_io.hpp"

#include <fstream>
#include <sstream>

#include "equilat/error.hpp"

namespace equilat::io {

namespace {

[[noreturn]] void schema(const std::string& what) { fail(ErrorCode::kSchema, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) schema(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) schema(std::string("missing key '") + key + "'");
  return *it;
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) schema(std::string("key '") + key + "' must be an integer");
  return v.get<int>();
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) schema(std::string("key '") + key + "' must be an array");
  return v;
}

}  // namespace

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::kParse, std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::kIo, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_text(buffer.str());
}

void write_file(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  require(out.good(), ErrorCode::kIo, "cannot write '" + path + "'");
  out << dump(doc);
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  schema("rationals must be strings like \"p/q\" or integers");
}

Json set_to_json(Mask mask) {
  Json out = Json::array();
  for (int e : elements_of(mask)) out.push_back(e);
  return out;
}

Mask set_from_json(const Json& j, int ground_size) {
  if (!j.is_array()) schema("sets must be arrays of integers");
  Mask m = 0;
  for (const Json& e : j) {
    if (!e.is_number_integer()) schema("set elements must be integers");
    const auto v = e.get<std::int64_t>();
    if (v < 0 || v >= ground_size) schema("set element " + std::to_string(v) + " outside the ground set");
    const Mask bit = Mask{1} << v;
    if (m & bit) schema("set element " + std::to_string(v) + " repeated");
    m |= bit;
  }
  return m;
}

Json point_to_json(const SupPoint& p) {
  Json out = Json::array();
  for (const Rational& v : p.coords()) out.push_back(rational_to_json(v));
  return out;
}

SupPoint point_from_json(const Json& j) {
  if (!j.is_array()) schema("points must be arrays of rationals");
  std::vector<Rational> coords;
  for (const Json& v : j) coords.push_back(rational_from_json(v));
  return SupPoint(std::move(coords));
}

Json family_to_json(const PairFamily& family) {
  Json pairs = Json::array();
  for (const Pair& p : family.pairs()) pairs.push_back({{"A", set_to_json(p.a)}, {"B", set_to_json(p.b)}});
  return {{"ground_size", family.ground_size()}, {"pairs", pairs}};
}

PairFamily family_from_json(const Json& j, PairFamily::Duplicates duplicates) {
  const int n = int_field(j, "ground_size");
  if (n < 1 || n > kMaxGroundSize) schema("ground_size must be in [1, 64]");
  std::vector<Pair> pairs;
  for (const Json& p : array_field(j, "pairs")) {
    pairs.push_back({set_from_json(field(p, "A"), n), set_from_json(field(p, "B"), n)});
  }
  return PairFamily(n, std::move(pairs), duplicates);
}

Json points_to_json(const PointSet& set) {
  Json points = Json::array();
  for (const SupPoint& p : set.points()) points.push_back(point_to_json(p));
  return {{"dim", set.dim()}, {"points", points}};
}

PointSet points_from_json(const Json& j) {
  const int d = int_field(j, "dim");
  if (d < 1) schema("dim must be positive");
  std::vector<SupPoint> points;
  for (const Json& p : array_field(j, "points")) {
    points.push_back(point_from_json(p));
    if (points.back().dim() != d) schema("point length differs from dim");
  }
  return PointSet(d, std::move(points));
}

Json witness_to_json(const WeakSeparationWitness& witness, int ground_size) {
  Json items = Json::array();
  for (const auto& item : witness.items()) {
    items.push_back({{"F", set_to_json(item.f)}, {"V", set_to_json(item.v)}});
  }
  return {{"ground_size", ground_size}, {"items", items}};
}

WeakSeparationWitness witness_from_json(const Json& j, int* ground_size) {
  const int n = int_field(j, "ground_size");
  if (n < 1 || n > kMaxGroundSize) schema("ground_size must be in [1, 64]");
  std::vector<WeakSeparationItem> items;
  for (const Json& item : array_field(j, "items")) {
    items.push_back({set_from_json(field(item, "F"), n), set_from_json(field(item, "V"), n)});
  }
  if (ground_size != nullptr) *ground_size = n;
  return WeakSeparationWitness(std::move(items));
}

Json region_to_json(const Region& region) {
  Json boxes = Json::array();
  for (const Box& b : region.boxes()) {
    boxes.push_back({{"lo", point_to_json(SupPoint(b.lo))}, {"hi", point_to_json(SupPoint(b.hi))}});
  }
  return {{"empty", region.empty()}, {"boxes", boxes}};
}

Region region_from_json(const Json& j, int dim) {
  std::vector<Box> boxes;
  for (const Json& b : array_field(j, "boxes")) {
    SupPoint lo = point_from_json(field(b, "lo"));
    SupPoint hi = point_from_json(field(b, "hi"));
    if (lo.dim() != dim || hi.dim() != dim) schema("region box of the wrong dimension");
    boxes.push_back(Box{{lo.coords().begin(), lo.coords().end()}, {hi.coords().begin(), hi.coords().end()}});
  }
  Region region(dim, std::move(boxes));
  if (field(j, "empty").get<bool>() != region.empty()) schema("region 'empty' flag disagrees with boxes");
  return region;
}

Json sigma_to_json(const SigmaSequence& sigma) {
  Json out = {{"bits", sigma.bit_string()}};
  if (sigma.tail()) out["tail"] = {{"onset", sigma.tail()->onset}, {"value", sigma.tail()->value}};
  return out;
}

SigmaSequence sigma_from_json(const Json& j) {
  const Json& bits = field(j, "bits");
  if (!bits.is_string()) schema("sigma bits must be a 0/1 string");
  std::optional<SigmaSequence::Tail> tail;
  if (auto it = j.find("tail"); it != j.end() && !it->is_null()) {
    const int onset = int_field(*it, "onset");
    const int value = int_field(*it, "value");
    if (onset < 1 || (value != 0 && value != 1)) schema("sigma tail must have onset >= 1 and value 0/1");
    tail = SigmaSequence::Tail{static_cast<std::size_t>(onset), static_cast<std::uint8_t>(value)};
  }
  return SigmaSequence::parse(bits.get<std::string>(), tail);
}

Json nodes_to_json(std::span<const TreeNode> nodes) {
  Json out = Json::array();
  for (const TreeNode& s : nodes) out.push_back(s.str());
  return out;
}

std::vector<TreeNode> nodes_from_json(const Json& j) {
  if (!j.is_array()) schema("antichains are arrays of 0/1 strings");
  std::vector<TreeNode> out;
  for (const Json& s : j) {
    if (!s.is_string()) schema("tree words must be 0/1 strings");
    out.push_back(TreeNode::parse(s.get<std::string>()));
  }
  return out;
}

Json forcing_to_json(std::span<const CoordinateForcing> forcing) {
  Json out = Json::array();
  for (std::size_t a = 0; a < forcing.size(); ++a) {
    const CoordinateForcing& f = forcing[a];
    Json entry = {{"coordinate", a}, {"kind", forcing_kind_name(f.kind)}};
    if (f.kind == CoordinateForcing::Kind::kPinned) entry["value"] = rational_to_json(f.hull.lo);
    if (f.kind != CoordinateForcing::Kind::kNoExtension) {
      entry["hull"] = {rational_to_json(f.hull.lo), rational_to_json(f.hull.hi)};
      Json projection = Json::array();
      for (const Interval& i : f.projection) {
        projection.push_back({rational_to_json(i.lo), rational_to_json(i.hi)});
      }
      entry["projection"] = projection;
    }
    out.push_back(entry);
  }
  return out;
}

Json msearch_to_json(const MSearchReport& report) {
  Json below = Json::array();
  for (const SizeTrials& t : report.below) {
    below.push_back({{"size", t.size},
                     {"skeleton_orbits", t.skeletons},
                     {"realizations", t.realizations},
                     {"trials", t.trials},
                     {"failures", t.failures}});
  }
  Json out = {{"dim", report.dim}, {"k_max", report.k_max}};
  if (report.first_maximal_size) {
    out["first_maximal_size"] = *report.first_maximal_size;
    out["certificate"] = points_to_json(*report.certificate);
    out["certificate_skeleton"] = family_to_json(*report.certificate_skeleton);
    out["certificate_interior"] = rational_to_json(*report.certificate_interior);
    out["oracle_confirms_certificate"] = report.oracle_confirms_certificate;
  } else {
    out["first_maximal_size"] = "not found <= " + std::to_string(report.k_max);
  }
  out["extension_trials"] = below;
  std::string claim = "none";
  if (report.claims_minimum()) {
    claim = "m = " + std::to_string(*report.first_maximal_size) +
            " (certified upper bound + sampled lower-bound evidence)";
  } else if (report.first_maximal_size) {
    claim = "upper bound m <= " + std::to_string(*report.first_maximal_size) + " only";
  }
  out["claim"] = claim;
  return out;
}

DocumentKind classify(const Json& j) {
  if (!j.is_object()) return DocumentKind::kUnknown;
  if (j.contains("pairs")) return DocumentKind::kFamily;
  if (j.contains("points")) return DocumentKind::kPoints;
  if (j.contains("items")) return DocumentKind::kWitness;
  return DocumentKind::kUnknown;
}

}  // namespace equilat::io
