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

#include "equilat/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

#include "equilat/error.hpp"
#include "equilat/family.hpp"
#include "equilat/generators.hpp"
#include "equilat/json_io.hpp"
#include "equilat/maximality.hpp"
#include "equilat/supnorm.hpp"

namespace equilat::cli {

namespace {

using io::Json;

struct Options {
  bool assert_result = false;
  bool unsafe_caps = false;
  bool timing = false;
  std::string out_path;

  std::string input;

  // verify-linked
  bool nonempty = false;
  bool maximal = false;
  bool facts = false;

  // numeric parameters, kept as text until a library call parses them
  std::string lambda = "1";
  std::string delta;
  std::string epsilon;
  std::string interior = "1/2";
  int x0 = 0;
  int coord = 0;
  std::string op;

  // generate
  std::string kind;
  std::string sigma_json;
  std::string bits;
  int tail_onset = 0;
  int tail_value = -1;
  std::string t_list;
  int count = 0;
  int dim = 0;
  int isolated = 0;
  int rest = 0;
  bool limit = false;
  int k_size = 1;
  int depth = 0;
  int ground = 0;
  std::string nodes;

  // msearch
  int kmax = 0;
  int trials = 0;
  std::uint64_t seed = 0;
};

struct Caps {
  FamilySearchCaps family;
  DeciderCaps decider;
  MSearchCaps msearch;
  int antichain_depth = 4;
};

Caps caps_for(const Options& o) {
  Caps c;
  if (o.unsafe_caps) {
    c.family.max_ground_size = 32;
    c.decider.max_points = 24;
    c.decider.max_dim = 16;
    c.decider.max_grid_tuples = 1'000'000'000;
    c.msearch.max_dim = 8;
    c.msearch.max_k_over_dim = 6;
    c.antichain_depth = 5;
  }
  return c;
}

// A command yields its payload and, for verifications, a boolean verdict.
struct Outcome {
  Json payload = Json::object();
  std::optional<bool> verdict;
};

Json input_document(const Options& o) {
  require(!o.input.empty(), ErrorCode::kInvalidArgument, "an input document path is required");
  return io::read_file(o.input);
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(Rational::parse(item));
  }
  return out;
}

SigmaSequence sigma_from(const Options& o) {
  if (!o.sigma_json.empty()) return io::sigma_from_json(io::parse_text(o.sigma_json));
  require(!o.bits.empty(), ErrorCode::kInvalidArgument, "a sequence is required (--sigma or --bits)");
  std::optional<SigmaSequence::Tail> tail;
  if (o.tail_value >= 0) {
    const std::size_t onset = o.tail_onset > 0 ? static_cast<std::size_t>(o.tail_onset) : o.bits.size() + 1;
    tail = SigmaSequence::Tail{onset, static_cast<std::uint8_t>(o.tail_value)};
  }
  return SigmaSequence::parse(o.bits, tail);
}

std::vector<Rational> interiors_from(const Options& o, std::size_t needed) {
  if (o.t_list.empty()) return default_interiors(needed);
  return parse_list(o.t_list);
}

Outcome verify_linked(const Options& o, const Caps& caps) {
  PairFamily family = io::family_from_json(input_document(o));
  Outcome r;
  bool v;
  if (o.maximal) {
    v = is_maximal_linked(family, caps.family);
    r.payload["property"] = "maximal_linked";
  } else if (o.facts) {
    v = family_facts_check(family);
    r.payload["property"] = "family_facts";
  } else if (o.nonempty) {
    v = is_nonempty_linked(family);
    r.payload["property"] = "nonempty_linked";
  } else {
    v = is_linked(family);
    r.payload["property"] = "linked";
  }
  r.payload["result"] = v;
  r.verdict = v;
  return r;
}

Outcome verify_equilateral(const Options& o) {
  PointSet set = io::points_from_json(input_document(o));
  const Rational lambda = Rational::parse(o.lambda);
  Outcome r;
  const bool v = is_equilateral(set, lambda);
  r.payload["lambda"] = io::rational_to_json(lambda);
  r.payload["result"] = v;
  r.verdict = v;
  return r;
}

Outcome verify_separated(const Options& o) {
  PointSet set = io::points_from_json(input_document(o));
  require(!o.delta.empty(), ErrorCode::kInvalidArgument, "verify-separated requires --delta");
  const Rational delta = Rational::parse(o.delta);
  Outcome r;
  const bool v = is_separated(set, delta);
  r.payload["delta"] = io::rational_to_json(delta);
  r.payload["result"] = v;
  r.verdict = v;
  return r;
}

Outcome convert(const Options& o) {
  const Json doc = input_document(o);
  Outcome r;
  r.payload["op"] = o.op;
  const std::string& op = o.op;
  if (op == "family-from-points") {
    PointFamily pf = family_from_points(io::points_from_json(doc));
    r.payload["result"] = io::family_to_json(pf.family);
    r.payload["linked"] = pf.linked;
  } else if (op == "points-from-family") {
    r.payload["result"] = io::points_to_json(points_from_family(io::family_from_json(doc), Rational::parse(o.interior)));
  } else if (op == "points-from-family-exact") {
    r.payload["result"] =
        io::points_to_json(points_from_family_exact(io::family_from_json(doc), Rational::parse(o.interior)));
  } else if (op == "two-equilateral") {
    r.payload["result"] = io::points_to_json(two_equilateral_from_family(io::family_from_json(doc)));
  } else if (op == "separated-to-family") {
    require(!o.epsilon.empty(), ErrorCode::kInvalidArgument, "separated-to-family requires --epsilon");
    PairFamily f = separated_to_family(io::points_from_json(doc), Rational::parse(o.epsilon));
    r.payload["result"] = io::family_to_json(f);
    r.payload["linked"] = is_linked(f);
  } else if (op == "unit-box") {
    r.payload["result"] = io::points_to_json(reduce_to_unit_box(io::points_from_json(doc)));
  } else if (op == "normalize") {
    PointSet set = io::points_from_json(doc);
    require(o.x0 >= 0 && static_cast<std::size_t>(o.x0) < set.size(), ErrorCode::kInvalidArgument,
            "--x0 must index a member of the set");
    r.payload["result"] = io::points_to_json(
        normalize_to_sphere(set, Rational::parse(o.lambda), set[static_cast<std::size_t>(o.x0)]));
  } else if (op == "fresh-coordinate") {
    r.payload["result"] = io::points_to_json(fresh_coordinate_extension(io::points_from_json(doc), o.coord));
  } else if (op == "augment") {
    r.payload["result"] = io::family_to_json(augment_with_extremes(io::family_from_json(doc)));
  } else if (op == "weak-separation") {
    PairFamily f = io::family_from_json(doc);
    WeakSeparationWitness w = weak_separation_from_family(f);
    r.payload["result"] = io::witness_to_json(w, f.ground_size());
    r.payload["weakly_separated"] = is_weakly_separated(w);
  } else if (op == "family-from-witness") {
    int n = 0;
    WeakSeparationWitness w = io::witness_from_json(doc, &n);
    r.payload["result"] = io::family_to_json(family_from_weak_separation(w, n));
  } else {
    fail(ErrorCode::kInvalidArgument, "unknown convert --op '" + op + "'");
  }
  return r;
}

Outcome extend(const Options& o, const Caps& caps) {
  const Json doc = input_document(o);
  Outcome r;
  switch (io::classify(doc)) {
    case io::DocumentKind::kFamily: {
      auto p = find_family_extension(io::family_from_json(doc), caps.family);
      r.payload["result"] = p ? Json{{"A", io::set_to_json(p->a)}, {"B", io::set_to_json(p->b)}} : Json(nullptr);
      break;
    }
    case io::DocumentKind::kPoints: {
      auto p = find_extension(io::points_from_json(doc), caps.decider);
      r.payload["result"] = p ? io::point_to_json(*p) : Json(nullptr);
      break;
    }
    default:
      fail(ErrorCode::kSchema, "extend expects a family or point document");
  }
  return r;
}

Outcome maximal(const Options& o, const Caps& caps) {
  const Json doc = input_document(o);
  Outcome r;
  bool v;
  switch (io::classify(doc)) {
    case io::DocumentKind::kFamily:
      v = is_maximal_linked(io::family_from_json(doc), caps.family);
      break;
    case io::DocumentKind::kPoints:
      v = is_maximal_equilateral(io::points_from_json(doc), caps.decider);
      break;
    default:
      fail(ErrorCode::kSchema, "maximal expects a family or point document");
  }
  r.payload["result"] = v;
  r.verdict = v;
  return r;
}

Outcome region(const Options& o, const Caps& caps) {
  Outcome r;
  r.payload["result"] = io::region_to_json(extension_region(io::points_from_json(input_document(o)), caps.decider));
  return r;
}

Outcome forced(const Options& o, const Caps& caps) {
  auto f = forced_coordinates(io::points_from_json(input_document(o)), caps.decider);
  Outcome r;
  r.payload["result"] = io::forcing_to_json(f);
  return r;
}

Outcome generate(const Options& o, const Caps& caps) {
  Outcome r;
  r.payload["kind"] = o.kind;
  const std::string& kind = o.kind;
  if (kind == "branch") {
    r.payload["result"] = io::nodes_to_json(branch_from_sigma(sigma_from(o), static_cast<std::size_t>(o.depth)));
  } else if (kind == "antichain") {
    Antichain a = antichain_from_sigma(sigma_from(o), static_cast<std::size_t>(o.depth));
    r.payload["result"] = io::nodes_to_json(a.nodes());
  } else if (kind == "antichain-family") {
    std::vector<TreeNode> nodes;
    if (!o.nodes.empty()) {
      std::stringstream ss(o.nodes);
      std::string word;
      while (std::getline(ss, word, ',')) nodes.push_back(TreeNode::parse(word));
    } else {
      Antichain a = antichain_from_sigma(sigma_from(o), static_cast<std::size_t>(o.depth));
      nodes.assign(a.nodes().begin(), a.nodes().end());
    }
    std::size_t longest = 1;
    for (const TreeNode& s : nodes) longest = std::max(longest, s.length());
    const int ground = o.ground > 0 ? o.ground : static_cast<int>(longest);
    AntichainFamily af = family_from_antichain(nodes, ground);
    r.payload["result"] = io::family_to_json(af.family);
    r.payload["antichain"] = af.antichain;
    r.payload["linked"] = is_linked(af.family);
    if (!af.antichain) r.payload["warning"] = "input words are not pairwise incomparable";
  } else if (kind == "antichains") {
    Json list = Json::array();
    for (const Antichain& a : enumerate_antichains(o.depth, caps.antichain_depth)) {
      list.push_back(io::nodes_to_json(a.nodes()));
    }
    r.payload["count"] = list.size();
    r.payload["result"] = list;
  } else if (kind == "example2") {
    const auto count = static_cast<std::size_t>(o.count);
    r.payload["result"] = io::points_to_json(
        example2_points(sigma_from(o), interiors_from(o, count), count, static_cast<std::size_t>(o.dim)));
  } else if (kind == "theorem6") {
    const auto m = static_cast<std::size_t>(o.isolated);
    r.payload["result"] = io::points_to_json(theorem6_points(sigma_from(o), interiors_from(o, m), m));
  } else if (kind == "theorem7") {
    CompactModel model = CompactModel::sized(static_cast<std::size_t>(o.isolated), o.limit,
                                             static_cast<std::size_t>(o.rest));
    const auto count = static_cast<std::size_t>(o.count);
    r.payload["labels"] = model.labels();
    r.payload["result"] =
        io::points_to_json(theorem7_points(sigma_from(o), interiors_from(o, count), model, count));
  } else if (kind == "remark53") {
    r.payload["result"] = io::points_to_json(
        remark53_points(sigma_from(o), static_cast<std::size_t>(o.k_size), static_cast<std::size_t>(o.isolated)));
  } else {
    fail(ErrorCode::kInvalidArgument, "unknown generate kind '" + kind + "'");
  }
  return r;
}

Outcome msearch(const Options& o, const Caps& caps) {
  MSearchReport report = m_search(o.dim, o.kmax, o.trials, o.seed, caps.msearch);
  Outcome r;
  r.payload["result"] = io::msearch_to_json(report);
  r.verdict = report.claims_minimum();
  return r;
}

Outcome roundtrip(const Options& o) {
  PointSet set = io::points_from_json(input_document(o));
  const Rational interior = Rational::parse(o.interior);
  PointFamily first = family_from_points(set);
  PointSet realized = points_from_family(first.family, interior);
  PointFamily second = family_from_points(realized);
  Json pairs = Json::array();
  bool all_hold = true;
  bool fixed_point = true;
  for (std::size_t k = 0; k < first.family.size(); ++k) {
    const Pair& before = first.family[k];
    const Pair& after = second.family[k];
    const bool a_in = (before.a & ~after.a) == 0;
    const bool b_in = (before.b & ~after.b) == 0;
    all_hold = all_hold && a_in && b_in;
    fixed_point = fixed_point && before == after;
    pairs.push_back({{"A", io::set_to_json(before.a)},
                     {"B", io::set_to_json(before.b)},
                     {"A_prime", io::set_to_json(after.a)},
                     {"B_prime", io::set_to_json(after.b)},
                     {"A_contained", a_in},
                     {"B_contained", b_in}});
  }
  Outcome r;
  r.payload["interior"] = io::rational_to_json(interior);
  r.payload["realized"] = io::points_to_json(realized);
  r.payload["pairs"] = pairs;
  r.payload["fixed_point"] = fixed_point;
  r.payload["linked"] = second.linked;
  r.payload["result"] = all_hold;
  r.verdict = all_hold;
  return r;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_flag("--assert", o.assert_result, "Exit with status 2 when the verdict is false");
  cmd->add_flag("--unsafe-caps", o.unsafe_caps, "Lift the runtime caps");
  cmd->add_flag("--timing", o.timing, "Include wall-clock timing in the report");
  cmd->add_option("--out", o.out_path, "Also write the report to this file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact equilateral sets in sup-norm spaces and linked pair families", "equilat"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::map<std::string, std::function<Outcome(const Options&, const Caps&)>> handlers;

  auto file_cmd = [&](const std::string& name, const std::string& help,
                      std::function<Outcome(const Options&, const Caps&)> handler) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->add_option("input", o.input, "Input JSON document")->required();
    add_common(cmd, o);
    handlers[name] = std::move(handler);
    return cmd;
  };

  auto* vl = file_cmd("verify-linked", "Check a pair family", verify_linked);
  vl->add_flag("--nonempty", o.nonempty, "Require both sides of every pair nonempty");
  vl->add_flag("--maximal", o.maximal, "Decide maximal linkedness by brute force");
  vl->add_flag("--facts", o.facts, "Check the distinct-sides facts of a linked family");

  file_cmd("verify-equilateral", "Check that all distances equal lambda",
           [](const Options& opt, const Caps&) { return verify_equilateral(opt); })
      ->add_option("--lambda", o.lambda, "Common distance (rational)");
  file_cmd("verify-separated", "Check that all distances are at least delta",
           [](const Options& opt, const Caps&) { return verify_separated(opt); })
      ->add_option("--delta", o.delta, "Separation bound (rational)")
      ->required();

  auto* cv = file_cmd("convert", "Convert between points, families and witnesses",
                      [](const Options& opt, const Caps&) { return convert(opt); });
  cv->add_option("--op", o.op,
                 "family-from-points | points-from-family | points-from-family-exact | two-equilateral | "
                 "separated-to-family | unit-box | normalize | fresh-coordinate | augment | "
                 "weak-separation | family-from-witness")
      ->required();
  cv->add_option("--interior", o.interior, "Interior value in (0,1)");
  cv->add_option("--epsilon", o.epsilon, "Separation slack");
  cv->add_option("--lambda", o.lambda, "Common distance");
  cv->add_option("--x0", o.x0, "Index of the base point");
  cv->add_option("--coord", o.coord, "Fresh coordinate index");

  file_cmd("extend", "Least one-point extension of a family or point set", extend);
  file_cmd("maximal", "Decide maximality of a family or point set", maximal);
  file_cmd("region", "Exact region of one-point extensions", region);
  file_cmd("forced", "Per-coordinate forcing of the extension region", forced);

  auto* rt = file_cmd("roundtrip", "points -> family -> points -> family containment report",
                      [](const Options& opt, const Caps&) { return roundtrip(opt); });
  rt->add_option("--interior", o.interior, "Interior value in (0,1)");

  CLI::App* gen = app.add_subcommand("generate", "Tree and sequence constructions");
  gen->add_option("kind", o.kind,
                  "branch | antichain | antichain-family | antichains | example2 | theorem6 | theorem7 | remark53")
      ->required();
  gen->add_option("--sigma", o.sigma_json, "Sequence document, e.g. {\"bits\":\"101\"}");
  gen->add_option("--bits", o.bits, "Explicit 0/1 word");
  gen->add_option("--tail-onset", o.tail_onset, "First index of the constant tail");
  gen->add_option("--tail-value", o.tail_value, "Value of the constant tail (0 or 1)");
  gen->add_option("--t", o.t_list, "Comma-separated interior values");
  gen->add_option("--count", o.count, "Number of sequence points N");
  gen->add_option("--dim", o.dim, "Dimension M");
  gen->add_option("--isolated", o.isolated, "Number of isolated points M");
  gen->add_option("--rest", o.rest, "Points off the isolated sequence");
  gen->add_flag("--limit", o.limit, "Add a limit point");
  gen->add_option("--k-size", o.k_size, "Size of the K block");
  gen->add_option("--depth", o.depth, "Depth");
  gen->add_option("--ground", o.ground, "Ground set size");
  gen->add_option("--nodes", o.nodes, "Comma-separated tree words");
  add_common(gen, o);
  handlers["generate"] = generate;

  CLI::App* ms = app.add_subcommand("msearch", "Search for the minimum size of a maximal equilateral set");
  ms->add_option("--dim", o.dim, "Dimension")->required();
  ms->add_option("--kmax", o.kmax, "Largest size to try")->required();
  ms->add_option("--trials", o.trials, "Random sets per size below the first certificate")->required();
  ms->add_option("--seed", o.seed, "Random seed")->required();
  add_common(ms, o);
  handlers["msearch"] = msearch;

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    Json report = {{"schema", io::kSchemaVersion},
                   {"error", {{"code", error_code_name(ErrorCode::kInvalidArgument)}, {"message", e.what()}}}};
    out << io::dump(report);
    err << e.what() << "\n";
    return kExitError;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  Json report = {{"schema", io::kSchemaVersion}, {"verb", verb}, {"exact", true}};
  int status = kExitOk;
  try {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = handlers.at(verb)(o, caps_for(o));
    const auto stop = std::chrono::steady_clock::now();
    for (auto& [key, value] : outcome.payload.items()) report[key] = value;
    if (o.timing) {
      report["timing_ms"] = std::chrono::duration<double, std::milli>(stop - start).count();
    }
    if (o.assert_result && outcome.verdict && !*outcome.verdict) status = kExitAssertFailed;
  } catch (const Error& e) {
    report["error"] = {{"code", error_code_name(e.code())}, {"message", e.what()}};
    err << "equilat " << verb << ": " << e.what() << "\n";
    status = kExitError;
  }
  const std::string text = io::dump(report);
  out << text;
  if (!o.out_path.empty()) {
    try {
      io::write_file(o.out_path, report);
    } catch (const Error& e) {
      err << "equilat: " << e.what() << "\n";
      return kExitError;
    }
  }
  return status;
}

}  // namespace equilat::cli
