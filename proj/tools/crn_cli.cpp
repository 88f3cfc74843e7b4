// Copyright 2026 The crn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "crn/crn.hpp"

namespace {

// Exit codes: 0 ok / equivalent / found, 1 negative verdict,
// 2 capability cap exceeded, 3 input or usage error, 4 internal error.
constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitCapability = 2;
constexpr int kExitError = 3;
constexpr int kExitInternal = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

crn::ParsedNetwork load(const std::string& path) { return crn::parse_network(read_file(path)); }

void emit(const crn::Json& j, const std::string& output) {
  if (output == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    // text mode: flat "key: value" lines for the top level
    for (const auto& [key, value] : j.items())
      std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                << "\n";
  }
}

struct CommonOpts {
  std::string output = "json";
  uint64_t seed = 0;
  size_t trials = 0;
  size_t max_cells = 200000;
  size_t max_edges = 14;
};

crn::RealizationProperty parse_property(const std::string& p) {
  if (p == "none") return crn::RealizationProperty::None;
  if (p == "wr" || p == "weakly-reversible") return crn::RealizationProperty::WeaklyReversible;
  if (p == "endotactic") return crn::RealizationProperty::Endotactic;
  if (p == "strongly-endotactic") return crn::RealizationProperty::StronglyEndotactic;
  if (p == "consistent") return crn::RealizationProperty::Consistent;
  if (p == "conservative") return crn::RealizationProperty::Conservative;
  throw std::runtime_error("unknown property: " + p);
}

crn::RatVec parse_direction(const std::string& csv) {
  crn::RatVec v;
  size_t start = 0;
  while (start <= csv.size()) {
    size_t end = csv.find(',', start);
    std::string part = csv.substr(start, end == std::string::npos ? std::string::npos : end - start);
    size_t a = part.find_first_not_of(" \t");
    size_t b = part.find_last_not_of(" \t");
    if (a == std::string::npos) throw std::runtime_error("empty component in direction");
    v.push_back(crn::parse_rat(part.substr(a, b - a + 1)));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return v;
}

int cmd_analyze(const std::string& file, const CommonOpts& opts, bool verify) {
  crn::ParsedNetwork doc = load(file);
  crn::ArrangementCaps caps{5, opts.max_cells};
  crn::Json j = crn::build_analysis_report(doc, caps);
  if (opts.trials > 0 && doc.network.num_reactions() > 0) {
    crn::Json oracle;
    oracle["trials"] = opts.trials;
    oracle["seed"] = opts.seed;
    bool contradiction = false;
    for (auto kind : {crn::EndotacticKind::Endotactic, crn::EndotacticKind::StronglyEndotactic}) {
      const char* key =
          kind == crn::EndotacticKind::Endotactic ? "endotactic" : "strongly_endotactic";
      if (!j["properties"][key].is_object() || j["properties"][key]["verdict"] != "pass") continue;
      auto cex = crn::sampling_oracle(doc.network, kind, opts.trials, opts.seed);
      if (cex) contradiction = true;
    }
    oracle["contradiction"] = contradiction;
    j["sampling_oracle"] = oracle;
    if (contradiction) throw std::logic_error("sampling oracle contradicts an exact pass verdict");
  }
  if (verify) {
    crn::ReportVerification v = crn::verify_analysis_report(j);
    j["verified"] = v.ok;
    if (!v.ok) {
      j["verification_problems"] = v.problems;
      emit(j, opts.output);
      return kExitError;
    }
  }
  emit(j, opts.output);
  return kExitOk;
}

int cmd_equiv(const std::string& f1, const std::string& f2, const CommonOpts& opts) {
  crn::MassActionSystem a = load(f1).to_system();
  crn::MassActionSystem b = load(f2).to_system();
  if (a.network().context() != b.network().context())
    throw std::runtime_error(
        "species lines differ between the two files; equivalence requires identical species "
        "declarations (same names, same order)");
  crn::EquivalenceVerdict v = crn::is_dynamically_equivalent(a, b);
  crn::Json j = crn::equivalence_verdict_to_json(v);
  if (opts.trials > 0) {
    bool agree = crn::random_point_oracle(a, b, opts.trials, opts.seed) == v.equivalent;
    j["oracle"] = crn::Json{{"trials", opts.trials}, {"seed", opts.seed}, {"agrees", agree}};
    if (!agree) throw std::logic_error("random point oracle contradicts the exact decision");
  }
  emit(j, opts.output);
  return v.equivalent ? kExitOk : kExitNegative;
}

int cmd_ghosts(const std::string& file, const CommonOpts& opts) {
  crn::MassActionSystem sys = load(file).to_system();
  std::vector<size_t> ghosts = crn::ghost_vertices(sys);
  crn::MassActionSystem reduced = crn::eliminate_ghosts(sys);
  crn::Json j;
  j["ghost_vertices"] = ghosts;
  crn::Json pts = crn::Json::array();
  for (size_t i : ghosts) pts.push_back(crn::json_vec(sys.network().vertices()[i]));
  j["ghost_points"] = pts;
  j["eliminated_system"] = crn::network_to_json(reduced.network(), reduced.rates());
  j["eliminated_system_text"] = crn::serialize_system(reduced);
  j["equivalent_to_input"] = crn::is_dynamically_equivalent(sys, reduced).equivalent;
  emit(j, opts.output);
  return kExitOk;
}

int cmd_realize(const std::string& file, const std::string& property, const CommonOpts& opts) {
  crn::MassActionSystem sys = load(file).to_system();
  crn::RealizationQuery q;
  q.target = crn::TargetDynamics::of(sys);
  q.property = parse_property(property);
  q.max_dense_edges = opts.max_edges;
  q.atlas_caps = crn::ArrangementCaps{5, opts.max_cells};
  crn::RealizationResult r = crn::find_realization(q);
  crn::Json j = crn::realization_result_to_json(r);
  j["property"] = crn::to_string(q.property);
  emit(j, opts.output);
  return r.found ? kExitOk : kExitNegative;
}

int cmd_classify(const std::string& file, const CommonOpts& opts) {
  crn::ParsedNetwork doc = load(file);
  crn::StructuralReport rep = crn::structural_report(doc.network);
  crn::Json j;
  j["deficiency"] = rep.deficiency;
  j["num_linkage_classes"] = rep.classes.size();
  j["class_deficiencies"] = rep.class_deficiencies;
  j["weakly_reversible"] = rep.weakly_reversible;
  j["type"] = crn::to_string(crn::classify_deficiency_one(doc.network));
  emit(j, opts.output);
  return kExitOk;
}

int cmd_sweep(const std::string& file, const std::string& direction, const CommonOpts& opts) {
  crn::ParsedNetwork doc = load(file);
  crn::RatVec v = parse_direction(direction);
  crn::SweepReport rep = crn::sweep_report(doc.network, v);
  emit(crn::sweep_report_to_json(rep), opts.output);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact analysis of reaction networks as Euclidean embedded graphs"};
  app.require_subcommand(1);

  CommonOpts opts;
  app.add_option("--output", opts.output, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", opts.seed, "seed for sampling oracles");
  app.add_option("--trials", opts.trials, "sampling-oracle trials (0 disables)");
  app.add_option("--max-cells", opts.max_cells, "cap on direction-atlas cells");
  app.add_option("--max-edges", opts.max_edges, "cap on dense-support edges for exhaustive search");

  std::string file, file2, property = "none", direction;
  bool verify = false;

  CLI::App* analyze = app.add_subcommand("analyze", "full structural and property report");
  analyze->add_option("file", file, ".crn input")->required();
  analyze->add_flag("--verify", verify, "re-verify every certificate in the emitted report");

  CLI::App* equiv = app.add_subcommand("equiv", "decide dynamical equivalence of two systems");
  equiv->add_option("file1", file, ".crn input")->required();
  equiv->add_option("file2", file2, ".crn input")->required();

  CLI::App* ghosts = app.add_subcommand("ghosts", "list ghost vertices and eliminate them");
  ghosts->add_option("file", file, ".crn input")->required();

  CLI::App* realize = app.add_subcommand("realize", "search source-only realizations");
  realize->add_option("file", file, ".crn input")->required();
  realize->add_option("--property", property,
                      "none|wr|endotactic|strongly-endotactic|consistent|conservative");

  CLI::App* classify = app.add_subcommand("classify", "deficiency-one type classification");
  classify->add_option("file", file, ".crn input")->required();

  CLI::App* sweep = app.add_subcommand("sweep", "parallel sweep report for one direction");
  sweep->add_option("file", file, ".crn input")->required();
  sweep->add_option("--direction", direction, "comma-separated rationals, e.g. \"1,-1/2\"")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return cmd_analyze(file, opts, verify);
    if (equiv->parsed()) return cmd_equiv(file, file2, opts);
    if (ghosts->parsed()) return cmd_ghosts(file, opts);
    if (realize->parsed()) return cmd_realize(file, property, opts);
    if (classify->parsed()) return cmd_classify(file, opts);
    if (sweep->parsed()) return cmd_sweep(file, direction, opts);
  } catch (const crn::CapabilityError& e) {
    std::cerr << "capability limit: " << e.what() << "\n";
    return kExitCapability;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
