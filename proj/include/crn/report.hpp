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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "crn/endotactic.hpp"
#include "crn/equivalence.hpp"
#include "crn/network.hpp"
#include "crn/parse.hpp"
#include "crn/realization.hpp"
#include "crn/structure.hpp"

namespace crn {

using Json = nlohmann::ordered_json;

inline constexpr int kReportVersion = 1;

// Reports render every rational as "p/q", unit denominators included, so a
// reader never has to guess the type of a field.
inline Json json_rat(const Rat& x) { return rat_frac_str(x); }

inline Json json_vec(const RatVec& v) {
  Json a = Json::array();
  for (const Rat& x : v) a.push_back(json_rat(x));
  return a;
}

inline Json json_basis(const std::vector<RatVec>& basis) {
  Json a = Json::array();
  for (const RatVec& v : basis) a.push_back(json_vec(v));
  return a;
}

inline RatVec vec_from_json(const Json& a) {
  RatVec v;
  for (const auto& x : a) v.push_back(parse_rat(x.get<std::string>()));
  return v;
}

inline Json network_to_json(const ReactionNetwork& g,
                            const std::optional<std::vector<Rat>>& rates) {
  Json j;
  j["species"] = g.context().names;
  Json verts = Json::array();
  for (const RatVec& v : g.vertices()) verts.push_back(json_vec(v));
  j["vertices"] = verts;
  Json rs = Json::array();
  for (size_t e = 0; e < g.num_reactions(); ++e) {
    Json r;
    r["source"] = g.reactions()[e].source;
    r["target"] = g.reactions()[e].target;
    if (rates) r["rate"] = json_rat((*rates)[e]);
    rs.push_back(std::move(r));
  }
  j["reactions"] = rs;
  return j;
}

inline ParsedNetwork network_from_json(const Json& j) {
  SpeciesContext ctx(j.at("species").get<std::vector<std::string>>());
  std::vector<RatVec> vertices;
  for (const auto& v : j.at("vertices")) vertices.push_back(vec_from_json(v));
  std::vector<Reaction> reactions;
  std::vector<Rat> rates;
  bool rated = false;
  for (const auto& r : j.at("reactions")) {
    reactions.push_back({r.at("source").get<size_t>(), r.at("target").get<size_t>()});
    if (r.contains("rate")) {
      rated = true;
      rates.push_back(parse_rat(r.at("rate").get<std::string>()));
    }
  }
  ParsedNetwork out{ReactionNetwork(ctx, std::move(vertices), std::move(reactions)), std::nullopt};
  if (rated) out.rates = std::move(rates);
  return out;
}

inline Json structural_report_to_json(const StructuralReport& rep) {
  Json j;
  Json classes = Json::array();
  for (const auto& c : rep.classes) classes.push_back(c);
  j["linkage_classes"] = classes;
  j["weakly_reversible"] = rep.weakly_reversible;
  if (rep.wr_witness) {
    j["wr_witness"] = Json{{"source", rep.wr_witness->source}, {"target", rep.wr_witness->target}};
  } else {
    j["wr_witness"] = nullptr;
  }
  j["stoichiometric_basis"] = json_basis(rep.stoich_basis);
  j["dim_stoichiometric_subspace"] = rep.dim_s;
  j["deficiency"] = rep.deficiency;
  j["class_deficiencies"] = rep.class_deficiencies;
  return j;
}

inline Json certificate_to_json(const FeasibilityCertificate& c) {
  Json j;
  if (c.is_solution()) {
    j["outcome"] = "solution";
    j["vector"] = json_vec(*c.solution);
  } else {
    j["outcome"] = "separator";
    j["vector"] = json_vec(*c.separator);
  }
  return j;
}

inline Json endotactic_verdict_to_json(const EndotacticVerdict& v) {
  Json j;
  j["verdict"] = v.pass ? "pass" : "fail";
  if (v.counterexample) {
    j["counterexample"] = Json{{"direction", json_vec(v.counterexample->direction)},
                               {"reaction", v.counterexample->reaction}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

/// Full analysis document for one network or system. Endotactic sections
/// degrade to a "capability" status instead of failing the whole report when
/// the arrangement caps are exceeded.
inline Json build_analysis_report(const ParsedNetwork& doc, const ArrangementCaps& caps = {}) {
  const ReactionNetwork& g = doc.network;
  Json j;
  j["format"] = "crn-analysis";
  j["version"] = kReportVersion;
  j["network"] = network_to_json(g, doc.rates);
  j["num_vertices"] = g.num_vertices();
  j["num_reactions"] = g.num_reactions();
  j["isolated_vertices"] = g.isolated_vertices();

  StructuralReport rep = structural_report(g);
  j["structure"] = structural_report_to_json(rep);

  Json props;
  if (g.num_reactions() == 0) {
    props["consistent"] = nullptr;
    props["cone_equals_span"] = nullptr;
    props["endotactic"] = nullptr;
    props["strongly_endotactic"] = nullptr;
  } else {
    props["consistent"] = certificate_to_json(is_consistent(g));
    props["cone_equals_span"] = cone_equals_span(g);
    try {
      DirectionAtlas atlas = build_direction_atlas(g, caps);
      j["direction_atlas_cells"] = atlas.cells.size();
      props["endotactic"] = endotactic_verdict_to_json(is_endotactic(g, atlas));
      props["strongly_endotactic"] = endotactic_verdict_to_json(is_strongly_endotactic(g, atlas));
    } catch (const CapabilityError& e) {
      Json capped;
      capped["verdict"] = "capability-exceeded";
      capped["reason"] = e.what();
      props["endotactic"] = capped;
      props["strongly_endotactic"] = capped;
    }
  }
  std::optional<RatVec> cons = is_conservative(g);
  props["conservative"] = cons ? Json{{"vector", json_vec(*cons)}} : Json{{"vector", nullptr}};
  j["properties"] = props;

  if (doc.rates) {
    MassActionSystem sys(g, *doc.rates);
    NetVectorMap nv = net_vectors(sys);
    Json nets = Json::array();
    for (const auto& [src, net] : nv.raw) {
      Json e;
      e["source"] = json_vec(src);
      e["net"] = json_vec(net);
      e["ghost"] = is_zero_vec(net);
      nets.push_back(std::move(e));
    }
    Json dyn;
    dyn["net_vectors"] = nets;
    dyn["ghost_vertices"] = ghost_vertices(sys);
    dyn["dynamics_subspace_basis"] = json_basis(stoichiometric_subspace_of_dynamics(nv));
    j["dynamics"] = dyn;
  }
  return j;
}

struct ReportVerification {
  bool ok = true;
  std::vector<std::string> problems;

  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      problems.push_back(what);
    }
  }
};

/// Re-parses the network embedded in a report and re-verifies every
/// certificate and recomputable number against it.
inline ReportVerification verify_analysis_report(const Json& j) {
  ReportVerification v;
  ParsedNetwork doc = network_from_json(j.at("network"));
  const ReactionNetwork& g = doc.network;
  StructuralReport rep = structural_report(g);
  const Json& st = j.at("structure");

  v.check(st.at("deficiency").get<long long>() == rep.deficiency, "deficiency mismatch");
  v.check(st.at("linkage_classes").size() == rep.classes.size(), "linkage class count mismatch");
  v.check(st.at("dim_stoichiometric_subspace").get<size_t>() == rep.dim_s, "dim(S) mismatch");
  v.check(st.at("weakly_reversible").get<bool>() == rep.weakly_reversible,
          "weak reversibility mismatch");
  v.check(static_cast<long long>(g.num_vertices()) -
                  static_cast<long long>(rep.classes.size()) -
                  static_cast<long long>(rep.dim_s) ==
              rep.deficiency,
          "deficiency formula violated");

  const Json& props = j.at("properties");
  if (!props.at("consistent").is_null()) {
    const Json& c = props.at("consistent");
    RatVec vec = vec_from_json(c.at("vector"));
    if (c.at("outcome") == "solution")
      v.check(verify_stiemke_solution(g.reaction_vectors(), vec),
              "consistency solution fails re-verification");
    else
      v.check(verify_stiemke_separator(g.reaction_vectors(), vec),
              "consistency separator fails re-verification");
  }
  const Json& cons = props.at("conservative");
  if (!cons.at("vector").is_null()) {
    RatVec vec = vec_from_json(cons.at("vector"));
    bool pos = true;
    for (const Rat& x : vec) pos = pos && x > 0;
    v.check(pos, "conservation vector not strictly positive");
    for (const RatVec& rv : g.reaction_vectors())
      v.check(dot(vec, rv) == 0, "conservation vector not orthogonal to a reaction vector");
  }
  for (const char* key : {"endotactic", "strongly_endotactic"}) {
    if (!props.contains(key) || props.at(key).is_null()) continue;
    const Json& e = props.at(key);
    if (e.at("verdict") == "fail") {
      RatVec dir = vec_from_json(e.at("counterexample").at("direction"));
      size_t reaction = e.at("counterexample").at("reaction").get<size_t>();
      std::optional<size_t> bad = std::string(key) == "endotactic"
                                      ? detail::endotactic_violation_at(g, dir)
                                      : detail::strongly_endotactic_violation_at(g, dir);
      v.check(bad.has_value(), std::string(key) + " counterexample fails re-verification");
      if (bad) v.check(*bad == reaction, std::string(key) + " counterexample names wrong reaction");
    }
  }
  if (j.contains("dynamics") && doc.rates) {
    MassActionSystem sys(g, *doc.rates);
    NetVectorMap nv = net_vectors(sys);
    const Json& dyn = j.at("dynamics");
    v.check(dyn.at("net_vectors").size() == nv.raw.size(), "net vector count mismatch");
    for (const auto& e : dyn.at("net_vectors")) {
      RatVec src = vec_from_json(e.at("source"));
      RatVec net = vec_from_json(e.at("net"));
      auto it = nv.raw.find(src);
      v.check(it != nv.raw.end() && it->second == net, "net vector mismatch at " + vec_str(src));
    }
    std::vector<size_t> ghosts = ghost_vertices(sys);
    v.check(dyn.at("ghost_vertices").get<std::vector<size_t>>() == ghosts, "ghost list mismatch");
  }
  return v;
}

// ---- sweep / equivalence / realization serialization ----

inline Json sweep_report_to_json(const SweepReport& rep) {
  Json j;
  j["direction"] = json_vec(rep.direction);
  j["min_support_value"] = json_rat(rep.min_value);
  j["max_support_value"] = json_rat(rep.max_value);
  Json levels = Json::array();
  for (const SweepLevel& l : rep.levels) {
    Json lj;
    lj["value"] = json_rat(l.value);
    lj["sources"] = l.sources;
    Json moves = Json::array();
    for (auto [e, s] : l.moves) moves.push_back(Json{{"reaction", e}, {"drift_sign", s}});
    lj["reactions"] = moves;
    levels.push_back(std::move(lj));
  }
  j["levels"] = levels;
  switch (rep.disposition) {
    case SweepDisposition::Pass: j["disposition"] = "pass"; break;
    case SweepDisposition::Fail: j["disposition"] = "fail"; break;
    case SweepDisposition::Continue: j["disposition"] = "continue"; break;
  }
  if (rep.deciding_level)
    j["deciding_level"] = *rep.deciding_level;
  else
    j["deciding_level"] = nullptr;
  return j;
}

inline Json equivalence_verdict_to_json(const EquivalenceVerdict& v) {
  Json j;
  j["equivalent"] = v.equivalent;
  if (v.witness) {
    j["witness"] = Json{{"source", json_vec(v.witness->first)},
                        {"net_difference", json_vec(v.witness->second)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

inline Json realization_result_to_json(const RealizationResult& r) {
  Json j;
  j["found"] = r.found;
  if (r.system) {
    j["system"] = network_to_json(r.system->network(), r.system->rates());
    j["system_text"] = serialize_system(*r.system);
  }
  if (r.rate_certificate) j["rate_certificate"] = certificate_to_json(*r.rate_certificate);
  if (r.consistency_certificate)
    j["consistency_certificate"] = certificate_to_json(*r.consistency_certificate);
  if (r.conservation_vector) j["conservation_vector"] = json_vec(*r.conservation_vector);
  if (r.endotactic_verdict) j["endotactic_verdict"] = endotactic_verdict_to_json(*r.endotactic_verdict);
  if (r.wr_verdict) j["weakly_reversible"] = r.wr_verdict->weakly_reversible;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace crn
