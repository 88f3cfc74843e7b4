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

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crn/endotactic.hpp"
#include "crn/equivalence.hpp"
#include "crn/lp.hpp"
#include "crn/network.hpp"
#include "crn/structure.hpp"

namespace crn {

/// A vector field fingerprint: one nonzero net vector per source exponent
/// (comparison form). This is what realizations must reproduce.
struct TargetDynamics {
  SpeciesContext ctx;
  std::map<RatVec, RatVec, RatVecLess> map;

  static TargetDynamics of(const MassActionSystem& sys) {
    NetVectorMap nv = net_vectors(sys);
    return {nv.ctx, nv.comparison()};
  }

  std::vector<RatVec> sources() const {
    std::vector<RatVec> out;
    for (const auto& [src, net] : map) out.push_back(src);
    return out;
  }
};

enum class RealizationProperty {
  None,
  WeaklyReversible,
  Endotactic,
  StronglyEndotactic,
  Consistent,
  Conservative,
};

inline const char* to_string(RealizationProperty p) {
  switch (p) {
    case RealizationProperty::None: return "none";
    case RealizationProperty::WeaklyReversible: return "weakly-reversible";
    case RealizationProperty::Endotactic: return "endotactic";
    case RealizationProperty::StronglyEndotactic: return "strongly-endotactic";
    case RealizationProperty::Consistent: return "consistent";
    case RealizationProperty::Conservative: return "conservative";
  }
  return "?";
}

struct RealizationResult {
  bool found = false;
  std::optional<MassActionSystem> system;
  // Rate-fitting certificate: the feasible rates, or the separator showing
  // the fit is impossible.
  std::optional<FeasibilityCertificate> rate_certificate;
  // Property certificate for the found system (at most one is set).
  std::optional<FeasibilityCertificate> consistency_certificate;
  std::optional<RatVec> conservation_vector;
  std::optional<EndotacticVerdict> endotactic_verdict;
  std::optional<WeakReversibilityVerdict> wr_verdict;
  std::string note;
};

/// Fits one strictly positive rate per edge of a fixed network so the system
/// reproduces the target exactly: for every source y of g,
/// sum_{y->y'} k (y'-y) = w_y, with w_y = 0 for sources outside the target.
/// Target sources that are not sources of g make the fit impossible.
inline RealizationResult find_rates(const TargetDynamics& target, const ReactionNetwork& g) {
  if (target.ctx != g.context())
    throw std::invalid_argument("find_rates: species contexts differ");
  RealizationResult res;

  std::set<RatVec, RatVecLess> g_sources;
  for (size_t i : g.source_indices()) g_sources.insert(g.vertices()[i]);
  for (const auto& [src, net] : target.map) {
    if (!g_sources.count(src)) {
      res.note = "target source " + vec_str(src) + " has no outgoing reaction in the network";
      return res;
    }
  }
  const size_t n = g.dim();
  const size_t m = g.num_reactions();
  if (m == 0) {
    if (target.map.empty()) {
      res.found = true;
      res.system = MassActionSystem(g, {});
      res.note = "empty target realized by the edgeless network";
      return res;
    }
    res.note = "network has no reactions";
    return res;
  }

  std::vector<size_t> sources = g.source_indices();
  RatMat a(sources.size() * n, m);
  RatVec b(sources.size() * n, Rat(0));
  for (size_t si = 0; si < sources.size(); ++si) {
    const RatVec& y = g.vertices()[sources[si]];
    auto it = target.map.find(y);
    for (size_t c = 0; c < n; ++c) b[si * n + c] = it == target.map.end() ? Rat(0) : it->second[c];
    for (size_t e = 0; e < m; ++e) {
      if (g.reactions()[e].source != sources[si]) continue;
      RatVec v = g.reaction_vector(e);
      for (size_t c = 0; c < n; ++c) a.at(si * n + c, e) = v[c];
    }
  }
  std::vector<size_t> all(m);
  for (size_t i = 0; i < m; ++i) all[i] = i;
  FeasibilityCertificate cert = lp_feasible(LpProblem(a, b, all, all));
  if (!cert.is_solution()) {
    res.rate_certificate = std::move(cert);
    res.note = "no positive rate assignment reproduces the target on this network";
    return res;
  }
  MassActionSystem sys(g, *cert.solution);
  if (net_vectors(sys).comparison() != target.map)
    throw std::logic_error("find_rates: fitted system does not reproduce the target");
  res.found = true;
  res.system = std::move(sys);
  res.rate_certificate = std::move(cert);
  return res;
}

/// A candidate directed edge between exact points; ghost candidates start at
/// pool vertices that are not target sources and must net to zero.
struct CandidateEdge {
  RatVec source;
  RatVec target;
  bool ghost_source = false;
};

namespace detail {

struct CandidateSystem {
  std::vector<CandidateEdge> edges;
  std::vector<RatVec> row_sources;  // one block of n equations per entry
  std::vector<RatVec> row_rhs;
};

inline CandidateSystem candidate_system(const TargetDynamics& target,
                                        const std::vector<RatVec>& pool,
                                        bool allow_ghost_sources) {
  for (const auto& [src, net] : target.map)
    if (std::find(pool.begin(), pool.end(), src) == pool.end())
      throw std::invalid_argument("candidate_system: pool must contain every target source");
  std::vector<RatVec> pool_sorted = pool;
  std::sort(pool_sorted.begin(), pool_sorted.end(), RatVecLess{});
  pool_sorted.erase(std::unique(pool_sorted.begin(), pool_sorted.end()), pool_sorted.end());

  CandidateSystem cs;
  for (const auto& [src, net] : target.map) {
    cs.row_sources.push_back(src);
    cs.row_rhs.push_back(net);
    for (const RatVec& dst : pool_sorted)
      if (dst != src) cs.edges.push_back({src, dst, false});
  }
  if (allow_ghost_sources) {
    for (const RatVec& p : pool_sorted) {
      if (target.map.count(p)) continue;
      cs.row_sources.push_back(p);
      cs.row_rhs.push_back(RatVec(p.size(), Rat(0)));
      for (const RatVec& dst : pool_sorted)
        if (dst != p) cs.edges.push_back({p, dst, true});
    }
  }
  std::sort(cs.edges.begin(), cs.edges.end(), [](const CandidateEdge& a, const CandidateEdge& b) {
    if (lex_less(a.source, b.source)) return true;
    if (lex_less(b.source, a.source)) return false;
    return lex_less(a.target, b.target);
  });
  return cs;
}

/// Rate-fit LP over a subset of the candidate edges. `strict_all` demands
/// positive rate on every chosen edge; otherwise only `strict_edge` (if any)
/// is forced positive and the rest may vanish.
inline FeasibilityCertificate fit_candidates(const CandidateSystem& cs,
                                             const std::vector<size_t>& chosen, size_t dim,
                                             bool strict_all,
                                             std::optional<size_t> strict_edge = std::nullopt) {
  RatMat a(cs.row_sources.size() * dim, chosen.size());
  RatVec b(cs.row_sources.size() * dim, Rat(0));
  for (size_t r = 0; r < cs.row_sources.size(); ++r)
    for (size_t c = 0; c < dim; ++c) b[r * dim + c] = cs.row_rhs[r][c];
  for (size_t j = 0; j < chosen.size(); ++j) {
    const CandidateEdge& e = cs.edges[chosen[j]];
    size_t r = SIZE_MAX;
    for (size_t i = 0; i < cs.row_sources.size(); ++i)
      if (cs.row_sources[i] == e.source) r = i;
    RatVec v = vec_sub(e.target, e.source);
    for (size_t c = 0; c < dim; ++c) a.at(r * dim + c, j) = v[c];
  }
  std::vector<size_t> all(chosen.size());
  for (size_t i = 0; i < chosen.size(); ++i) all[i] = i;
  std::vector<size_t> strict;
  if (strict_all)
    strict = all;
  else if (strict_edge)
    strict = {*strict_edge};
  return lp_feasible(LpProblem(a, b, all, strict));
}

/// Builds the mass-action system on the chosen support with the given rates.
inline MassActionSystem system_from_support(const SpeciesContext& ctx,
                                            const CandidateSystem& cs,
                                            const std::vector<size_t>& chosen,
                                            const RatVec& rates) {
  std::set<RatVec, RatVecLess> points;
  for (size_t j : chosen) {
    points.insert(cs.edges[j].source);
    points.insert(cs.edges[j].target);
  }
  std::vector<RatVec> vertices(points.begin(), points.end());
  auto index_of = [&](const RatVec& p) {
    return static_cast<size_t>(
        std::lower_bound(vertices.begin(), vertices.end(), p, RatVecLess{}) - vertices.begin());
  };
  std::vector<Reaction> reactions;
  for (size_t j : chosen)
    reactions.push_back({index_of(cs.edges[j].source), index_of(cs.edges[j].target)});
  return MassActionSystem(ReactionNetwork(ctx, std::move(vertices), std::move(reactions)),
                          rates);
}

}  // namespace detail

/// The union of the supports of all nonnegative rate assignments on the pool
/// that reproduce the target: edge by edge, one capped feasibility problem
/// asking for positive rate on that edge. Every realization on the pool has
/// support inside this set (the feasible set is convex, so supports unite).
inline std::vector<CandidateEdge> dense_support(const TargetDynamics& target,
                                                const std::vector<RatVec>& pool,
                                                bool allow_ghost_sources = false) {
  detail::CandidateSystem cs = detail::candidate_system(target, pool, allow_ghost_sources);
  std::vector<size_t> everything(cs.edges.size());
  for (size_t i = 0; i < everything.size(); ++i) everything[i] = i;
  std::vector<CandidateEdge> dense;
  for (size_t e = 0; e < cs.edges.size(); ++e) {
    FeasibilityCertificate c =
        detail::fit_candidates(cs, everything, target.ctx.dim(), /*strict_all=*/false, e);
    if (c.is_solution()) dense.push_back(cs.edges[e]);
  }
  return dense;
}

struct RealizationQuery {
  TargetDynamics target;
  RealizationProperty property = RealizationProperty::None;
  std::vector<RatVec> pool;  // empty means: exactly the target's sources
  bool allow_ghost_sources = false;
  size_t max_dense_edges = 14;
  ArrangementCaps atlas_caps{};
};

namespace detail {

inline bool property_holds(const ReactionNetwork& net, RealizationProperty p,
                           const ArrangementCaps& caps, RealizationResult& out) {
  switch (p) {
    case RealizationProperty::None:
      return true;
    case RealizationProperty::WeaklyReversible: {
      WeakReversibilityVerdict v = is_weakly_reversible(net);
      if (v.weakly_reversible) out.wr_verdict = v;
      return v.weakly_reversible;
    }
    case RealizationProperty::Endotactic: {
      EndotacticVerdict v = is_endotactic(net, caps);
      if (v.pass) out.endotactic_verdict = v;
      return v.pass;
    }
    case RealizationProperty::StronglyEndotactic: {
      EndotacticVerdict v = is_strongly_endotactic(net, caps);
      if (v.pass) out.endotactic_verdict = v;
      return v.pass;
    }
    case RealizationProperty::Consistent: {
      FeasibilityCertificate c = is_consistent(net);
      bool ok = c.is_solution();
      if (ok) out.consistency_certificate = std::move(c);
      return ok;
    }
    case RealizationProperty::Conservative: {
      std::optional<RatVec> v = is_conservative(net);
      if (v) out.conservation_vector = *v;
      return v.has_value();
    }
  }
  return false;
}

}  // namespace detail

/// Searches the vertex pool for a system dynamically equivalent to the
/// target with the requested property. The dense support bounds the search:
/// it is tried first, then (for constrained properties) all of its subsets
/// that keep every target source covered, in a fixed deterministic order.
/// Throws CapabilityError when the dense support exceeds the subset-search
/// cap.
inline RealizationResult find_realization(const RealizationQuery& q) {
  const TargetDynamics& target = q.target;
  std::vector<RatVec> pool = q.pool.empty() ? target.sources() : q.pool;
  detail::CandidateSystem cs = detail::candidate_system(target, pool, q.allow_ghost_sources);
  const size_t n = target.ctx.dim();

  RealizationResult res;
  if (target.map.empty()) {
    res.note = "empty target (every net vector zero); nothing to realize";
    return res;
  }

  // Dense support, with index mapping back into the candidate system.
  std::vector<size_t> dense_idx;
  {
    std::vector<size_t> everything(cs.edges.size());
    for (size_t i = 0; i < everything.size(); ++i) everything[i] = i;
    for (size_t e = 0; e < cs.edges.size(); ++e) {
      FeasibilityCertificate c = detail::fit_candidates(cs, everything, n, false, e);
      if (c.is_solution()) dense_idx.push_back(e);
    }
  }

  // Every target source needs at least one dense edge.
  std::set<RatVec, RatVecLess> covered;
  for (size_t e : dense_idx)
    if (!cs.edges[e].ghost_source) covered.insert(cs.edges[e].source);
  if (covered.size() != target.map.size()) {
    res.note = "target is not realizable on this vertex pool";
    return res;
  }

  FeasibilityCertificate dense_fit = detail::fit_candidates(cs, dense_idx, n, /*strict_all=*/true);
  if (!dense_fit.is_solution())
    throw std::logic_error("find_realization: dense support must be realizable");
  MassActionSystem dense_sys =
      detail::system_from_support(target.ctx, cs, dense_idx, *dense_fit.solution);

  if (detail::property_holds(dense_sys.network(), q.property, q.atlas_caps, res)) {
    res.found = true;
    res.system = std::move(dense_sys);
    res.rate_certificate = std::move(dense_fit);
    res.note = "dense realization";
    return res;
  }

  if (dense_idx.size() > q.max_dense_edges)
    throw CapabilityError("dense support has " + std::to_string(dense_idx.size()) +
                          " edges, above the exhaustive-search cap " +
                          std::to_string(q.max_dense_edges));

  const size_t m = dense_idx.size();
  for (uint64_t mask = 1; mask + 1 < (uint64_t{1} << m); ++mask) {
    std::vector<size_t> chosen;
    for (size_t i = 0; i < m; ++i)
      if (mask & (uint64_t{1} << i)) chosen.push_back(dense_idx[i]);
    std::set<RatVec, RatVecLess> cov;
    for (size_t e : chosen)
      if (!cs.edges[e].ghost_source) cov.insert(cs.edges[e].source);
    if (cov.size() != target.map.size()) continue;

    // The property depends on the graph alone, so the cheap graph filter
    // runs before the LP for weak reversibility.
    if (q.property == RealizationProperty::WeaklyReversible) {
      MassActionSystem probe =
          detail::system_from_support(target.ctx, cs, chosen, RatVec(chosen.size(), Rat(1)));
      if (!is_weakly_reversible(probe.network()).weakly_reversible) continue;
    }

    FeasibilityCertificate fit = detail::fit_candidates(cs, chosen, n, /*strict_all=*/true);
    if (!fit.is_solution()) continue;
    MassActionSystem sys = detail::system_from_support(target.ctx, cs, chosen, *fit.solution);
    if (!detail::property_holds(sys.network(), q.property, q.atlas_caps, res)) continue;
    if (net_vectors(sys).comparison() != target.map)
      throw std::logic_error("find_realization: candidate does not reproduce the target");
    res.found = true;
    res.system = std::move(sys);
    res.rate_certificate = std::move(fit);
    return res;
  }
  res.note = "no realization with property '" + std::string(to_string(q.property)) +
             "' exists on this vertex pool";
  return res;
}

// ---- deficiency-one classification ----

enum class DeficiencyOneType { TypeI, TypeII, TypeIII, NotApplicable };

inline const char* to_string(DeficiencyOneType t) {
  switch (t) {
    case DeficiencyOneType::TypeI: return "type-1";
    case DeficiencyOneType::TypeII: return "type-2";
    case DeficiencyOneType::TypeIII: return "type-3";
    case DeficiencyOneType::NotApplicable: return "not-applicable";
  }
  return "?";
}

/// For deficiency-one networks: TypeI when every linkage class has
/// deficiency zero, TypeII when the single class carries the deficiency,
/// TypeIII when one class of several does.
inline DeficiencyOneType classify_deficiency_one(const ReactionNetwork& g) {
  StructuralReport rep = structural_report(g);
  if (rep.deficiency != 1) return DeficiencyOneType::NotApplicable;
  size_t ones = 0;
  for (long long d : rep.class_deficiencies) {
    if (d == 1) ++ones;
    else if (d != 0) throw std::logic_error("classify_deficiency_one: class deficiency above total");
  }
  if (ones == 0) return DeficiencyOneType::TypeI;
  if (ones != 1) throw std::logic_error("classify_deficiency_one: class deficiencies exceed total");
  return rep.classes.size() == 1 ? DeficiencyOneType::TypeII : DeficiencyOneType::TypeIII;
}

struct Type1VsType3Report {
  bool infeasible = false;        // expected outcome
  bool theorem_violation = false; // a feasible fit would contradict the theorem
  std::optional<FeasibilityCertificate> certificate;
  std::optional<MassActionSystem> violating_system;
};

/// Confronts a TypeI weakly reversible system with a TypeIII weakly
/// reversible network of equal linkage-class count: fitting the TypeI
/// dynamics on the TypeIII network must be infeasible.
inline Type1VsType3Report check_type1_vs_type3(const MassActionSystem& sysI,
                                               const ReactionNetwork& gIII) {
  if (sysI.network().context() != gIII.context())
    throw std::invalid_argument("check_type1_vs_type3: species contexts differ");
  StructuralReport repI = structural_report(sysI.network());
  StructuralReport repIII = structural_report(gIII);
  if (!repI.weakly_reversible)
    throw std::invalid_argument("check_type1_vs_type3: first system is not weakly reversible");
  if (!repIII.weakly_reversible)
    throw std::invalid_argument("check_type1_vs_type3: second network is not weakly reversible");
  if (classify_deficiency_one(sysI.network()) != DeficiencyOneType::TypeI)
    throw std::invalid_argument("check_type1_vs_type3: first system is not deficiency-one type-1");
  if (classify_deficiency_one(gIII) != DeficiencyOneType::TypeIII)
    throw std::invalid_argument("check_type1_vs_type3: second network is not deficiency-one type-3");
  if (repI.classes.size() != repIII.classes.size())
    throw std::invalid_argument("check_type1_vs_type3: linkage-class counts differ");

  RealizationResult fit = find_rates(TargetDynamics::of(sysI), gIII);
  Type1VsType3Report rep;
  rep.infeasible = !fit.found;
  rep.theorem_violation = fit.found;
  if (fit.found)
    rep.violating_system = fit.system;
  else
    rep.certificate = fit.rate_certificate;
  return rep;
}

// ---- uniqueness probe ----

enum class UniquenessConstraint { WrDeficiencyZero, WrDeficiencyOne };

/// Enumerates, over the target's own sources, every weakly reversible
/// realization with the requested deficiency (exhaustive over dense-support
/// subsets). Deficiency-zero lists have at most one element; deficiency-one
/// lists may legitimately contain several distinct networks.
inline std::vector<RealizationResult> uniqueness_probe(const TargetDynamics& target,
                                                       UniquenessConstraint constraint,
                                                       size_t max_dense_edges = 14) {
  long long wanted = constraint == UniquenessConstraint::WrDeficiencyZero ? 0 : 1;
  std::vector<RatVec> pool = target.sources();
  std::vector<RealizationResult> out;
  if (target.map.empty()) return out;
  detail::CandidateSystem cs = detail::candidate_system(target, pool, false);
  const size_t n = target.ctx.dim();

  std::vector<size_t> dense_idx;
  {
    std::vector<size_t> everything(cs.edges.size());
    for (size_t i = 0; i < everything.size(); ++i) everything[i] = i;
    for (size_t e = 0; e < cs.edges.size(); ++e) {
      FeasibilityCertificate c = detail::fit_candidates(cs, everything, n, false, e);
      if (c.is_solution()) dense_idx.push_back(e);
    }
  }
  if (dense_idx.size() > max_dense_edges)
    throw CapabilityError("dense support has " + std::to_string(dense_idx.size()) +
                          " edges, above the exhaustive-search cap " +
                          std::to_string(max_dense_edges));

  const size_t m = dense_idx.size();
  for (uint64_t mask = 1; mask < (uint64_t{1} << m); ++mask) {
    std::vector<size_t> chosen;
    for (size_t i = 0; i < m; ++i)
      if (mask & (uint64_t{1} << i)) chosen.push_back(dense_idx[i]);
    std::set<RatVec, RatVecLess> cov;
    for (size_t e : chosen) cov.insert(cs.edges[e].source);
    if (cov.size() != target.map.size()) continue;

    MassActionSystem probe =
        detail::system_from_support(target.ctx, cs, chosen, RatVec(chosen.size(), Rat(1)));
    if (!is_weakly_reversible(probe.network()).weakly_reversible) continue;
    if (deficiency(probe.network()) != wanted) continue;

    FeasibilityCertificate fit = detail::fit_candidates(cs, chosen, n, /*strict_all=*/true);
    if (!fit.is_solution()) continue;
    RealizationResult r;
    r.found = true;
    r.system = detail::system_from_support(target.ctx, cs, chosen, *fit.solution);
    r.rate_certificate = std::move(fit);
    r.wr_verdict = is_weakly_reversible(r.system->network());
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace crn
