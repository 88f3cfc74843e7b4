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
#include <random>
#include <stdexcept>
#include <vector>

#include "crn/arrangement.hpp"
#include "crn/network.hpp"
#include "crn/rational.hpp"

namespace crn {

/// Finite witness set for the direction-quantified definitions: the verdict
/// for a direction v depends only on the signs of v against the edge vectors
/// and the source-pair differences, so one representative per covector cell
/// of that generator arrangement decides the whole of R^n \ {0}.
struct DirectionAtlas {
  std::vector<RatVec> generators;    // edge vectors, then source-pair differences
  std::vector<CovectorCell> cells;   // sorted by sign pattern
};

inline DirectionAtlas build_direction_atlas(const ReactionNetwork& g,
                                            const ArrangementCaps& caps = {}) {
  if (g.num_reactions() == 0)
    throw std::invalid_argument("build_direction_atlas: network has no reactions");
  DirectionAtlas atlas;
  for (size_t e = 0; e < g.num_reactions(); ++e) atlas.generators.push_back(g.reaction_vector(e));
  std::vector<size_t> sources = g.source_indices();
  for (size_t i = 0; i < sources.size(); ++i)
    for (size_t j = i + 1; j < sources.size(); ++j)
      atlas.generators.push_back(vec_sub(g.vertices()[sources[i]], g.vertices()[sources[j]]));
  atlas.cells = enumerate_covector_cells(atlas.generators, g.dim(), caps);
  return atlas;
}

struct EndotacticCounterexample {
  RatVec direction;
  size_t reaction;  // the v-negative reaction with no admissible witness
};

struct EndotacticVerdict {
  bool pass;
  std::optional<EndotacticCounterexample> counterexample;
};

namespace detail {

/// Direct evaluation of the endotactic condition at one direction: every
/// reaction moving v-negatively needs a v-positive reaction from a source
/// strictly below its own. Returns a violating reaction if any.
inline std::optional<size_t> endotactic_violation_at(const ReactionNetwork& g, const RatVec& v) {
  const size_t m = g.num_reactions();
  std::vector<Rat> drift(m), src_val(m);
  for (size_t e = 0; e < m; ++e) {
    drift[e] = dot(v, g.reaction_vector(e));
    src_val[e] = dot(v, g.vertices()[g.reactions()[e].source]);
  }
  for (size_t e = 0; e < m; ++e) {
    if (drift[e] >= 0) continue;
    bool witnessed = false;
    for (size_t f = 0; f < m && !witnessed; ++f)
      if (drift[f] > 0 && src_val[f] < src_val[e]) witnessed = true;
    if (!witnessed) return e;
  }
  return std::nullopt;
}

/// Strong form: the witness must additionally come from a v-minimal source,
/// so a v-negative reaction at a v-minimal source is already fatal.
inline std::optional<size_t> strongly_endotactic_violation_at(const ReactionNetwork& g,
                                                              const RatVec& v) {
  const size_t m = g.num_reactions();
  std::vector<Rat> drift(m), src_val(m);
  bool have_min = false;
  Rat min_val = 0;
  for (size_t e = 0; e < m; ++e) {
    drift[e] = dot(v, g.reaction_vector(e));
    src_val[e] = dot(v, g.vertices()[g.reactions()[e].source]);
    if (!have_min || src_val[e] < min_val) {
      min_val = src_val[e];
      have_min = true;
    }
  }
  bool positive_from_min = false;
  for (size_t e = 0; e < m; ++e)
    if (src_val[e] == min_val && drift[e] > 0) positive_from_min = true;
  for (size_t e = 0; e < m; ++e) {
    if (drift[e] >= 0) continue;
    if (src_val[e] == min_val) return e;
    if (!positive_from_min) return e;
  }
  return std::nullopt;
}

}  // namespace detail

inline EndotacticVerdict is_endotactic(const ReactionNetwork& g, const DirectionAtlas& atlas) {
  for (const CovectorCell& cell : atlas.cells) {
    std::optional<size_t> bad = detail::endotactic_violation_at(g, cell.rep);
    if (bad) return {false, EndotacticCounterexample{cell.rep, *bad}};
  }
  return {true, std::nullopt};
}

inline EndotacticVerdict is_endotactic(const ReactionNetwork& g, const ArrangementCaps& caps = {}) {
  return is_endotactic(g, build_direction_atlas(g, caps));
}

inline EndotacticVerdict is_strongly_endotactic(const ReactionNetwork& g,
                                                const DirectionAtlas& atlas) {
  for (const CovectorCell& cell : atlas.cells) {
    std::optional<size_t> bad = detail::strongly_endotactic_violation_at(g, cell.rep);
    if (bad) return {false, EndotacticCounterexample{cell.rep, *bad}};
  }
  return {true, std::nullopt};
}

inline EndotacticVerdict is_strongly_endotactic(const ReactionNetwork& g,
                                                const ArrangementCaps& caps = {}) {
  return is_strongly_endotactic(g, build_direction_atlas(g, caps));
}

// ---- parallel sweep report ----

enum class SweepDisposition { Pass, Fail, Continue };

struct SweepLevel {
  Rat value;                                   // v . y on this supporting level
  std::vector<size_t> sources;                 // vertex indices at the level
  std::vector<std::pair<size_t, int>> moves;   // (reaction, sign of v.(y'-y)) from those sources
};

struct SweepReport {
  RatVec direction;
  Rat min_value;  // supporting values of v over the source set
  Rat max_value;
  std::vector<SweepLevel> levels;
  SweepDisposition disposition;
  std::optional<size_t> deciding_level;
};

/// Sweeps a hyperplane orthogonal to v across the source vertices, from the
/// v-minimal supporting level upward. A level with a v-negative reaction
/// fails; a level with only zero drifts continues to the next; a level with
/// nonnegative drifts and a strictly positive one passes. Exhausting every
/// level with zero drifts reports Continue.
inline SweepReport sweep_report(const ReactionNetwork& g, const RatVec& v) {
  if (v.size() != g.dim()) throw std::invalid_argument("sweep_report: dimension mismatch");
  if (is_zero_vec(v)) throw std::invalid_argument("sweep_report: zero direction");
  std::vector<size_t> sources = g.source_indices();
  if (sources.empty()) throw std::invalid_argument("sweep_report: network has no reactions");

  SweepReport rep;
  rep.direction = v;
  std::map<Rat, std::vector<size_t>> by_value;
  for (size_t s : sources) by_value[dot(v, g.vertices()[s])].push_back(s);
  rep.min_value = by_value.begin()->first;
  rep.max_value = by_value.rbegin()->first;

  rep.disposition = SweepDisposition::Continue;
  for (auto& [value, level_sources] : by_value) {
    SweepLevel level;
    level.value = value;
    level.sources = level_sources;
    bool negative = false, positive = false;
    for (size_t e = 0; e < g.num_reactions(); ++e) {
      if (dot(v, g.vertices()[g.reactions()[e].source]) != value) continue;
      int s = sign_of(dot(v, g.reaction_vector(e)));
      level.moves.emplace_back(e, s);
      negative |= s < 0;
      positive |= s > 0;
    }
    rep.levels.push_back(std::move(level));
    if (negative) {
      rep.disposition = SweepDisposition::Fail;
      rep.deciding_level = rep.levels.size() - 1;
      break;
    }
    if (positive) {
      rep.disposition = SweepDisposition::Pass;
      rep.deciding_level = rep.levels.size() - 1;
      break;
    }
    // all drifts zero on this level: keep sweeping
  }
  return rep;
}

// ---- sampling oracle ----

enum class EndotacticKind { Endotactic, StronglyEndotactic };

/// Refutation-only randomized check: samples rational directions and returns
/// an exactly verified counterexample if one is hit. Absence of a
/// counterexample proves nothing. Deterministic for a fixed seed.
inline std::optional<EndotacticCounterexample> sampling_oracle(const ReactionNetwork& g,
                                                               EndotacticKind kind,
                                                               size_t trials,
                                                               uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("sampling_oracle: trials must be >= 1");
  std::mt19937_64 rng(seed);
  const size_t n = g.dim();
  for (size_t t = 0; t < trials; ++t) {
    RatVec v(n);
    bool zero = true;
    for (size_t i = 0; i < n; ++i) {
      long num = static_cast<long>(rng() % 13) - 6;
      long den = static_cast<long>(rng() % 3) + 1;
      v[i] = Rat(num, den);
      if (num != 0) zero = false;
    }
    if (zero) continue;
    std::optional<size_t> bad = kind == EndotacticKind::Endotactic
                                    ? detail::endotactic_violation_at(g, v)
                                    : detail::strongly_endotactic_violation_at(g, v);
    if (bad) return EndotacticCounterexample{v, *bad};
  }
  return std::nullopt;
}

}  // namespace crn
