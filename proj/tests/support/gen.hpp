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

// Test-only corpus generators and fixture builders.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "crn/equivalence.hpp"
#include "crn/network.hpp"
#include "crn/structure.hpp"

namespace crn::testing {

inline SpeciesContext auto_context(size_t dim) {
  std::vector<std::string> names;
  for (size_t i = 0; i < dim; ++i) names.push_back("x" + std::to_string(i + 1));
  return SpeciesContext(names);
}

/// Builds a network from edges given as exact point pairs; vertices are
/// interned in first-appearance order.
inline ReactionNetwork make_network(size_t dim,
                                    const std::vector<std::pair<RatVec, RatVec>>& edges) {
  std::map<RatVec, size_t, RatVecLess> index;
  std::vector<RatVec> vertices;
  auto intern = [&](const RatVec& p) {
    auto it = index.find(p);
    if (it != index.end()) return it->second;
    index.emplace(p, vertices.size());
    vertices.push_back(p);
    return vertices.size() - 1;
  };
  std::vector<Reaction> reactions;
  for (const auto& [s, t] : edges) reactions.push_back({intern(s), intern(t)});
  return ReactionNetwork(auto_context(dim), std::move(vertices), std::move(reactions));
}

inline MassActionSystem make_system(size_t dim,
                                    const std::vector<std::tuple<RatVec, RatVec, Rat>>& edges) {
  std::vector<std::pair<RatVec, RatVec>> es;
  std::vector<Rat> rates;
  for (const auto& [s, t, k] : edges) {
    es.emplace_back(s, t);
    rates.push_back(k);
  }
  return MassActionSystem(make_network(dim, es), rates);
}

inline RatVec pt(std::initializer_list<long> coords) {
  RatVec v;
  for (long c : coords) v.push_back(Rat(c));
  return v;
}

// ---- random corpora ----

struct NetGenOpts {
  size_t min_species = 1;
  size_t max_species = 3;
  size_t min_vertices = 2;
  size_t max_vertices = 5;
  size_t max_edges = 6;
  long coord_lo = 0;
  long coord_hi = 3;
};

inline size_t rnd(std::mt19937_64& rng, size_t lo, size_t hi) {
  return lo + rng() % (hi - lo + 1);
}

inline std::vector<RatVec> random_distinct_points(std::mt19937_64& rng, size_t count, size_t dim,
                                                  long lo, long hi) {
  std::set<RatVec, RatVecLess> pts;
  size_t guard = 0;
  while (pts.size() < count) {
    RatVec p(dim);
    for (size_t i = 0; i < dim; ++i)
      p[i] = Rat(lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)));
    pts.insert(p);
    if (++guard > 10000) break;
  }
  return {pts.begin(), pts.end()};
}

inline ReactionNetwork random_network(std::mt19937_64& rng, NetGenOpts o = {}) {
  size_t dim = rnd(rng, o.min_species, o.max_species);
  size_t nv = rnd(rng, o.min_vertices, o.max_vertices);
  std::vector<RatVec> pts = random_distinct_points(rng, nv, dim, o.coord_lo, o.coord_hi);
  nv = pts.size();
  std::set<std::pair<size_t, size_t>> edges;
  size_t ne = rnd(rng, 1, o.max_edges);
  size_t guard = 0;
  while (edges.size() < ne && ++guard < 1000) {
    size_t s = rng() % nv, t = rng() % nv;
    if (s != t) edges.emplace(s, t);
  }
  std::vector<std::pair<RatVec, RatVec>> es;
  for (auto [s, t] : edges) es.emplace_back(pts[s], pts[t]);
  return make_network(dim, es);
}

inline MassActionSystem with_random_rates(std::mt19937_64& rng, const ReactionNetwork& g) {
  std::vector<Rat> rates;
  for (size_t e = 0; e < g.num_reactions(); ++e)
    rates.push_back(Rat(static_cast<long>(rng() % 5) + 1, static_cast<long>(rng() % 3) + 1));
  return MassActionSystem(g, rates);
}

inline MassActionSystem random_system(std::mt19937_64& rng, NetGenOpts o = {}) {
  return with_random_rates(rng, random_network(rng, o));
}

/// Union of directed cycles: weakly reversible by construction.
inline ReactionNetwork random_wr_network(std::mt19937_64& rng, NetGenOpts o = {}) {
  size_t dim = rnd(rng, o.min_species, o.max_species);
  size_t nv = rnd(rng, std::max<size_t>(2, o.min_vertices), o.max_vertices);
  std::vector<RatVec> pts = random_distinct_points(rng, nv, dim, o.coord_lo, o.coord_hi);
  nv = pts.size();
  std::set<std::pair<size_t, size_t>> edges;
  size_t cycles = rnd(rng, 1, 2);
  for (size_t c = 0; c < cycles; ++c) {
    size_t len = rnd(rng, 2, nv);
    std::vector<size_t> order(nv);
    for (size_t i = 0; i < nv; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    order.resize(len);
    for (size_t i = 0; i < len; ++i) edges.emplace(order[i], order[(i + 1) % len]);
  }
  std::vector<std::pair<RatVec, RatVec>> es;
  for (auto [s, t] : edges) es.emplace_back(pts[s], pts[t]);
  return make_network(dim, es);
}

/// One directed cycle through every chosen vertex: weakly reversible with a
/// single linkage class (hence strongly endotactic).
inline ReactionNetwork random_single_cycle(std::mt19937_64& rng, NetGenOpts o = {}) {
  size_t dim = rnd(rng, o.min_species, o.max_species);
  size_t nv = rnd(rng, std::max<size_t>(2, o.min_vertices), o.max_vertices);
  std::vector<RatVec> pts = random_distinct_points(rng, nv, dim, o.coord_lo, o.coord_hi);
  nv = pts.size();
  std::vector<size_t> order(nv);
  for (size_t i = 0; i < nv; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::pair<RatVec, RatVec>> es;
  for (size_t i = 0; i < nv; ++i) es.emplace_back(pts[order[i]], pts[order[(i + 1) % nv]]);
  return make_network(dim, es);
}

inline ReactionNetwork random_wr_def_zero(std::mt19937_64& rng, NetGenOpts o = {}) {
  for (int attempt = 0; attempt < 500; ++attempt) {
    ReactionNetwork g = random_wr_network(rng, o);
    if (deficiency(g) == 0) return g;
  }
  // reversible pair fallback, always deficiency zero
  return make_network(1, {{pt({0}), pt({1})}, {pt({1}), pt({0})}});
}

/// Replaces one edge by two half-rate edges whose targets straddle the
/// original target; the net vector at the source is unchanged, so the result
/// is dynamically equivalent to the input.
inline MassActionSystem split_edge_equivalent(std::mt19937_64& rng, const MassActionSystem& sys) {
  const ReactionNetwork& g = sys.network();
  const size_t dim = g.dim();
  for (int attempt = 0; attempt < 60; ++attempt) {
    size_t e = rng() % g.num_reactions();
    const RatVec& src = g.vertices()[g.reactions()[e].source];
    const RatVec& dst = g.vertices()[g.reactions()[e].target];
    RatVec d(dim, Rat(0));
    bool zero = true;
    for (size_t i = 0; i < dim; ++i) {
      long c = static_cast<long>(rng() % 3) - 1;
      d[i] = Rat(c);
      if (c != 0) zero = false;
    }
    if (zero) continue;
    RatVec up = vec_add(dst, d), down = vec_sub(dst, d);
    if (up == src || down == src) continue;

    std::vector<std::tuple<RatVec, RatVec, Rat>> edges;
    bool clash = false;
    for (size_t f = 0; f < g.num_reactions(); ++f) {
      if (f == e) continue;
      const RatVec& s = g.vertices()[g.reactions()[f].source];
      const RatVec& t = g.vertices()[g.reactions()[f].target];
      if (s == src && (t == up || t == down)) clash = true;
      edges.emplace_back(s, t, sys.rates()[f]);
    }
    if (clash) continue;
    edges.emplace_back(src, up, sys.rates()[e] / 2);
    edges.emplace_back(src, down, sys.rates()[e] / 2);
    return make_system(dim, edges);
  }
  return sys;
}

/// Vertex order and reaction order normalized, for structural comparison of
/// systems found by different routes.
inline MassActionSystem canonical_form(const MassActionSystem& sys) {
  const ReactionNetwork& g = sys.network();
  std::vector<std::tuple<RatVec, RatVec, Rat>> edges;
  for (size_t e = 0; e < g.num_reactions(); ++e)
    edges.emplace_back(g.vertices()[g.reactions()[e].source],
                       g.vertices()[g.reactions()[e].target], sys.rates()[e]);
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
    if (lex_less(std::get<0>(a), std::get<0>(b))) return true;
    if (lex_less(std::get<0>(b), std::get<0>(a))) return false;
    return lex_less(std::get<1>(a), std::get<1>(b));
  });
  std::map<RatVec, size_t, RatVecLess> index;
  std::vector<RatVec> vertices;
  for (const RatVec& v : g.vertices()) index.emplace(v, 0);
  for (auto& [p, i] : index) {
    i = vertices.size();
    vertices.push_back(p);
  }
  std::vector<Reaction> reactions;
  std::vector<Rat> rates;
  for (const auto& [s, t, k] : edges) {
    reactions.push_back({index.at(s), index.at(t)});
    rates.push_back(k);
  }
  return MassActionSystem(ReactionNetwork(g.context(), std::move(vertices), std::move(reactions)),
                          std::move(rates));
}

// ---- named fixtures ----

/// Weakly reversible deficiency-one single-class network on the unit square
/// (both directions of every side).
inline MassActionSystem square_cycle_system() {
  RatVec o = pt({0, 0}), x = pt({1, 0}), y = pt({0, 1}), d = pt({1, 1});
  return make_system(2, {
                            {o, x, Rat(1)},
                            {x, o, Rat(1)},
                            {x, d, Rat(1)},
                            {d, x, Rat(1)},
                            {d, y, Rat(1)},
                            {y, d, Rat(1)},
                            {y, o, Rat(1)},
                            {o, y, Rat(1)},
                        });
}

/// Weakly reversible deficiency-zero two-class network on the same square
/// (the two diagonals), dynamically equivalent to square_cycle_system.
inline MassActionSystem square_diagonal_system() {
  RatVec o = pt({0, 0}), x = pt({1, 0}), y = pt({0, 1}), d = pt({1, 1});
  return make_system(2, {
                            {o, d, Rat(1)},
                            {d, o, Rat(1)},
                            {x, y, Rat(1)},
                            {y, x, Rat(1)},
                        });
}

/// Five-vertex two-class deficiency-one weakly reversible system with a
/// ghost vertex at (1/2, 1/2), dynamically equivalent to
/// square_cycle_system.
inline MassActionSystem ghost_pentagon_system() {
  RatVec o = pt({0, 0}), x = pt({1, 0}), y = pt({0, 1}), d = pt({1, 1});
  RatVec q{Rat(1, 2), Rat(1, 2)};
  return make_system(2, {
                            {o, d, Rat(1, 2)},
                            {o, q, Rat(1)},
                            {d, o, Rat(1)},
                            {q, o, Rat(1)},
                            {q, d, Rat(1)},
                            {x, y, Rat(1)},
                            {y, x, Rat(1)},
                        });
}

}  // namespace crn::testing
