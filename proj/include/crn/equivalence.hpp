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

#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "crn/linalg.hpp"
#include "crn/network.hpp"
#include "crn/structure.hpp"

namespace crn {

/// Net vector per source: w_y = sum_{y->y'} k_{y->y'} (y' - y). The raw map
/// keeps zero entries (ghosts); the comparison form drops them, since they
/// contribute nothing to the vector field.
struct NetVectorMap {
  SpeciesContext ctx;
  std::map<RatVec, RatVec, RatVecLess> raw;

  std::map<RatVec, RatVec, RatVecLess> comparison() const {
    std::map<RatVec, RatVec, RatVecLess> out;
    for (const auto& [src, net] : raw)
      if (!is_zero_vec(net)) out.emplace(src, net);
    return out;
  }

  std::vector<RatVec> ghost_keys() const {
    std::vector<RatVec> out;
    for (const auto& [src, net] : raw)
      if (is_zero_vec(net)) out.push_back(src);
    return out;
  }
};

inline NetVectorMap net_vectors(const MassActionSystem& sys) {
  const ReactionNetwork& g = sys.network();
  NetVectorMap m;
  m.ctx = g.context();
  for (size_t e = 0; e < g.num_reactions(); ++e) {
    const RatVec& src = g.vertices()[g.reactions()[e].source];
    RatVec contrib = vec_scaled(g.reaction_vector(e), sys.rates()[e]);
    auto it = m.raw.find(src);
    if (it == m.raw.end())
      m.raw.emplace(src, std::move(contrib));
    else
      it->second = vec_add(it->second, contrib);
  }
  return m;
}

/// Vertex indices of sources whose net vector is exactly zero.
inline std::vector<size_t> ghost_vertices(const MassActionSystem& sys) {
  const ReactionNetwork& g = sys.network();
  NetVectorMap m = net_vectors(sys);
  std::vector<size_t> out;
  for (size_t i : g.source_indices())
    if (is_zero_vec(m.raw.at(g.vertices()[i]))) out.push_back(i);
  return out;
}

/// Removes every outgoing edge of every ghost source, then prunes vertices
/// left without incident edges. Dynamics-preserving and idempotent: ghosts
/// contribute zero to the vector field, and removing their edges cannot
/// create new ghosts.
inline MassActionSystem eliminate_ghosts(const MassActionSystem& sys) {
  const ReactionNetwork& g = sys.network();
  std::vector<char> is_ghost(g.num_vertices(), 0);
  for (size_t i : ghost_vertices(sys)) is_ghost[i] = 1;

  std::vector<Reaction> kept;
  std::vector<Rat> kept_rates;
  std::vector<char> touched(g.num_vertices(), 0);
  for (size_t e = 0; e < g.num_reactions(); ++e) {
    const Reaction& r = g.reactions()[e];
    if (is_ghost[r.source]) continue;
    kept.push_back(r);
    kept_rates.push_back(sys.rates()[e]);
    touched[r.source] = 1;
    touched[r.target] = 1;
  }
  std::vector<size_t> new_index(g.num_vertices(), SIZE_MAX);
  std::vector<RatVec> vertices;
  for (size_t i = 0; i < g.num_vertices(); ++i) {
    if (!touched[i]) continue;
    new_index[i] = vertices.size();
    vertices.push_back(g.vertices()[i]);
  }
  for (Reaction& r : kept) {
    r.source = new_index[r.source];
    r.target = new_index[r.target];
  }
  return MassActionSystem(ReactionNetwork(g.context(), std::move(vertices), std::move(kept)),
                          std::move(kept_rates));
}

struct EquivalenceVerdict {
  bool equivalent;
  // witness: lexicographically first source exponent where the maps differ,
  // with the exact net-vector difference (missing entries count as zero)
  std::optional<std::pair<RatVec, RatVec>> witness;
};

/// Two systems generate the same vector field iff their comparison-form net
/// vector maps agree exactly.
inline EquivalenceVerdict is_dynamically_equivalent(const MassActionSystem& a,
                                                    const MassActionSystem& b) {
  if (a.network().context() != b.network().context())
    throw std::invalid_argument("is_dynamically_equivalent: species contexts differ");
  auto ma = net_vectors(a).comparison();
  auto mb = net_vectors(b).comparison();
  auto ia = ma.begin();
  auto ib = mb.begin();
  while (ia != ma.end() || ib != mb.end()) {
    if (ib == mb.end() || (ia != ma.end() && lex_less(ia->first, ib->first)))
      return {false, std::make_pair(ia->first, ia->second)};
    if (ia == ma.end() || lex_less(ib->first, ia->first))
      return {false, std::make_pair(ib->first, vec_neg(ib->second))};
    if (ia->second != ib->second)
      return {false, std::make_pair(ia->first, vec_sub(ia->second, ib->second))};
    ++ia;
    ++ib;
  }
  return {true, std::nullopt};
}

/// Evaluates both vector fields exactly at random strictly positive rational
/// points; false at the first discrepancy. Agreement is only sampled
/// evidence, not a proof. Deterministic for a fixed seed.
inline bool random_point_oracle(const MassActionSystem& a, const MassActionSystem& b,
                                size_t trials, uint64_t seed) {
  if (a.network().context() != b.network().context())
    throw std::invalid_argument("random_point_oracle: species contexts differ");
  std::mt19937_64 rng(seed);
  const size_t n = a.network().dim();
  for (size_t t = 0; t < trials; ++t) {
    RatVec x(n);
    for (size_t i = 0; i < n; ++i)
      x[i] = Rat(static_cast<long>(rng() % 9) + 1, static_cast<long>(rng() % 4) + 1);
    if (evaluate_vector_field(a, x) != evaluate_vector_field(b, x)) return false;
  }
  return true;
}

/// Basis of the span of the nonzero net vectors. For weakly reversible or
/// strongly endotactic systems this equals the network's stoichiometric
/// subspace.
inline std::vector<RatVec> stoichiometric_subspace_of_dynamics(const NetVectorMap& m) {
  std::vector<RatVec> nets;
  for (const auto& [src, net] : m.comparison()) nets.push_back(net);
  if (nets.empty()) return {};
  return span_basis(nets, m.ctx.dim());
}

}  // namespace crn
