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
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "crn/linalg.hpp"
#include "crn/lp.hpp"
#include "crn/network.hpp"

namespace crn {

/// Connected components of the underlying undirected graph. Classes are
/// ordered by smallest member; isolated vertices form singleton classes.
inline std::vector<std::vector<size_t>> linkage_classes(const ReactionNetwork& g) {
  std::vector<size_t> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), size_t{0});
  auto find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Reaction& r : g.reactions()) {
    size_t a = find(r.source), b = find(r.target);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<size_t>> classes;
  std::vector<size_t> class_of(g.num_vertices(), SIZE_MAX);
  for (size_t i = 0; i < g.num_vertices(); ++i) {
    size_t root = find(i);
    if (class_of[root] == SIZE_MAX) {
      class_of[root] = classes.size();
      classes.emplace_back();
    }
    classes[class_of[root]].push_back(i);
  }
  return classes;
}

struct WeakReversibilityVerdict {
  bool weakly_reversible;
  std::optional<Reaction> witness;  // an edge crossing strong components
};

/// True iff every edge lies inside a strongly connected component
/// (Tarjan); otherwise returns the first crossing edge as witness.
inline WeakReversibilityVerdict is_weakly_reversible(const ReactionNetwork& g) {
  const size_t n = g.num_vertices();
  std::vector<std::vector<size_t>> adj(n);
  for (const Reaction& r : g.reactions()) adj[r.source].push_back(r.target);

  std::vector<size_t> index(n, SIZE_MAX), low(n, 0), comp(n, SIZE_MAX);
  std::vector<char> on_stack(n, 0);
  std::vector<size_t> stack;
  size_t counter = 0, ncomp = 0;

  // Iterative Tarjan.
  struct Frame {
    size_t v;
    size_t child;
  };
  for (size_t start = 0; start < n; ++start) {
    if (index[start] != SIZE_MAX) continue;
    std::vector<Frame> frames{{start, 0}};
    index[start] = low[start] = counter++;
    stack.push_back(start);
    on_stack[start] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.child < adj[f.v].size()) {
        size_t w = adj[f.v][f.child++];
        if (index[w] == SIZE_MAX) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          for (;;) {
            size_t w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = ncomp;
            if (w == f.v) break;
          }
          ++ncomp;
        }
        size_t v = f.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }
  for (const Reaction& r : g.reactions())
    if (comp[r.source] != comp[r.target]) return {false, r};
  return {true, std::nullopt};
}

/// Canonical (RREF) basis of span{y' - y : y -> y' in E}.
inline std::vector<RatVec> stoichiometric_subspace(const ReactionNetwork& g) {
  if (g.num_reactions() == 0) return {};
  return span_basis(g.reaction_vectors(), g.dim());
}

struct StructuralReport {
  std::vector<std::vector<size_t>> classes;
  bool weakly_reversible = false;
  std::optional<Reaction> wr_witness;
  std::vector<RatVec> stoich_basis;
  size_t dim_s = 0;
  long long deficiency = 0;
  std::vector<long long> class_deficiencies;
};

/// Full structural summary; deficiency is |V| - l - dim(S), per class with
/// l = 1 and the class's own reaction span.
inline StructuralReport structural_report(const ReactionNetwork& g) {
  StructuralReport rep;
  rep.classes = linkage_classes(g);
  WeakReversibilityVerdict wr = is_weakly_reversible(g);
  rep.weakly_reversible = wr.weakly_reversible;
  rep.wr_witness = wr.witness;
  rep.stoich_basis = stoichiometric_subspace(g);
  rep.dim_s = rep.stoich_basis.size();
  rep.deficiency = static_cast<long long>(g.num_vertices()) -
                   static_cast<long long>(rep.classes.size()) - static_cast<long long>(rep.dim_s);
  std::vector<size_t> class_of(g.num_vertices());
  for (size_t c = 0; c < rep.classes.size(); ++c)
    for (size_t v : rep.classes[c]) class_of[v] = c;
  for (size_t c = 0; c < rep.classes.size(); ++c) {
    std::vector<RatVec> vs;
    for (size_t e = 0; e < g.num_reactions(); ++e)
      if (class_of[g.reactions()[e].source] == c) vs.push_back(g.reaction_vector(e));
    size_t d = vs.empty() ? 0 : span_basis(vs, g.dim()).size();
    rep.class_deficiencies.push_back(static_cast<long long>(rep.classes[c].size()) - 1 -
                                     static_cast<long long>(d));
  }
  if (rep.deficiency < 0) throw std::logic_error("structural_report: negative deficiency");
  return rep;
}

inline long long deficiency(const ReactionNetwork& g) {
  return structural_report(g).deficiency;
}

/// Stiemke alternative on the reaction vectors: Solution lambda > 0 with
/// sum lambda_e (y'-y) = 0, or Separator w with w.(y'-y) <= 0 everywhere and
/// strictly negative somewhere.
inline FeasibilityCertificate is_consistent(const ReactionNetwork& g) {
  if (g.num_reactions() == 0) throw std::invalid_argument("is_consistent: network has no reactions");
  return stiemke_alternative(g.reaction_vectors());
}

/// True iff -v_e lies in Cone{v_f} for every reaction vector v_e, decided by
/// one nonnegative-combination feasibility problem per reaction.
inline bool cone_equals_span(const ReactionNetwork& g) {
  if (g.num_reactions() == 0) throw std::invalid_argument("cone_equals_span: network has no reactions");
  std::vector<RatVec> vs = g.reaction_vectors();
  const size_t k = vs.size();
  std::vector<size_t> all(k);
  std::iota(all.begin(), all.end(), size_t{0});
  RatMat a = RatMat::from_columns(vs, g.dim());
  for (size_t e = 0; e < k; ++e) {
    FeasibilityCertificate c = lp_feasible(LpProblem(a, vec_neg(vs[e]), all, {}));
    if (!c.is_solution()) return false;
  }
  return true;
}

/// A strictly positive vector orthogonal to the stoichiometric subspace, or
/// nothing. Edgeless networks are conservative with the all-ones vector.
inline std::optional<RatVec> is_conservative(const ReactionNetwork& g) {
  const size_t n = g.dim();
  std::vector<RatVec> basis = stoichiometric_subspace(g);
  RatMat a = RatMat::from_rows(basis, n);
  RatVec b(basis.size(), Rat(0));
  std::vector<size_t> all(n);
  std::iota(all.begin(), all.end(), size_t{0});
  FeasibilityCertificate c = lp_feasible(LpProblem(a, b, all, all));
  if (!c.is_solution()) return std::nullopt;
  return *c.solution;
}

/// x^y with y required to be a nonnegative-integer vector.
inline Rat monomial(const RatVec& x, const RatVec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("monomial: dimension mismatch");
  Rat m = 1;
  for (size_t i = 0; i < y.size(); ++i) {
    if (denominator(y[i]) != 1)
      throw std::invalid_argument("monomial: non-integer exponent " + rat_str(y[i]));
    if (y[i] < 0)
      throw std::invalid_argument("monomial: negative exponent " + rat_str(y[i]));
    Int e = numerator(y[i]);
    if (e > 4096) throw std::invalid_argument("monomial: exponent too large");
    m *= rat_pow(x[i], e.convert_to<unsigned long>());
  }
  return m;
}

/// Exact right-hand side of the mass-action ODE at x > 0:
/// sum_e k_e x^{y_e} (y'_e - y_e).
inline RatVec evaluate_vector_field(const MassActionSystem& sys, const RatVec& x) {
  const ReactionNetwork& g = sys.network();
  if (x.size() != g.dim()) throw std::invalid_argument("evaluate_vector_field: dimension mismatch");
  for (const Rat& xi : x)
    if (xi <= 0) throw std::invalid_argument("evaluate_vector_field: point must be strictly positive");
  RatVec out(g.dim(), Rat(0));
  for (size_t e = 0; e < g.num_reactions(); ++e) {
    Rat coeff = sys.rates()[e] * monomial(x, g.vertices()[g.reactions()[e].source]);
    out = vec_add(out, vec_scaled(g.reaction_vector(e), coeff));
  }
  return out;
}

struct ComplexBalanceReport {
  bool balanced;
  std::vector<Rat> residuals;  // outgoing minus incoming flux, per vertex
};

/// Checks the vertex-wise flux balance sum_{y->y'} k x0^y = sum_{y~->y} k x0^{y~}
/// at a given positive point.
inline ComplexBalanceReport check_complex_balanced(const MassActionSystem& sys, const RatVec& x0) {
  const ReactionNetwork& g = sys.network();
  if (x0.size() != g.dim()) throw std::invalid_argument("check_complex_balanced: dimension mismatch");
  for (const Rat& xi : x0)
    if (xi <= 0) throw std::invalid_argument("check_complex_balanced: point must be strictly positive");
  std::vector<Rat> residual(g.num_vertices(), Rat(0));
  for (size_t e = 0; e < g.num_reactions(); ++e) {
    const Reaction& r = g.reactions()[e];
    Rat flux = sys.rates()[e] * monomial(x0, g.vertices()[r.source]);
    residual[r.source] += flux;
    residual[r.target] -= flux;
  }
  bool ok = true;
  for (const Rat& v : residual)
    if (v != 0) ok = false;
  return {ok, residual};
}

}  // namespace crn
