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
#include <stdexcept>
#include <vector>

#include "crn/linalg.hpp"
#include "crn/network.hpp"
#include "crn/rational.hpp"

namespace crn {

struct ArrangementCaps {
  size_t max_dim = 5;
  size_t max_cells = 200000;
};

/// One covector cell of a central hyperplane arrangement: a realizable sign
/// pattern over the input generators together with a nonzero witness
/// direction realizing it exactly.
struct CovectorCell {
  std::vector<int> signs;
  RatVec rep;
};

namespace detail {

/// Distinct primitive normals (canonical sign) for a list of vectors.
inline std::vector<RatVec> canonical_normals(const std::vector<RatVec>& gens) {
  std::vector<RatVec> hs;
  for (const RatVec& g : gens) {
    RatVec p = primitive(g, /*fix_sign=*/true);
    if (is_zero_vec(p)) throw std::invalid_argument("arrangement: zero generator");
    hs.push_back(std::move(p));
  }
  std::sort(hs.begin(), hs.end(), RatVecLess{});
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  return hs;
}

/// Witness directions, one per full-dimensional region of the central
/// arrangement {v . h = 0 : h in hs} in Q^dim. Recursive over facets: every
/// region of a nonempty central arrangement has a facet, and a facet witness
/// perturbed off its hyperplane by a small exact epsilon lands in the two
/// adjacent regions.
inline std::vector<RatVec> region_witnesses(const std::vector<RatVec>& hs, size_t dim) {
  if (hs.empty()) {
    RatVec e(dim, Rat(0));
    if (dim == 0) throw std::logic_error("region_witnesses: zero-dimensional space");
    e[0] = 1;
    return {e};
  }
  if (dim == 1) return {{Rat(1)}, {Rat(-1)}};

  std::map<std::vector<int>, RatVec> found;
  for (const RatVec& h : hs) {
    RatMat hrow = RatMat::from_rows({h}, dim);
    std::vector<RatVec> basis = kernel_basis(hrow);  // dim-1 vectors
    std::vector<RatVec> sub;
    sub.reserve(hs.size());
    for (const RatVec& g : hs) {
      if (g == h) continue;
      RatVec gk(basis.size());
      for (size_t j = 0; j < basis.size(); ++j) gk[j] = dot(basis[j], g);
      sub.push_back(primitive(gk, /*fix_sign=*/true));
    }
    std::sort(sub.begin(), sub.end(), RatVecLess{});
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());

    for (const RatVec& w : region_witnesses(sub, basis.size())) {
      RatVec v0(dim, Rat(0));
      for (size_t j = 0; j < basis.size(); ++j) v0 = vec_add(v0, vec_scaled(basis[j], w[j]));
      // Largest epsilon that cannot flip any strict sign against the other
      // hyperplanes (facet witnesses are strict on all of them).
      Rat eps = 1;
      for (const RatVec& g : hs) {
        if (g == h) continue;
        Rat s = dot(v0, g);
        Rat hg = dot(h, g);
        if (hg == 0) continue;
        Rat bound = abs(s) / (2 * abs(hg));
        if (bound < eps) eps = bound;
      }
      for (int side : {1, -1}) {
        RatVec v = vec_add(v0, vec_scaled(h, side * eps));
        std::vector<int> pat(hs.size());
        bool interior = true;
        for (size_t j = 0; j < hs.size(); ++j) {
          pat[j] = sign_of(dot(v, hs[j]));
          if (pat[j] == 0) interior = false;
        }
        if (!interior) throw std::logic_error("region_witnesses: perturbed point not interior");
        found.emplace(std::move(pat), primitive(v));
      }
    }
  }
  std::vector<RatVec> out;
  out.reserve(found.size());
  for (auto& [pat, v] : found) out.push_back(std::move(v));
  return out;
}

struct RatVecListLess {
  bool operator()(const std::vector<RatVec>& a, const std::vector<RatVec>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
      if (lex_less(a[i], b[i])) return true;
      if (lex_less(b[i], a[i])) return false;
    }
    return false;
  }
};

}  // namespace detail

/// Enumerates every covector cell (realizable sign pattern over nonzero v)
/// of the central arrangement of the generators' hyperplanes, with one exact
/// witness per cell, sorted by sign pattern.
///
/// Cells with zero signs are reached by descending into the flats of the
/// arrangement: for each intersection subspace, the generators not vanishing
/// on it induce a smaller central arrangement whose regions are enumerated
/// in flat coordinates and lifted back.
inline std::vector<CovectorCell> enumerate_covector_cells(const std::vector<RatVec>& generators,
                                                          size_t dim,
                                                          const ArrangementCaps& caps = {}) {
  if (dim == 0) throw std::invalid_argument("enumerate_covector_cells: zero-dimensional space");
  if (dim > caps.max_dim)
    throw CapabilityError(
        "arrangement dimension " + std::to_string(dim) + " exceeds cap " +
        std::to_string(caps.max_dim) + "; use the sampling oracle for refutation at this scale");
  for (const RatVec& g : generators)
    if (g.size() != dim) throw std::invalid_argument("enumerate_covector_cells: dimension mismatch");

  std::vector<RatVec> hs = detail::canonical_normals(generators);

  // All flats (intersections of hyperplane subsets) of dimension >= 1,
  // keyed by the canonical RREF basis of their normal space.
  std::map<std::vector<RatVec>, std::vector<RatVec>, detail::RatVecListLess> flats;
  std::vector<std::vector<RatVec>> queue;
  flats.emplace(std::vector<RatVec>{}, std::vector<RatVec>{});
  queue.push_back({});
  while (!queue.empty()) {
    std::vector<RatVec> nb = queue.back();
    queue.pop_back();
    for (const RatVec& h : hs) {
      if (in_span(h, nb)) continue;
      std::vector<RatVec> vs = nb;
      vs.push_back(h);
      std::vector<RatVec> nb2 = span_basis(vs, dim);
      if (nb2.size() >= dim) continue;  // the origin is not a direction
      if (flats.emplace(nb2, nb2).second) queue.push_back(nb2);
      if (flats.size() > caps.max_cells)
        throw CapabilityError("arrangement flat count exceeds cell cap " +
                              std::to_string(caps.max_cells));
    }
  }

  std::vector<CovectorCell> cells;
  for (const auto& [nb, nb_basis] : flats) {
    RatMat nbm = RatMat::from_rows(nb_basis, dim);
    std::vector<RatVec> fbasis = kernel_basis(nbm);
    std::vector<RatVec> sub;
    for (const RatVec& h : hs) {
      if (in_span(h, nb_basis)) continue;
      RatVec hk(fbasis.size());
      for (size_t j = 0; j < fbasis.size(); ++j) hk[j] = dot(fbasis[j], h);
      sub.push_back(primitive(hk, /*fix_sign=*/true));
    }
    std::sort(sub.begin(), sub.end(), RatVecLess{});
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());

    for (const RatVec& w : detail::region_witnesses(sub, fbasis.size())) {
      RatVec v(dim, Rat(0));
      for (size_t j = 0; j < fbasis.size(); ++j) v = vec_add(v, vec_scaled(fbasis[j], w[j]));
      CovectorCell cell;
      cell.rep = primitive(v);
      cell.signs.resize(generators.size());
      for (size_t i = 0; i < generators.size(); ++i)
        cell.signs[i] = sign_of(dot(cell.rep, generators[i]));
      cells.push_back(std::move(cell));
      if (cells.size() > caps.max_cells)
        throw CapabilityError("arrangement cell count exceeds cap " +
                              std::to_string(caps.max_cells));
    }
  }

  std::sort(cells.begin(), cells.end(),
            [](const CovectorCell& a, const CovectorCell& b) { return a.signs < b.signs; });
  for (size_t i = 1; i < cells.size(); ++i)
    if (cells[i].signs == cells[i - 1].signs)
      throw std::logic_error("enumerate_covector_cells: duplicate cell pattern");
  return cells;
}

}  // namespace crn
