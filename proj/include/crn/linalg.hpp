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

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "crn/rational.hpp"

namespace crn {

/// Dense row-major rational matrix. Everything here is exact Gaussian
/// elimination; no pivd thresholds, no scaling heuristics.
struct RatMat {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<Rat> a;

  RatMat() = default;
  RatMat(size_t r, size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}

  Rat& at(size_t r, size_t c) { return a[r * cols + c]; }
  const Rat& at(size_t r, size_t c) const { return a[r * cols + c]; }

  RatVec row(size_t r) const {
    RatVec v(cols);
    for (size_t c = 0; c < cols; ++c) v[c] = at(r, c);
    return v;
  }

  static RatMat from_rows(const std::vector<RatVec>& rows_in, size_t ncols) {
    RatMat m(rows_in.size(), ncols);
    for (size_t r = 0; r < rows_in.size(); ++r) {
      if (rows_in[r].size() != ncols) throw std::invalid_argument("from_rows: ragged input");
      for (size_t c = 0; c < ncols; ++c) m.at(r, c) = rows_in[r][c];
    }
    return m;
  }

  static RatMat from_columns(const std::vector<RatVec>& cols_in, size_t nrows) {
    RatMat m(nrows, cols_in.size());
    for (size_t c = 0; c < cols_in.size(); ++c) {
      if (cols_in[c].size() != nrows) throw std::invalid_argument("from_columns: ragged input");
      for (size_t r = 0; r < nrows; ++r) m.at(r, c) = cols_in[c][r];
    }
    return m;
  }

  RatVec mul(const RatVec& x) const {
    if (x.size() != cols) throw std::invalid_argument("mul: dimension mismatch");
    RatVec y(rows, Rat(0));
    for (size_t r = 0; r < rows; ++r)
      for (size_t c = 0; c < cols; ++c)
        if (at(r, c) != 0) y[r] += at(r, c) * x[c];
    return y;
  }
};

/// In-place reduced row echelon form. Returns the pivot columns in order.
/// Pivot choice is the first nonzero entry, so the result is canonical for a
/// given row ordering.
inline std::vector<size_t> rref(RatMat& m) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
    size_t sel = r;
    while (sel < m.rows && m.at(sel, c) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != r)
      for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
    Rat inv = Rat(1) / m.at(r, c);
    for (size_t j = c; j < m.cols; ++j) m.at(r, j) *= inv;
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline size_t rank(const RatMat& m) {
  RatMat copy = m;
  return rref(copy).size();
}

/// Exact basis of the right null space {x : m x = 0}; empty when trivial.
/// One basis vector per free column, in ascending column order, scaled to
/// integer primitive form.
inline std::vector<RatVec> kernel_basis(const RatMat& m) {
  RatMat r = m;
  std::vector<size_t> pivots = rref(r);
  std::vector<char> is_pivot(m.cols, 0);
  for (size_t c : pivots) is_pivot[c] = 1;
  std::vector<RatVec> basis;
  for (size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec x(m.cols, Rat(0));
    x[f] = 1;
    for (size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = -r.at(pr, f);
    basis.push_back(primitive(x));
  }
  return basis;
}

/// Canonical basis (RREF rows) of span{vecs} in Q^dim. Two collections span
/// the same subspace iff their span_basis results are identical.
inline std::vector<RatVec> span_basis(const std::vector<RatVec>& vecs, size_t dim) {
  RatMat m = RatMat::from_rows(vecs, dim);
  std::vector<size_t> pivots = rref(m);
  std::vector<RatVec> basis;
  for (size_t r = 0; r < pivots.size(); ++r) basis.push_back(m.row(r));
  return basis;
}

/// Membership test against a basis in RREF row form.
inline bool in_span(const RatVec& v, const std::vector<RatVec>& rref_basis) {
  RatVec w = v;
  for (const RatVec& b : rref_basis) {
    size_t lead = 0;
    while (lead < b.size() && b[lead] == 0) ++lead;
    if (lead == b.size()) continue;
    if (w[lead] == 0) continue;
    Rat f = w[lead];  // basis rows have unit leading entries
    for (size_t i = 0; i < w.size(); ++i) w[i] -= f * b[i];
  }
  return is_zero_vec(w);
}

inline bool subspaces_equal(const std::vector<RatVec>& rref_a, const std::vector<RatVec>& rref_b) {
  return rref_a == rref_b;
}

}  // namespace crn
