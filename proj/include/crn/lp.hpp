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
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "crn/linalg.hpp"
#include "crn/rational.hpp"

namespace crn {

/// Equality-form feasibility problem
///
///   A x = b,   x_i >= 0 for i in nonneg,   x_i > 0 for i in strict,
///
/// with strict a subset of nonneg and every other variable free.
struct LpProblem {
  RatMat a;
  RatVec b;
  std::vector<size_t> nonneg;
  std::vector<size_t> strict;

  LpProblem(RatMat a_, RatVec b_, std::vector<size_t> nonneg_, std::vector<size_t> strict_)
      : a(std::move(a_)), b(std::move(b_)), nonneg(std::move(nonneg_)), strict(std::move(strict_)) {
    if (a.rows != b.size()) throw std::invalid_argument("LpProblem: A rows != b size");
    std::sort(nonneg.begin(), nonneg.end());
    std::sort(strict.begin(), strict.end());
    std::vector<char> nn(a.cols, 0);
    for (size_t i : nonneg) {
      if (i >= a.cols) throw std::invalid_argument("LpProblem: nonneg index out of range");
      nn[i] = 1;
    }
    for (size_t i : strict) {
      if (i >= a.cols || !nn[i])
        throw std::invalid_argument("LpProblem: strict must be a subset of nonneg");
    }
  }

  size_t num_vars() const { return a.cols; }

  std::vector<char> nonneg_mask() const {
    std::vector<char> m(a.cols, 0);
    for (size_t i : nonneg) m[i] = 1;
    return m;
  }
  std::vector<char> strict_mask() const {
    std::vector<char> m(a.cols, 0);
    for (size_t i : strict) m[i] = 1;
    return m;
  }
};

/// Either an exact feasible point or an exact infeasibility witness.
///
/// A Separator w certifies emptiness through the sign pattern of w^T A:
///   w . A_j = 0 on free columns, w . A_j <= 0 on nonneg columns,
///   w . b >= 0, and (w . b > 0  or  w . A_j < 0 for some strict j).
/// Any feasible x would force 0 >= sum_j (w.A_j) x_j = w.b >= 0 with every
/// term vanishing, contradicting the final clause.
struct FeasibilityCertificate {
  enum class Kind { Solution, Separator };
  Kind kind;
  std::optional<RatVec> solution;
  std::optional<RatVec> separator;

  static FeasibilityCertificate make_solution(RatVec x) {
    return {Kind::Solution, std::move(x), std::nullopt};
  }
  static FeasibilityCertificate make_separator(RatVec w) {
    return {Kind::Separator, std::nullopt, std::move(w)};
  }
  bool is_solution() const { return kind == Kind::Solution; }
};

inline bool verify_solution(const LpProblem& p, const RatVec& x) {
  if (x.size() != p.num_vars()) return false;
  if (p.a.mul(x) != p.b) return false;
  for (size_t i : p.nonneg)
    if (x[i] < 0) return false;
  for (size_t i : p.strict)
    if (x[i] <= 0) return false;
  return true;
}

inline bool verify_separator(const LpProblem& p, const RatVec& w) {
  if (w.size() != p.b.size()) return false;
  std::vector<char> nn = p.nonneg_mask();
  RatVec g(p.num_vars(), Rat(0));
  for (size_t j = 0; j < p.num_vars(); ++j) {
    Rat s = 0;
    for (size_t r = 0; r < p.a.rows; ++r) s += w[r] * p.a.at(r, j);
    g[j] = s;
    if (nn[j]) {
      if (s > 0) return false;
    } else {
      if (s != 0) return false;
    }
  }
  Rat wb = dot(w, p.b);
  if (wb < 0) return false;
  if (wb > 0) return true;
  for (size_t j : p.strict)
    if (g[j] < 0) return true;
  return false;
}

namespace detail {

/// Two-phase exact primal simplex with Bland's rule on
///   max c.z  s.t.  M z = d, z >= 0.
/// The objective must be bounded (callers cap it); unboundedness raises.
/// On infeasibility, `y` is a Farkas witness: y.M_j <= 0 for all j, y.d > 0.
/// On optimality, `y` holds the equality multipliers (exact dual solution).
struct SimplexResult {
  bool feasible;
  RatVec x;       // structural values when feasible
  Rat objective;  // c.x when feasible
  RatVec y;       // Farkas witness or dual multipliers, in original row order
};

class SimplexTableau {
 public:
  SimplexTableau(const RatMat& m, const RatVec& d, const RatVec& c)
      : ns_(m.cols), c2_(c) {
    if (d.size() != m.rows || c.size() != m.cols)
      throw std::invalid_argument("simplex: dimension mismatch");
    for (size_t r = 0; r < m.rows; ++r) {
      Row row;
      row.orig = r;
      row.flip = d[r] < 0 ? -1 : 1;
      row.t.resize(ns_ + m.rows + 1, Rat(0));
      for (size_t j = 0; j < ns_; ++j) row.t[j] = Rat(row.flip) * m.at(r, j);
      row.t[ns_ + r] = 1;
      row.t[ns_ + m.rows] = Rat(row.flip) * d[r];
      row.basis = ns_ + r;
      rows_.push_back(std::move(row));
    }
    ncols_ = ns_ + m.rows;
    norig_ = m.rows;
  }

  SimplexResult solve() {
    // Phase 1: drive the artificial variables to zero.
    RatVec cost(ncols_, Rat(0));
    for (size_t j = ns_; j < ncols_; ++j) cost[j] = -1;
    load_objective(cost);
    run(/*allow_artificial_entering=*/false);
    if (obj_val_ < 0) {
      SimplexResult res;
      res.feasible = false;
      res.y.assign(norig_, Rat(0));
      // Reduced cost of artificial i is -1 - y_i, so y_i = -1 - r_i; the
      // Farkas witness is -y mapped back through the row sign flips.
      for (const Row& row : rows_) {
        Rat yi = Rat(-1) - obj_row_[ns_ + row.orig];
        res.y[row.orig] = Rat(row.flip) * (-yi);
      }
      return res;
    }
    drive_out_artificials();

    // Phase 2: optimize the real objective.
    RatVec cost2(ncols_, Rat(0));
    for (size_t j = 0; j < ns_; ++j) cost2[j] = c2_[j];
    load_objective(cost2);
    run(/*allow_artificial_entering=*/false);

    SimplexResult res;
    res.feasible = true;
    res.x.assign(ns_, Rat(0));
    for (const Row& row : rows_)
      if (row.basis < ns_) res.x[row.basis] = row.t[ncols_];
    res.objective = obj_val_;
    res.y.assign(norig_, Rat(0));
    for (const Row& row : rows_) {
      Rat yi = -obj_row_[ns_ + row.orig];  // artificial cost is 0 in phase 2
      res.y[row.orig] = Rat(row.flip) * yi;
    }
    return res;
  }

 private:
  struct Row {
    std::vector<Rat> t;  // ncols_ tableau entries then rhs
    size_t basis = 0;
    size_t orig = 0;
    int flip = 1;
  };

  void load_objective(const RatVec& cost) {
    cost_ = cost;
    obj_row_ = cost;
    obj_val_ = 0;
    for (const Row& row : rows_) {
      Rat cb = cost_[row.basis];
      if (cb == 0) continue;
      for (size_t j = 0; j < ncols_; ++j) obj_row_[j] -= cb * row.t[j];
      obj_val_ += cb * row.t[ncols_];
    }
  }

  void run(bool allow_artificial_entering) {
    size_t guard = 0;
    const size_t max_pivots = 200000;
    for (;;) {
      size_t enter = ncols_;
      size_t limit = allow_artificial_entering ? ncols_ : ns_;
      for (size_t j = 0; j < limit; ++j) {
        if (obj_row_[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter == ncols_) return;
      size_t leave = rows_.size();
      Rat best_ratio = 0;
      for (size_t i = 0; i < rows_.size(); ++i) {
        const Rat& piv = rows_[i].t[enter];
        if (piv <= 0) continue;
        Rat ratio = rows_[i].t[ncols_] / piv;
        if (leave == rows_.size() || ratio < best_ratio ||
            (ratio == best_ratio && rows_[i].basis < rows_[leave].basis)) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows_.size())
        throw std::logic_error("simplex: unbounded objective (caller must cap)");
      pivot(leave, enter);
      if (++guard > max_pivots) throw std::logic_error("simplex: pivot limit exceeded");
    }
  }

  void pivot(size_t pr, size_t pc) {
    Row& prow = rows_[pr];
    Rat inv = Rat(1) / prow.t[pc];
    for (size_t j = 0; j <= ncols_; ++j)
      if (prow.t[j] != 0) prow.t[j] *= inv;
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (i == pr) continue;
      Rat f = rows_[i].t[pc];
      if (f == 0) continue;
      for (size_t j = 0; j <= ncols_; ++j)
        if (prow.t[j] != 0) rows_[i].t[j] -= f * prow.t[j];
    }
    Rat f = obj_row_[pc];
    if (f != 0) {
      for (size_t j = 0; j < ncols_; ++j)
        if (prow.t[j] != 0) obj_row_[j] -= f * prow.t[j];
      obj_val_ += f * prow.t[ncols_];
    }
    prow.basis = pc;
  }

  // After a zero-cost phase 1, pivot basic artificials out on any structural
  // column; rows that cannot be pivoted are redundant and get dropped (their
  // multiplier is reported as zero).
  void drive_out_artificials() {
    for (size_t i = 0; i < rows_.size();) {
      if (rows_[i].basis < ns_) {
        ++i;
        continue;
      }
      size_t col = ns_;
      for (size_t j = 0; j < ns_; ++j) {
        if (rows_[i].t[j] != 0) {
          col = j;
          break;
        }
      }
      if (col < ns_) {
        pivot(i, col);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  size_t ns_;
  size_t ncols_ = 0;
  size_t norig_ = 0;
  RatVec c2_;
  std::vector<Row> rows_;
  RatVec cost_;
  RatVec obj_row_;
  Rat obj_val_ = 0;
};

inline SimplexResult solve_standard(const RatMat& m, const RatVec& d, const RatVec& c) {
  SimplexTableau tab(m, d, c);
  return tab.solve();
}

}  // namespace detail

/// Decides the mixed strict/non-strict system exactly.
///
/// Strict positivity is handled by lifting with one shared slack t:
/// maximize t subject to x_i >= t for strict i and t <= 1; the system has a
/// strict solution iff the optimum is positive. Certificates are re-verified
/// before being returned; a verification failure is an engine bug.
inline FeasibilityCertificate lp_feasible(const LpProblem& p) {
  const size_t n = p.num_vars();
  const size_t m = p.a.rows;
  std::vector<char> nn = p.nonneg_mask();
  const size_t nstrict = p.strict.size();

  // Column layout: nonneg vars one column, free vars split into (pos, neg),
  // then t, per-strict slacks, and the cap slack.
  std::vector<size_t> col_of(n), neg_col_of(n, SIZE_MAX);
  size_t nc = 0;
  for (size_t j = 0; j < n; ++j) {
    col_of[j] = nc++;
    if (!nn[j]) neg_col_of[j] = nc++;
  }
  size_t t_col = SIZE_MAX, first_slack = SIZE_MAX, cap_col = SIZE_MAX;
  if (nstrict > 0) {
    t_col = nc++;
    first_slack = nc;
    nc += nstrict;
    cap_col = nc++;
  }
  size_t nrows = m + (nstrict > 0 ? nstrict + 1 : 0);

  RatMat big(nrows, nc);
  RatVec d(nrows, Rat(0));
  for (size_t r = 0; r < m; ++r) {
    for (size_t j = 0; j < n; ++j) {
      const Rat& v = p.a.at(r, j);
      if (v == 0) continue;
      big.at(r, col_of[j]) = v;
      if (neg_col_of[j] != SIZE_MAX) big.at(r, neg_col_of[j]) = -v;
    }
    d[r] = p.b[r];
  }
  for (size_t s = 0; s < nstrict; ++s) {
    size_t r = m + s;
    big.at(r, col_of[p.strict[s]]) = 1;
    big.at(r, t_col) = -1;
    big.at(r, first_slack + s) = -1;
  }
  if (nstrict > 0) {
    big.at(m + nstrict, t_col) = 1;
    big.at(m + nstrict, cap_col) = 1;
    d[m + nstrict] = 1;
  }
  RatVec cost(nc, Rat(0));
  if (nstrict > 0) cost[t_col] = 1;

  detail::SimplexResult res = detail::solve_standard(big, d, cost);

  auto recover = [&](const RatVec& z) {
    RatVec x(n, Rat(0));
    for (size_t j = 0; j < n; ++j) {
      x[j] = z[col_of[j]];
      if (neg_col_of[j] != SIZE_MAX) x[j] -= z[neg_col_of[j]];
    }
    return x;
  };
  auto head = [&](const RatVec& y) { return RatVec(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(m)); };

  if (!res.feasible) {
    RatVec w = head(res.y);
    if (!verify_separator(p, w)) throw std::logic_error("lp_feasible: separator failed verification");
    return FeasibilityCertificate::make_separator(std::move(w));
  }
  if (nstrict == 0 || res.objective > 0) {
    RatVec x = recover(res.x);
    if (!verify_solution(p, x)) throw std::logic_error("lp_feasible: solution failed verification");
    return FeasibilityCertificate::make_solution(std::move(x));
  }
  // Optimum t = 0: no strict solution. The negated dual multipliers of the
  // equality rows certify it (Motzkin-type alternative).
  RatVec w(m);
  for (size_t r = 0; r < m; ++r) w[r] = -res.y[r];
  if (!verify_separator(p, w)) throw std::logic_error("lp_feasible: strict separator failed verification");
  return FeasibilityCertificate::make_separator(std::move(w));
}

// ---- Stiemke's alternative ----

/// Verifies lambda > 0 with sum_i lambda_i v_i = 0.
inline bool verify_stiemke_solution(const std::vector<RatVec>& vs, const RatVec& lambda) {
  if (vs.empty() || lambda.size() != vs.size()) return false;
  RatVec s(vs[0].size(), Rat(0));
  for (size_t i = 0; i < vs.size(); ++i) {
    if (lambda[i] <= 0) return false;
    s = vec_add(s, vec_scaled(vs[i], lambda[i]));
  }
  return is_zero_vec(s);
}

/// Verifies w.v_i <= 0 for all i with strict inequality somewhere.
inline bool verify_stiemke_separator(const std::vector<RatVec>& vs, const RatVec& w) {
  bool some_strict = false;
  for (const RatVec& v : vs) {
    Rat s = dot(w, v);
    if (s > 0) return false;
    if (s < 0) some_strict = true;
  }
  return !vs.empty() && some_strict;
}

/// Exactly one branch of Stiemke's alternative for v_1..v_k:
/// either lambda > 0 with sum lambda_i v_i = 0 (Solution) or w with
/// w.v_i <= 0 for all i and < 0 somewhere (Separator).
///
/// Both branches are scale-free, so each reduces to a plain feasibility
/// problem: lambda > 0 normalizes to lambda >= 1 (u = lambda - 1 >= 0), and
/// the separator normalizes to sum_i w.v_i = -1.
inline FeasibilityCertificate stiemke_alternative(const std::vector<RatVec>& vs) {
  if (vs.empty()) throw std::invalid_argument("stiemke_alternative: empty input");
  const size_t dim = vs[0].size();
  for (const RatVec& v : vs)
    if (v.size() != dim) throw std::invalid_argument("stiemke_alternative: mixed dimensions");
  const size_t k = vs.size();

  // Branch I: V u = -V 1, u >= 0.
  RatMat a(dim, k);
  RatVec b(dim, Rat(0));
  for (size_t i = 0; i < k; ++i)
    for (size_t r = 0; r < dim; ++r) {
      a.at(r, i) = vs[i][r];
      b[r] -= vs[i][r];
    }
  std::vector<size_t> all(k);
  for (size_t i = 0; i < k; ++i) all[i] = i;
  FeasibilityCertificate primal = lp_feasible(LpProblem(a, b, all, {}));
  if (primal.is_solution()) {
    RatVec lambda(k);
    for (size_t i = 0; i < k; ++i) lambda[i] = (*primal.solution)[i] + 1;
    if (!verify_stiemke_solution(vs, lambda))
      throw std::logic_error("stiemke_alternative: solution failed verification");
    return FeasibilityCertificate::make_solution(std::move(lambda));
  }

  // Branch II: v_i.w + s_i = 0, s >= 0, sum s_i = 1; w free.
  RatMat a2(k + 1, dim + k);
  RatVec b2(k + 1, Rat(0));
  for (size_t i = 0; i < k; ++i) {
    for (size_t c = 0; c < dim; ++c) a2.at(i, c) = vs[i][c];
    a2.at(i, dim + i) = 1;
    a2.at(k, dim + i) = 1;
  }
  b2[k] = 1;
  std::vector<size_t> nn2(k);
  for (size_t i = 0; i < k; ++i) nn2[i] = dim + i;
  FeasibilityCertificate dual = lp_feasible(LpProblem(a2, b2, nn2, {}));
  if (!dual.is_solution())
    throw std::logic_error("stiemke_alternative: both branches infeasible");
  RatVec w(dim);
  for (size_t c = 0; c < dim; ++c) w[c] = (*dual.solution)[c];
  if (!verify_stiemke_separator(vs, w))
    throw std::logic_error("stiemke_alternative: separator failed verification");
  return FeasibilityCertificate::make_separator(std::move(w));
}

}  // namespace crn
