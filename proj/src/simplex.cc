// Copyright 2026 The FTFP Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense tableau implementation of the two-phase primal simplex method.
//
// Structural columns come first, then one slack/surplus column per
// inequality row, then one artificial column per row that needs one. The
// last tableau row holds reduced costs; its last entry is -z.

#include <algorithm>
#include <cmath>
#include <vector>

#include "ftfp/errors.h"
#include "ftfp/linear_program.h"

namespace ftfp {
namespace {

enum class PivotResult { kOptimal, kUnbounded, kIterationLimit };

class Tableau {
 public:
  Tableau(int rows, int cols) : m_(rows), n_(cols), width_(cols + 1),
      data_(static_cast<size_t>(rows + 1) * (cols + 1), 0.0), basis_(rows, -1),
      barred_(cols, 0) {}

  double* row(int i) { return data_.data() + static_cast<size_t>(i) * width_; }
  const double* row(int i) const { return data_.data() + static_cast<size_t>(i) * width_; }
  double* objective() { return row(m_); }
  double& rhs(int i) { return row(i)[n_]; }

  int m() const { return m_; }
  int n() const { return n_; }
  std::vector<int>& basis() { return basis_; }
  std::vector<char>& barred() { return barred_; }

  void Pivot(int p, int q) {
    double* prow = row(p);
    const double inv = 1.0 / prow[q];
    nonzero_.clear();
    for (int k = 0; k < width_; ++k) {
      if (prow[k] != 0) {
        prow[k] *= inv;
        nonzero_.push_back(k);
      }
    }
    prow[q] = 1.0;
    for (int i = 0; i <= m_; ++i) {
      if (i == p) continue;
      double* r = row(i);
      const double f = r[q];
      if (f == 0) continue;
      for (int k : nonzero_) r[k] -= f * prow[k];
      r[q] = 0.0;
    }
    basis_[p] = q;
  }

  // Runs simplex iterations on the current objective row.
  PivotResult Run(const SimplexOptions& opt, long max_iterations, long* iterations) {
    int degenerate_run = 0;
    bool bland = false;
    double* obj = objective();
    while (true) {
      if (*iterations >= max_iterations) return PivotResult::kIterationLimit;
      int q = -1;
      double best = -opt.tol_optimality;
      for (int j = 0; j < n_; ++j) {
        if (barred_[j]) continue;
        if (obj[j] < best) {
          q = j;
          if (bland) break;
          best = obj[j];
        }
      }
      if (q < 0) return PivotResult::kOptimal;

      int p = -1;
      double best_ratio = 0, best_pivot = 0;
      for (int i = 0; i < m_; ++i) {
        const double a = row(i)[q];
        if (a <= opt.tol_pivot) continue;
        const double ratio = std::max(rhs(i), 0.0) / a;
        if (p < 0) {
          p = i, best_ratio = ratio, best_pivot = a;
          continue;
        }
        const double slack = 1e-12 * std::max(1.0, best_ratio);
        if (ratio < best_ratio - slack) {
          p = i, best_ratio = ratio, best_pivot = a;
        } else if (ratio <= best_ratio + slack) {
          const bool take = bland ? basis_[i] < basis_[p] : a > best_pivot;
          if (take) p = i, best_ratio = std::min(ratio, best_ratio), best_pivot = a;
        }
      }
      if (p < 0) return PivotResult::kUnbounded;

      if (best_ratio <= 1e-13) {
        if (++degenerate_run >= opt.degenerate_run_before_bland) bland = true;
      } else {
        degenerate_run = 0;
        bland = false;
      }
      Pivot(p, q);
      ++*iterations;
    }
  }

 private:
  int m_, n_, width_;
  std::vector<double> data_;
  std::vector<int> basis_;
  std::vector<char> barred_;
  std::vector<int> nonzero_;
};

// Sparse column of the transformed (shifted, sign-normalized) system, kept
// for the final basis refinement.
struct SparseColumn {
  std::vector<int> row;
  std::vector<double> value;
};

// Solves B z = rhs by Gaussian elimination with partial pivoting; B is dense
// row-major m x m. Returns false if B is numerically singular.
bool DenseSolve(std::vector<double> b_mat, std::vector<double>& rhs, int m) {
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i;
  auto at = [&](int i, int j) -> double& { return b_mat[static_cast<size_t>(i) * m + j]; };
  for (int k = 0; k < m; ++k) {
    int piv = k;
    double best = std::abs(at(k, k));
    for (int i = k + 1; i < m; ++i) {
      if (std::abs(at(i, k)) > best) best = std::abs(at(i, k)), piv = i;
    }
    if (best < 1e-14) return false;
    if (piv != k) {
      for (int j = 0; j < m; ++j) std::swap(at(k, j), at(piv, j));
      std::swap(rhs[k], rhs[piv]);
    }
    const double inv = 1.0 / at(k, k);
    for (int i = k + 1; i < m; ++i) {
      const double f = at(i, k) * inv;
      if (f == 0) continue;
      double* ri = &at(i, 0);
      const double* rk = &at(k, 0);
      for (int j = k; j < m; ++j) ri[j] -= f * rk[j];
      rhs[i] -= f * rhs[k];
    }
  }
  for (int k = m - 1; k >= 0; --k) {
    double s = rhs[k];
    for (int j = k + 1; j < m; ++j) s -= at(k, j) * rhs[j];
    rhs[k] = s / at(k, k);
  }
  return true;
}

}  // namespace

LpSolution SolveLp(const LinearProgram& lp, const SimplexOptions& opt) {
  lp.Validate();
  const int nv = lp.num_variables();
  const int m = lp.num_rows();

  // Structural columns: x_v = lb + x' for finite lb, x_v = x+ - x- if free.
  std::vector<int> first_col(nv);
  std::vector<int> col_var;
  std::vector<double> col_sign;
  for (int v = 0; v < nv; ++v) {
    first_col[v] = static_cast<int>(col_var.size());
    col_var.push_back(v);
    col_sign.push_back(1.0);
    if (!std::isfinite(lp.lower_bounds()[v])) {
      col_var.push_back(v);
      col_sign.push_back(-1.0);
    }
  }
  const int num_struct = static_cast<int>(col_var.size());

  // Normalize rows so rhs >= 0; a >= row with zero rhs becomes a <= row.
  std::vector<double> row_sign(m, 1.0), rhs(m);
  std::vector<Relation> rel(m);
  int num_slack = 0, num_art = 0;
  for (int r = 0; r < m; ++r) {
    const LpRow& row = lp.row(r);
    double b = row.rhs;
    for (size_t k = 0; k < row.index.size(); ++k) {
      const double lb = lp.lower_bounds()[row.index[k]];
      if (std::isfinite(lb)) b -= row.value[k] * lb;
    }
    Relation rl = row.relation;
    if (b < 0 || (b == 0 && rl == Relation::kGreaterEqual)) {
      row_sign[r] = -1.0;
      b = -b;
      if (rl == Relation::kLessEqual) rl = Relation::kGreaterEqual;
      else if (rl == Relation::kGreaterEqual) rl = Relation::kLessEqual;
    }
    rhs[r] = b;
    rel[r] = rl;
    if (rl != Relation::kEqual) ++num_slack;
    if (rl != Relation::kLessEqual) ++num_art;
  }
  const int num_cols = num_struct + num_slack + num_art;
  const int art_begin = num_struct + num_slack;

  Tableau t(m, num_cols);
  std::vector<SparseColumn> columns(num_cols);
  std::vector<int> initial_col(m);
  {
    int next_slack = num_struct, next_art = art_begin;
    for (int r = 0; r < m; ++r) {
      const LpRow& row = lp.row(r);
      double* tr = t.row(r);
      auto put = [&](int col, double value) {
        tr[col] += value;
        columns[col].row.push_back(r);
        columns[col].value.push_back(value);
      };
      for (size_t k = 0; k < row.index.size(); ++k) {
        const int v = row.index[k];
        const double a = row_sign[r] * row.value[k];
        put(first_col[v], a);
        if (!std::isfinite(lp.lower_bounds()[v])) put(first_col[v] + 1, -a);
      }
      if (rel[r] == Relation::kLessEqual) {
        put(next_slack, 1.0);
        initial_col[r] = next_slack++;
      } else {
        if (rel[r] == Relation::kGreaterEqual) put(next_slack++, -1.0);
        put(next_art, 1.0);
        initial_col[r] = next_art++;
      }
      t.rhs(r) = rhs[r];
      t.basis()[r] = initial_col[r];
    }
  }

  LpSolution sol;
  const long max_iter = opt.max_iterations > 0
                            ? opt.max_iterations
                            : std::max<long>(20000, 50L * (m + num_cols));

  // Phase 1: minimize the sum of artificials.
  if (num_art > 0) {
    double* obj = t.objective();
    double rhs_sum = 0;
    for (int r = 0; r < m; ++r) {
      if (t.basis()[r] < art_begin) continue;
      const double* tr = t.row(r);
      for (int j = 0; j < art_begin; ++j) obj[j] -= tr[j];
      obj[num_cols] -= tr[num_cols];
      rhs_sum += rhs[r];
    }
    const PivotResult res = t.Run(opt, max_iter, &sol.iterations);
    if (res == PivotResult::kIterationLimit) {
      sol.status = LpStatus::kStalled;
      return sol;
    }
    const double infeasibility = -obj[num_cols];
    if (infeasibility > opt.tol_feas * std::max(1.0, rhs_sum)) {
      sol.status = LpStatus::kInfeasible;
      return sol;
    }
    // Drive zero-valued artificials out of the basis where possible; rows
    // where that fails are redundant and keep a harmless artificial.
    for (int r = 0; r < m; ++r) {
      if (t.basis()[r] < art_begin) continue;
      const double* tr = t.row(r);
      int q = -1;
      double best = 1e-9;
      for (int j = 0; j < art_begin; ++j) {
        if (std::abs(tr[j]) > best) best = std::abs(tr[j]), q = j;
      }
      if (q >= 0) t.Pivot(r, q);
    }
    for (int j = art_begin; j < num_cols; ++j) t.barred()[j] = 1;
  }

  // Phase 2.
  std::vector<double> cost(num_cols, 0.0);
  const double sense = lp.sense() == Sense::kMinimize ? 1.0 : -1.0;
  for (int c = 0; c < num_struct; ++c) cost[c] = sense * col_sign[c] * lp.objective()[col_var[c]];
  {
    double* obj = t.objective();
    std::fill(obj, obj + num_cols + 1, 0.0);
    for (int j = 0; j < num_cols; ++j) obj[j] = cost[j];
    for (int r = 0; r < m; ++r) {
      const double cb = cost[t.basis()[r]];
      if (cb == 0) continue;
      const double* tr = t.row(r);
      for (int j = 0; j <= num_cols; ++j) obj[j] -= cb * tr[j];
    }
  }
  const PivotResult res = t.Run(opt, max_iter, &sol.iterations);
  if (res == PivotResult::kIterationLimit) {
    sol.status = LpStatus::kStalled;
    return sol;
  }
  if (res == PivotResult::kUnbounded) {
    sol.status = LpStatus::kUnbounded;
    return sol;
  }

  auto recover = [&](const std::vector<double>& col_value) {
    std::vector<double> x(nv, 0.0);
    for (int v = 0; v < nv; ++v) {
      const double lb = lp.lower_bounds()[v];
      x[v] = std::isfinite(lb) ? lb : 0.0;
    }
    for (int c = 0; c < num_struct; ++c) x[col_var[c]] += col_sign[c] * col_value[c];
    return x;
  };

  std::vector<double> col_value(num_cols, 0.0);
  for (int r = 0; r < m; ++r) col_value[t.basis()[r]] = std::max(0.0, t.rhs(r));
  std::vector<double> x = recover(col_value);
  std::vector<double> y_transformed(m);
  for (int r = 0; r < m; ++r) y_transformed[r] = -t.objective()[initial_col[r]];
  double residual = MaxPrimalResidual(lp, x);

  if (residual > opt.tol_feas && m > 0) {
    // Recompute the basic solution and the duals from the original data.
    std::vector<double> b_mat(static_cast<size_t>(m) * m, 0.0);
    std::vector<double> bt_mat(static_cast<size_t>(m) * m, 0.0);
    for (int k = 0; k < m; ++k) {
      const SparseColumn& col = columns[t.basis()[k]];
      for (size_t e = 0; e < col.row.size(); ++e) {
        b_mat[static_cast<size_t>(col.row[e]) * m + k] = col.value[e];
        bt_mat[static_cast<size_t>(k) * m + col.row[e]] = col.value[e];
      }
    }
    std::vector<double> xb = rhs;
    std::vector<double> cb(m);
    for (int k = 0; k < m; ++k) cb[k] = cost[t.basis()[k]];
    if (DenseSolve(std::move(b_mat), xb, m) && DenseSolve(std::move(bt_mat), cb, m)) {
      std::fill(col_value.begin(), col_value.end(), 0.0);
      for (int k = 0; k < m; ++k) col_value[t.basis()[k]] = std::max(0.0, xb[k]);
      std::vector<double> refined = recover(col_value);
      const double refined_residual = MaxPrimalResidual(lp, refined);
      if (refined_residual < residual) {
        x = std::move(refined);
        residual = refined_residual;
        y_transformed = cb;
      }
    }
  }

  sol.max_primal_residual = residual;
  if (residual > opt.tol_feas) {
    sol.status = LpStatus::kStalled;
    return sol;
  }
  sol.values = std::move(x);
  sol.objective = lp.Evaluate(sol.values);
  sol.duals.resize(m);
  for (int r = 0; r < m; ++r) sol.duals[r] = sense * row_sign[r] * y_transformed[r];
  sol.status = LpStatus::kOptimal;
  return sol;
}

}  // namespace ftfp
