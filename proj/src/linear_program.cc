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

#include "ftfp/linear_program.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "ftfp/errors.h"
#include "ftfp/instance_io.h"

namespace ftfp {

int LinearProgram::AddVariable(double objective, double lower_bound) {
  objective_.push_back(objective);
  lower_.push_back(lower_bound);
  return num_variables() - 1;
}

int LinearProgram::AddRow(const std::vector<std::pair<int, double>>& terms,
                          Relation relation, double rhs) {
  std::map<int, double> merged;
  for (const auto& [var, coef] : terms) merged[var] += coef;
  LpRow row;
  row.relation = relation;
  row.rhs = rhs;
  for (const auto& [var, coef] : merged) {
    if (coef == 0) continue;
    row.index.push_back(var);
    row.value.push_back(coef);
  }
  rows_.push_back(std::move(row));
  return num_rows() - 1;
}

long LinearProgram::num_nonzeros() const {
  long nnz = 0;
  for (const auto& row : rows_) nnz += static_cast<long>(row.index.size());
  return nnz;
}

void LinearProgram::Validate() const {
  for (int v = 0; v < num_variables(); ++v) {
    if (!std::isfinite(objective_[v])) throw InputError("non-finite objective coefficient");
    if (std::isnan(lower_[v]) || lower_[v] == std::numeric_limits<double>::infinity()) {
      throw InputError("invalid lower bound");
    }
  }
  for (const auto& row : rows_) {
    if (row.index.size() != row.value.size()) throw InputError("malformed row");
    if (!std::isfinite(row.rhs)) throw InputError("non-finite right-hand side");
    for (size_t k = 0; k < row.index.size(); ++k) {
      if (row.index[k] < 0 || row.index[k] >= num_variables()) {
        throw InputError("row references unknown variable");
      }
      if (!std::isfinite(row.value[k])) throw InputError("non-finite row coefficient");
    }
  }
}

std::string LinearProgram::DebugString() const {
  std::ostringstream out;
  auto terms = [&](const std::vector<int>& idx, const std::vector<double>& val) {
    if (idx.empty()) out << "0";
    for (size_t k = 0; k < idx.size(); ++k) {
      if (k > 0) out << " + ";
      out << FormatReal(val[k]) << " x" << idx[k];
    }
  };
  std::vector<int> idx;
  std::vector<double> val;
  for (int v = 0; v < num_variables(); ++v) {
    if (objective_[v] != 0) {
      idx.push_back(v);
      val.push_back(objective_[v]);
    }
  }
  out << (sense_ == Sense::kMinimize ? "min: " : "max: ");
  terms(idx, val);
  out << "\n";
  for (int r = 0; r < num_rows(); ++r) {
    out << "r" << r << ": ";
    terms(rows_[r].index, rows_[r].value);
    switch (rows_[r].relation) {
      case Relation::kLessEqual: out << " <= "; break;
      case Relation::kGreaterEqual: out << " >= "; break;
      case Relation::kEqual: out << " = "; break;
    }
    out << FormatReal(rows_[r].rhs) << "\n";
  }
  for (int v = 0; v < num_variables(); ++v) {
    if (lower_[v] != 0) out << "x" << v << " >= " << FormatReal(lower_[v]) << "\n";
  }
  return out.str();
}

double LinearProgram::Evaluate(const std::vector<double>& x) const {
  double z = 0;
  for (int v = 0; v < num_variables(); ++v) z += objective_[v] * x[v];
  return z;
}

double LinearProgram::RowActivity(int r, const std::vector<double>& x) const {
  const LpRow& row = rows_[r];
  double s = 0;
  for (size_t k = 0; k < row.index.size(); ++k) s += row.value[k] * x[row.index[k]];
  return s;
}

double MaxPrimalResidual(const LinearProgram& lp, const std::vector<double>& x) {
  double worst = 0;
  for (int r = 0; r < lp.num_rows(); ++r) {
    const LpRow& row = lp.row(r);
    double activity = 0, scale = std::max(1.0, std::abs(row.rhs));
    for (size_t k = 0; k < row.index.size(); ++k) {
      const double t = row.value[k] * x[row.index[k]];
      activity += t;
      scale = std::max(scale, std::abs(t));
    }
    double viol = 0;
    switch (row.relation) {
      case Relation::kLessEqual: viol = activity - row.rhs; break;
      case Relation::kGreaterEqual: viol = row.rhs - activity; break;
      case Relation::kEqual: viol = std::abs(activity - row.rhs); break;
    }
    worst = std::max(worst, viol / scale);
  }
  for (int v = 0; v < lp.num_variables(); ++v) {
    const double lb = lp.lower_bounds()[v];
    if (std::isfinite(lb)) worst = std::max(worst, (lb - x[v]) / std::max(1.0, std::abs(lb)));
  }
  return worst;
}

const char* LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
    case LpStatus::kStalled: return "stalled";
  }
  return "unknown";
}

}  // namespace ftfp
