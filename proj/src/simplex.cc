// Copyright 2026 The Contract Menus Authors
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

#include "contracts/simplex.h"

#include <stdexcept>
#include <utility>

namespace contracts {

int LinearProgram::AddVariable(const Rational& cost, bool is_free) {
  objective.push_back(cost);
  free.push_back(is_free);
  for (Constraint& c : constraints) c.row.emplace_back();
  return num_variables() - 1;
}

void LinearProgram::AddConstraint(std::vector<Rational> row, Relation relation,
                                  const Rational& rhs) {
  if (static_cast<int>(row.size()) != num_variables()) {
    throw std::invalid_argument("constraint row length does not match variables");
  }
  constraints.push_back(Constraint{std::move(row), relation, rhs});
}

std::string ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

namespace {

constexpr int kDegenerateRunBeforeBland = 50;

// Dense tableau in standard form: rows T x = rhs, x >= 0, with an explicit
// basis. `reduced` holds c_j - c_B B^-1 A_j for the current phase costs.
class Tableau {
 public:
  Tableau(int rows, int cols)
      : t_(rows, std::vector<mpq_class>(cols)), rhs_(rows), basis_(rows, -1),
        reduced_(cols) {}

  int rows() const { return static_cast<int>(t_.size()); }
  int cols() const { return static_cast<int>(reduced_.size()); }
  mpq_class& at(int i, int j) { return t_[i][j]; }
  mpq_class& rhs(int i) { return rhs_[i]; }
  int& basis(int i) { return basis_[i]; }
  const mpq_class& reduced(int j) const { return reduced_[j]; }
  const mpq_class& value() const { return value_; }
  int64_t pivots() const { return pivots_; }

  void Price(const std::vector<mpq_class>& costs) {
    value_ = 0;
    for (int j = 0; j < cols(); ++j) reduced_[j] = costs[j];
    for (int i = 0; i < rows(); ++i) {
      const mpq_class& cb = costs[basis_[i]];
      if (sgn(cb) == 0) continue;
      value_ += cb * rhs_[i];
      for (int j = 0; j < cols(); ++j) {
        if (sgn(t_[i][j]) != 0) reduced_[j] -= cb * t_[i][j];
      }
    }
  }

  void Pivot(int r, int s) {
    std::vector<mpq_class>& prow = t_[r];
    const mpq_class inv = 1 / prow[s];
    std::vector<int> nz;
    for (int j = 0; j < cols(); ++j) {
      if (sgn(prow[j]) != 0) {
        prow[j] *= inv;
        nz.push_back(j);
      }
    }
    rhs_[r] *= inv;
    mpq_class tmp;
    for (int i = 0; i < rows(); ++i) {
      if (i == r) continue;
      std::vector<mpq_class>& row = t_[i];
      if (sgn(row[s]) == 0) continue;
      const mpq_class f = row[s];
      for (int j : nz) {
        mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), prow[j].get_mpq_t());
        mpq_sub(row[j].get_mpq_t(), row[j].get_mpq_t(), tmp.get_mpq_t());
      }
      mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), rhs_[r].get_mpq_t());
      mpq_sub(rhs_[i].get_mpq_t(), rhs_[i].get_mpq_t(), tmp.get_mpq_t());
    }
    if (sgn(reduced_[s]) != 0) {
      const mpq_class f = reduced_[s];
      for (int j : nz) {
        mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), prow[j].get_mpq_t());
        mpq_sub(reduced_[j].get_mpq_t(), reduced_[j].get_mpq_t(),
                tmp.get_mpq_t());
      }
      value_ += f * rhs_[r];
    }
    basis_[r] = s;
    ++pivots_;
  }

  // Runs primal simplex on the priced tableau over columns with allowed[j].
  // Returns false when unbounded.
  bool Optimize(const std::vector<bool>& allowed) {
    bool bland = false;
    int degenerate_run = 0;
    while (true) {
      int s = -1;
      for (int j = 0; j < cols(); ++j) {
        if (!allowed[j] || sgn(reduced_[j]) <= 0) continue;
        if (s < 0) {
          s = j;
          if (bland) break;
        } else if (reduced_[j] > reduced_[s]) {
          s = j;
        }
      }
      if (s < 0) return true;

      int r = -1;
      mpq_class best;
      for (int i = 0; i < rows(); ++i) {
        if (sgn(t_[i][s]) <= 0) continue;
        mpq_class ratio = rhs_[i] / t_[i][s];
        if (r < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[r])) {
          r = i;
          best = std::move(ratio);
        }
      }
      if (r < 0) return false;

      if (sgn(best) == 0) {
        if (++degenerate_run >= kDegenerateRunBeforeBland) bland = true;
      } else {
        degenerate_run = 0;
      }
      Pivot(r, s);
    }
  }

 private:
  std::vector<std::vector<mpq_class>> t_;
  std::vector<mpq_class> rhs_;
  std::vector<int> basis_;
  std::vector<mpq_class> reduced_;
  mpq_class value_;
  int64_t pivots_ = 0;
};

bool AllZero(const std::vector<Rational>& row) {
  for (const Rational& v : row) {
    if (!v.is_zero()) return false;
  }
  return true;
}

bool ZeroRowHolds(Relation rel, const Rational& rhs) {
  switch (rel) {
    case Relation::kLessEqual:
      return rhs.sign() >= 0;
    case Relation::kEqual:
      return rhs.is_zero();
    case Relation::kGreaterEqual:
      return rhs.sign() <= 0;
  }
  return false;
}

}  // namespace

LpOutcome Solve(const LinearProgram& lp) {
  const int n = lp.num_variables();
  if (static_cast<int>(lp.free.size()) != n) {
    throw std::invalid_argument("free flags do not match variables");
  }
  for (const Constraint& c : lp.constraints) {
    if (static_cast<int>(c.row.size()) != n) {
      throw std::invalid_argument("constraint row length does not match variables");
    }
  }

  LpOutcome out;

  // Structural columns: one per variable plus a negative part per free one.
  std::vector<int> neg_col(n, -1);
  int cols = n;
  for (int j = 0; j < n; ++j) {
    if (lp.free[j]) neg_col[j] = cols++;
  }

  // Kept rows with rhs made nonnegative; sign records the flip.
  struct Row {
    int source;
    int sign;
    Relation rel;
  };
  std::vector<Row> kept;
  for (int k = 0; k < lp.num_constraints(); ++k) {
    const Constraint& c = lp.constraints[k];
    if (AllZero(c.row)) {
      if (!ZeroRowHolds(c.relation, c.rhs)) return out;  // infeasible
      continue;
    }
    Relation rel = c.relation;
    int sign = 1;
    if (c.rhs.sign() < 0) {
      sign = -1;
      if (rel == Relation::kLessEqual) {
        rel = Relation::kGreaterEqual;
      } else if (rel == Relation::kGreaterEqual) {
        rel = Relation::kLessEqual;
      }
    }
    kept.push_back(Row{k, sign, rel});
  }
  const int m = static_cast<int>(kept.size());

  std::vector<int> aux_col(m, -1);
  for (int i = 0; i < m; ++i) {
    if (kept[i].rel != Relation::kEqual) aux_col[i] = cols++;
  }
  std::vector<int> id_col(m, -1);
  const int first_artificial = cols;
  for (int i = 0; i < m; ++i) {
    id_col[i] = kept[i].rel == Relation::kLessEqual ? aux_col[i] : cols++;
  }

  Tableau tab(m, cols);
  for (int i = 0; i < m; ++i) {
    const Constraint& c = lp.constraints[kept[i].source];
    const int sign = kept[i].sign;
    for (int j = 0; j < n; ++j) {
      if (c.row[j].is_zero()) continue;
      tab.at(i, j) = sign * c.row[j].mpq();
      if (neg_col[j] >= 0) tab.at(i, neg_col[j]) = -tab.at(i, j);
    }
    if (aux_col[i] >= 0) {
      tab.at(i, aux_col[i]) = kept[i].rel == Relation::kLessEqual ? 1 : -1;
    }
    tab.at(i, id_col[i]) = 1;
    tab.rhs(i) = sign * c.rhs.mpq();
    tab.basis(i) = id_col[i];
  }

  if (first_artificial < cols) {
    std::vector<mpq_class> phase1(cols);
    for (int j = first_artificial; j < cols; ++j) phase1[j] = -1;
    tab.Price(phase1);
    tab.Optimize(std::vector<bool>(cols, true));
    if (sgn(tab.value()) < 0) {
      out.pivots = tab.pivots();
      return out;
    }
    // Drive zero-level artificials out of the basis where possible.
    for (int i = 0; i < m; ++i) {
      if (tab.basis(i) < first_artificial) continue;
      for (int j = 0; j < first_artificial; ++j) {
        if (sgn(tab.at(i, j)) != 0) {
          tab.Pivot(i, j);
          break;
        }
      }
    }
  }

  std::vector<mpq_class> phase2(cols);
  for (int j = 0; j < n; ++j) {
    phase2[j] = lp.objective[j].mpq();
    if (neg_col[j] >= 0) phase2[neg_col[j]] = -phase2[j];
  }
  std::vector<bool> allowed(cols, true);
  for (int j = first_artificial; j < cols; ++j) allowed[j] = false;
  tab.Price(phase2);
  const bool bounded = tab.Optimize(allowed);
  out.pivots = tab.pivots();
  if (!bounded) {
    out.status = LpStatus::kUnbounded;
    return out;
  }

  std::vector<mpq_class> level(cols);
  for (int i = 0; i < m; ++i) level[tab.basis(i)] = tab.rhs(i);
  out.status = LpStatus::kOptimal;
  out.x.resize(n);
  for (int j = 0; j < n; ++j) {
    mpq_class v = level[j];
    if (neg_col[j] >= 0) v -= level[neg_col[j]];
    out.x[j] = Rational(v);
  }
  out.value = Dot(lp.objective, out.x);
  out.duals.assign(lp.num_constraints(), Rational(0));
  for (int i = 0; i < m; ++i) {
    out.duals[kept[i].source] =
        Rational(mpq_class(-kept[i].sign * tab.reduced(id_col[i])));
  }
  return out;
}

}  // namespace contracts
