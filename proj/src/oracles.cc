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

#include "contracts/oracles.h"

#include <optional>
#include <stdexcept>

#include "contracts/linear_contract.h"

namespace contracts {
namespace {

struct Hyperplane {
  std::vector<mpq_class> a;
  mpq_class b;
};

// Solves the square system by Gauss-Jordan elimination; nullopt if singular.
std::optional<std::vector<mpq_class>> SolveSquare(std::vector<Hyperplane> rows) {
  const size_t n = rows.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && sgn(rows[piv].a[col]) == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(rows[piv], rows[col]);
    const mpq_class inv = 1 / rows[col].a[col];
    for (mpq_class& v : rows[col].a) v *= inv;
    rows[col].b *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || sgn(rows[r].a[col]) == 0) continue;
      const mpq_class f = rows[r].a[col];
      for (size_t j = 0; j < n; ++j) rows[r].a[j] -= f * rows[col].a[j];
      rows[r].b -= f * rows[col].b;
    }
  }
  std::vector<mpq_class> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = rows[i].b;
  return x;
}

bool Satisfies(const std::vector<mpq_class>& lhs_row, Relation rel,
               const mpq_class& rhs, const std::vector<mpq_class>& x) {
  mpq_class lhs = 0;
  for (size_t j = 0; j < x.size(); ++j) lhs += lhs_row[j] * x[j];
  switch (rel) {
    case Relation::kLessEqual:
      return lhs <= rhs;
    case Relation::kEqual:
      return lhs == rhs;
    case Relation::kGreaterEqual:
      return lhs >= rhs;
  }
  return false;
}

struct Row {
  std::vector<mpq_class> a;
  Relation rel;
  mpq_class b;
};

// Calls visit(x) for every feasible basic solution of {rows, x >= 0}: the
// unique point of every choice of n independent hyperplanes, kept when it
// satisfies all rows. Vertices may repeat.
template <typename Visit>
void ForEachVertex(const std::vector<Row>& rows, size_t n, Visit visit) {
  std::vector<Hyperplane> planes;
  for (const Row& r : rows) planes.push_back({r.a, r.b});
  for (size_t j = 0; j < n; ++j) {
    Hyperplane h{std::vector<mpq_class>(n), 0};
    h.a[j] = 1;
    planes.push_back(std::move(h));
  }
  const size_t total = planes.size();
  if (n == 0 || total < n) return;
  std::vector<size_t> pick(n);
  for (size_t i = 0; i < n; ++i) pick[i] = i;
  while (true) {
    std::vector<Hyperplane> system;
    for (size_t i : pick) system.push_back(planes[i]);
    if (auto x = SolveSquare(std::move(system))) {
      bool ok = true;
      for (const mpq_class& v : *x) ok = ok && sgn(v) >= 0;
      for (const Row& r : rows) ok = ok && Satisfies(r.a, r.rel, r.b, *x);
      if (ok) visit(*x);
    }
    // Next combination in lexicographic order.
    size_t i = n;
    while (i > 0 && pick[i - 1] == total - n + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (size_t k = i; k < n; ++k) pick[k] = pick[k - 1] + 1;
  }
}

}  // namespace

VertexResult VertexEnumerate(const LinearProgram& lp) {
  const size_t n = static_cast<size_t>(lp.num_variables());
  for (bool f : lp.free) {
    if (f) throw std::invalid_argument("vertex enumeration needs nonnegative variables");
  }
  std::vector<Row> rows;
  for (const Constraint& c : lp.constraints) {
    Row r{{}, c.relation, c.rhs.mpq()};
    for (const Rational& v : c.row) r.a.push_back(v.mpq());
    rows.push_back(std::move(r));
  }
  std::vector<mpq_class> cost;
  for (const Rational& v : lp.objective) cost.push_back(v.mpq());
  auto value_of = [&](const std::vector<mpq_class>& x) {
    mpq_class v = 0;
    for (size_t j = 0; j < n; ++j) v += cost[j] * x[j];
    return v;
  };

  VertexResult result;
  if (n == 0) {
    bool ok = true;
    for (const Row& r : rows) ok = ok && Satisfies(r.a, r.rel, r.b, {});
    if (ok) result.status = LpStatus::kOptimal;
    return result;
  }
  std::optional<mpq_class> best;
  std::vector<mpq_class> best_x;
  ForEachVertex(rows, n, [&](const std::vector<mpq_class>& x) {
    const mpq_class v = value_of(x);
    if (!best || v > *best) {
      best = v;
      best_x = x;
    }
  });
  if (!best) return result;

  // Recession directions d >= 0 with the homogeneous system and sum d = 1.
  std::vector<Row> cone;
  for (const Row& r : rows) cone.push_back({r.a, r.rel, 0});
  cone.push_back({std::vector<mpq_class>(n, 1), Relation::kEqual, 1});
  bool unbounded = false;
  ForEachVertex(cone, n, [&](const std::vector<mpq_class>& d) {
    if (sgn(value_of(d)) > 0) unbounded = true;
  });
  if (unbounded) {
    result.status = LpStatus::kUnbounded;
    return result;
  }
  result.status = LpStatus::kOptimal;
  result.value = Rational(*best);
  for (const mpq_class& v : best_x) result.x.push_back(Rational(v));
  return result;
}

Rational GridBestSingle(const Instance& instance,
                        const std::vector<Rational>& weights, int points,
                        const Rational& step) {
  const int m = instance.num_outcomes();
  const int num_types = instance.num_types();
  if (points < 1) throw std::invalid_argument("grid needs at least one point");
  std::vector<int> k(m, 0);
  std::vector<mpq_class> x(m);
  std::optional<mpq_class> best;
  while (true) {
    for (int j = 0; j < m; ++j) x[j] = step.mpq() * k[j];
    mpq_class total = 0;
    for (int t = 0; t < num_types; ++t) {
      std::optional<mpq_class> best_u;
      mpq_class best_p;
      for (const Action& a : instance.actions[t]) {
        mpq_class pay = 0;
        mpq_class reward = 0;
        for (int j = 0; j < m; ++j) {
          pay += a.row[j].mpq() * x[j];
          reward += a.row[j].mpq() * instance.rewards[j].mpq();
        }
        const mpq_class u = pay - a.cost.mpq();
        const mpq_class p = reward - pay;
        if (!best_u || u > *best_u || (u == *best_u && p > best_p)) {
          best_u = u;
          best_p = p;
        }
      }
      total += weights[t].mpq() * best_p;
    }
    if (!best || total > *best) best = total;
    int j = 0;
    while (j < m && ++k[j] == points) k[j++] = 0;
    if (j == m) break;
  }
  return Rational(*best);
}

Rational GridBestLinear(const std::vector<Envelope>& envs,
                        const std::vector<Rational>& weights, int points) {
  if (points < 1) throw std::invalid_argument("grid needs at least one point");
  Rational best = LinearProfit(envs, weights, Rational(0));
  for (int k = 1; k < points; ++k) {
    best = Max(best, LinearProfit(envs, weights, rat(k, points)));
  }
  return best;
}

}  // namespace contracts
