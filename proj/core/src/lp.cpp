#include "lctinf/lp.hpp"

#include <limits>

#include "lctinf/errors.hpp"

namespace lctinf {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Tableau {
  std::vector<Point> rows;  // last entry is the rhs
  Point obj;                // reduced costs, last entry is -value
  std::vector<std::size_t> basis;
  std::size_t cols = 0;

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = 0; j <= cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    if (obj[c] != 0) {
      Rational f = obj[c];
      for (std::size_t j = 0; j <= cols; ++j) obj[j] -= f * rows[r][j];
    }
    basis[r] = c;
  }

  void set_costs(const Point& cost) {
    obj.assign(cols + 1, Rational(0));
    for (std::size_t j = 0; j < cols; ++j) obj[j] = cost[j];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational& cb = cost[basis[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols; ++j) obj[j] -= cb * rows[i][j];
    }
  }

  // Minimizes; columns >= limit may not enter. Returns false when unbounded.
  bool run(std::size_t limit) {
    while (true) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < limit; ++j)
        if (obj[j] < 0) {
          enter = j;
          break;
        }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        Rational ratio = rows[i][cols] / rows[i][enter];
        if (leave == kNone || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars;
  if (lp.objective.size() != n) throw DimensionError("solve_lp: objective length");
  if (!lp.nonnegative.empty() && lp.nonnegative.size() != n)
    throw DimensionError("solve_lp: nonnegative flags length");
  for (const auto& c : lp.constraints)
    if (c.coeffs.size() != n) throw DimensionError("solve_lp: constraint length");

  // Column layout: structural (split free vars), slacks, artificials.
  std::vector<std::size_t> plus(n), minus(n, kNone);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    plus[j] = cols++;
    if (lp.nonnegative.empty() || !lp.nonnegative[j]) minus[j] = cols++;
  }
  const std::size_t m = lp.constraints.size();
  std::vector<std::size_t> slack(m, kNone);
  for (std::size_t i = 0; i < m; ++i)
    if (lp.constraints[i].rel != Relation::equal) slack[i] = cols++;
  const std::size_t structural = cols;
  cols += m;

  Tableau t;
  t.cols = cols;
  t.rows.assign(m, Point(cols + 1, Rational(0)));
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = lp.constraints[i];
    Point& row = t.rows[i];
    for (std::size_t j = 0; j < n; ++j) {
      row[plus[j]] = c.coeffs[j];
      if (minus[j] != kNone) row[minus[j]] = -c.coeffs[j];
    }
    if (c.rel == Relation::less_equal) row[slack[i]] = 1;
    if (c.rel == Relation::greater_equal) row[slack[i]] = -1;
    row[cols] = c.rhs;
    if (c.rhs < 0)
      for (auto& x : row) x = -x;
    row[structural + i] = 1;
    t.basis[i] = structural + i;
  }

  Point phase1(cols, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[structural + i] = 1;
  t.set_costs(phase1);
  t.run(cols);
  LpResult res;
  if (-t.obj[cols] != 0) {
    res.status = LpStatus::infeasible;
    return res;
  }

  // Drive artificials out; drop redundant rows.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < structural) {
      ++i;
      continue;
    }
    std::size_t c = kNone;
    for (std::size_t j = 0; j < structural; ++j)
      if (t.rows[i][j] != 0) {
        c = j;
        break;
      }
    if (c == kNone) {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      continue;
    }
    t.pivot(i, c);
    ++i;
  }

  Point cost(cols, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    Rational cj = lp.sense == Sense::minimize ? lp.objective[j] : Rational(-lp.objective[j]);
    cost[plus[j]] = cj;
    if (minus[j] != kNone) cost[minus[j]] = -cj;
  }
  t.set_costs(cost);
  if (!t.run(structural)) {
    res.status = LpStatus::unbounded;
    return res;
  }

  Point x(cols, Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i) x[t.basis[i]] = t.rows[i][cols];
  res.status = LpStatus::optimal;
  res.witness.assign(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    res.witness[j] = x[plus[j]];
    if (minus[j] != kNone) res.witness[j] -= x[minus[j]];
  }
  res.value = dot(lp.objective, res.witness);
  return res;
}

}  // namespace lctinf
