#pragma once

#include <cstddef>
#include <vector>

#include "lctinf/rational.hpp"

namespace lctinf {

enum class Relation { less_equal, equal, greater_equal };
enum class Sense { minimize, maximize };
enum class LpStatus { optimal, infeasible, unbounded };

struct LinearConstraint {
  Point coeffs;
  Relation rel = Relation::less_equal;
  Rational rhs{0};
};

// Variables are free unless marked nonnegative.
struct LinearProgram {
  std::size_t num_vars = 0;
  Point objective;
  std::vector<LinearConstraint> constraints;
  Sense sense = Sense::minimize;
  std::vector<bool> nonnegative;  // empty means all free

  LinearProgram() = default;
  explicit LinearProgram(std::size_t n, Sense s = Sense::minimize)
      : num_vars(n), objective(n, Rational(0)), sense(s) {}

  void add(Point coeffs, Relation rel, Rational rhs) {
    constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
  }
};

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value{0};
  Point witness;
};

// Exact two-phase tableau simplex with Bland's rule.
LpResult solve_lp(const LinearProgram& lp);

}  // namespace lctinf
