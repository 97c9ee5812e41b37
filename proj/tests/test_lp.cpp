#include <doctest.h>

#include "lctinf/convex.hpp"
#include "lctinf/lp.hpp"

using namespace lctinf;

TEST_CASE("min of the vertex max over the diagonal hyperplane") {
  // variables t1 t2 s
  LinearProgram lp(3);
  lp.objective = {0, 0, 1};
  auto simplex = standard_simplex(2);
  for (const auto& v : simplex.vertices()) lp.add({v[0], v[1], -1}, Relation::less_equal, 0);
  lp.add({1, 1, 0}, Relation::equal, 1);
  auto r = solve_lp(lp);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == ratio(1, 2));
  // brute force: h(t) = max(0, t1, 1 - t1) is minimized at t1 = 1/2
  CHECK(r.value == ray_hit(standard_simplex(2), ones(2)).value());
}

TEST_CASE("infeasible and unbounded") {
  LinearProgram lp(1);
  lp.add({1}, Relation::greater_equal, 1);
  lp.add({1}, Relation::less_equal, 0);
  CHECK(solve_lp(lp).status == LpStatus::infeasible);

  LinearProgram up(1, Sense::maximize);
  up.objective = {1};
  up.add({1}, Relation::greater_equal, 0);
  CHECK(solve_lp(up).status == LpStatus::unbounded);
}

TEST_CASE("max t1 on the unit square") {
  LinearProgram lp(2, Sense::maximize);
  lp.objective = {1, 0};
  lp.nonnegative = {true, true};
  lp.add({1, 0}, Relation::less_equal, 1);
  lp.add({0, 1}, Relation::less_equal, 1);
  auto r = solve_lp(lp);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == 1);
  CHECK(r.witness[0] == 1);
  CHECK(r.witness[1] >= 0);
  CHECK(r.witness[1] <= 1);
  CHECK(solve_lp(lp).witness == r.witness);
}

TEST_CASE("degenerate cycling example terminates") {
  LinearProgram lp(4);
  lp.objective = {ratio(-3, 4), 20, ratio(-1, 2), 6};
  lp.nonnegative = {true, true, true, true};
  lp.add({ratio(1, 4), -8, -1, 9}, Relation::less_equal, 0);
  lp.add({ratio(1, 2), -12, ratio(-1, 2), 3}, Relation::less_equal, 0);
  lp.add({0, 0, 1, 0}, Relation::less_equal, 1);
  auto r = solve_lp(lp);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == ratio(-5, 4));
}

TEST_CASE("redundant equalities") {
  LinearProgram lp(2);
  lp.objective = {1, 1};
  lp.nonnegative = {true, true};
  lp.add({1, 1}, Relation::equal, 2);
  lp.add({2, 2}, Relation::equal, 4);
  lp.add({1, -1}, Relation::equal, 0);
  auto r = solve_lp(lp);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == 2);
  CHECK(r.witness == Point{1, 1});
}
