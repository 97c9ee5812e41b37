#include <doctest.h>

#include <cmath>

#include <json.hpp>

#include "lctinf/errors.hpp"
#include "lctinf/verifier.hpp"

using namespace lctinf;

namespace {

// numeric checks use the degree-5 polynomial whose threshold is 1/2
const char* kP2 = "z1^2*z2^3 - z1^2*z2";

ConvergenceVerdict shells(const char* map, double c, std::uint64_t samples = 50000, std::uint64_t seed = 0) {
  ShellParams p;
  p.samples_per_shell = samples;
  p.seed = seed;
  return shell_mc_integral(parse_map(map, 2), c, p);
}

}  // namespace

TEST_CASE("verdict rule") {
  CHECK(classify({1, 0.5, 0.5, 0.5}) == Verdict::convergent);
  CHECK(classify({0.1, 0.1, 0.8}) == Verdict::inconclusive);
  CHECK(classify({2, 1, 0.96}) == Verdict::divergent);
  CHECK(classify({0.9}) == Verdict::inconclusive);
  CHECK(successive_ratios({1, 2, 1}) == std::vector<double>{2, 0.5});
}

TEST_CASE("toric tail quadrature brackets simple thresholds") {
  auto tail = [](const Polytope& g, double c) {
    return toric_tail_integral(g, c, default_toric_tail(g.dim())).classification;
  };
  CHECK(tail(simplex_diagram({1, 1}), 2.2) == Verdict::convergent);
  CHECK(tail(simplex_diagram({1, 1}), 1.8) == Verdict::divergent);
  CHECK(tail(cube(2, 1), 1.25) == Verdict::convergent);
  CHECK(tail(cube(2, 1), 0.8) == Verdict::divergent);
  CHECK(tail(standard_simplex(2), 3) == Verdict::convergent);
}

TEST_CASE("toric tail guards") {
  ToricTailParams coarse{1.0, {2, 4, 6}};
  CHECK_THROWS_AS(toric_tail_integral(cube(2, 1), 2, coarse), InputError);
  ToricTailParams offgrid{0.3, {4, 8}};
  CHECK_THROWS_AS(toric_tail_integral(cube(2, 1), 2, offgrid), InputError);
  CHECK_THROWS_AS(toric_tail_integral(convex_hull(std::vector<Point>{{0, 0}, {1, 1}}), 2,
                                      default_toric_tail(2)),
                  InputError);
  CHECK_THROWS_AS(toric_tail_integral(convex_hull(std::vector<Point>{{1, 1}, {2, 1}, {1, 2}}), 2,
                                      default_toric_tail(2)),
                  InputError);
}

TEST_CASE("shell sampling classifies known cases") {
  CHECK(shells("z1", 1.0).classification == Verdict::divergent);
  CHECK(shells("z1", 3.0).classification == Verdict::divergent);
  CHECK(shells(kP2, 0.75).classification == Verdict::convergent);
  CHECK(shells(kP2, 0.3).classification == Verdict::divergent);
  CHECK(shells("z1, z1*z2 - 1", 1.0).classification == Verdict::divergent);
}

TEST_CASE("shell estimates are unbiased on a closed form") {
  // |z|^{-5} over r <= |z| < 2r in C^2: 2 pi^2 (1/r - 1/(2r)) = pi^2 / r
  auto v = shells("z1, z2", 2.5, 100000, 3);
  REQUIRE(v.records.size() == 12);
  for (const auto& e : v.records) {
    double exact = M_PI * M_PI / e.params.at("r_lo");
    CHECK(std::abs(e.value - exact) <= 3 * *e.standard_error);
  }
  CHECK(v.classification == Verdict::convergent);
}

TEST_CASE("fixed seeds reproduce bit-identical estimates") {
  auto a = shells(kP2, 0.75, 20000, 9);
  auto b = shells(kP2, 0.75, 20000, 9);
  CHECK(a.increments == b.increments);
  auto c = shells(kP2, 0.75, 20000, 10);
  CHECK(a.increments != c.increments);
  auto p = p2_identity_check(1.0, 20000, 4);
  auto q = p2_identity_check(1.0, 20000, 4);
  CHECK(p.lhs.value == q.lhs.value);
  CHECK(p.rhs.value == q.rhs.value);
}

TEST_CASE("displayed identity at c > 1/2") {
  CHECK(p2_identity_check(1.0, 1000000, 0).relative_gap < 0.05);
  CHECK(p2_identity_check(0.75, 1000000, 0).relative_gap < 0.08);
  CHECK_THROWS_AS(p2_identity_check(0.5, 1000, 0), InputError);
}

TEST_CASE("estimates serialize as JSON lines") {
  auto v = shells("z1, z2", 2.5, 1000, 1);
  auto j = nlohmann::json::parse(to_json_line(v.records[0]));
  CHECK(j["region"] == "shell");
  CHECK(j["c"] == 2.5);
  CHECK(j["seed"] == 1);
  CHECK(j["se"].is_number());
  CHECK(j["params"]["samples"] == 1000);
  auto t = toric_tail_integral(cube(2, 1), 2, default_toric_tail(2));
  CHECK(nlohmann::json::parse(to_json_line(t.records[0]))["se"].is_null());
}
