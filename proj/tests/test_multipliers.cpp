#include <doctest.h>

#include <algorithm>

#include "lctinf/multipliers.hpp"
#include "lctinf/thresholds.hpp"
#include "oracles.hpp"

using namespace lctinf;

namespace {

using Exps = std::vector<ExponentVector>;

Exps local_brute(const std::vector<Point>& gens, unsigned box) {
  Exps hits;
  const Rational eps = ratio(1, 1000);
  for (const auto& j : oracle::lattice_box(gens[0].size(), box)) {
    Point x = to_point(j) + ones(j.size());
    if (oracle::in_upper(gens, x - eps * ones(j.size()))) hits.push_back(j);
  }
  Exps minimal;
  for (const auto& a : hits) {
    bool keep = true;
    for (const auto& b : hits) {
      if (a == b) continue;
      bool le = true;
      for (std::size_t k = 0; k < a.size(); ++k) le = le && b[k] <= a[k];
      keep = keep && !le;
    }
    if (keep) minimal.push_back(a);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

}  // namespace

TEST_CASE("multipliers at infinity") {
  CHECK(multipliers_at_infinity(corner_simplex({2, 3})).exponents == Exps{{0, 0}});
  CHECK(multipliers_at_infinity(simplex_diagram({2, 3})).exponents.empty());
  CHECK(multipliers_at_infinity(cube(2, 3)).exponents == Exps{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(multipliers_at_infinity(standard_simplex(2)).exponents.empty());
  auto seg = multipliers_at_infinity(convex_hull(std::vector<Point>{{0, 0}, {4, 4}}));
  CHECK(seg.exponents.empty());
  CHECK(seg.note.has_value());
}

TEST_CASE("basis contains 1 exactly when c_inf < 1") {
  for (auto k : {cube(2, 3), cube(2, 1), corner_simplex({2, 3}), standard_simplex(2),
                 corner_simplex({3, 3}), convex_hull(std::vector<Point>{{0, 0}, {3, 0}, {0, 2}, {3, 3}})}) {
    auto b = multipliers_at_infinity(k);
    bool has_one = !b.exponents.empty() && b.exponents.front() == ExponentVector{0, 0};
    CHECK(has_one == (lct_infinity_from_polytope(k) < ExtendedRational(1L)));
    CHECK(has_one == contains(k, ones(2), Containment::interior));
  }
}

TEST_CASE("local multipliers") {
  CHECK(multipliers_local(make_staircase(2, {{2, 0}, {0, 2}})).exponents == Exps{{0, 1}, {1, 0}});
  CHECK(multipliers_local(make_staircase(2, {{0, 0}})).exponents == Exps{{0, 0}});
  CHECK(multipliers_local(make_staircase(2, {{1, 0}, {0, 1}})).exponents == Exps{{0, 0}});
  for (auto gens : {std::vector<Point>{{2, 0}, {0, 2}}, std::vector<Point>{{3, 0}, {1, 1}, {0, 4}},
                    std::vector<Point>{{5, 0}, {0, 2}}, std::vector<Point>{{4, 1}, {0, 3}}})
    CHECK(multipliers_local(make_staircase(2, gens)).exponents == local_brute(gens, 6));
}

TEST_CASE("global multipliers") {
  auto sa = newton_data(parse_indicator("1/2,0; 0,1/3", 2));
  CHECK(multipliers_global(sa.gamma_inf, sa.staircase).exponents.empty());
  CHECK(multipliers_global(corner_simplex({2, 3}), sa.staircase).exponents == Exps{{0, 0}});
  auto lin = newton_polytopes(parse_map("z1, z2", 2));
  CHECK(multipliers_global(lin.gamma_inf, lin.staircase).exponents.empty());
  CHECK(multipliers_global(cube(2, 3), make_staircase(2, {{0, 0}})).exponents ==
        multipliers_at_infinity(cube(2, 3)).exponents);
}

TEST_CASE("staircase membership") {
  auto st = make_staircase(2, {{2, 0}, {0, 2}});
  CHECK_FALSE(staircase_interior(st, {1, 1}));
  CHECK(staircase_closure(st, {1, 1}));
  CHECK(staircase_interior(st, {ratio(3, 2), 1}));
  CHECK_FALSE(staircase_closure(st, {ratio(1, 2), 1}));
}

TEST_CASE("mixed masses") {
  for (long n = 2; n <= 5; ++n) {
    auto u = ma_masses(convex_hull(std::vector<Point>{{0, 0}, {1, 0}, {0, 1}, {n, n}}));
    CHECK(u[2] == 2 * n);
    CHECK(scale_masses(u, ratio(1, n))[2] == ratio(2, n));
    auto v = ma_masses(convex_hull(std::vector<Point>{{0, 0}, {1, 0}, {0, n}, {1, n}}));
    CHECK(v[2] == 2 * n);
  }
  auto sa = ma_masses(simplex_diagram({2, 3}));
  CHECK(sa[0] == 1);
  CHECK(sa[2] == ratio(1, 6));
  std::vector<Point> box{{0, 0}, {2, 0}, {0, 1}, {2, 1}}, tri{{0, 0}, {1, 0}, {0, 1}};
  auto m = ma_masses(convex_hull(box));
  CHECK(m[1] == 2 * oracle::mixed_area(box, tri));
  CHECK(m[2] == 2 * oracle::area_of(box));
  auto m3 = ma_masses(cube(3, 2));
  CHECK(m3 == std::vector<Rational>{1, 6, 24, 48});
}

TEST_CASE("global multiplicity") {
  auto check = [](const char* s) {
    auto p = parse_map(s, 2);
    return global_multiplicity(p, newton_polytopes(p), nnd_check(p).status);
  };
  CHECK(*check("z1^3*z2^3, z1^3, z1*z2^3, z2^2") == 17);
  CHECK(*check("z1, z2") == 1);
  CHECK_FALSE(check("z1, z1*z2 - 1").has_value());
}

TEST_CASE("residual mass") {
  CHECK(*residual_mass_bound(make_staircase(2, {{2, 0}, {0, 2}})) == 4);
  CHECK(*residual_mass_bound(make_staircase(2, {{1, 0}, {0, 1}})) == 1);
  CHECK_FALSE(residual_mass_bound(make_staircase(2, {{1, 1}})).has_value());
  CHECK(*residual_mass_bound(make_staircase(2, {{0, 0}})) == 0);
  CHECK(*residual_mass_bound(make_staircase(2, {{3, 0}, {0, 3}})) == 9);
}

TEST_CASE("residual mass matches a mesh-1/4 cell count") {
  for (auto gens : {std::vector<Point>{{2, 0}, {0, 2}}, std::vector<Point>{{4, 0}, {1, 1}, {0, 3}},
                    std::vector<Point>{{3, 0}, {2, 1}, {0, 4}}}) {
    auto st = make_staircase(2, gens);
    Rational b = 0;
    for (const auto& g : gens) b = std::max({b, g[0], g[1]});
    const Rational h = ratio(1, 4);
    Rational below = 0, boundary = 0;
    for (Rational x = 0; x < b; x += h)
      for (Rational y = 0; y < b; y += h) {
        bool lo = staircase_closure(st, {x, y});
        bool hi = staircase_closure(st, {x + h, y + h});
        if (!hi) below += h * h;
        else if (!lo) boundary += h * h;
      }
    Rational v = *residual_mass_bound(st) / 2;
    CHECK(v >= below);
    CHECK(v <= below + boundary);
  }
}

TEST_CASE("lower-set inequality") {
  for (Rational a : {Rational(1), Rational(2), ratio(5, 2)}) {
    auto k = cube(2, a);
    auto r = fmd_check(k, lct_infinity_from_polytope(k));
    CHECK(r.applicable);
    CHECK(r.holds);
    CHECK(r.equality);
    CHECK(r.lhs_power == r.rhs_power);
  }
  auto d = fmd_check(standard_simplex(2), ExtendedRational(2L));
  CHECK(d.applicable);
  CHECK(d.lhs_power == 4);
  CHECK(d.holds);
  CHECK_FALSE(d.equality);

  auto g = newton_polytopes(parse_map("z1^3*z2^3, z1^3, z1*z2^3, z2^2", 2)).gamma_inf;
  auto r = fmd_check(g, lct_infinity_from_polytope(g));
  CHECK_FALSE(r.applicable);
  CHECK(r.m_n == 17);
  CHECK(r.lhs_power == ratio(17, 9));
  CHECK_FALSE(r.holds);

  CHECK(is_cube(cube(3, ratio(7, 3))));
  CHECK_FALSE(is_cube(convex_hull(std::vector<Point>{{0, 0}, {2, 0}, {0, 1}, {2, 1}})));
}

TEST_CASE("mass report") {
  auto p = parse_map("z1^3*z2^3, z1^3, z1*z2^3, z2^2", 2);
  auto nd = newton_polytopes(p);
  auto r = mass_report(nd, &p, NndStatus::verified, ExtendedRational(ratio(1, 3)));
  CHECK(r.vol_inf == ratio(17, 2));
  CHECK(r.m.back() == 17);
  CHECK(*r.global_multiplicity == 17);
  REQUIRE(r.lower_set.has_value());
  CHECK_FALSE(*r.lower_set);
  REQUIRE(r.fmd.has_value());
  CHECK_FALSE(r.fmd->applicable);
}
