#include <doctest.h>

#include <cmath>

#include "lctinf/bergman.hpp"
#include "lctinf/errors.hpp"
#include "oracles.hpp"

using namespace lctinf;

namespace {

const char* kSimplex = "0,0; 1,0; 0,1";
const char* kCube = "0,0; 1,0; 0,1; 1,1";

// plain trapezoid on [-L, L]^2
double log_norm_grid(const std::vector<std::vector<double>>& verts, std::vector<unsigned> j, double m,
                     double kappa) {
  const double L = 20, h = 0.02;
  const int steps = static_cast<int>(2 * L / h);
  double sum = 0;
  for (int a = 0; a <= steps; ++a)
    for (int b = 0; b <= steps; ++b) {
      double t1 = -L + a * h, t2 = -L + b * h;
      double hv = -1e300;
      for (const auto& v : verts) hv = std::max(hv, v[0] * t1 + v[1] * t2);
      double e = 2 * (j[0] + 1) * t1 + 2 * (j[1] + 1) * t2 - 2 * m * hv -
                 kappa * std::log(1 + std::exp(2 * t1) + std::exp(2 * t2));
      double w = (a == 0 || a == steps ? 0.5 : 1) * (b == 0 || b == steps ? 0.5 : 1);
      sum += w * std::exp(e);
    }
  return 2 * std::log(2 * M_PI) + std::log(sum * h * h);
}

}  // namespace

TEST_CASE("toric function values") {
  ToricFunction u(parse_indicator(kCube, 2));
  ComplexPoint z{std::exp(1.0), std::complex<double>(0, std::exp(-0.5))};
  CHECK(u(z) == doctest::Approx(1.0));
  ComplexPoint w{std::exp(1.0), std::exp(2.0)};
  CHECK(u(w) == doctest::Approx(3.0));
  ComplexPoint zero{0.0, 0.0};
  CHECK(u(zero) == 0.0);
  ToricFunction s(parse_indicator("1,0; 0,1", 2));
  CHECK(std::isinf(s(zero)));
}

TEST_CASE("ball supremum against sampled points") {
  ToricFunction u(parse_indicator(kCube, 2));
  oracle::Rng rng(5);
  std::uniform_real_distribution<double> unit(0, 1);
  for (ComplexPoint z : {ComplexPoint{0.0, 0.0}, ComplexPoint{0.3, std::complex<double>(-2, 1)},
                         ComplexPoint{5.0, 0.1}}) {
    double sup = u.sup_on_ball(z, 1.0);
    double best = -1e300;
    for (int i = 0; i < 200000; ++i) {
      // radial directions in R^4, pushed to the sphere
      double g[4], n2 = 0;
      for (double& x : g) {
        x = std::normal_distribution<double>()(rng.engine());
        n2 += x * x;
      }
      double r = std::pow(unit(rng.engine()), 0.25) / std::sqrt(n2);
      ComplexPoint q{z[0] + std::complex<double>(g[0], g[1]) * r, z[1] + std::complex<double>(g[2], g[3]) * r};
      best = std::max(best, u(q));
    }
    CHECK(best <= sup + 1e-12);
    CHECK(best >= sup - 1e-2);
  }
}

TEST_CASE("norms match a direct grid quadrature") {
  ToricFunction simplex(parse_indicator(kSimplex, 2));
  ToricFunction cube(parse_indicator(kCube, 2));
  std::vector<std::vector<double>> sv{{0, 0}, {1, 0}, {0, 1}}, cv{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  CHECK(bergman_log_norm(simplex, {0, 0}, 1, 3) == doctest::Approx(log_norm_grid(sv, {0, 0}, 1, 3)).epsilon(1e-3));
  CHECK(bergman_log_norm(simplex, {2, 1}, 4, 3) == doctest::Approx(log_norm_grid(sv, {2, 1}, 4, 3)).epsilon(1e-3));
  CHECK(bergman_log_norm(cube, {1, 2}, 2, 3) == doctest::Approx(log_norm_grid(cv, {1, 2}, 2, 3)).epsilon(1e-3));
}

TEST_CASE("admissible exponents match brute force and boundary norms are infinite") {
  for (const char* spec : {kSimplex, kCube}) {
    ToricFunction u(parse_indicator(spec, 2));
    for (long m : {1, 2, 3}) {
      const Rational kappa(3);
      auto simplex = standard_simplex(2);
      auto adm = bergman_admissible(u, m, kappa);
      std::vector<Point> body;
      for (const auto& v : u.gamma_inf().vertices())
        for (const auto& d : simplex.vertices()) body.push_back(Rational(m) * v + kappa * d);
      std::vector<ExponentVector> brute;
      for (const auto& j : oracle::lattice_box(2, static_cast<unsigned>(2 * m + 3)))
        if (oracle::in_interior(body, to_point(j) + ones(2), ratio(1, 1000))) brute.push_back(j);
      std::sort(brute.begin(), brute.end());
      CHECK(adm == brute);
      for (const auto& j : oracle::lattice_box(2, static_cast<unsigned>(2 * m + 3))) {
        Point x = to_point(j) + ones(2);
        if (oracle::in_hull(body, x) && !oracle::in_interior(body, x, ratio(1, 1000)))
          CHECK_THROWS_AS(bergman_log_norm(u, j, static_cast<double>(m), 3), QuadratureError);
      }
    }
  }
}

TEST_CASE("kappa must exceed the dimension") {
  ToricFunction u(parse_indicator(kCube, 2));
  CHECK_THROWS_AS(toric_bergman(u, 1, 2, {}), InputError);
  CHECK_THROWS_AS(toric_bergman(u, 0, 3, {}), InputError);
}

TEST_CASE("upper bound holds on every sample") {
  for (const char* spec : {kSimplex, kCube}) {
    ToricFunction u(parse_indicator(spec, 2));
    auto zs = bergman_sample_points(2, 20, 0);
    for (long m : {1, 2, 4}) {
      auto run = toric_bergman(u, m, 3, zs);
      REQUIRE(run.samples.size() == 20);
      for (const auto& s : run.samples) CHECK(s.u_m <= s.upper_bound);
    }
  }
}

TEST_CASE("cube diagram at the origin") {
  ToricFunction u(parse_indicator(kCube, 2));
  double prev = -1e300;
  for (long m : {1, 2, 4, 8}) {
    auto run = toric_bergman(u, m, 3, {ComplexPoint{0.0, 0.0}});
    double um = run.samples[0].u_m;
    CHECK(std::isfinite(um));
    CHECK(um < 0);
    CHECK(um > prev);
    // measured envelope: m |u_m(0)| stays below 0.6
    CHECK(m * -um < 0.6);
    prev = um;
  }
}

TEST_CASE("simplex diagram at (e, e)") {
  ToricFunction u(parse_indicator(kSimplex, 2));
  ComplexPoint z{std::exp(1.0), std::exp(1.0)};
  std::vector<double> gap;
  for (long m : {1, 2, 4, 8, 16}) gap.push_back(toric_bergman(u, m, 3, {z}).samples[0].u_m - 1.0);
  // overshoot, largest near m = 4
  CHECK(std::abs(gap[4]) < std::abs(gap[2]));
  CHECK(std::abs(gap[4]) < 0.15);
  for (std::size_t i = 1; i < gap.size(); ++i) CHECK(gap[i] > 0);
}

TEST_CASE("sample points are deterministic") {
  auto a = bergman_sample_points(3, 20, 7);
  CHECK(a.size() == 20);
  CHECK(a[0] == ComplexPoint(3, 0.0));
  CHECK(a == bergman_sample_points(3, 20, 7));
  CHECK(a != bergman_sample_points(3, 20, 8));
}
