#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lctinf/convex.hpp"
#include "lctinf/rational.hpp"

// Reference computations that avoid the kernel's hull/facet machinery.
namespace oracle {

using lctinf::Point;
using lctinf::Rational;

// Counter-clockwise hull vertices, collinear points dropped.
std::vector<Point> hull2d(std::vector<Point> pts);
Rational area2d(const std::vector<Point>& ccw);
Rational area_of(const std::vector<Point>& pts);
// V(A, B) from Area(A+B) - Area(A) - Area(B).
Rational mixed_area(const std::vector<Point>& a, const std::vector<Point>& b);
std::vector<Point> pairwise_sums(const std::vector<Point>& a, const std::vector<Point>& b);

Rational support(const std::vector<Point>& gens, const Point& t);

// Convex-combination feasibility LP.
bool in_hull(const std::vector<Point>& gens, const Point& p);
// p +- eps e_k in the hull for every k.
bool in_interior(const std::vector<Point>& gens, const Point& p, const Rational& eps);
// max t with t d in conv(gens); gens must contain 0 in their hull.
Rational ray_max(const std::vector<Point>& gens, const Point& d);
// x in conv(gens) + orthant
bool in_upper(const std::vector<Point>& gens, const Point& x);

// x in K and 0 <= y <= x imply y in K, on a grid with the given mesh.
bool lower_set_grid(const lctinf::Polytope& k, const Rational& mesh);

// lattice points J >= 0 in [0, bound]^n
std::vector<std::vector<unsigned>> lattice_box(std::size_t n, unsigned bound);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  bool coin() { return uniform(0, 1) == 1; }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

// Integer points in [0, max]^n; the origin is always included.
std::vector<Point> random_diagram(Rng& rng, std::size_t n, long max, std::size_t count);
// Same, closed under zeroing coordinates, so the hull is a lower set.
std::vector<Point> random_lower_diagram(Rng& rng, std::size_t n, long max, std::size_t count);

// Dense univariate polynomial text of exact degree d with nonzero coefficients.
std::string dense_univariate(Rng& rng, unsigned d);

}  // namespace oracle
