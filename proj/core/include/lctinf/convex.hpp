#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lctinf/rational.hpp"

namespace lctinf {

inline constexpr std::size_t kMaxDimension = 6;

// <normal, x> <= offset, scaled so the first nonzero normal entry is +-1.
struct HalfSpace {
  Point normal;
  Rational offset{0};

  static HalfSpace canonical(Point normal, Rational offset);
  // <normal, p> - offset
  Rational slack(const Point& p) const { return dot(normal, p) - offset; }

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
  friend bool operator<(const HalfSpace& a, const HalfSpace& b);
};

class Polytope {
 public:
  Polytope() = default;

  std::size_t dim() const { return dim_; }
  int affine_dim() const { return affine_dim_; }
  bool full_dim() const { return affine_dim_ == static_cast<int>(dim_); }
  // Lexicographically sorted.
  const std::vector<Point>& vertices() const { return vertices_; }
  // Boundary inequalities; for lower-dimensional bodies these live in a
  // coordinate chart of the affine hull, see equations().
  const std::vector<HalfSpace>& facets() const { return facets_; }
  // Affine hull equations <normal, x> = offset (empty when full_dim).
  const std::vector<HalfSpace>& equations() const { return equations_; }
  // facet_vertices()[f] lists indices into vertices() tight at facet f.
  const std::vector<std::vector<std::size_t>>& facet_vertices() const { return incidence_; }

  friend Polytope convex_hull(std::span<const Point> points);

 private:
  std::size_t dim_ = 0;
  int affine_dim_ = -1;
  std::vector<Point> vertices_;
  std::vector<HalfSpace> facets_;
  std::vector<HalfSpace> equations_;
  std::vector<std::vector<std::size_t>> incidence_;
};

Polytope convex_hull(std::span<const Point> points);
inline Polytope convex_hull(const std::vector<Point>& points) {
  return convex_hull(std::span<const Point>(points));
}

Rational supporting_value(const Polytope& k, const Point& t);

enum class Containment { closure, interior };
bool contains(const Polytope& k, const Point& p, Containment mode = Containment::closure);

// max{t >= 0 : t d in K}; infinite when no facet blocks d.
ExtendedRational ray_hit(const Polytope& k, const Point& d);

Polytope minkowski_sum(const Polytope& a, const Polytope& b);
Polytope scaled(const Polytope& k, const Rational& s);
Rational volume(const Polytope& k);
Rational mixed_volume(std::span<const Polytope> bodies);
inline Rational mixed_volume(const std::vector<Polytope>& bodies) {
  return mixed_volume(std::span<const Polytope>(bodies));
}
bool is_lower_set(const Polytope& k);

// Simplices (index tuples into vertices()) triangulating a full-dimensional body.
std::vector<std::vector<std::size_t>> triangulate(const Polytope& k);

// Common bodies.
Polytope standard_simplex(std::size_t n);                 // conv{0, e_k}
Polytope cube(std::size_t n, const Rational& alpha);      // [0, alpha]^n
Polytope corner_simplex(const Point& r);                  // conv{0, r_k e_k}
Polytope simplex_diagram(const Point& a);                 // conv{0, e_k / a_k}

}  // namespace lctinf
