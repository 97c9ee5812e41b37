#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lctinf/convex.hpp"
#include "lctinf/polynomial.hpp"

namespace lctinf {

// Generators of conv(union of g + orthant), reduced under domination.
struct LocalStaircase {
  std::size_t dim = 0;
  std::vector<Point> generators;
};

// Drops duplicates and every point dominating another one; sorted.
LocalStaircase make_staircase(std::size_t dim, std::vector<Point> points);
bool has_origin(const LocalStaircase& st);

struct NewtonData {
  Polytope gamma;
  Polytope gamma_inf;
  LocalStaircase staircase;
  std::vector<std::optional<Rational>> axis_intercepts;  // nullopt when the axis ray exits at 0
};

NewtonData newton_polytopes(const PolynomialMap& p);
NewtonData newton_data(const ToricIndicatorSpec& spec);

struct Convenience {
  bool convenient = false;
  std::vector<std::optional<Rational>> intercepts;
};
Convenience is_convenient(const NewtonData& nd);

struct Face {
  Point normal;  // interior of the normal cone, so the face is exactly argmax
  Rational offset{0};
  std::vector<Point> vertices;
  int dimension = 0;
};

struct FaceList {
  std::vector<Face> faces;
  // Set when gamma_inf is not full-dimensional; faces is then empty.
  std::optional<std::string> warning;
};

FaceList faces_at_infinity(const NewtonData& nd);
FaceList faces_at_infinity(const Polytope& gamma_inf);

struct FaceReduction {
  Point face_normal;
  Rational face_offset{0};
  PolynomialMap reduced_map;
};

FaceReduction face_reduction(const PolynomialMap& p, const Face& face);

enum class NndStatus { verified, refuted, unknown };
std::string to_string(NndStatus s);

struct NndBudget {
  std::uint64_t seed = 0;
  unsigned starts_per_face = 48;
  double radius = 4.0;  // moduli drawn log-uniformly from [1/radius, radius]
  unsigned max_iterations = 200;
  double tolerance = 1e-10;
  double min_modulus = 1e-6;
};

struct NndResult {
  NndStatus status = NndStatus::unknown;
  std::vector<std::complex<double>> witness;  // torus zero of the reduction
  std::optional<Face> face;                   // the refuting face
  unsigned faces_checked = 0;
  unsigned faces_exact = 0;  // faces settled by a monomial component
};

NndResult nnd_check(const PolynomialMap& p, const NndBudget& budget = {});

}  // namespace lctinf
