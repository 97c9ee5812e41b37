#pragma once

#include <optional>
#include <string>

#include "lctinf/convex.hpp"
#include "lctinf/newton.hpp"
#include "lctinf/polynomial.hpp"

namespace lctinf {

enum class Method { closed_form_1d, toric_exact, nnd_exact, bounds_only };
std::string to_string(Method m);

struct ThresholdInterval {
  ExtendedRational lo;
  ExtendedRational hi;
  bool is_exact() const { return lo == hi; }
  static ThresholdInterval exact(ExtendedRational v) { return {v, v}; }
};

struct ThresholdReport {
  ThresholdInterval c_inf;
  ThresholdInterval lambda_inf;  // [1/hi, 1/lo]
  ExtendedRational c_zero;
  bool c_zero_certified = false;
  Rational sigma{0};
  std::optional<Rational> loja;
  bool convenient = false;
  NndStatus nnd_status = NndStatus::unknown;
  Method method = Method::bounds_only;
};

// 1 / ray_hit(gamma_inf, 1); infinite unless the open diagonal segment is interior.
ExtendedRational lct_infinity_from_polytope(const Polytope& gamma_inf);
// Reciprocal of min{h(t) : sum t = 1}; throws ConsistencyError when it
// disagrees with the ray formula.
ExtendedRational lct_indicator_lp(const Polytope& gamma);
// min{h(t) : sum t = 1} by exact LP.
Rational diagonal_lp_value(const Polytope& gamma);
ExtendedRational lct_local_toric(const LocalStaircase& st);

ThresholdReport lct_map(const PolynomialMap& p, NndStatus nnd, bool toric);
ThresholdReport lct_map(const PolynomialMap& p, NndStatus nnd);
ThresholdReport lct_indicator(const ToricIndicatorSpec& spec);

// c(t u) = c(u) / t. Throws InputError for t <= 0.
ThresholdReport scale_threshold(const ThresholdReport& r, const Rational& t);

struct LocGlob {
  ExtendedRational c_inf;
  ExtendedRational c_zero;
  bool equality = false;
  bool simplex_detected = false;
};

// Throws ConsistencyError if c_inf > c_zero.
LocGlob locglob_compare(const LocalStaircase& st, const Polytope& gamma_inf);
// conv{0, r_k e_k} with all r_k > 0.
bool is_corner_simplex(const Polytope& k);

}  // namespace lctinf
