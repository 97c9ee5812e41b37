#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lctinf/convex.hpp"
#include "lctinf/newton.hpp"
#include "lctinf/polynomial.hpp"

namespace lctinf {

enum class Scope { at_infinity, local, global };
std::string to_string(Scope s);

struct MultiplierBasis {
  Scope scope = Scope::at_infinity;
  std::vector<ExponentVector> exponents;  // lexicographic
  // Set when the input body has empty interior.
  std::optional<std::string> note;
};

MultiplierBasis multipliers_at_infinity(const Polytope& gamma_inf);
MultiplierBasis multipliers_local(const LocalStaircase& st);
MultiplierBasis multipliers_global(const Polytope& gamma_inf, const LocalStaircase& st);

// x in the interior of conv(generators) + orthant, decided exactly.
bool staircase_interior(const LocalStaircase& st, const Point& x);
bool staircase_closure(const LocalStaircase& st, const Point& x);

struct FmdRecord {
  bool applicable = false;  // gamma_inf is a lower set
  ExtendedRational c_inf;
  Rational m_n{0};
  Rational lhs_power{0};  // c_inf^n * m_n (meaningless when c_inf is infinite)
  Rational rhs_power{0};  // n!
  bool holds = false;     // c_inf >= (n!/m_n)^(1/n)
  bool equality = false;  // gamma_inf is a cube
};

struct MassReport {
  Rational vol_inf{0};
  std::vector<Rational> m;  // m[k] for k = 0..n
  std::optional<Rational> global_multiplicity;
  // nullopt: covolume infinite
  std::optional<Rational> local_residual_bound;
  std::optional<bool> lower_set;  // nullopt when the test does not apply
  std::optional<FmdRecord> fmd;
};

std::vector<Rational> ma_masses(const Polytope& gamma_inf);
// m_k(t u) = t^k m_k(u)
std::vector<Rational> scale_masses(const std::vector<Rational>& m, const Rational& t);

std::optional<Rational> global_multiplicity(const PolynomialMap& p, const NewtonData& nd,
                                            NndStatus nnd);
std::optional<Rational> residual_mass_bound(const LocalStaircase& st);
FmdRecord fmd_check(const Polytope& gamma_inf, const ExtendedRational& c_inf);
bool is_cube(const Polytope& k);

// p may be null (indicator input); fmd is filled only when c_inf is given.
MassReport mass_report(const NewtonData& nd, const PolynomialMap* p, NndStatus nnd,
                       const std::optional<ExtendedRational>& c_inf);

}  // namespace lctinf
