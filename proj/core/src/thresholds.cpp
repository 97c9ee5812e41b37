#include "lctinf/thresholds.hpp"

#include <algorithm>

#include "lctinf/errors.hpp"
#include "lctinf/lp.hpp"

namespace lctinf {

std::string to_string(Method m) {
  switch (m) {
    case Method::closed_form_1d: return "closed-form-1d";
    case Method::toric_exact: return "toric-exact";
    case Method::nnd_exact: return "nnd-exact";
    case Method::bounds_only: return "bounds-only";
  }
  return "bounds-only";
}

namespace {

ThresholdInterval reciprocal(const ThresholdInterval& c) {
  return {lctinf::reciprocal(c.hi), lctinf::reciprocal(c.lo)};
}

ExtendedRational divide(const ExtendedRational& x, const Rational& t) {
  if (x.is_infinite()) return x;
  return ExtendedRational(Rational(x.value() / t));
}

void finish(ThresholdReport& r) { r.lambda_inf = reciprocal(r.c_inf); }

}  // namespace

ExtendedRational lct_infinity_from_polytope(const Polytope& g) {
  const std::size_t n = g.dim();
  if (!contains(g, zeros(n))) throw InputError("lct_infinity_from_polytope: origin not in body");
  ExtendedRational ray = ray_hit(g, ones(n));
  if (ray.is_infinite()) throw std::logic_error("bounded body with unbounded diagonal");
  if (ray.value() == 0) return ExtendedRational::infinity();
  Point mid = Rational(ray.value() / 2) * ones(n);
  if (!contains(g, mid, Containment::interior)) return ExtendedRational::infinity();
  return lctinf::reciprocal(ray);
}

Rational diagonal_lp_value(const Polytope& g) {
  const std::size_t n = g.dim();
  LinearProgram lp(n + 1);
  lp.objective[n] = 1;
  for (const auto& v : g.vertices()) {
    Point row = v;
    row.push_back(-1);
    lp.add(std::move(row), Relation::less_equal, 0);
  }
  Point sum = ones(n);
  sum.push_back(0);
  lp.add(std::move(sum), Relation::equal, 1);
  LpResult r = solve_lp(lp);
  if (r.status != LpStatus::optimal) throw ConsistencyError("diagonal LP is not optimal");
  return r.value;
}

ExtendedRational lct_indicator_lp(const Polytope& g) {
  const std::size_t n = g.dim();
  if (!contains(g, zeros(n))) throw InputError("lct_indicator_lp: origin not in body");
  Rational lambda = diagonal_lp_value(g);
  ExtendedRational ray = ray_hit(g, ones(n));
  if (ray != ExtendedRational(lambda))
    throw ConsistencyError("LP optimum " + to_string(lambda) + " differs from ray parameter " +
                           to_string(ray));
  ExtendedRational c = lct_infinity_from_polytope(g);
  if (c.is_finite() && c.value() * lambda != 1)
    throw ConsistencyError("LP and ray thresholds disagree");
  return c;
}

ExtendedRational lct_local_toric(const LocalStaircase& st) {
  if (has_origin(st)) return ExtendedRational::infinity();
  const std::size_t m = st.generators.size();
  const std::size_t n = st.dim;
  // variables: mu_1..mu_m, lambda
  LinearProgram lp(m + 1);
  lp.objective[m] = 1;
  lp.nonnegative.assign(m + 1, true);
  lp.nonnegative[m] = false;
  for (std::size_t k = 0; k < n; ++k) {
    Point row(m + 1, Rational(0));
    for (std::size_t i = 0; i < m; ++i) row[i] = st.generators[i][k];
    row[m] = -1;
    lp.add(std::move(row), Relation::less_equal, 0);
  }
  Point sum(m + 1, Rational(1));
  sum[m] = 0;
  lp.add(std::move(sum), Relation::equal, 1);
  LpResult r = solve_lp(lp);
  if (r.status != LpStatus::optimal) throw ConsistencyError("local threshold LP is not optimal");
  return lctinf::reciprocal(ExtendedRational(r.value));
}

ThresholdReport lct_map(const PolynomialMap& p, NndStatus nnd, bool toric) {
  const std::size_t n = p.dim();
  ThresholdReport r;
  r.sigma = degree(p);
  r.nnd_status = toric ? NndStatus::verified : nnd;
  NewtonData nd = newton_polytopes(p);
  Convenience conv = is_convenient(nd);
  r.convenient = conv.convenient;
  r.c_zero = lct_local_toric(nd.staircase);
  r.c_zero_certified = toric || has_origin(nd.staircase);

  if (n == 1) {
    r.method = Method::closed_form_1d;
    r.c_inf = ThresholdInterval::exact(lctinf::reciprocal(ExtendedRational(r.sigma)));
    if (r.sigma > 0) r.loja = r.sigma;
    finish(r);
    return r;
  }

  if (conv.convenient && r.nnd_status == NndStatus::verified) {
    Rational l = *conv.intercepts[0];
    for (const auto& x : conv.intercepts) l = std::min(l, *x);
    r.loja = l;
  }

  if (toric || (conv.convenient && r.nnd_status == NndStatus::verified)) {
    r.method = toric ? Method::toric_exact : Method::nnd_exact;
    ExtendedRational c = lct_infinity_from_polytope(nd.gamma_inf);
    if (c.is_finite() && c != lct_indicator_lp(nd.gamma_inf))
      throw ConsistencyError("exact threshold routes disagree");
    r.c_inf = ThresholdInterval::exact(c);
  } else {
    r.method = Method::bounds_only;
    ExtendedRational lo = r.sigma == 0 ? ExtendedRational::infinity()
                                       : ExtendedRational(Rational(Rational(n) / r.sigma));
    ExtendedRational hi = ExtendedRational::infinity();
    if (r.loja && *r.loja > 0) hi = ExtendedRational(Rational(Rational(n) / *r.loja));
    r.c_inf = {lo, hi};
  }
  finish(r);
  return r;
}

ThresholdReport lct_map(const PolynomialMap& p, NndStatus nnd) {
  return lct_map(p, nnd, p.is_monomial_map());
}

ThresholdReport lct_indicator(const ToricIndicatorSpec& spec) {
  NewtonData nd = newton_data(spec);
  ThresholdReport r;
  r.method = Method::toric_exact;
  r.nnd_status = NndStatus::verified;
  r.sigma = supporting_value(nd.gamma_inf, ones(spec.dim));
  Convenience conv = is_convenient(nd);
  r.convenient = conv.convenient;
  if (conv.convenient) {
    Rational l = *conv.intercepts[0];
    for (const auto& x : conv.intercepts) l = std::min(l, *x);
    r.loja = l;
  }
  r.c_inf = ThresholdInterval::exact(lct_infinity_from_polytope(nd.gamma_inf));
  if (r.c_inf.lo.is_finite() && r.c_inf.lo != lct_indicator_lp(nd.gamma_inf))
    throw ConsistencyError("exact threshold routes disagree");
  r.c_zero = lct_local_toric(nd.staircase);
  r.c_zero_certified = true;
  finish(r);
  return r;
}

ThresholdReport scale_threshold(const ThresholdReport& in, const Rational& t) {
  if (t <= 0) throw InputError("scale factor must be positive");
  ThresholdReport r = in;
  r.c_inf = {divide(in.c_inf.lo, t), divide(in.c_inf.hi, t)};
  r.c_zero = divide(in.c_zero, t);
  r.sigma = in.sigma * t;
  if (in.loja) r.loja = *in.loja * t;
  finish(r);
  return r;
}

bool is_corner_simplex(const Polytope& k) {
  const std::size_t n = k.dim();
  if (!k.full_dim() || k.vertices().size() != n + 1) return false;
  if (k.vertices()[0] != zeros(n)) return false;
  std::vector<bool> axis(n, false);
  for (std::size_t i = 1; i < k.vertices().size(); ++i) {
    const Point& v = k.vertices()[i];
    int nonzero = 0;
    std::size_t at = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (v[j] != 0) {
        ++nonzero;
        at = j;
      }
    if (nonzero != 1 || v[at] < 0 || axis[at]) return false;
    axis[at] = true;
  }
  return true;
}

LocGlob locglob_compare(const LocalStaircase& st, const Polytope& gamma_inf) {
  LocGlob r;
  r.c_inf = lct_infinity_from_polytope(gamma_inf);
  r.c_zero = lct_local_toric(st);
  if (r.c_inf > r.c_zero)
    throw ConsistencyError("toric data with c_inf " + to_string(r.c_inf) + " > c_zero " +
                           to_string(r.c_zero));
  r.equality = r.c_inf == r.c_zero;
  r.simplex_detected = is_corner_simplex(gamma_inf);
  return r;
}

}  // namespace lctinf
