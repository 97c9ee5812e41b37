#include "lctinf/multipliers.hpp"

#include <algorithm>
#include <cmath>

#include "lctinf/errors.hpp"
#include "lctinf/lp.hpp"

namespace lctinf {

std::string to_string(Scope s) {
  switch (s) {
    case Scope::at_infinity: return "at-infinity";
    case Scope::local: return "local";
    case Scope::global: return "global";
  }
  return "at-infinity";
}

namespace {

Rational factorial(std::size_t n) {
  Rational f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<unsigned long>(k);
  return f;
}

// Odometer over the box prod [0, hi_k].
template <class F>
void scan_box(const std::vector<unsigned>& hi, F&& visit) {
  ExponentVector j(hi.size(), 0);
  while (true) {
    visit(j);
    std::size_t k = hi.size();
    while (k > 0) {
      --k;
      if (j[k] < hi[k]) {
        ++j[k];
        break;
      }
      j[k] = 0;
      if (k == 0) return;
    }
    if (hi.empty()) return;
  }
}

unsigned floor_u(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f < 0 ? 0u : static_cast<unsigned>(f.get_ui());
}

// maximize delta s.t. sum mu g + delta 1 <= x, sum mu = 1, mu >= 0, delta <= 1
std::optional<Rational> margin(const LocalStaircase& st, const Point& x) {
  const std::size_t m = st.generators.size();
  const std::size_t n = st.dim;
  LinearProgram lp(m + 1, Sense::maximize);
  lp.objective[m] = 1;
  lp.nonnegative.assign(m + 1, true);
  lp.nonnegative[m] = false;
  for (std::size_t k = 0; k < n; ++k) {
    Point row(m + 1, Rational(0));
    for (std::size_t i = 0; i < m; ++i) row[i] = st.generators[i][k];
    row[m] = 1;
    lp.add(std::move(row), Relation::less_equal, x[k]);
  }
  Point sum(m + 1, Rational(1));
  sum[m] = 0;
  lp.add(std::move(sum), Relation::equal, 1);
  lp.add(unit_vector(m + 1, m), Relation::less_equal, 1);
  LpResult r = solve_lp(lp);
  if (r.status != LpStatus::optimal) return std::nullopt;
  return r.value;
}

bool dominates_combination(const LocalStaircase& st, const Point& x) {
  const std::size_t m = st.generators.size();
  LinearProgram lp(m);
  lp.nonnegative.assign(m, true);
  for (std::size_t k = 0; k < st.dim; ++k) {
    Point row(m);
    for (std::size_t i = 0; i < m; ++i) row[i] = st.generators[i][k];
    lp.add(std::move(row), Relation::less_equal, x[k]);
  }
  lp.add(Point(m, Rational(1)), Relation::equal, 1);
  return solve_lp(lp).status == LpStatus::optimal;
}

}  // namespace

bool staircase_closure(const LocalStaircase& st, const Point& x) {
  if (x.size() != st.dim) throw DimensionError("staircase query dimension mismatch");
  return dominates_combination(st, x);
}

bool staircase_interior(const LocalStaircase& st, const Point& x) {
  if (x.size() != st.dim) throw DimensionError("staircase query dimension mismatch");
  if (auto d = margin(st, x)) return *d > 0;
  // fallback: certify some x - eps 1 in the closure
  for (int k = 0; k <= 40; ++k) {
    Rational eps(1);
    eps /= Rational(mpz_class(1) << k);
    if (dominates_combination(st, x - eps * ones(st.dim))) return true;
  }
  return false;
}

MultiplierBasis multipliers_at_infinity(const Polytope& g) {
  MultiplierBasis b;
  b.scope = Scope::at_infinity;
  if (!g.full_dim()) {
    b.note = "gamma_inf has empty interior";
    return b;
  }
  const std::size_t n = g.dim();
  std::vector<unsigned> hi(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    Rational top = 0;
    for (const auto& v : g.vertices()) top = std::max(top, v[k]);
    if (top <= 1) return b;  // J + 1 >= 1 can never be interior
    // J_k + 1 < top
    Rational lim = top - 1;
    unsigned f = floor_u(lim);
    if (Rational(f) == lim) --f;
    hi[k] = f;
  }
  scan_box(hi, [&](const ExponentVector& j) {
    if (contains(g, to_point(j) + ones(n), Containment::interior)) b.exponents.push_back(j);
  });
  return b;
}

MultiplierBasis multipliers_local(const LocalStaircase& st) {
  MultiplierBasis b;
  b.scope = Scope::local;
  const std::size_t n = st.dim;
  if (has_origin(st)) {
    b.exponents.push_back(ExponentVector(n, 0));
    return b;
  }
  // A minimal J has J_k <= max_g g_k in every coordinate.
  std::vector<unsigned> hi(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    Rational top = 0;
    for (const auto& g : st.generators) top = std::max(top, g[k]);
    hi[k] = floor_u(top);
  }
  std::vector<ExponentVector> members;
  scan_box(hi, [&](const ExponentVector& j) {
    if (staircase_interior(st, to_point(j) + ones(n))) members.push_back(j);
  });
  for (const auto& j : members) {
    bool minimal = true;
    for (const auto& i : members) {
      if (i == j) continue;
      bool le = true;
      for (std::size_t k = 0; k < n && le; ++k) le = i[k] <= j[k];
      if (le) {
        minimal = false;
        break;
      }
    }
    if (minimal) b.exponents.push_back(j);
  }
  return b;
}

MultiplierBasis multipliers_global(const Polytope& g, const LocalStaircase& st) {
  if (g.dim() != st.dim) throw DimensionError("multipliers_global: dimension mismatch");
  MultiplierBasis b = multipliers_at_infinity(g);
  b.scope = Scope::global;
  std::erase_if(b.exponents, [&](const ExponentVector& j) {
    return !staircase_interior(st, to_point(j) + ones(st.dim));
  });
  return b;
}

std::vector<Rational> ma_masses(const Polytope& g) {
  const std::size_t n = g.dim();
  const Rational nf = factorial(n);
  Polytope delta = standard_simplex(n);
  std::vector<Rational> m(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Polytope> bodies(k, g);
    bodies.insert(bodies.end(), n - k, delta);
    m[k] = nf * mixed_volume(bodies);
  }
  if (m[0] != 1) throw ConsistencyError("mixed mass m_0 differs from 1");
  if (m[n] != nf * volume(g)) throw ConsistencyError("mixed mass m_n differs from n! Vol");
  return m;
}

std::vector<Rational> scale_masses(const std::vector<Rational>& m, const Rational& t) {
  if (t <= 0) throw InputError("scale factor must be positive");
  std::vector<Rational> out(m.size());
  Rational p = 1;
  for (std::size_t k = 0; k < m.size(); ++k) {
    out[k] = m[k] * p;
    p *= t;
  }
  return out;
}

std::optional<Rational> global_multiplicity(const PolynomialMap& p, const NewtonData& nd,
                                            NndStatus nnd) {
  if (p.is_monomial_map()) nnd = NndStatus::verified;
  if (!is_convenient(nd).convenient || nnd != NndStatus::verified) return std::nullopt;
  return factorial(p.dim()) * volume(nd.gamma_inf);
}

std::optional<Rational> residual_mass_bound(const LocalStaircase& st) {
  const std::size_t n = st.dim;
  if (has_origin(st)) return Rational(0);
  for (std::size_t k = 0; k < n; ++k) {
    bool pure = false;
    for (const auto& g : st.generators) {
      bool on_axis = g[k] > 0;
      for (std::size_t j = 0; j < n && on_axis; ++j) on_axis = j == k || g[j] == 0;
      pure = pure || on_axis;
    }
    if (!pure) return std::nullopt;
  }
  Rational box = 0;
  for (const auto& g : st.generators)
    for (const auto& x : g) box = std::max(box, x);
  std::vector<Point> pts;
  for (const auto& g : st.generators)
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Point c = g;
      for (std::size_t k = 0; k < n; ++k)
        if (mask & (1u << k)) c[k] = box;
      pts.push_back(std::move(c));
    }
  Rational box_vol = 1;
  for (std::size_t k = 0; k < n; ++k) box_vol *= box;
  return factorial(n) * (box_vol - volume(convex_hull(pts)));
}

bool is_cube(const Polytope& k) {
  const std::size_t n = k.dim();
  if (!k.full_dim() || k.vertices().size() != (1u << n)) return false;
  Rational alpha = k.vertices().back()[0];
  if (alpha <= 0) return false;
  return k.vertices() == cube(n, alpha).vertices();
}

FmdRecord fmd_check(const Polytope& g, const ExtendedRational& c_inf) {
  const std::size_t n = g.dim();
  FmdRecord r;
  r.c_inf = c_inf;
  r.m_n = factorial(n) * volume(g);
  r.rhs_power = factorial(n);
  try {
    r.applicable = is_lower_set(g);
  } catch (const InputError&) {
    r.applicable = false;
  }
  if (c_inf.is_infinite()) {
    r.holds = true;
  } else {
    Rational p = 1;
    for (std::size_t k = 0; k < n; ++k) p *= c_inf.value();
    r.lhs_power = p * r.m_n;
    r.holds = r.lhs_power >= r.rhs_power;
  }
  r.equality = r.applicable && is_cube(g);
  return r;
}

MassReport mass_report(const NewtonData& nd, const PolynomialMap* p, NndStatus nnd,
                       const std::optional<ExtendedRational>& c_inf) {
  MassReport r;
  r.vol_inf = volume(nd.gamma_inf);
  r.m = ma_masses(nd.gamma_inf);
  if (p) r.global_multiplicity = global_multiplicity(*p, nd, nnd);
  r.local_residual_bound = residual_mass_bound(nd.staircase);
  try {
    r.lower_set = is_lower_set(nd.gamma_inf);
  } catch (const InputError&) {
  }
  if (c_inf) r.fmd = fmd_check(nd.gamma_inf, *c_inf);
  return r;
}

}  // namespace lctinf
