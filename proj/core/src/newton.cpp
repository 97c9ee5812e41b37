#include "lctinf/newton.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "lctinf/errors.hpp"

namespace lctinf {

namespace {

bool dominated_by(const Point& a, const Point& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (b[k] > a[k]) return false;
  return true;
}

std::vector<std::optional<Rational>> intercepts(const Polytope& gamma_inf) {
  std::vector<std::optional<Rational>> r;
  for (std::size_t k = 0; k < gamma_inf.dim(); ++k) {
    ExtendedRational t = ray_hit(gamma_inf, unit_vector(gamma_inf.dim(), k));
    if (t.is_infinite()) throw std::logic_error("bounded body with unbounded axis ray");
    if (t.value() > 0) r.emplace_back(t.value());
    else r.emplace_back(std::nullopt);
  }
  return r;
}

NewtonData build(std::size_t dim, const std::vector<Point>& support) {
  std::vector<Point> with_origin = support;
  with_origin.push_back(zeros(dim));
  NewtonData nd{convex_hull(support), convex_hull(with_origin), make_staircase(dim, support), {}};
  nd.axis_intercepts = intercepts(nd.gamma_inf);
  return nd;
}

}  // namespace

LocalStaircase make_staircase(std::size_t dim, std::vector<Point> points) {
  if (points.empty()) throw InputError("staircase needs at least one generator");
  for (const auto& p : points)
    if (p.size() != dim) throw DimensionError("staircase generator dimension mismatch");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  LocalStaircase st{dim, {}};
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < points.size() && !drop; ++j)
      drop = j != i && dominated_by(points[i], points[j]);
    if (!drop) st.generators.push_back(points[i]);
  }
  return st;
}

bool has_origin(const LocalStaircase& st) {
  for (const auto& g : st.generators)
    if (std::all_of(g.begin(), g.end(), [](const Rational& x) { return x == 0; })) return true;
  return false;
}

NewtonData newton_polytopes(const PolynomialMap& p) {
  std::vector<Point> support;
  for (const auto& j : p.support()) support.push_back(to_point(j));
  return build(p.dim(), support);
}

NewtonData newton_data(const ToricIndicatorSpec& spec) {
  validate(spec);
  return build(spec.dim, spec.generators);
}

Convenience is_convenient(const NewtonData& nd) {
  Convenience c{true, nd.axis_intercepts};
  for (const auto& r : nd.axis_intercepts) c.convenient = c.convenient && r.has_value();
  return c;
}

FaceList faces_at_infinity(const NewtonData& nd) { return faces_at_infinity(nd.gamma_inf); }

FaceList faces_at_infinity(const Polytope& g) {
  FaceList out;
  if (!g.full_dim()) {
    out.warning = "gamma_inf is not full-dimensional; no faces at infinity";
    return out;
  }
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> queue;
  for (const auto& inc : g.facet_vertices())
    if (seen.insert(inc).second) queue.push_back(inc);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& inc : g.facet_vertices()) {
      std::vector<std::size_t> meet;
      std::set_intersection(queue[q].begin(), queue[q].end(), inc.begin(), inc.end(),
                            std::back_inserter(meet));
      if (!meet.empty() && seen.insert(meet).second) queue.push_back(meet);
    }
  }

  const std::size_t n = g.dim();
  for (const auto& idx : seen) {
    std::vector<Point> verts;
    for (auto i : idx) verts.push_back(g.vertices()[i]);
    // 0 in aff(F) iff (0,1) lies in the row space of [v 1].
    Matrix rows;
    for (const auto& v : verts) {
      Point r = v;
      r.push_back(1);
      rows.push_back(std::move(r));
    }
    std::size_t r0 = rank(rows);
    Point origin = zeros(n);
    origin.push_back(1);
    rows.push_back(origin);
    if (rank(rows) == r0) continue;

    Point normal = zeros(n);
    for (std::size_t f = 0; f < g.facets().size(); ++f) {
      const auto& inc = g.facet_vertices()[f];
      if (std::includes(inc.begin(), inc.end(), idx.begin(), idx.end()))
        normal = normal + g.facets()[f].normal;
    }
    Face face;
    face.offset = dot(normal, verts[0]);
    face.normal = std::move(normal);
    face.dimension = affine_dimension(verts);
    face.vertices = std::move(verts);
    out.faces.push_back(std::move(face));
  }
  std::sort(out.faces.begin(), out.faces.end(), [](const Face& a, const Face& b) {
    if (a.dimension != b.dimension) return a.dimension > b.dimension;
    return a.vertices < b.vertices;
  });
  return out;
}

FaceReduction face_reduction(const PolynomialMap& p, const Face& face) {
  std::vector<Polynomial> comps;
  for (const auto& c : p.components()) {
    Polynomial r(p.dim());
    for (const auto& [j, coef] : c.terms())
      if (dot(face.normal, to_point(j)) == face.offset) r.add_term(j, coef);
    comps.push_back(std::move(r));
  }
  return {face.normal, face.offset, PolynomialMap(p.dim(), std::move(comps))};
}

std::string to_string(NndStatus s) {
  switch (s) {
    case NndStatus::verified: return "verified";
    case NndStatus::refuted: return "refuted";
    case NndStatus::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

using cd = std::complex<double>;

struct Term {
  cd coef;
  std::vector<unsigned> exp;
};

using System = std::vector<std::vector<Term>>;

System to_system(const PolynomialMap& p) {
  System sys;
  for (const auto& c : p.components()) {
    if (c.is_zero()) continue;
    std::vector<Term> ts;
    for (const auto& [j, coef] : c.terms()) ts.push_back({cd(coef.re.get_d(), coef.im.get_d()), j});
    sys.push_back(std::move(ts));
  }
  return sys;
}

// Residuals in w = log z, with Jacobian d/dw_k = z_k d/dz_k, and the
// largest relative residual |F_i| / sum |c z^J|.
double evaluate(const System& sys, const Eigen::VectorXcd& w, Eigen::VectorXcd& f,
                Eigen::MatrixXcd& jac) {
  const auto n = w.size();
  const auto q = static_cast<Eigen::Index>(sys.size());
  f.setZero(q);
  jac.setZero(q, n);
  double rel = 0;
  for (Eigen::Index i = 0; i < q; ++i) {
    double scale = 0;
    for (const auto& t : sys[static_cast<std::size_t>(i)]) {
      cd e = 0;
      for (Eigen::Index k = 0; k < n; ++k) e += static_cast<double>(t.exp[static_cast<std::size_t>(k)]) * w[k];
      cd m = t.coef * std::exp(e);
      f[i] += m;
      scale += std::abs(m);
      for (Eigen::Index k = 0; k < n; ++k) jac(i, k) += static_cast<double>(t.exp[static_cast<std::size_t>(k)]) * m;
    }
    rel = std::max(rel, std::abs(f[i]) / std::max(scale, 1e-300));
  }
  return rel;
}

std::optional<Eigen::VectorXcd> descend(const System& sys, Eigen::VectorXcd w, const NndBudget& b) {
  const auto n = w.size();
  Eigen::VectorXcd f, trial_f;
  Eigen::MatrixXcd jac, trial_j;
  double rel = evaluate(sys, w, f, jac);
  double mu = 1e-3;
  const double log_bound = -std::log(b.min_modulus);
  for (unsigned it = 0; it < b.max_iterations; ++it) {
    if (rel < b.tolerance) return w;
    Eigen::MatrixXcd a = jac.adjoint() * jac;
    a.diagonal().array() += mu * (1.0 + a.diagonal().real().array());
    Eigen::VectorXcd step = a.ldlt().solve(-jac.adjoint() * f);
    Eigen::VectorXcd trial = w + step;
    double trial_rel = evaluate(sys, trial, trial_f, trial_j);
    if (trial_f.squaredNorm() < f.squaredNorm() && std::isfinite(trial_rel)) {
      w = trial;
      f = trial_f;
      jac = trial_j;
      rel = trial_rel;
      mu = std::max(mu / 3, 1e-12);
    } else {
      mu *= 4;
      if (mu > 1e12) break;
    }
    for (Eigen::Index k = 0; k < n; ++k)
      if (std::abs(w[k].real()) > log_bound) return std::nullopt;
  }
  if (rel < b.tolerance) return w;
  return std::nullopt;
}

}  // namespace

NndResult nnd_check(const PolynomialMap& p, const NndBudget& budget) {
  NndResult res;
  if (p.is_monomial_map()) {
    res.status = NndStatus::verified;
    return res;
  }
  NewtonData nd = newton_polytopes(p);
  FaceList faces = faces_at_infinity(nd);
  if (faces.warning) return res;

  const auto n = static_cast<Eigen::Index>(p.dim());
  bool all_exact = true;
  for (std::size_t fi = 0; fi < faces.faces.size(); ++fi) {
    const Face& face = faces.faces[fi];
    ++res.faces_checked;
    FaceReduction red = face_reduction(p, face);
    bool has_monomial = false;
    for (const auto& c : red.reduced_map.components()) has_monomial = has_monomial || c.is_monomial();
    if (has_monomial) {
      ++res.faces_exact;
      continue;
    }
    all_exact = false;
    System sys = to_system(red.reduced_map);
    std::seed_seq seq{static_cast<std::uint32_t>(budget.seed), static_cast<std::uint32_t>(budget.seed >> 32),
                      static_cast<std::uint32_t>(fi)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> logmod(-std::log(budget.radius), std::log(budget.radius));
    std::uniform_real_distribution<double> phase(0.0, 2 * M_PI);
    for (unsigned s = 0; s < budget.starts_per_face; ++s) {
      Eigen::VectorXcd w(n);
      for (Eigen::Index k = 0; k < n; ++k) {
        double r = logmod(rng);
        w[k] = cd(r, phase(rng));
      }
      if (auto hit = descend(sys, w, budget)) {
        res.status = NndStatus::refuted;
        for (Eigen::Index k = 0; k < n; ++k) res.witness.push_back(std::exp((*hit)[k]));
        res.face = face;
        return res;
      }
    }
  }
  res.status = all_exact ? NndStatus::verified : NndStatus::unknown;
  return res;
}

}  // namespace lctinf
