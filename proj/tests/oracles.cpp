#include "oracles.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lctinf/lp.hpp"

namespace oracle {

using lctinf::LinearProgram;
using lctinf::LpStatus;
using lctinf::Relation;
using lctinf::Sense;
using lctinf::operator+;

namespace {

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// variables mu_1..mu_m >= 0 (plus extras), sum mu = 1
LinearProgram combination_lp(const std::vector<Point>& gens, std::size_t extra) {
  const std::size_t m = gens.size();
  LinearProgram lp(m + extra);
  lp.nonnegative.assign(m + extra, false);
  for (std::size_t i = 0; i < m; ++i) lp.nonnegative[i] = true;
  Point row(m + extra, Rational(0));
  for (std::size_t i = 0; i < m; ++i) row[i] = 1;
  lp.add(row, Relation::equal, 1);
  return lp;
}

}  // namespace

std::vector<Point> hull2d(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

Rational area2d(const std::vector<Point>& ccw) {
  if (ccw.size() < 3) return 0;
  Rational s = 0;
  for (std::size_t i = 0; i < ccw.size(); ++i) {
    const auto& a = ccw[i];
    const auto& b = ccw[(i + 1) % ccw.size()];
    s += a[0] * b[1] - a[1] * b[0];
  }
  return s / 2;
}

Rational area_of(const std::vector<Point>& pts) { return area2d(hull2d(pts)); }

std::vector<Point> pairwise_sums(const std::vector<Point>& a, const std::vector<Point>& b) {
  std::vector<Point> out;
  for (const auto& p : a)
    for (const auto& q : b) out.push_back(p + q);
  return out;
}

Rational mixed_area(const std::vector<Point>& a, const std::vector<Point>& b) {
  return (area_of(pairwise_sums(a, b)) - area_of(a) - area_of(b)) / 2;
}

Rational support(const std::vector<Point>& gens, const Point& t) {
  Rational best = lctinf::dot(gens.at(0), t);
  for (const auto& g : gens) best = std::max(best, Rational(lctinf::dot(g, t)));
  return best;
}

bool in_hull(const std::vector<Point>& gens, const Point& p) {
  const std::size_t m = gens.size(), n = p.size();
  LinearProgram lp = combination_lp(gens, 0);
  for (std::size_t k = 0; k < n; ++k) {
    Point row(m);
    for (std::size_t i = 0; i < m; ++i) row[i] = gens[i][k];
    lp.add(row, Relation::equal, p[k]);
  }
  return solve_lp(lp).status == LpStatus::optimal;
}

bool in_interior(const std::vector<Point>& gens, const Point& p, const Rational& eps) {
  for (std::size_t k = 0; k < p.size(); ++k)
    for (int s : {-1, 1}) {
      Point q = p;
      q[k] += eps * s;
      if (!in_hull(gens, q)) return false;
    }
  return true;
}

Rational ray_max(const std::vector<Point>& gens, const Point& d) {
  const std::size_t m = gens.size(), n = d.size();
  LinearProgram lp = combination_lp(gens, 1);
  lp.sense = Sense::maximize;
  lp.objective[m] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    Point row(m + 1);
    for (std::size_t i = 0; i < m; ++i) row[i] = gens[i][k];
    row[m] = -d[k];
    lp.add(row, Relation::equal, 0);
  }
  auto r = solve_lp(lp);
  if (r.status != LpStatus::optimal) throw std::runtime_error("ray_max: LP not optimal");
  return r.value;
}

bool in_upper(const std::vector<Point>& gens, const Point& x) {
  const std::size_t m = gens.size(), n = x.size();
  LinearProgram lp = combination_lp(gens, 0);
  for (std::size_t k = 0; k < n; ++k) {
    Point row(m);
    for (std::size_t i = 0; i < m; ++i) row[i] = gens[i][k];
    lp.add(row, Relation::less_equal, x[k]);
  }
  return solve_lp(lp).status == LpStatus::optimal;
}

bool lower_set_grid(const lctinf::Polytope& k, const Rational& mesh) {
  const std::size_t n = k.dim();
  Point hi(n, Rational(0));
  for (const auto& v : k.vertices())
    for (std::size_t i = 0; i < n; ++i) hi[i] = std::max(hi[i], v[i]);
  std::vector<long> steps(n), idx(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Rational s = hi[i] / mesh;
    mpz_class f = s.get_num() / s.get_den();
    steps[i] = f.get_si();
  }
  while (true) {
    Point x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = mesh * idx[i];
    if (lctinf::contains(k, x)) {
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        Point y = x;
        for (std::size_t i = 0; i < n; ++i)
          if (mask & (1u << i)) y[i] = 0;
        if (!lctinf::contains(k, y)) return false;
      }
    }
    std::size_t i = 0;
    while (i < n && idx[i] == steps[i]) idx[i++] = 0;
    if (i == n) break;
    ++idx[i];
  }
  return true;
}

std::vector<std::vector<unsigned>> lattice_box(std::size_t n, unsigned bound) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> j(n, 0);
  while (true) {
    out.push_back(j);
    std::size_t i = 0;
    while (i < n && j[i] == bound) j[i++] = 0;
    if (i == n) break;
    ++j[i];
  }
  return out;
}

std::vector<Point> random_diagram(Rng& rng, std::size_t n, long max, std::size_t count) {
  std::vector<Point> pts{Point(n, Rational(0))};
  for (std::size_t i = 0; i < count; ++i) {
    Point p;
    for (std::size_t k = 0; k < n; ++k) p.push_back(Rational(rng.uniform(0, max)));
    pts.push_back(std::move(p));
  }
  return pts;
}

std::vector<Point> random_lower_diagram(Rng& rng, std::size_t n, long max, std::size_t count) {
  std::set<Point> closed;
  for (const auto& p : random_diagram(rng, n, max, count))
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Point q = p;
      for (std::size_t k = 0; k < n; ++k)
        if (mask & (1u << k)) q[k] = 0;
      closed.insert(q);
    }
  return {closed.begin(), closed.end()};
}

std::string dense_univariate(Rng& rng, unsigned d) {
  std::ostringstream s;
  for (unsigned e = 0; e <= d; ++e) {
    long c = 0;
    while (c == 0) c = rng.uniform(-9, 9);
    if (e > 0) s << (c < 0 ? " - " : " + ");
    else if (c < 0) s << "-";
    s << std::labs(c);
    if (e > 0) s << "*z1^" << e;
  }
  return s.str();
}

}  // namespace oracle
