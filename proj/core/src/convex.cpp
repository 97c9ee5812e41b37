#include "lctinf/convex.hpp"

#include <algorithm>
#include <optional>

#include "lctinf/errors.hpp"

namespace lctinf {

HalfSpace HalfSpace::canonical(Point normal, Rational offset) {
  auto it = std::find_if(normal.begin(), normal.end(), [](const Rational& x) { return x != 0; });
  if (it == normal.end()) throw InputError("half-space with zero normal");
  Rational s = abs(*it);
  for (auto& x : normal) x /= s;
  offset /= s;
  return {std::move(normal), std::move(offset)};
}

bool operator<(const HalfSpace& a, const HalfSpace& b) {
  if (a.normal != b.normal)
    return std::lexicographical_compare(a.normal.begin(), a.normal.end(), b.normal.begin(),
                                        b.normal.end());
  return a.offset < b.offset;
}

namespace {

struct Facet {
  HalfSpace h;
  std::vector<std::size_t> inc;  // sorted point indices tight at h
};

void check_ambient(std::size_t n) {
  if (n == 0) throw DimensionError("ambient dimension must be positive");
  if (n > kMaxDimension)
    throw DimensionError("ambient dimension " + std::to_string(n) + " exceeds kernel limit " +
                         std::to_string(kMaxDimension));
}

// Hyperplane through `through`, oriented so `inside` is strictly on the <= side.
std::optional<HalfSpace> hyperplane(const std::vector<Point>& through, const Point& inside) {
  const std::size_t d = inside.size();
  Matrix diffs;
  for (std::size_t i = 1; i < through.size(); ++i) diffs.push_back(through[i] - through[0]);
  std::vector<Point> ns = nullspace(std::move(diffs), d);
  if (ns.size() != 1) return std::nullopt;
  Point a = std::move(ns[0]);
  Rational b = dot(a, through[0]);
  Rational s = dot(a, inside) - b;
  if (s == 0) return std::nullopt;
  if (s > 0) {
    for (auto& x : a) x = -x;
    b = -b;
  }
  return HalfSpace::canonical(std::move(a), std::move(b));
}

std::vector<std::size_t> tight(const HalfSpace& h, const std::vector<Point>& pts,
                               const std::vector<std::size_t>& active) {
  std::vector<std::size_t> inc;
  for (auto i : active)
    if (h.slack(pts[i]) == 0) inc.push_back(i);
  std::sort(inc.begin(), inc.end());
  return inc;
}

std::vector<Point> gather(const std::vector<Point>& pts, const std::vector<std::size_t>& idx) {
  std::vector<Point> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(pts[i]);
  return out;
}

// Beneath-beyond on distinct points spanning R^d. Returns facets with
// incidence into `pts` and the processed (candidate vertex) indices.
std::vector<Facet> full_hull(const std::vector<Point>& pts, std::vector<std::size_t>& active) {
  const std::size_t d = pts[0].size();
  std::vector<std::size_t> simplex{0};
  Matrix span;
  for (std::size_t i = 1; i < pts.size() && simplex.size() < d + 1; ++i) {
    Matrix trial = span;
    trial.push_back(pts[i] - pts[0]);
    if (rank(trial) > span.size()) {
      span.push_back(pts[i] - pts[0]);
      simplex.push_back(i);
    }
  }
  Point center = zeros(d);
  for (auto i : simplex) center = center + pts[i];
  center = Rational(1, static_cast<unsigned long>(d + 1)) * center;

  active = simplex;
  std::vector<Facet> facets;
  for (std::size_t k = 0; k < simplex.size(); ++k) {
    std::vector<Point> others;
    for (std::size_t j = 0; j < simplex.size(); ++j)
      if (j != k) others.push_back(pts[simplex[j]]);
    auto h = hyperplane(others, center);
    facets.push_back({*h, tight(*h, pts, active)});
  }

  std::vector<bool> in_simplex(pts.size(), false);
  for (auto i : simplex) in_simplex[i] = true;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (in_simplex[i]) continue;
    const Point& p = pts[i];
    std::vector<Facet> visible, kept;
    for (auto& f : facets) {
      int s = sgn(f.h.slack(p));
      if (s > 0) {
        visible.push_back(std::move(f));
      } else {
        if (s == 0) f.inc.insert(std::upper_bound(f.inc.begin(), f.inc.end(), i), i);
        kept.push_back(std::move(f));
      }
    }
    if (visible.empty()) {
      // inside or on the boundary: never a vertex of the final hull
      for (auto& f : kept) f.inc.erase(std::remove(f.inc.begin(), f.inc.end(), i), f.inc.end());
      facets = std::move(kept);
      continue;
    }
    active.push_back(i);
    std::vector<HalfSpace> fresh;
    for (const auto& f : visible) {
      for (const auto& g : kept) {
        std::vector<std::size_t> ridge;
        std::set_intersection(f.inc.begin(), f.inc.end(), g.inc.begin(), g.inc.end(),
                              std::back_inserter(ridge));
        ridge.erase(std::remove(ridge.begin(), ridge.end(), i), ridge.end());
        std::vector<Point> rp = gather(pts, ridge);
        if (affine_dimension(rp) != static_cast<int>(d) - 2) continue;
        rp.insert(rp.begin(), p);
        auto h = hyperplane(rp, center);
        if (h) fresh.push_back(*h);
      }
    }
    std::sort(fresh.begin(), fresh.end());
    fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
    facets.clear();
    for (auto& g : kept) {
      auto it = std::lower_bound(fresh.begin(), fresh.end(), g.h);
      if (it != fresh.end() && *it == g.h) fresh.erase(it);
      facets.push_back(std::move(g));
    }
    for (auto& h : fresh) facets.push_back({h, tight(h, pts, active)});
  }
  return facets;
}

// Chart of the affine hull: pivot coordinates from the echelon form.
std::vector<std::size_t> chart(const std::vector<Point>& pts) {
  Matrix diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
  if (diffs.empty()) return {};
  return row_reduce(diffs);
}

Point project(const Point& p, const std::vector<std::size_t>& cols) {
  Point q;
  q.reserve(cols.size());
  for (auto c : cols) q.push_back(p[c]);
  return q;
}

// Facets (incidence into pts) of conv(pts) inside its own affine hull.
std::vector<Facet> relative_facets(const std::vector<Point>& pts) {
  std::vector<std::size_t> cols = chart(pts);
  if (cols.empty()) return {};
  std::vector<Point> q;
  for (const auto& p : pts) q.push_back(project(p, cols));
  std::vector<std::size_t> active;
  return full_hull(q, active);
}

Rational factorial(std::size_t n) {
  Rational f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<unsigned long>(k);
  return f;
}

void pulling(const std::vector<Point>& v, const std::vector<std::size_t>& idx, int k,
             std::vector<std::size_t>& stack, std::vector<std::vector<std::size_t>>& out) {
  if (k == 0) {
    stack.push_back(idx[0]);
    out.push_back(stack);
    stack.pop_back();
    return;
  }
  std::vector<Facet> fs = relative_facets(gather(v, idx));
  stack.push_back(idx[0]);
  for (const auto& f : fs) {
    if (std::binary_search(f.inc.begin(), f.inc.end(), std::size_t{0})) continue;
    std::vector<std::size_t> sub;
    for (auto j : f.inc) sub.push_back(idx[j]);
    pulling(v, sub, k - 1, stack, out);
  }
  stack.pop_back();
}

}  // namespace

Polytope convex_hull(std::span<const Point> points) {
  if (points.empty()) throw InputError("convex_hull: empty point list");
  const std::size_t n = points[0].size();
  check_ambient(n);
  for (const auto& p : points)
    if (p.size() != n) throw DimensionError("convex_hull: mixed point dimensions");

  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Polytope k;
  k.dim_ = n;
  std::vector<std::size_t> cols = chart(pts);
  const std::size_t d = cols.size();
  k.affine_dim_ = static_cast<int>(d);

  std::vector<Facet> facets;
  std::vector<std::size_t> active;
  if (d == 0) {
    active = {0};
  } else if (d == n) {
    facets = full_hull(pts, active);
  } else {
    std::vector<Point> q;
    for (const auto& p : pts) q.push_back(project(p, cols));
    facets = full_hull(q, active);
    for (auto& f : facets) {
      Point a = zeros(n);
      for (std::size_t j = 0; j < d; ++j) a[cols[j]] = f.h.normal[j];
      f.h = HalfSpace::canonical(std::move(a), f.h.offset);
    }
  }
  if (d < n) {
    Matrix diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
    for (auto& w : nullspace(std::move(diffs), n)) {
      Rational b = dot(w, pts[0]);
      k.equations_.push_back(HalfSpace::canonical(std::move(w), b));
    }
    std::sort(k.equations_.begin(), k.equations_.end());
  }

  // Keep processed points whose tight facet normals span the chart.
  std::sort(active.begin(), active.end());
  std::vector<std::size_t> keep;
  for (auto i : active) {
    if (d == 0) {
      keep.push_back(i);
      continue;
    }
    Matrix normals;
    for (const auto& f : facets)
      if (std::binary_search(f.inc.begin(), f.inc.end(), i)) normals.push_back(f.h.normal);
    if (rank(std::move(normals)) == d) keep.push_back(i);
  }
  for (auto i : keep) k.vertices_.push_back(pts[i]);

  std::sort(facets.begin(), facets.end(),
            [](const Facet& a, const Facet& b) { return a.h < b.h; });
  for (const auto& f : facets) {
    std::vector<std::size_t> inc;
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (std::binary_search(f.inc.begin(), f.inc.end(), keep[j])) inc.push_back(j);
    k.facets_.push_back(f.h);
    k.incidence_.push_back(std::move(inc));
  }
  return k;
}

Rational supporting_value(const Polytope& k, const Point& t) {
  if (t.size() != k.dim()) throw DimensionError("supporting_value: dimension mismatch");
  Rational best = dot(k.vertices()[0], t);
  for (const auto& v : k.vertices()) {
    Rational s = dot(v, t);
    if (s > best) best = s;
  }
  return best;
}

bool contains(const Polytope& k, const Point& p, Containment mode) {
  if (p.size() != k.dim()) throw DimensionError("contains: dimension mismatch");
  if (mode == Containment::interior) {
    if (!k.full_dim()) return false;
    for (const auto& f : k.facets())
      if (f.slack(p) >= 0) return false;
    return true;
  }
  for (const auto& e : k.equations())
    if (e.slack(p) != 0) return false;
  for (const auto& f : k.facets())
    if (f.slack(p) > 0) return false;
  return true;
}

ExtendedRational ray_hit(const Polytope& k, const Point& d) {
  if (d.size() != k.dim()) throw DimensionError("ray_hit: dimension mismatch");
  if (!contains(k, zeros(k.dim()))) throw InputError("ray_hit: origin not in body");
  if (std::all_of(d.begin(), d.end(), [](const Rational& x) { return x == 0; }))
    throw InputError("ray_hit: zero direction");
  for (const auto& e : k.equations())
    if (dot(e.normal, d) != 0) return ExtendedRational(Rational(0));
  std::optional<Rational> best;
  for (const auto& f : k.facets()) {
    Rational nd = dot(f.normal, d);
    if (nd <= 0) continue;
    Rational t = f.offset / nd;
    if (!best || t < *best) best = t;
  }
  if (!best) return ExtendedRational::infinity();
  return ExtendedRational(*best);
}

Polytope minkowski_sum(const Polytope& a, const Polytope& b) {
  if (a.dim() != b.dim()) throw DimensionError("minkowski_sum: dimension mismatch");
  std::vector<Point> sums;
  sums.reserve(a.vertices().size() * b.vertices().size());
  for (const auto& u : a.vertices())
    for (const auto& v : b.vertices()) sums.push_back(u + v);
  return convex_hull(sums);
}

Polytope scaled(const Polytope& k, const Rational& s) {
  std::vector<Point> pts;
  for (const auto& v : k.vertices()) pts.push_back(s * v);
  return convex_hull(pts);
}

std::vector<std::vector<std::size_t>> triangulate(const Polytope& k) {
  std::vector<std::vector<std::size_t>> out;
  if (!k.full_dim()) return out;
  const auto& v = k.vertices();
  std::vector<std::size_t> stack{0};
  for (std::size_t f = 0; f < k.facets().size(); ++f) {
    const auto& inc = k.facet_vertices()[f];
    if (std::binary_search(inc.begin(), inc.end(), std::size_t{0})) continue;
    pulling(v, inc, static_cast<int>(k.dim()) - 1, stack, out);
  }
  for (auto& s : out) std::sort(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

Rational volume(const Polytope& k) {
  if (!k.full_dim()) return 0;
  const auto& v = k.vertices();
  Rational total = 0;
  for (const auto& s : triangulate(k)) {
    Matrix m;
    for (std::size_t j = 1; j < s.size(); ++j) m.push_back(v[s[j]] - v[s[0]]);
    total += abs(determinant(std::move(m)));
  }
  return total / factorial(k.dim());
}

Rational mixed_volume(std::span<const Polytope> bodies) {
  const std::size_t n = bodies.size();
  if (n == 0) throw DimensionError("mixed_volume: no bodies");
  for (const auto& b : bodies)
    if (b.dim() != n) throw DimensionError("mixed_volume: need n bodies in dimension n");
  Rational sum = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::optional<Polytope> acc;
    int size = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) continue;
      ++size;
      acc = acc ? minkowski_sum(*acc, bodies[i]) : bodies[i];
    }
    Rational vol = volume(*acc);
    if ((static_cast<int>(n) - size) % 2) sum -= vol;
    else sum += vol;
  }
  return sum / factorial(n);
}

bool is_lower_set(const Polytope& k) {
  for (const auto& v : k.vertices())
    for (const auto& x : v)
      if (x < 0) throw InputError("is_lower_set: body leaves the non-negative orthant");
  if (!k.full_dim()) throw InputError("is_lower_set: body is not full-dimensional");
  for (const auto& f : k.facets()) {
    bool nonneg = std::all_of(f.normal.begin(), f.normal.end(),
                              [](const Rational& x) { return x >= 0; });
    if (nonneg) continue;
    if (f.offset != 0) return false;
    int negatives = 0, nonzero = 0;
    for (const auto& x : f.normal) {
      if (x != 0) ++nonzero;
      if (x < 0) ++negatives;
    }
    if (negatives != 1 || nonzero != 1) return false;
  }
  return true;
}

Polytope standard_simplex(std::size_t n) { return corner_simplex(ones(n)); }

Polytope cube(std::size_t n, const Rational& alpha) {
  check_ambient(n);
  std::vector<Point> pts;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Point p = zeros(n);
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (1u << k)) p[k] = alpha;
    pts.push_back(std::move(p));
  }
  return convex_hull(pts);
}

Polytope corner_simplex(const Point& r) {
  check_ambient(r.size());
  std::vector<Point> pts{zeros(r.size())};
  for (std::size_t k = 0; k < r.size(); ++k) pts.push_back(r[k] * unit_vector(r.size(), k));
  return convex_hull(pts);
}

Polytope simplex_diagram(const Point& a) {
  Point r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] <= 0) throw InputError("simplex_diagram: weights must be positive");
    r[k] = 1 / a[k];
  }
  return corner_simplex(r);
}

}  // namespace lctinf
