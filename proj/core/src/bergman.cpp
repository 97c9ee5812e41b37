#include "lctinf/bergman.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "lctinf/errors.hpp"
#include "lctinf/multipliers.hpp"
#include "lctinf/verifier.hpp"

namespace lctinf {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<std::vector<double>> to_doubles(const std::vector<Point>& pts) {
  std::vector<std::vector<double>> out;
  for (const auto& p : pts) {
    std::vector<double> d;
    for (const auto& x : p) d.push_back(x.get_d());
    out.push_back(std::move(d));
  }
  return out;
}

// max of sum v_k log(a_k + s_k) over s >= 0, |s| <= r
double ball_max(const std::vector<double>& v, const std::vector<double>& a, double r) {
  const std::size_t n = v.size();
  auto radius2 = [&](double lambda, std::vector<double>& s) {
    double sum = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (v[k] <= 0) {
        s[k] = 0;
        continue;
      }
      double q = 2 * v[k] / lambda;
      s[k] = q / (std::sqrt(a[k] * a[k] + q) + a[k]);
      sum += s[k] * s[k];
    }
    return sum;
  };
  std::vector<double> s(n);
  double lo = -300, hi = 300;  // log lambda
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (radius2(std::exp(mid), s) > r * r) lo = mid;
    else hi = mid;
  }
  radius2(std::exp(hi), s);
  double val = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (v[k] <= 0) continue;
    double x = a[k] + s[k];
    if (x <= 0) return kNegInf;
    val += v[k] * std::log(x);
  }
  return val;
}

struct Weight {
  std::vector<std::vector<double>> verts;
  std::vector<double> lin;  // 2 (J + 1)
  double two_m = 0;
  double kappa = 0;

  double phi(const double* t, std::size_t n) const {
    double l = 0, top = 0;
    for (std::size_t k = 0; k < n; ++k) {
      l += lin[k] * t[k];
      top = std::max(top, 2 * t[k]);
    }
    double h = kNegInf;
    for (const auto& v : verts) {
      double s = 0;
      for (std::size_t k = 0; k < n; ++k) s += v[k] * t[k];
      h = std::max(h, s);
    }
    double e = std::exp(-top);
    for (std::size_t k = 0; k < n; ++k) e += std::exp(2 * t[k] - top);
    return l - two_m * h - kappa * (top + std::log(e));
  }
};

class NestedIntegral {
 public:
  NestedIntegral(const Weight& w, std::size_t n) : w_(w), n_(n), t_(n, 0.0) {
    for (std::size_t k = 0; k < n; ++k) ws_.push_back(gsl_integration_workspace_alloc(kLimit));
  }
  ~NestedIntegral() {
    for (auto* ws : ws_) gsl_integration_workspace_free(ws);
  }
  NestedIntegral(const NestedIntegral&) = delete;
  NestedIntegral& operator=(const NestedIntegral&) = delete;

  // log of the integral of exp(phi) over t_level..t_{n-1}
  double log_marginal(std::size_t level) {
    if (level == n_) return w_.phi(t_.data(), n_);
    auto g = [&](double s) {
      t_[level] = s;
      return log_marginal(level + 1);
    };

    // bracket and golden-section search for the concave maximum
    double x0 = 0, f0 = g(x0), step = 1;
    double fr = g(x0 + step), fl = g(x0 - step);
    double dir = fr > f0 ? 1 : (fl > f0 ? -1 : 0);
    double a = x0 - step, b = x0 + step;
    if (dir != 0) {
      double prev = x0, fprev = f0, cur = x0 + dir * step, fcur = dir > 0 ? fr : fl;
      while (true) {
        step *= 2;
        if (step > kReach) throw QuadratureError("integrand maximum escapes to infinity");
        double next = cur + dir * step, fnext = g(next);
        if (fnext < fcur) {
          a = std::min(prev, next);
          b = std::max(prev, next);
          break;
        }
        prev = cur;
        fprev = fcur;
        cur = next;
        fcur = fnext;
      }
      (void)fprev;
    }
    const double phi = 0.5 * (std::sqrt(5.0) - 1);
    double c = b - phi * (b - a), d = a + phi * (b - a);
    double fc = g(c), fd = g(d);
    while (b - a > 1e-10 * std::max(1.0, std::abs(a))) {
      if (fc > fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - phi * (b - a);
        fc = g(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + phi * (b - a);
        fd = g(d);
      }
    }
    double smax = 0.5 * (a + b);
    double gmax = g(smax);
    if (!std::isfinite(gmax)) throw QuadratureError("non-finite marginal");

    auto cut = [&](double sign) {
      double off = 1;
      while (true) {
        if (off > kReach) throw QuadratureError("integrand does not decay: norm is infinite");
        double s = smax + sign * off;
        if (g(s) < gmax - kDrop) return s;
        off *= 2;
      }
    };
    double lo = cut(-1), hi = cut(+1);

    std::vector<double> pts{lo};
    for (double k : kinks(level))
      if (k > lo && k < hi) pts.push_back(k);
    pts.push_back(hi);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    struct Ctx {
      NestedIntegral* self;
      std::size_t level;
      double shift;
    } ctx{this, level, gmax};
    gsl_function f;
    f.function = [](double s, void* p) {
      auto* c = static_cast<Ctx*>(p);
      c->self->t_[c->level] = s;
      return std::exp(c->self->log_marginal(c->level + 1) - c->shift);
    };
    f.params = &ctx;
    std::vector<double> saved(t_.begin() + static_cast<std::ptrdiff_t>(level), t_.end());
    double result = 0, abserr = 0;
    int status = gsl_integration_qagp(&f, pts.data(), pts.size(), 0.0, kRelTol, kLimit, ws_[level],
                                      &result, &abserr);
    std::copy(saved.begin(), saved.end(), t_.begin() + static_cast<std::ptrdiff_t>(level));
    if (!(result > 0) || (status != GSL_SUCCESS && abserr > 1e-6 * result))
      throw QuadratureError(std::string("quadrature failed: ") + gsl_strerror(status));
    return gmax + std::log(result);
  }

 private:
  static constexpr std::size_t kLimit = 400;
  static constexpr double kRelTol = 1e-9;
  static constexpr double kDrop = 60;
  static constexpr double kReach = 4096;

  // Ties <v - w, t> = 0 that only involve coordinates 0..level.
  std::vector<double> kinks(std::size_t level) const {
    std::vector<double> out;
    const auto& vs = w_.verts;
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        bool inner_free = true;
        for (std::size_t k = level + 1; k < n_ && inner_free; ++k) inner_free = vs[i][k] == vs[j][k];
        double dl = vs[i][level] - vs[j][level];
        if (!inner_free || dl == 0) continue;
        double rest = 0;
        for (std::size_t k = 0; k < level; ++k) rest += (vs[i][k] - vs[j][k]) * t_[k];
        out.push_back(-rest / dl);
      }
    return out;
  }

  const Weight& w_;
  std::size_t n_;
  std::vector<double> t_;
  std::vector<gsl_integration_workspace*> ws_;
};

double lambda_at(double r) { return 0.5 * std::log1p(r * r); }

double log_sum_exp(const std::vector<double>& xs) {
  double top = kNegInf;
  for (double x : xs) top = std::max(top, x);
  if (!std::isfinite(top)) return top;
  double s = 0;
  for (double x : xs) s += std::exp(x - top);
  return top + std::log(s);
}

}  // namespace

ToricFunction::ToricFunction(const ToricIndicatorSpec& spec)
    : gamma_(convex_hull(spec.generators)), data_(newton_data(spec)) {
  verts_ = to_doubles(gamma_.vertices());
}

double ToricFunction::h(const std::vector<double>& t) const {
  double best = kNegInf;
  for (const auto& v : verts_) {
    double s = 0;
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (v[k] == 0) continue;
      s += v[k] * t[k];
    }
    best = std::max(best, s);
  }
  return best;
}

double ToricFunction::operator()(const ComplexPoint& z) const {
  std::vector<double> t;
  for (const auto& x : z) t.push_back(std::abs(x) > 0 ? std::log(std::abs(x)) : kNegInf);
  return h(t);
}

double ToricFunction::sup_on_ball(const ComplexPoint& z, double r) const {
  std::vector<double> a;
  for (const auto& x : z) a.push_back(std::abs(x));
  double best = kNegInf;
  for (const auto& v : verts_) best = std::max(best, ball_max(v, a, r));
  return best;
}

std::vector<ExponentVector> bergman_admissible(const ToricFunction& u, const Rational& m,
                                               const Rational& kappa) {
  const std::size_t n = u.dim();
  Polytope body = minkowski_sum(scaled(u.gamma_inf(), m), scaled(standard_simplex(n), kappa));
  std::vector<Point> gens;
  for (const auto& g : u.staircase().generators) gens.push_back(m * g);
  LocalStaircase local = make_staircase(n, gens);
  std::vector<ExponentVector> out;
  for (const auto& j : multipliers_at_infinity(body).exponents)
    if (staircase_interior(local, to_point(j) + ones(n))) out.push_back(j);
  return out;
}

double bergman_log_norm(const ToricFunction& u, const ExponentVector& j, double m, double kappa) {
  gsl_set_error_handler_off();
  const std::size_t n = u.dim();
  Weight w;
  w.verts = to_doubles(u.gamma().vertices());
  for (auto e : j) w.lin.push_back(2.0 * (e + 1));
  w.two_m = 2 * m;
  w.kappa = kappa;
  NestedIntegral integral(w, n);
  return static_cast<double>(n) * std::log(2 * M_PI) + integral.log_marginal(0);
}

double mean_value_c2(std::size_t n) {
  double vol = std::pow(M_PI, static_cast<double>(n)) / std::tgamma(static_cast<double>(n) + 1);
  return 1 / std::sqrt(vol);
}

BergmanRun toric_bergman(const ToricFunction& u, const Rational& m, const Rational& kappa,
                         const std::vector<ComplexPoint>& zs) {
  const std::size_t n = u.dim();
  if (m <= 0) throw InputError("toric_bergman: m must be positive");
  if (kappa <= static_cast<long>(n)) throw InputError("toric_bergman: kappa must exceed n");
  BergmanRun run;
  run.m = m;
  run.kappa = kappa;
  run.admissible = bergman_admissible(u, m, kappa);
  const double md = m.get_d(), kd = kappa.get_d();
  for (const auto& j : run.admissible) run.log_norms.push_back(bergman_log_norm(u, j, md, kd));

  const double log_c2 = std::log(mean_value_c2(n));
  for (const auto& z : zs) {
    if (z.size() != n) throw DimensionError("toric_bergman: sample point dimension");
    std::vector<double> terms;
    for (std::size_t i = 0; i < run.admissible.size(); ++i) {
      double t = -run.log_norms[i];
      for (std::size_t k = 0; k < n; ++k) {
        unsigned e = run.admissible[i][k];
        if (e == 0) continue;
        double a = std::abs(z[k]);
        t += a > 0 ? 2.0 * e * std::log(a) : kNegInf;
      }
      terms.push_back(t);
    }
    BergmanSample s;
    s.m = md;
    s.kappa = kd;
    s.z = z;
    s.u_m = log_sum_exp(terms) / (2 * md);
    s.u = u(z);
    s.sup_u = u.sup_on_ball(z, 1.0);
    double norm = 0;
    for (const auto& x : z) norm += std::norm(x);
    double big_lambda = lambda_at(std::sqrt(norm) + 1);
    s.upper_bound = s.sup_u + (kd * big_lambda + log_c2) / md;
    run.samples.push_back(std::move(s));
  }
  return run;
}

std::vector<ComplexPoint> bergman_sample_points(std::size_t n, std::size_t count,
                                                std::uint64_t seed) {
  std::vector<ComplexPoint> out;
  if (count > 0) out.emplace_back(n, 0.0);
  if (count > 1) out.emplace_back(n, std::exp(1.0));
  std::mt19937_64 gen(stream_seed(seed, 0));
  auto unit = [&] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
  while (out.size() < count) {
    ComplexPoint z;
    for (std::size_t k = 0; k < n; ++k) z.push_back(std::polar(std::exp(4 * unit() - 2), 2 * M_PI * unit()));
    out.push_back(std::move(z));
  }
  return out;
}

GapFit fit_gap(const std::vector<BergmanRun>& ladder) {
  if (ladder.size() < 2) throw InputError("fit_gap: need at least two values of m");
  GapFit fit;
  if (ladder[0].samples.empty()) throw InputError("fit_gap: no samples");
  fit.log_c2 = std::log(mean_value_c2(ladder[0].samples[0].z.size()));
  fit.log_c2_measured = kNegInf;
  std::vector<double> xs, ys;
  for (const auto& run : ladder) {
    double gap = kNegInf;
    for (const auto& s : run.samples) {
      if (!std::isfinite(s.u)) continue;
      gap = std::max(gap, s.u - s.u_m);
      double norm = 0;
      for (const auto& x : s.z) norm += std::norm(x);
      fit.log_c2_measured = std::max(
          fit.log_c2_measured, s.m * (s.u_m - s.sup_u) - s.kappa * lambda_at(std::sqrt(norm) + 1));
    }
    double m = run.m.get_d();
    fit.m.push_back(m);
    fit.gap.push_back(gap);
    fit.c1 = std::max(fit.c1, m * gap);
    if (gap > 0) {
      xs.push_back(std::log(m));
      ys.push_back(std::log(gap));
    }
  }
  if (xs.size() < 2) throw InputError("fit_gap: fewer than two positive gaps");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  fit.slope = -sxy / sxx;
  return fit;
}

}  // namespace lctinf
