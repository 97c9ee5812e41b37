#include "lctinf/verifier.hpp"

#include <cmath>
#include <json.hpp>
#include <limits>
#include <random>

#include "lctinf/errors.hpp"

namespace lctinf {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::convergent: return "convergent";
    case Verdict::divergent: return "divergent";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string to_json_line(const IntegralEstimate& e) {
  nlohmann::json j;
  j["region"] = e.region;
  j["c"] = e.c;
  j["value"] = e.value;
  j["se"] = e.standard_error ? nlohmann::json(*e.standard_error) : nlohmann::json(nullptr);
  j["seed"] = e.seed;
  j["params"] = e.params;
  return j.dump();
}

std::vector<double> successive_ratios(const std::vector<double>& inc) {
  std::vector<double> r;
  for (std::size_t j = 1; j < inc.size(); ++j) {
    if (inc[j - 1] > 0) r.push_back(inc[j] / inc[j - 1]);
    else r.push_back(inc[j] > 0 ? std::numeric_limits<double>::infinity() : 0.0);
  }
  return r;
}

Verdict classify(const std::vector<double>& ratios) {
  if (ratios.size() < kTailWindow) return Verdict::inconclusive;
  bool conv = true, div = true;
  for (std::size_t j = ratios.size() - kTailWindow; j < ratios.size(); ++j) {
    conv = conv && ratios[j] <= kConvergentRatio;
    div = div && ratios[j] >= kDivergentRatio;
  }
  if (conv) return Verdict::convergent;
  if (div) return Verdict::divergent;
  return Verdict::inconclusive;
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 over the pair
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

struct Uniform {
  std::mt19937_64 rng;
  explicit Uniform(std::uint64_t s) : rng(s) {}
  // [0, 1)
  double operator()() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
};

std::vector<std::vector<double>> vertex_doubles(const Polytope& k) {
  std::vector<std::vector<double>> out;
  for (const auto& v : k.vertices()) {
    std::vector<double> d;
    for (const auto& x : v) d.push_back(x.get_d());
    out.push_back(std::move(d));
  }
  return out;
}

double support(const std::vector<std::vector<double>>& verts, const double* t, std::size_t n) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : verts) {
    double s = 0;
    for (std::size_t k = 0; k < n; ++k) s += v[k] * t[k];
    best = std::max(best, s);
  }
  return best;
}

}  // namespace

ToricTailParams default_toric_tail(std::size_t n) {
  ToricTailParams p;
  if (n <= 2) {
    p.mesh = 0.1;
    for (int l = 4; l <= 40; l += 4) p.boxes.push_back(l);
  } else if (n == 3) {
    p.mesh = 0.2;
    for (int l = 4; l <= 24; l += 4) p.boxes.push_back(l);
  } else {
    p.mesh = 0.5;
    for (int l = 4; l <= 16; l += 4) p.boxes.push_back(l);
  }
  return p;
}

ConvergenceVerdict toric_tail_integral(const Polytope& gamma, double c, const ToricTailParams& p) {
  const std::size_t n = gamma.dim();
  if (!gamma.full_dim()) throw InputError("toric_tail_integral: body is not full-dimensional");
  if (!contains(gamma, zeros(n))) throw InputError("toric_tail_integral: origin not in body");
  if (!(p.mesh > 0) || p.boxes.empty()) throw InputError("toric_tail_integral: bad mesh or boxes");
  std::vector<long> k;
  for (std::size_t j = 0; j < p.boxes.size(); ++j) {
    double ratio = p.boxes[j] / p.mesh;
    long r = std::lround(ratio);
    if (std::abs(ratio - static_cast<double>(r)) > 1e-9 * std::max(1.0, ratio))
      throw InputError("box half-width is not a multiple of the mesh");
    if (j > 0 && r <= k.back()) throw InputError("box half-widths must increase");
    k.push_back(r);
  }
  if (k.front() < 4) throw InputError("mesh too coarse: smallest box spans fewer than 4 cells");

  const auto verts = vertex_doubles(gamma);
  const long kmax = k.back();
  std::vector<double> totals(k.size(), 0.0);
  std::vector<long> idx(n, -kmax);
  std::vector<double> t(n);
  while (true) {
    long norm = 0, top = -kmax - 1;
    double sum = 0;
    for (std::size_t a = 0; a < n; ++a) {
      norm = std::max(norm, std::labs(idx[a]));
      top = std::max(top, idx[a]);
      t[a] = static_cast<double>(idx[a]) * p.mesh;
      sum += t[a];
    }
    if (top > 0) {
      double f = std::exp(2 * sum - 2 * c * support(verts, t.data(), n));
      for (std::size_t j = 0; j < k.size(); ++j) {
        if (k[j] < norm) continue;
        double w = 1;
        for (std::size_t a = 0; a < n; ++a)
          if (std::labs(idx[a]) == k[j]) w *= 0.5;
        totals[j] += w * f;
      }
    }
    std::size_t a = n;
    while (a > 0) {
      --a;
      if (idx[a] < kmax) {
        ++idx[a];
        break;
      }
      idx[a] = -kmax;
      if (a == 0) goto done;
    }
  }
done:
  const double cell = std::pow(p.mesh, static_cast<double>(n));
  ConvergenceVerdict v;
  v.c = c;
  for (std::size_t j = 0; j < k.size(); ++j) {
    totals[j] *= cell;
    v.increments.push_back(j == 0 ? totals[0] : totals[j] - totals[j - 1]);
    IntegralEstimate e;
    e.region = "toric-box";
    e.c = c;
    e.value = totals[j];
    e.params = {{"half_width", p.boxes[j]}, {"mesh", p.mesh}, {"dim", static_cast<double>(n)}};
    v.records.push_back(std::move(e));
  }
  v.tail_ratios = successive_ratios(v.increments);
  v.classification = classify(v.tail_ratios);
  return v;
}

namespace {

constexpr double kLogFloor = 1e-8;

// Mixture of the uniform disc of radius b and a log-uniform modulus on [kLogFloor, b].
struct DiscMixture {
  double b;
  double log_span;

  explicit DiscMixture(double radius) : b(radius), log_span(std::log(radius / kLogFloor)) {}

  std::complex<double> sample(Uniform& u) const {
    double pick = u(), a = u(), theta = 2 * M_PI * u();
    double r = pick < 0.5 ? b * std::sqrt(a) : kLogFloor * std::exp(a * log_span);
    return std::polar(r, theta);
  }

  double density(std::complex<double> z) const {
    double r = std::abs(z);
    if (r >= b) return 0;
    double d = 0.5 / (M_PI * b * b);
    if (r >= kLogFloor) d += 0.5 / (2 * M_PI * r * r * log_span);
    return d;
  }
};

double map_norm(const PolynomialMap& p, const std::vector<std::complex<double>>& z) {
  double s = 0;
  for (const auto& c : p.components()) s += std::norm(c.evaluate(z));
  return std::sqrt(s);
}

}  // namespace

ConvergenceVerdict shell_mc_integral(const PolynomialMap& p, double c, const ShellParams& params) {
  if (!(params.r_inner > 0) || params.shells == 0 || params.samples_per_shell == 0)
    throw InputError("shell_mc_integral: parameters must be positive");
  const std::size_t n = p.dim();
  ConvergenceVerdict v;
  v.c = c;
  std::vector<std::complex<double>> z(n);
  for (unsigned j = 0; j < params.shells; ++j) {
    const double rho = params.r_inner * std::ldexp(1.0, static_cast<int>(j));
    DiscMixture q(2 * rho);
    Uniform u(stream_seed(params.seed, j));
    long double sum = 0, sumsq = 0;
    for (std::uint64_t s = 0; s < params.samples_per_shell; ++s) {
      double r2 = 0, dens = 1;
      for (std::size_t k = 0; k < n; ++k) {
        z[k] = q.sample(u);
        r2 += std::norm(z[k]);
        dens *= q.density(z[k]);
      }
      double r = std::sqrt(r2);
      if (r < rho || r >= 2 * rho) continue;
      double f = std::exp(-2 * c * std::log(std::max(map_norm(p, z), 1.0)));
      long double w = f / dens;
      sum += w;
      sumsq += w * w;
    }
    const long double m = static_cast<long double>(params.samples_per_shell);
    double mean = static_cast<double>(sum / m);
    double var = static_cast<double>(std::max(0.0L, sumsq / m - (sum / m) * (sum / m)));
    IntegralEstimate e;
    e.region = "shell";
    e.c = c;
    e.value = mean;
    e.standard_error = std::sqrt(var / static_cast<double>(params.samples_per_shell));
    e.seed = params.seed;
    e.params = {{"r_lo", rho},
                {"r_hi", 2 * rho},
                {"shell", static_cast<double>(j)},
                {"samples", static_cast<double>(params.samples_per_shell)}};
    v.increments.push_back(mean);
    v.records.push_back(std::move(e));
  }
  v.tail_ratios = successive_ratios(v.increments);
  v.classification = classify(v.tail_ratios);
  return v;
}

namespace {

// Proposal for |w (w^2 - 1)|^{-1} on C: uniform-in-radius discs at the three
// roots (density ~ 1/r), a uniform disc and a Pareto tail matching |w|^{-3}.
struct RootMixture {
  static constexpr double kRootRadius = 0.5;
  static constexpr double kBulk = 2.0;
  static constexpr double roots[3] = {0.0, 1.0, -1.0};

  std::complex<double> sample(Uniform& u) const {
    double pick = u(), a = u(), theta = 2 * M_PI * u();
    int comp = std::min(4, static_cast<int>(pick * 5));
    if (comp < 3) return roots[comp] + std::polar(kRootRadius * a, theta);
    if (comp == 3) return std::polar(kBulk * std::sqrt(a), theta);
    return std::polar(kBulk / (1 - a), theta);
  }

  double density(std::complex<double> w) const {
    double d = 0;
    for (double root : roots) {
      double r = std::abs(w - root);
      if (r < kRootRadius && r > 0) d += 1 / (2 * M_PI * r * kRootRadius);
    }
    double r = std::abs(w);
    if (r < kBulk) d += 1 / (M_PI * kBulk * kBulk);
    else d += kBulk / (2 * M_PI * r * r * r);
    return d / 5;
  }
};

double g_abs(std::complex<double> w) { return std::abs(w * (w * w - 1.0)); }

}  // namespace

P2Identity p2_identity_check(double c, std::uint64_t samples, std::uint64_t seed) {
  if (!(c > 0.5)) throw InputError("p2_identity_check requires c > 1/2");
  if (samples == 0) throw InputError("p2_identity_check: samples must be positive");
  constexpr double kS = 40.0;  // log|z1| drawn uniformly from [-kS, kS]
  RootMixture q;

  Uniform ur(stream_seed(seed, 1));
  long double rs = 0, rss = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    std::complex<double> w = q.sample(ur);
    long double x = 1 / (g_abs(w) * q.density(w));
    rs += x;
    rss += x * x;
  }

  Uniform ul(stream_seed(seed, 0));
  long double ls = 0, lss = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    std::complex<double> w = q.sample(ul);
    double s = kS * (2 * ul() - 1), theta = 2 * M_PI * ul();
    std::complex<double> z1 = std::polar(std::exp(s), theta);
    // |P| = |z1|^2 |g(w)|
    double log_p = 2 * s + std::log(g_abs(w));
    long double x = 0;
    if (log_p > 0) {
      double dens_z1 = 1 / (2 * M_PI * 2 * kS * std::norm(z1));
      x = std::exp(-2 * c * log_p) / (dens_z1 * q.density(w));
    }
    ls += x;
    lss += x * x;
  }

  const long double m = static_cast<long double>(samples);
  auto finish = [&](long double s, long double ss, double scale, const char* region,
                    std::uint64_t stream) {
    IntegralEstimate e;
    e.region = region;
    e.c = c;
    e.value = scale * static_cast<double>(s / m);
    double var = static_cast<double>(std::max(0.0L, ss / m - (s / m) * (s / m)));
    e.standard_error = scale * std::sqrt(var / static_cast<double>(samples));
    e.seed = seed;
    e.params = {{"samples", static_cast<double>(samples)}, {"stream", static_cast<double>(stream)}};
    return e;
  };
  P2Identity r;
  r.lhs = finish(ls, lss, 1.0, "p2-lhs", 0);
  r.rhs = finish(rs, rss, M_PI / (2 * c - 1), "p2-rhs", 1);
  r.relative_gap = std::abs(r.lhs.value - r.rhs.value) / r.rhs.value;
  return r;
}

}  // namespace lctinf
