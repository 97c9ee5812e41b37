#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "lctinf/convex.hpp"
#include "lctinf/newton.hpp"
#include "lctinf/polynomial.hpp"

namespace lctinf {

using ComplexPoint = std::vector<std::complex<double>>;

// u(z) = h_Gamma(log|z_1|, ..., log|z_n|) for Gamma = conv(generators).
class ToricFunction {
 public:
  explicit ToricFunction(const ToricIndicatorSpec& spec);

  std::size_t dim() const { return gamma_.dim(); }
  const Polytope& gamma() const { return gamma_; }
  const Polytope& gamma_inf() const { return data_.gamma_inf; }
  const LocalStaircase& staircase() const { return data_.staircase; }

  double h(const std::vector<double>& t) const;
  // -inf when some needed coordinate vanishes.
  double operator()(const ComplexPoint& z) const;
  // sup of u over the closed ball of radius r around z (exact KKT per vertex).
  double sup_on_ball(const ComplexPoint& z, double r) const;

 private:
  Polytope gamma_;
  NewtonData data_;
  std::vector<std::vector<double>> verts_;
};

// J with J + 1 interior to m Gamma_inf + kappa Delta and to m Gamma_0.
std::vector<ExponentVector> bergman_admissible(const ToricFunction& u, const Rational& m,
                                               const Rational& kappa);

// log of ||z^J||^2 = (2 pi)^n int exp(2<J+1,t> - 2m h(t) - kappa log(1 + sum e^{2t_k})) dt.
// Throws QuadratureError when the exponent does not decay (norm infinite).
double bergman_log_norm(const ToricFunction& u, const ExponentVector& j, double m, double kappa);

struct BergmanSample {
  double m = 0;
  double kappa = 0;
  ComplexPoint z;
  double u_m = 0;
  double u = 0;
  double sup_u = 0;        // over the unit ball around z
  double upper_bound = 0;  // sup_u + (kappa Lambda(|z|+1) + log C2) / m
};

struct BergmanRun {
  Rational m{1};
  Rational kappa{0};
  std::vector<ExponentVector> admissible;
  std::vector<double> log_norms;
  std::vector<BergmanSample> samples;
};

// Mean-value constant (pi^n / n!)^{-1/2}.
double mean_value_c2(std::size_t n);

// Throws InputError unless kappa > n.
BergmanRun toric_bergman(const ToricFunction& u, const Rational& m, const Rational& kappa,
                         const std::vector<ComplexPoint>& z);

// z = 0, z = (e, ..., e), then seeded points with log|z_k| uniform in [-2, 2].
std::vector<ComplexPoint> bergman_sample_points(std::size_t n, std::size_t count,
                                                std::uint64_t seed);

struct GapFit {
  std::vector<double> m;
  std::vector<double> gap;  // max over samples of u - u_m
  double slope = 0;         // -d log(gap) / d log(m), least squares
  double c1 = 0;            // max m * gap
  // max over samples of m (u_m - sup_u) - kappa Lambda(|z| + 1); the bound holds iff <= log C2
  double log_c2_measured = 0;
  double log_c2 = 0;
};

// Needs at least two runs with positive gaps.
GapFit fit_gap(const std::vector<BergmanRun>& ladder);

}  // namespace lctinf
