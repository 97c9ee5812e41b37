#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lctinf/convex.hpp"
#include "lctinf/polynomial.hpp"

namespace lctinf {

enum class Verdict { convergent, divergent, inconclusive };
std::string to_string(Verdict v);

struct IntegralEstimate {
  std::string region;
  double c = 0;
  double value = 0;
  std::optional<double> standard_error;  // none for quadrature
  std::uint64_t seed = 0;
  std::map<std::string, double> params;
};

// One JSON object per line: region, c, value, se, seed, params.
std::string to_json_line(const IntegralEstimate& e);

struct ConvergenceVerdict {
  Verdict classification = Verdict::inconclusive;
  double c = 0;
  std::vector<double> increments;   // per box or shell
  std::vector<double> tail_ratios;  // increments[j+1] / increments[j]
  std::vector<IntegralEstimate> records;
};

inline constexpr double kConvergentRatio = 0.7;
inline constexpr double kDivergentRatio = 0.95;
inline constexpr std::size_t kTailWindow = 3;

// Applies the last-three-ratios rule.
Verdict classify(const std::vector<double>& tail_ratios);
std::vector<double> successive_ratios(const std::vector<double>& increments);

struct ToricTailParams {
  double mesh = 0.1;
  std::vector<double> boxes;  // increasing half-widths, multiples of mesh
};

ToricTailParams default_toric_tail(std::size_t n);

// Trapezoid rule for exp(2 sum t - 2 c h(t)) over boxes [-L, L]^n minus the
// negative orthant. Throws InputError if a box is too coarse for the mesh.
ConvergenceVerdict toric_tail_integral(const Polytope& gamma, double c, const ToricTailParams& p);

struct ShellParams {
  double r_inner = 1.0;
  unsigned shells = 12;
  std::uint64_t samples_per_shell = 100000;
  std::uint64_t seed = 0;
};

// Monte-Carlo estimates of the integral of max(|P|,1)^{-2c} over the annuli
// r_inner 2^j <= |z| < r_inner 2^{j+1}.
ConvergenceVerdict shell_mc_integral(const PolynomialMap& p, double c, const ShellParams& params);

struct P2Identity {
  IntegralEstimate lhs;
  IntegralEstimate rhs;
  double relative_gap = 0;
};

// P = z1^2 z2 (z2^2 - 1). Throws InputError for c <= 1/2.
P2Identity p2_identity_check(double c, std::uint64_t samples, std::uint64_t seed);

// Counter-based stream for (seed, index) pairs.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace lctinf
