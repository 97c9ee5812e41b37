#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lctinf/rational.hpp"

namespace lctinf {

using ExponentVector = std::vector<unsigned>;

Point to_point(const ExponentVector& j);
unsigned total_degree(const ExponentVector& j);

class Polynomial {
 public:
  using Terms = std::map<ExponentVector, ComplexRational>;

  explicit Polynomial(std::size_t dim);
  Polynomial(std::size_t dim, const Terms& terms);

  std::size_t dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  // Adds c z^j, dropping the term if it cancels.
  void add_term(const ExponentVector& j, const ComplexRational& c);
  std::vector<ExponentVector> support() const;
  std::complex<double> evaluate(std::span<const std::complex<double>> z) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t dim_;
  Terms terms_;
};

class PolynomialMap {
 public:
  PolynomialMap(std::size_t dim, std::vector<Polynomial> components);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return components_.size(); }
  const std::vector<Polynomial>& components() const { return components_; }
  const Polynomial& operator[](std::size_t i) const { return components_[i]; }
  // Every nonzero component is a single monomial.
  bool is_monomial_map() const;
  std::vector<ExponentVector> support() const;

  friend bool operator==(const PolynomialMap&, const PolynomialMap&) = default;

 private:
  std::size_t dim_;
  std::vector<Polynomial> components_;
};

// Grammar: expr := term (('+'|'-') term)*, term := coeff? ('*'? factor)*,
// factor := 'z' uint ('^' uint)? | 'i', coeff := int | '(' int ('/' uint)? ')'.
Polynomial parse_polynomial(std::string_view text, std::size_t dim);
PolynomialMap parse_map(std::span<const std::string> texts, std::size_t dim);
// Comma-separated components.
PolynomialMap parse_map(std::string_view text, std::size_t dim);

std::string to_string(const ComplexRational& c);
// Re-parses to the same term map.
std::string to_string(const Polynomial& p);
std::string to_string(const PolynomialMap& p);

unsigned degree(const Polynomial& p);
unsigned order_at_zero(const Polynomial& p);
unsigned degree(const PolynomialMap& p);
unsigned order_at_zero(const PolynomialMap& p);

struct ToricIndicatorSpec {
  std::size_t dim = 0;
  std::vector<Point> generators;
};

// Checks dimensions, non-emptiness and the orthant condition.
void validate(const ToricIndicatorSpec& spec);
// Semicolon-separated points, e.g. "1,0; 0,1/2".
ToricIndicatorSpec parse_indicator(std::string_view text, std::size_t dim);

}  // namespace lctinf
