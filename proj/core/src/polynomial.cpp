#include "lctinf/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "lctinf/errors.hpp"

namespace lctinf {

Point to_point(const ExponentVector& j) {
  Point p;
  p.reserve(j.size());
  for (auto e : j) p.emplace_back(e);
  return p;
}

unsigned total_degree(const ExponentVector& j) {
  unsigned s = 0;
  for (auto e : j) s += e;
  return s;
}

Polynomial::Polynomial(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw DimensionError("polynomial dimension must be positive");
}

Polynomial::Polynomial(std::size_t dim, const Terms& terms) : Polynomial(dim) {
  for (const auto& [j, c] : terms) add_term(j, c);
}

void Polynomial::add_term(const ExponentVector& j, const ComplexRational& c) {
  if (j.size() != dim_) throw DimensionError("exponent vector length differs from dim");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(j, c);
  if (fresh) return;
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::vector<ExponentVector> Polynomial::support() const {
  std::vector<ExponentVector> s;
  for (const auto& [j, c] : terms_) s.push_back(j);
  return s;
}

std::complex<double> Polynomial::evaluate(std::span<const std::complex<double>> z) const {
  std::complex<double> sum = 0;
  for (const auto& [j, c] : terms_) {
    std::complex<double> m(c.re.get_d(), c.im.get_d());
    for (std::size_t k = 0; k < dim_; ++k)
      for (unsigned e = 0; e < j[k]; ++e) m *= z[k];
    sum += m;
  }
  return sum;
}

PolynomialMap::PolynomialMap(std::size_t dim, std::vector<Polynomial> components)
    : dim_(dim), components_(std::move(components)) {
  if (components_.empty()) throw InputError("polynomial map needs at least one component");
  bool any = false;
  for (const auto& p : components_) {
    if (p.dim() != dim_) throw DimensionError("map components have different dimensions");
    any = any || !p.is_zero();
  }
  if (!any) throw InputError("all components of the map are zero");
}

bool PolynomialMap::is_monomial_map() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Polynomial& p) { return p.is_zero() || p.is_monomial(); });
}

std::vector<ExponentVector> PolynomialMap::support() const {
  std::vector<ExponentVector> s;
  for (const auto& p : components_)
    for (const auto& [j, c] : p.terms()) s.push_back(j);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t dim, int component)
      : dim_(dim), component_(component) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
      s_.push_back(text[i]);
      pos_.push_back(i);
    }
    pos_.push_back(text.size());
  }

  Polynomial parse() {
    Polynomial p(dim_);
    if (s_.empty()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++i_;
    }
    term(p, negative);
    while (i_ < s_.size()) {
      char op = s_[i_];
      if (op != '+' && op != '-') fail(std::string("unexpected '") + op + "'");
      ++i_;
      term(p, op == '-');
    }
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_[std::min(i_, s_.size())], component_);
  }

  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }

  std::string digits() {
    std::string d;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) d.push_back(s_[i_++]);
    return d;
  }

  unsigned small_uint(const char* what) {
    std::size_t start = i_;
    std::string d = digits();
    if (d.empty()) {
      i_ = start;
      fail(std::string("expected ") + what);
    }
    unsigned long v = 0;
    for (char ch : d) {
      v = v * 10 + static_cast<unsigned long>(ch - '0');
      if (v > std::numeric_limits<unsigned>::max() / 2) {
        i_ = start;
        fail(std::string(what) + " too large");
      }
    }
    return static_cast<unsigned>(v);
  }

  Rational coefficient() {
    if (peek() == '(') {
      ++i_;
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++i_;
      }
      std::string num = digits();
      if (num.empty()) fail("expected integer in coefficient");
      Rational q{mpz_class(num)};
      if (peek() == '/') {
        ++i_;
        std::string den = digits();
        if (den.empty()) fail("expected denominator");
        mpz_class d(den);
        if (d == 0) fail("zero denominator");
        q /= Rational(d);
      }
      if (peek() != ')') fail("expected ')'");
      ++i_;
      return neg ? Rational(-q) : q;
    }
    return Rational(mpz_class(digits()));
  }

  bool at_factor() const {
    char c = peek();
    return c == 'z' || c == 'i';
  }

  void term(Polynomial& p, bool negative) {
    ComplexRational c{Rational(negative ? -1 : 1), Rational(0)};
    ExponentVector j(dim_, 0);
    bool any = false;
    char c0 = peek();
    if (c0 == '(' || std::isdigit(static_cast<unsigned char>(c0))) {
      c = c * ComplexRational{coefficient(), Rational(0)};
      any = true;
    }
    while (true) {
      if (peek() == '*') {
        if (!any) fail("expected term");
        ++i_;
        if (peek() == '(') fail("products with parenthesized factors are not supported");
        if (!at_factor()) fail("expected variable after '*'");
      }
      if (!at_factor()) break;
      factor(c, j);
      any = true;
    }
    if (!any) fail("expected term");
    if (peek() == '(') fail("products with parenthesized factors are not supported");
    p.add_term(j, c);
  }

  void factor(ComplexRational& c, ExponentVector& j) {
    if (peek() == 'i') {
      ++i_;
      c = c * ComplexRational{Rational(0), Rational(1)};
      return;
    }
    std::size_t var_at = i_;
    ++i_;  // 'z'
    unsigned k = small_uint("variable index");
    if (k == 0 || k > dim_) {
      i_ = var_at;
      fail("variable z" + std::to_string(k) + " out of range for dimension " +
           std::to_string(dim_));
    }
    unsigned e = 1;
    if (peek() == '^') {
      ++i_;
      if (peek() == '-') fail("negative exponent");
      e = small_uint("exponent");
    }
    j[k - 1] += e;
  }

  std::size_t dim_;
  int component_;
  std::string s_;
  std::vector<std::size_t> pos_;
  std::size_t i_ = 0;
};

std::string monomial_string(const ExponentVector& j) {
  std::string s;
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (j[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += "z" + std::to_string(k + 1);
    if (j[k] > 1) s += "^" + std::to_string(j[k]);
  }
  return s;
}

// Appends sign and |q| * unit * monomial.
void append_term(std::string& out, const Rational& q, bool imaginary, const ExponentVector& j) {
  bool neg = q < 0;
  Rational a = abs(q);
  if (out.empty()) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  std::string mono = monomial_string(j);
  std::string coeff;
  if (a.get_den() != 1) coeff = "(" + a.get_str() + ")";
  else if (a != 1 || (mono.empty() && !imaginary)) coeff = a.get_str();
  std::string parts[] = {coeff, imaginary ? "i" : "", mono};
  bool first = true;
  for (const auto& s : parts) {
    if (s.empty()) continue;
    if (!first) out += "*";
    out += s;
    first = false;
  }
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t dim) {
  return Parser(text, dim, -1).parse();
}

PolynomialMap parse_map(std::span<const std::string> texts, std::size_t dim) {
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < texts.size(); ++i)
    comps.push_back(Parser(texts[i], dim, static_cast<int>(i)).parse());
  return PolynomialMap(dim, std::move(comps));
}

PolynomialMap parse_map(std::string_view text, std::size_t dim) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    parts.emplace_back(text.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parse_map(std::span<const std::string>(parts), dim);
}

std::string to_string(const ComplexRational& c) {
  std::string s;
  if (c.re != 0 || c.im == 0) s = c.re.get_str();
  if (c.im != 0) {
    if (!s.empty()) s += c.im < 0 ? "-" : "+";
    else if (c.im < 0) s += "-";
    s += Rational(abs(c.im)).get_str() + "i";
  }
  return s;
}

std::string to_string(const Polynomial& p) {
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [j, c] = *it;
    if (c.re != 0) append_term(out, c.re, false, j);
    if (c.im != 0) append_term(out, c.im, true, j);
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const PolynomialMap& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += to_string(p[i]);
  }
  return s;
}

unsigned degree(const Polynomial& p) {
  unsigned d = 0;
  for (const auto& [j, c] : p.terms()) d = std::max(d, total_degree(j));
  return d;
}

unsigned order_at_zero(const Polynomial& p) {
  unsigned d = std::numeric_limits<unsigned>::max();
  for (const auto& [j, c] : p.terms()) d = std::min(d, total_degree(j));
  return p.is_zero() ? 0 : d;
}

unsigned degree(const PolynomialMap& p) {
  unsigned d = 0;
  for (const auto& c : p.components()) d = std::max(d, degree(c));
  return d;
}

unsigned order_at_zero(const PolynomialMap& p) {
  unsigned d = std::numeric_limits<unsigned>::max();
  for (const auto& c : p.components())
    if (!c.is_zero()) d = std::min(d, order_at_zero(c));
  return d;
}

void validate(const ToricIndicatorSpec& spec) {
  if (spec.dim == 0) throw DimensionError("indicator dimension must be positive");
  if (spec.generators.empty()) throw InputError("indicator needs at least one generator");
  for (const auto& g : spec.generators) {
    if (g.size() != spec.dim)
      throw DimensionError("indicator generator " + to_string(g) + " has wrong dimension");
    for (const auto& x : g)
      if (x < 0) throw InputError("indicator generator " + to_string(g) + " leaves the orthant");
  }
}

ToricIndicatorSpec parse_indicator(std::string_view text, std::size_t dim) {
  ToricIndicatorSpec spec;
  spec.dim = dim;
  std::size_t start = 0;
  while (true) {
    std::size_t semi = text.find(';', start);
    std::string_view part = text.substr(start, semi - start);
    if (part.find_first_not_of(" \t") != std::string_view::npos)
      spec.generators.push_back(parse_point(part));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  validate(spec);
  return spec;
}

}  // namespace lctinf
