#include "lctinf/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "lctinf/errors.hpp"

namespace lctinf {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational ratio(long num, long den) {
  if (den == 0) throw InputError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw InputError("empty rational");
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  bool seen_digit = false, seen_slash = false, denom_digit = false;
  for (; i < s.size(); ++i) {
    char ch = s[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      (seen_slash ? denom_digit : seen_digit) = true;
    } else if (ch == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
    } else {
      throw InputError("malformed rational '" + std::string(text) + "'");
    }
  }
  if (!seen_digit || (seen_slash && !denom_digit))
    throw InputError("malformed rational '" + std::string(text) + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  q.set_str(s, 10);
  if (q.get_den() == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

double to_double(const Rational& q) { return q.get_d(); }

const Rational& ExtendedRational::value() const {
  if (infinite_) throw std::logic_error("value() on infinite ExtendedRational");
  return value_;
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
  if (a.infinite_) return std::strong_ordering::greater;
  if (b.infinite_) return std::strong_ordering::less;
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

ExtendedRational reciprocal(const ExtendedRational& x) {
  if (x.is_infinite()) return ExtendedRational(Rational(0));
  if (x.value() < 0) throw std::domain_error("reciprocal of a negative threshold");
  if (x.value() == 0) return ExtendedRational::infinity();
  return ExtendedRational(Rational(1 / x.value()));
}

std::string to_string(const ExtendedRational& x) {
  return x.is_infinite() ? std::string("inf") : to_string(x.value());
}

double to_double(const ExtendedRational& x) {
  return x.is_infinite() ? HUGE_VAL : x.value().get_d();
}

ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
  return {a.re + b.re, a.im + b.im};
}

ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }

ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Rational dot(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw DimensionError("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Point operator+(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw DimensionError("add: dimension mismatch");
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Point operator-(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw DimensionError("sub: dimension mismatch");
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Point operator*(const Rational& s, const Point& a) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

Point unit_vector(std::size_t n, std::size_t k) {
  Point e(n, Rational(0));
  e.at(k) = 1;
  return e;
}

Point ones(std::size_t n) { return Point(n, Rational(1)); }
Point zeros(std::size_t n) { return Point(n, Rational(0)); }

std::string to_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += to_string(p[i]);
  }
  return s + ")";
}

Point parse_point(std::string_view text) {
  Point p;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    p.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return p;
}

std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return row_reduce(m).size(); }

std::vector<Point> nullspace(Matrix m, std::size_t cols) {
  std::vector<std::size_t> piv = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<Point> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Point v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(Matrix m) {
  std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

int affine_dimension(const std::vector<Point>& pts) {
  if (pts.empty()) return -1;
  Matrix diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
  return static_cast<int>(rank(std::move(diffs)));
}

}  // namespace lctinf
