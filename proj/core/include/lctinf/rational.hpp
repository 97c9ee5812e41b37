#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lctinf {

using Rational = mpq_class;
using Point = std::vector<Rational>;

std::string to_string(const Rational& q);
// num/den in lowest terms; den must be nonzero.
Rational ratio(long num, long den);
// Accepts "p", "-p", "p/q" with q > 0. Throws InputError.
Rational parse_rational(std::string_view text);
double to_double(const Rational& q);

// Rational or +infinity. Thresholds and ray parameters use the sentinel.
class ExtendedRational {
 public:
  ExtendedRational() = default;
  ExtendedRational(Rational v) : value_(std::move(v)) {}
  ExtendedRational(long v) : value_(v) {}

  static ExtendedRational infinity() {
    ExtendedRational r;
    r.infinite_ = true;
    return r;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  // Throws std::logic_error on the sentinel.
  const Rational& value() const;

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
  friend std::strong_ordering operator<=>(const ExtendedRational& a,
                                          const ExtendedRational& b);

 private:
  Rational value_{0};
  bool infinite_ = false;
};

// 1/0 = inf, 1/inf = 0. Negative values throw.
ExtendedRational reciprocal(const ExtendedRational& x);
// "inf" for the sentinel.
std::string to_string(const ExtendedRational& x);
double to_double(const ExtendedRational& x);

struct ComplexRational {
  Rational re{0};
  Rational im{0};

  bool is_zero() const { return re == 0 && im == 0; }
  friend bool operator==(const ComplexRational&, const ComplexRational&) = default;
};

ComplexRational operator+(const ComplexRational& a, const ComplexRational& b);
ComplexRational operator-(const ComplexRational& a);
ComplexRational operator*(const ComplexRational& a, const ComplexRational& b);

// Small exact vector helpers.
Rational dot(const Point& a, const Point& b);
Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rational& s, const Point& a);
Point unit_vector(std::size_t n, std::size_t k);
Point ones(std::size_t n);
Point zeros(std::size_t n);
std::string to_string(const Point& p);
// "a,b,c" with rational entries.
Point parse_point(std::string_view text);

// Exact linear algebra on row-major matrices of rationals.
using Matrix = std::vector<Point>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);
std::size_t rank(Matrix m);
// Basis of {x : m x = 0}, columns given by `cols`.
std::vector<Point> nullspace(Matrix m, std::size_t cols);
Rational determinant(Matrix m);
// Affine dimension of a point set; -1 for the empty set.
int affine_dimension(const std::vector<Point>& pts);

}  // namespace lctinf
