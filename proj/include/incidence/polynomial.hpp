#pragma once

#include "incidence/rational.hpp"

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace incidence {

/// A point of Q^d. Coordinates are exact rationals.
using Point = VectorXq;
using PointSet = std::vector<Point>;

/// Exponent vector x1^a1 ... xd^ad. Ordered graded-lexicographically with x1 > x2 > ... > xd.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents);

  static Monomial one(std::size_t dimension);
  static Monomial variable(std::size_t dimension, std::size_t index);

  std::size_t dimension() const { return exponents_.size(); }
  std::uint32_t degree() const { return degree_; }
  std::span<const std::uint32_t> exponents() const { return exponents_; }
  std::uint32_t operator[](std::size_t i) const { return exponents_[i]; }

  Monomial operator*(const Monomial& other) const;
  /// True when every exponent of `this` is at most the matching one of `other`.
  bool divides(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<std::uint32_t> exponents_;
  std::uint32_t degree_ = 0;
};

/// Degree reported for the zero polynomial.
inline constexpr int kDegreeOfZero = std::numeric_limits<int>::min();

/// Sparse multivariate polynomial with exact rational coefficients. No stored
/// coefficient is ever zero.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit Polynomial(std::size_t dimension = 0) : dimension_(dimension) {}

  static Polynomial constant(std::size_t dimension, const Rational& value);
  static Polynomial variable(std::size_t dimension, std::size_t index);
  static Polynomial term(const Monomial& monomial, const Rational& coefficient);

  std::size_t dimension() const { return dimension_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; kDegreeOfZero for the zero polynomial.
  int degree() const;

  Rational coefficient(const Monomial& monomial) const;
  /// Graded-lex largest monomial. Precondition: not zero.
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  Polynomial& add_term(const Monomial& monomial, const Rational& coefficient);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& factor);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Scales to integer coefficients with gcd 1 and a positive leading
  /// coefficient. Zero stays zero.
  Polynomial normalized() const;

 private:
  void require_same_dimension(const Polynomial& other) const;

  std::size_t dimension_ = 0;
  Terms terms_;
};

/// Exact value of f at x. Throws std::invalid_argument on dimension mismatch.
Rational evaluate(const Polynomial& f, const Point& x);

/// Exact sign of f(x) in {-1, 0, 1}.
int sign_at(const Polynomial& f, const Point& x);

/// Substitutes the first prefix.size() variables; the result lives in the
/// remaining dimension() - prefix.size() variables.
Polynomial partial_evaluate(const Polynomial& f, const Point& prefix);

/// All monomials of degree <= max_degree in `dimension` variables, ascending
/// graded-lex. Has binomial(dimension + max_degree, max_degree) entries.
std::vector<Monomial> monomial_basis(std::size_t dimension, std::size_t max_degree);

/// (b_1(x), ..., b_E(x)).
Point veronese_lift(const Point& x, std::span<const Polynomial> basis);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Text form: terms in descending graded-lex order, e.g. `x1^2 - 3/2*x1*x2 + 1`.
std::string to_string(const Polynomial& f);
/// Inverse of to_string. Variables are x1..x<dimension>; `*` between factors is
/// required, whitespace is free. Throws std::invalid_argument.
Polynomial parse_polynomial(std::string_view text, std::size_t dimension);
/// Largest variable index appearing in the text (0 when none).
std::size_t max_variable_index(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

Point make_point(std::initializer_list<Rational> coordinates);

}  // namespace incidence
