#pragma once

#include "incidence/linalg.hpp"
#include "incidence/polynomial.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace incidence {

/// Ideal given by generators in Q[x1..xd]. I_{<=m} is taken to be the span of
/// the generator multiples g*mu with deg(g*mu) <= m.
struct Ideal {
  std::size_t dimension = 0;
  std::vector<Polynomial> generators;
  std::optional<int> declared_variety_dim;
  std::optional<int> declared_degree;

  Ideal() = default;
  /// Drops zero generators; throws when a generator has the wrong dimension.
  Ideal(std::size_t dimension, std::vector<Polynomial> generators, std::optional<int> variety_dim = std::nullopt,
        std::optional<int> degree = std::nullopt);

  static Ideal zero(std::size_t dimension) { return Ideal(dimension, {}); }
  /// (x1, ..., xd): the ideal of the origin.
  static Ideal coordinate(std::size_t dimension);
};

/// Coefficient vector of f in monomial_basis(dimension, m) coordinates.
VectorXq coefficient_vector(const Polynomial& f, const std::vector<Monomial>& basis);

/// Macaulay matrix of I at degree m: one row per generator multiple.
MatrixXq macaulay_matrix(const Ideal& ideal, std::size_t m);

/// Row space of the Macaulay matrix, for repeated membership queries.
RowEchelon<Rational> macaulay_row_space(const Ideal& ideal, std::size_t m);

/// h_I(m) = C(d+m, m) - rank(Macaulay matrix at degree m).
std::size_t hilbert_function(const Ideal& ideal, std::size_t m);

struct QuotientBasis {
  std::size_t degree_bound = 0;
  std::vector<Monomial> representatives;
  std::size_t macaulay_rank = 0;

  std::size_t size() const { return representatives.size(); }
  std::vector<Polynomial> polynomials() const;
};

/// Graded-lex smallest monomials independent modulo I_{<=m}, chosen greedily.
QuotientBasis quotient_basis(const Ideal& ideal, std::size_t m);

struct HilbertPolynomialEstimate {
  int degree = 0;
  Rational leading_coefficient;
  /// Smallest m in the range from which the values follow the fitted polynomial.
  std::size_t stabilization = 0;
  std::size_t range_begin = 0;
  std::vector<std::size_t> values;
};

class RangeTooSmall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fits h_I over [first, last] by finite differences. The fitted degree t is
/// the smallest one whose t-th differences end in a constant run of at least
/// `min_run` entries. Throws RangeTooSmall when no degree qualifies.
HilbertPolynomialEstimate estimate_hilbert_polynomial(const Ideal& ideal, std::size_t first, std::size_t last,
                                                      std::size_t min_run = 3);

/// True iff f is outside I_{<=deg f}. The zero polynomial is in every ideal.
bool not_in_ideal(const Ideal& ideal, const Polynomial& f);

/// Ideal file: optional `dim=`, `variety_dim=`, `degree=` header lines, then
/// one polynomial per line. Blank lines and `#` comments are ignored. Without
/// `dim=` the dimension is the largest variable index used.
Ideal parse_ideal(std::string_view text);
Ideal read_ideal_file(const std::filesystem::path& path);
std::string to_string(const Ideal& ideal);

}  // namespace incidence
