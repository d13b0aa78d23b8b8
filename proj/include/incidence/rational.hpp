#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <string>
#include <string_view>

namespace incidence {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
/// Exact rational scalar; GMP keeps it canonical (gcd 1, positive denominator).
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

}  // namespace incidence

namespace Eigen {

template <>
struct NumTraits<incidence::Rational> : GenericNumTraits<incidence::Rational> {
  using Real = incidence::Rational;
  using NonInteger = incidence::Rational;
  using Nested = incidence::Rational;
  using Literal = incidence::Rational;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace incidence {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VectorXq = VectorX<Rational>;
using MatrixXq = MatrixX<Rational>;

/// Parses `p`, `-p` or `p/q`. Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: `p` for integers, `p/q` otherwise.
std::string to_string(const Rational& value);

inline int sign_of(const Rational& value) { return value.sign(); }

inline double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace incidence
