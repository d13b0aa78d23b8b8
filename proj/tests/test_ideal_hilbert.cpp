#include "incidence/ideal.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace incidence;

namespace {

Ideal circle() { return Ideal(2, {parse_polynomial("x1^2 + x2^2 - 1", 2)}, 1, 2); }
Ideal sphere() { return Ideal(3, {parse_polynomial("x1^2 + x2^2 + x3^2 - 1", 3)}, 2, 2); }

}  // namespace

TEST(HilbertFunction, CoordinateIdeal) {
  for (std::size_t d = 1; d <= 3; ++d) {
    for (std::size_t m = 0; m <= 5; ++m) EXPECT_EQ(hilbert_function(Ideal::coordinate(d), m), 1u);
  }
}

TEST(HilbertFunction, ZeroIdeal) {
  EXPECT_EQ(hilbert_function(Ideal::zero(2), 3), 10u);
  for (std::size_t d = 1; d <= 3; ++d) {
    for (std::size_t m = 0; m <= 5; ++m) EXPECT_EQ(hilbert_function(Ideal::zero(d), m), binomial(d + m, m));
  }
}

TEST(HilbertFunction, Circle) {
  EXPECT_EQ(hilbert_function(circle(), 4), 9u);
  for (std::size_t m = 1; m <= 8; ++m) EXPECT_EQ(hilbert_function(circle(), m), 2 * m + 1);
}

TEST(HilbertFunction, PrincipalClosedForm) {
  std::mt19937_64 rng(17);
  for (std::size_t d = 1; d <= 3; ++d) {
    for (std::size_t D = 1; D <= 3; ++D) {
      Polynomial f(d);
      do {
        f = test::random_polynomial(rng, d, D);
      } while (f.degree() != static_cast<int>(D));
      const Ideal I(d, {f});
      for (std::size_t m = 0; m <= 6; ++m) {
        const std::size_t full = binomial(d + m, m);
        const std::size_t expected = m >= D ? full - binomial(d + m - D, m - D) : full;
        EXPECT_EQ(hilbert_function(I, m), expected) << "d=" << d << " D=" << D << " m=" << m;
      }
    }
  }
}

TEST(HilbertFunction, BoundedAndMonotone) {
  for (const Ideal& I : {circle(), sphere(), Ideal::coordinate(2), Ideal(2, {parse_polynomial("x2 - x1^2", 2)})}) {
    std::size_t prev = 0;
    for (std::size_t m = 0; m <= 6; ++m) {
      const auto h = hilbert_function(I, m);
      EXPECT_LE(h, binomial(I.dimension + m, m));
      EXPECT_GE(h, prev);
      prev = h;
    }
  }
}

TEST(HilbertFunction, RankMatchesMacaulayMatrix) {
  const auto M = macaulay_matrix(circle(), 4);
  EXPECT_EQ(M.cols(), 15);
  EXPECT_EQ(exact_rank(M), 6);
}

TEST(QuotientBasis, Examples) {
  const auto coord = quotient_basis(Ideal::coordinate(3), 2);
  ASSERT_EQ(coord.size(), 1u);
  EXPECT_EQ(coord.representatives[0], Monomial::one(3));

  const auto full = quotient_basis(Ideal::zero(1), 2);
  ASSERT_EQ(full.size(), 3u);
  for (std::uint32_t i = 0; i < 3; ++i) EXPECT_EQ(full.representatives[i], Monomial({i}));

  const auto c = quotient_basis(circle(), 2);
  EXPECT_EQ(c.size(), 5u);
  EXPECT_EQ(c.macaulay_rank, 1u);
  std::size_t quadratic = 0;
  for (const auto& mono : c.representatives) quadratic += mono.degree() == 2;
  EXPECT_EQ(quadratic, 2u);
  // Graded-lex ascending, x1^2 is the dependent one: {1, x2, x1, x2^2, x1*x2}.
  EXPECT_EQ(c.representatives.back(), Monomial({1, 1}));
}

TEST(QuotientBasis, SizeMatchesHilbertFunction) {
  for (const Ideal& I : {circle(), sphere(), Ideal::coordinate(2), Ideal(2, {parse_polynomial("x2 - x1^2", 2)})}) {
    for (std::size_t m = 0; m <= 5; ++m) {
      const auto q = quotient_basis(I, m);
      EXPECT_EQ(q.size(), hilbert_function(I, m));
      EXPECT_EQ(q.size() + q.macaulay_rank, binomial(I.dimension + m, m));
    }
  }
}

TEST(QuotientBasis, LiftIsInjectiveOnVariety) {
  // Rational circle points from Pythagorean parametrization.
  PointSet pts;
  for (int t = -6; t <= 6; ++t) {
    const Rational s(t, 3);
    pts.push_back(make_point({(1 - s * s) / (1 + s * s), 2 * s / (1 + s * s)}));
  }
  const auto basis = quotient_basis(circle(), 2).polynomials();
  std::set<std::vector<std::string>> images;
  for (const auto& p : pts) {
    ASSERT_EQ(sign_at(circle().generators[0], p), 0);
    const auto y = veronese_lift(p, basis);
    std::vector<std::string> key;
    for (Eigen::Index i = 0; i < y.size(); ++i) key.push_back(to_string(y[i]));
    images.insert(key);
  }
  EXPECT_EQ(images.size(), pts.size());
}

TEST(EstimateHilbertPolynomial, Examples) {
  const auto zero = estimate_hilbert_polynomial(Ideal::zero(2), 0, 6);
  EXPECT_EQ(zero.degree, 2);
  EXPECT_EQ(zero.leading_coefficient, Rational(1, 2));

  const auto c = estimate_hilbert_polynomial(circle(), 2, 8);
  EXPECT_EQ(c.degree, 1);
  EXPECT_EQ(c.leading_coefficient, Rational(2));
  EXPECT_LE(c.stabilization, 2u);

  const auto point = estimate_hilbert_polynomial(Ideal::coordinate(2), 0, 4);
  EXPECT_EQ(point.degree, 0);
  EXPECT_EQ(point.leading_coefficient, Rational(1));
}

TEST(EstimateHilbertPolynomial, VarietyDimension) {
  EXPECT_EQ(estimate_hilbert_polynomial(Ideal::coordinate(3), 0, 5).degree, 0);
  EXPECT_EQ(estimate_hilbert_polynomial(circle(), 0, 6).degree, 1);
  EXPECT_EQ(estimate_hilbert_polynomial(sphere(), 0, 7).degree, 2);
}

TEST(EstimateHilbertPolynomial, RangeTooSmall) {
  EXPECT_THROW(estimate_hilbert_polynomial(Ideal::zero(3), 0, 2), RangeTooSmall);
}

TEST(NotInIdeal, Examples) {
  const Ideal x1(2, {parse_polynomial("x1", 2)});
  EXPECT_TRUE(not_in_ideal(x1, parse_polynomial("x2", 2)));
  EXPECT_FALSE(not_in_ideal(x1, parse_polynomial("x1*x2", 2)));
  EXPECT_TRUE(not_in_ideal(circle(), parse_polynomial("x1", 2)));
  EXPECT_FALSE(not_in_ideal(circle(), parse_polynomial("x1^3 + x1*x2^2 - x1", 2)));
  EXPECT_FALSE(not_in_ideal(circle(), Polynomial(2)));
}

TEST(IdealFile, ParseAndPrint) {
  const Ideal I = parse_ideal("# unit circle\ndim=2\nvariety_dim=1\ndegree=2\n\nx1^2 + x2^2 - 1\n");
  EXPECT_EQ(I.dimension, 2u);
  EXPECT_EQ(I.generators.size(), 1u);
  EXPECT_EQ(I.declared_variety_dim, 1);
  EXPECT_EQ(I.declared_degree, 2);
  const Ideal J = parse_ideal(to_string(I));
  EXPECT_EQ(J.generators, I.generators);
  EXPECT_EQ(parse_ideal("x1\nx3\n").dimension, 3u);
  EXPECT_THROW(parse_ideal("dim=1\nx2\n"), std::invalid_argument);
}
