#pragma once

#include "incidence/polynomial.hpp"
#include "incidence/semialg.hpp"

#include <random>

namespace incidence::test {

inline Rational random_rational(std::mt19937_64& rng, int span = 20, int max_den = 7) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Point random_point(std::mt19937_64& rng, std::size_t d, int span = 20, int max_den = 7) {
  Point x(static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < d; ++i) x[static_cast<Eigen::Index>(i)] = random_rational(rng, span, max_den);
  return x;
}

inline Point integer_point(std::mt19937_64& rng, std::size_t d, int span) {
  std::uniform_int_distribution<int> coord(-span, span);
  Point x(static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < d; ++i) x[static_cast<Eigen::Index>(i)] = Rational(coord(rng));
  return x;
}

inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t d, std::size_t degree, int span = 5) {
  Polynomial f(d);
  std::uniform_int_distribution<int> coeff(-span, span);
  for (const auto& mono : monomial_basis(d, degree)) {
    const int c = coeff(rng);
    if (c != 0) f.add_term(mono, Rational(c));
  }
  return f;
}

/// Random set system with each element present with probability 1/2.
inline SetSystem random_system(std::mt19937_64& rng, std::size_t ground, std::size_t count) {
  SetSystem s;
  s.ground_size = ground;
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < count; ++i) {
    Subset a(ground);
    for (std::size_t e = 0; e < ground; ++e) a[e] = coin(rng);
    s.sets.push_back(a);
  }
  return s;
}

}  // namespace incidence::test
