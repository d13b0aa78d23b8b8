#include "incidence/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace incidence {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<std::uint32_t> exponents)
    : exponents_(std::move(exponents)),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), std::uint32_t{0})) {}

Monomial Monomial::one(std::size_t dimension) { return Monomial(std::vector<std::uint32_t>(dimension, 0)); }

Monomial Monomial::variable(std::size_t dimension, std::size_t index) {
  if (index >= dimension) throw std::out_of_range("variable index out of range");
  std::vector<std::uint32_t> e(dimension, 0);
  e[index] = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.dimension() != dimension()) throw std::invalid_argument("monomial dimension mismatch");
  std::vector<std::uint32_t> e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exponents_[i];
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  return a.exponents_ <=> b.exponents_;
}

// -------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(std::size_t dimension, const Rational& value) {
  Polynomial p(dimension);
  p.add_term(Monomial::one(dimension), value);
  return p;
}

Polynomial Polynomial::variable(std::size_t dimension, std::size_t index) {
  return term(Monomial::variable(dimension, index), Rational(1));
}

Polynomial Polynomial::term(const Monomial& monomial, const Rational& coefficient) {
  Polynomial p(monomial.dimension());
  p.add_term(monomial, coefficient);
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return kDegreeOfZero;
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

Rational Polynomial::coefficient(const Monomial& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading monomial");
  return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
  return terms_.rbegin()->second;
}

Polynomial& Polynomial::add_term(const Monomial& monomial, const Rational& coefficient) {
  if (monomial.dimension() != dimension_) throw std::invalid_argument("term dimension mismatch");
  if (coefficient == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

void Polynomial::require_same_dimension(const Polynomial& other) const {
  if (other.dimension_ != dimension_) throw std::invalid_argument("polynomial dimension mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_dimension(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_dimension(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= factor;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_dimension(b);
  Polynomial product(a.dimension_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) product.add_term(ma * mb, ca * cb);
  }
  return product;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Polynomial Polynomial::normalized() const {
  if (terms_.empty()) return *this;
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const auto& [m, c] : terms_) {
    den_lcm = boost::multiprecision::lcm(den_lcm, Integer(denominator(c)));
    num_gcd = boost::multiprecision::gcd(num_gcd, Integer(numerator(c)));
  }
  Rational scale(den_lcm, num_gcd);
  if (leading_coefficient() < 0) scale = -scale;
  return *this * scale;
}

// -------------------------------------------------------------- evaluation

namespace {

void require_point_dimension(const Polynomial& f, const Point& x) {
  if (static_cast<std::size_t>(x.size()) != f.dimension()) {
    throw std::invalid_argument("dimension mismatch: polynomial in " + std::to_string(f.dimension()) +
                                " variables evaluated at a point of dimension " + std::to_string(x.size()));
  }
}

// powers[i][e] = x_i^e for every exponent that occurs.
std::vector<std::vector<Rational>> power_table(const Polynomial& f, const Point& x, std::size_t variables) {
  std::vector<std::uint32_t> max_exp(variables, 0);
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t i = 0; i < variables; ++i) max_exp[i] = std::max(max_exp[i], m[i]);
  }
  std::vector<std::vector<Rational>> powers(variables);
  for (std::size_t i = 0; i < variables; ++i) {
    powers[i].resize(max_exp[i] + 1);
    powers[i][0] = 1;
    for (std::uint32_t e = 1; e <= max_exp[i]; ++e) powers[i][e] = powers[i][e - 1] * x[static_cast<Eigen::Index>(i)];
  }
  return powers;
}

}  // namespace

Rational evaluate(const Polynomial& f, const Point& x) {
  require_point_dimension(f, x);
  const auto powers = power_table(f, x, f.dimension());
  Rational sum = 0;
  for (const auto& [m, c] : f.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < f.dimension(); ++i) {
      if (m[i] != 0) t *= powers[i][m[i]];
    }
    sum += t;
  }
  return sum;
}

int sign_at(const Polynomial& f, const Point& x) { return sign_of(evaluate(f, x)); }

Polynomial partial_evaluate(const Polynomial& f, const Point& prefix) {
  const auto k = static_cast<std::size_t>(prefix.size());
  if (k > f.dimension()) throw std::invalid_argument("prefix longer than polynomial dimension");
  const auto powers = power_table(f, prefix, k);
  const std::size_t rest = f.dimension() - k;
  Polynomial out(rest);
  for (const auto& [m, c] : f.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < k; ++i) {
      if (m[i] != 0) t *= powers[i][m[i]];
    }
    const auto e = m.exponents();
    out.add_term(Monomial(std::vector<std::uint32_t>(e.begin() + static_cast<std::ptrdiff_t>(k), e.end())), t);
  }
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<Monomial> monomial_basis(std::size_t dimension, std::size_t max_degree) {
  std::vector<Monomial> basis;
  if (dimension == 0) {
    basis.emplace_back();
    return basis;
  }
  std::vector<std::uint32_t> e(dimension, 0);
  // Odometer over exponent vectors with bounded total degree.
  auto recurse = [&](auto&& self, std::size_t i, std::uint32_t budget) -> void {
    if (i + 1 == dimension) {
      for (std::uint32_t a = 0; a <= budget; ++a) {
        e[i] = a;
        basis.emplace_back(e);
      }
      e[i] = 0;
      return;
    }
    for (std::uint32_t a = 0; a <= budget; ++a) {
      e[i] = a;
      self(self, i + 1, budget - a);
    }
    e[i] = 0;
  };
  recurse(recurse, 0, static_cast<std::uint32_t>(max_degree));
  std::sort(basis.begin(), basis.end());
  return basis;
}

Point veronese_lift(const Point& x, std::span<const Polynomial> basis) {
  Point lifted(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) lifted[static_cast<Eigen::Index>(i)] = evaluate(basis[i], x);
  return lifted;
}

Point make_point(std::initializer_list<Rational> coordinates) {
  Point p(static_cast<Eigen::Index>(coordinates.size()));
  Eigen::Index i = 0;
  for (const auto& c : coordinates) p[i++] = c;
  return p;
}

// -------------------------------------------------------------- text format

namespace {

void append_monomial(std::string& out, const Monomial& m) {
  bool first = true;
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    if (m[i] == 0) continue;
    if (!first) out += '*';
    first = false;
    out += 'x';
    out += std::to_string(i + 1);
    if (m[i] > 1) {
      out += '^';
      out += std::to_string(m[i]);
    }
  }
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t dimension) : text_(text), dimension_(dimension) {}

  Polynomial parse() {
    Polynomial result(dimension_);
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
      skip_space();
    }
    for (;;) {
      auto [m, c] = parse_term();
      result.add_term(m, negative ? -c : c);
      skip_space();
      if (at_end()) break;
      const char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
      skip_space();
    }
    return result;
  }

 private:
  std::pair<Monomial, Rational> parse_term() {
    Rational coeff = 1;
    std::vector<std::uint32_t> e(dimension_, 0);
    for (;;) {
      skip_space();
      if (at_end()) fail("dangling operator");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= parse_number();
      } else if (peek() == 'x') {
        get();
        const std::size_t index = parse_unsigned();
        if (index == 0 || index > dimension_) {
          fail("variable x" + std::to_string(index) + " outside dimension " + std::to_string(dimension_));
        }
        std::uint32_t power = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          get();
          skip_space();
          power = static_cast<std::uint32_t>(parse_unsigned());
        }
        e[index - 1] += power;
      } else {
        fail(std::string("unexpected character '") + peek() + "'");
      }
      skip_space();
      if (at_end() || peek() != '*') break;
      get();
    }
    return {Monomial(std::move(e)), coeff};
  }

  Rational parse_number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!at_end() && peek() == '/') {
      ++pos_;
      const std::size_t den_start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (pos_ == den_start) fail("missing denominator");
    }
    return parse_rational(text_.substr(start, pos_ - start));
  }

  std::size_t parse_unsigned() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected a number");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                                std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t dimension_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (m.degree() == 0) {
      out += to_string(magnitude);
    } else {
      if (magnitude != 1) {
        out += to_string(magnitude);
        out += '*';
      }
      append_monomial(out, m);
    }
  }
  return out;
}

Polynomial parse_polynomial(std::string_view text, std::size_t dimension) {
  return Parser(text, dimension).parse();
}

std::size_t max_variable_index(std::string_view text) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x') continue;
    std::size_t j = i + 1;
    std::size_t v = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) v = v * 10 + static_cast<std::size_t>(text[j++] - '0');
    best = std::max(best, v);
  }
  return best;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << to_string(f); }

}  // namespace incidence
