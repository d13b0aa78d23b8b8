#include "incidence/ideal.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace incidence {

Ideal::Ideal(std::size_t dim, std::vector<Polynomial> gens, std::optional<int> variety_dim, std::optional<int> degree)
    : dimension(dim), declared_variety_dim(variety_dim), declared_degree(degree) {
  for (auto& g : gens) {
    if (g.dimension() != dim) throw std::invalid_argument("generator dimension differs from ideal dimension");
    if (!g.is_zero()) generators.push_back(std::move(g));
  }
}

Ideal Ideal::coordinate(std::size_t dim) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < dim; ++i) gens.push_back(Polynomial::variable(dim, i));
  return Ideal(dim, std::move(gens), 0, 1);
}

namespace {

Eigen::Index column_of(const std::vector<Monomial>& basis, const Monomial& m) {
  auto it = std::lower_bound(basis.begin(), basis.end(), m);
  if (it == basis.end() || *it != m) throw std::logic_error("monomial outside the degree-bounded basis");
  return static_cast<Eigen::Index>(it - basis.begin());
}

template <typename Visit>
void for_each_multiple(const Ideal& ideal, std::size_t m, Visit&& visit) {
  for (const auto& g : ideal.generators) {
    const int dg = g.degree();
    if (dg > static_cast<int>(m)) continue;
    for (const auto& mu : monomial_basis(ideal.dimension, m - static_cast<std::size_t>(dg))) {
      visit(g * Polynomial::term(mu, Rational(1)));
    }
  }
}

}  // namespace

VectorXq coefficient_vector(const Polynomial& f, const std::vector<Monomial>& basis) {
  VectorXq v = VectorXq::Constant(static_cast<Eigen::Index>(basis.size()), Rational(0));
  for (const auto& [mono, c] : f.terms()) v[column_of(basis, mono)] = c;
  return v;
}

MatrixXq macaulay_matrix(const Ideal& ideal, std::size_t m) {
  const auto basis = monomial_basis(ideal.dimension, m);
  std::vector<VectorXq> rows;
  for_each_multiple(ideal, m, [&](const Polynomial& p) { rows.push_back(coefficient_vector(p, basis)); });
  MatrixXq out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  return out;
}

RowEchelon<Rational> macaulay_row_space(const Ideal& ideal, std::size_t m) {
  const auto basis = monomial_basis(ideal.dimension, m);
  RowEchelon<Rational> echelon(static_cast<Eigen::Index>(basis.size()));
  for_each_multiple(ideal, m, [&](const Polynomial& p) { echelon.insert(coefficient_vector(p, basis)); });
  return echelon;
}

std::size_t hilbert_function(const Ideal& ideal, std::size_t m) {
  const auto space = macaulay_row_space(ideal, m);
  return static_cast<std::size_t>(space.columns() - space.rank());
}

std::vector<Polynomial> QuotientBasis::polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(representatives.size());
  for (const auto& r : representatives) out.push_back(Polynomial::term(r, Rational(1)));
  return out;
}

QuotientBasis quotient_basis(const Ideal& ideal, std::size_t m) {
  const auto basis = monomial_basis(ideal.dimension, m);
  auto space = macaulay_row_space(ideal, m);
  QuotientBasis out;
  out.degree_bound = m;
  out.macaulay_rank = static_cast<std::size_t>(space.rank());
  const auto width = static_cast<Eigen::Index>(basis.size());
  for (Eigen::Index j = 0; j < width; ++j) {
    VectorXq unit = VectorXq::Constant(width, Rational(0));
    unit[j] = 1;
    if (space.insert(std::move(unit))) out.representatives.push_back(basis[static_cast<std::size_t>(j)]);
  }
  return out;
}

HilbertPolynomialEstimate estimate_hilbert_polynomial(const Ideal& ideal, std::size_t first, std::size_t last,
                                                      std::size_t min_run) {
  if (last < first) throw std::invalid_argument("empty degree range");
  HilbertPolynomialEstimate est;
  est.range_begin = first;
  for (std::size_t m = first; m <= last; ++m) est.values.push_back(hilbert_function(ideal, m));

  std::vector<Rational> diff(est.values.begin(), est.values.end());
  Rational factorial = 1;
  for (std::size_t t = 0; diff.size() >= min_run; ++t) {
    if (t > 0) factorial *= static_cast<long>(t);
    std::size_t run = 1;
    while (run < diff.size() && diff[diff.size() - 1 - run] == diff.back()) ++run;
    if (run >= min_run && diff.back() != 0) {
      est.degree = static_cast<int>(t);
      est.leading_coefficient = diff.back() / factorial;
      est.stabilization = first + (diff.size() - run);
      return est;
    }
    if (run >= min_run && t == 0) {
      // h vanishes identically on the tail: the unit ideal.
      est.degree = 0;
      est.leading_coefficient = 0;
      est.stabilization = first + (diff.size() - run);
      return est;
    }
    std::vector<Rational> next;
    for (std::size_t i = 1; i < diff.size(); ++i) next.push_back(diff[i] - diff[i - 1]);
    diff = std::move(next);
  }
  throw RangeTooSmall("finite differences of h_I did not stabilize over [" + std::to_string(first) + ", " +
                      std::to_string(last) + "]");
}

bool not_in_ideal(const Ideal& ideal, const Polynomial& f) {
  if (f.dimension() != ideal.dimension) throw std::invalid_argument("polynomial and ideal dimensions differ");
  if (f.is_zero()) return false;
  const auto m = static_cast<std::size_t>(f.degree());
  const auto space = macaulay_row_space(ideal, m);
  return !space.contains(coefficient_vector(f, monomial_basis(ideal.dimension, m)));
}

Ideal parse_ideal(std::string_view text) {
  std::optional<std::size_t> dim;
  std::optional<int> variety_dim;
  std::optional<int> degree;
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    line = line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
    if (auto eq = line.find('='); eq != std::string::npos) {
      const std::string key = line.substr(0, eq);
      const int value = std::stoi(line.substr(eq + 1));
      if (key == "dim") {
        dim = static_cast<std::size_t>(value);
      } else if (key == "variety_dim") {
        variety_dim = value;
      } else if (key == "degree") {
        degree = value;
      } else {
        throw std::invalid_argument("unknown ideal header key '" + key + "'");
      }
      continue;
    }
    lines.push_back(line);
  }
  if (!dim) {
    std::size_t best = 0;
    for (const auto& l : lines) best = std::max(best, max_variable_index(l));
    if (best == 0) throw std::invalid_argument("ideal file needs dim= when no variable appears");
    dim = best;
  }
  std::vector<Polynomial> gens;
  for (const auto& l : lines) gens.push_back(parse_polynomial(l, *dim));
  return Ideal(*dim, std::move(gens), variety_dim, degree);
}

Ideal read_ideal_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open ideal file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ideal(buf.str());
}

std::string to_string(const Ideal& ideal) {
  std::string out = "dim=" + std::to_string(ideal.dimension) + "\n";
  if (ideal.declared_variety_dim) out += "variety_dim=" + std::to_string(*ideal.declared_variety_dim) + "\n";
  if (ideal.declared_degree) out += "degree=" + std::to_string(*ideal.declared_degree) + "\n";
  for (const auto& g : ideal.generators) out += to_string(g) + "\n";
  return out;
}

}  // namespace incidence
