#include "incidence/partition.hpp"

#include "incidence/linalg.hpp"
#include "incidence/sign_filter.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <string>

namespace incidence {

int Hyperplane::side(const Point& y) const {
  if (y.size() != normal.size()) throw std::invalid_argument("hyperplane and point dimensions differ");
  return sign_of(offset + normal.dot(y));
}

SideCounts count_sides(const Hyperplane& h, const PointSet& S) {
  SideCounts c;
  for (const auto& y : S) {
    const int s = h.side(y);
    if (s > 0) {
      ++c.positive;
    } else if (s < 0) {
      ++c.negative;
    } else {
      ++c.on;
    }
  }
  return c;
}

namespace {

// ------------------------------------------------------------ ham sandwich

bool bisects_all(const Hyperplane& h, const std::vector<const PointSet*>& sets) {
  if (h.normal.isZero()) return false;
  for (const PointSet* S : sets) {
    const auto c = count_sides(h, *S);
    if (2 * c.positive > S->size() || 2 * c.negative > S->size()) return false;
  }
  return true;
}

Rational rationalize(double v, int bits = 30) {
  const double scaled = std::ldexp(v, bits);
  return Rational(Integer(static_cast<long long>(std::llround(scaled))), Integer(1) << bits);
}

// Sets in R^D, with an affine rescaling y' = (y - mu) / sigma used for the
// floating-point search. mu and sigma are exact so candidates can be mapped
// back without error.
class Search {
 public:
  Search(std::vector<const PointSet*> sets, std::size_t D, const HamSandwichOptions& options)
      : sets_(std::move(sets)), D_(D), options_(options), rng_(options.seed) {
    std::size_t total = 0;
    for (const PointSet* S : sets_) total += S->size();
    Eigen::VectorXd mean = Eigen::VectorXd::Zero(D_);
    Eigen::VectorXd sq = Eigen::VectorXd::Zero(D_);
    for (const PointSet* S : sets_) {
      for (const auto& y : *S) {
        for (std::size_t j = 0; j < D_; ++j) mean[j] += to_double(y[j]);
      }
    }
    mean /= static_cast<double>(total);
    for (const PointSet* S : sets_) {
      for (const auto& y : *S) {
        for (std::size_t j = 0; j < D_; ++j) sq[j] += std::pow(to_double(y[j]) - mean[j], 2);
      }
    }
    mu_.resize(D_);
    sigma_.resize(D_);
    for (std::size_t j = 0; j < D_; ++j) {
      const double sd = std::sqrt(sq[j] / static_cast<double>(total));
      mu_[j] = rationalize(mean[j], 12);
      const int e = sd > 0 ? static_cast<int>(std::lround(std::log2(sd))) : 0;
      sigma_[j] = e >= 0 ? Rational(Integer(1) << e) : Rational(Integer(1), Integer(1) << -e);
    }
    scaled_.resize(sets_.size());
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      scaled_[i].resize(sets_[i]->size(), D_);
      for (std::size_t p = 0; p < sets_[i]->size(); ++p) {
        for (std::size_t j = 0; j < D_; ++j) scaled_[i](p, j) = to_double(((*sets_[i])[p][j] - mu_[j]) / sigma_[j]);
      }
    }
  }

  std::optional<Hyperplane> newton() {
    std::normal_distribution<double> gauss;
    for (int restart = 0; restart < options_.restarts; ++restart) {
      Eigen::VectorXd a(D_ + 1);
      for (Eigen::Index j = 0; j <= static_cast<Eigen::Index>(D_); ++j) a[j] = gauss(rng_);
      a[0] = 0;
      normalize(a);
      std::set<std::vector<std::size_t>> seen;
      for (int it = 0; it < options_.iterations; ++it) {
        const auto pivots = medians(a);
        const Eigen::MatrixXd J = pivot_rows(pivots);
        const Eigen::VectorXd residual = J * a;
        const bool fresh = seen.insert(flatten(pivots)).second;
        if (residual.cwiseAbs().maxCoeff() <= 1e-9 || !fresh) {
          if (auto h = exact_candidate(pivots, a)) return h;
          if (!fresh) {
            for (Eigen::Index j = 0; j <= static_cast<Eigen::Index>(D_); ++j) a[j] += 0.3 * gauss(rng_);
            normalize(a);
            continue;
          }
        }
        const Eigen::VectorXd delta = J.completeOrthogonalDecomposition().solve(residual);
        const double before = merit(a);
        Eigen::VectorXd next = a - delta;
        for (double lambda = 0.5; lambda > 0.02 && merit_normalized(next) > before; lambda /= 2) {
          next = a - lambda * delta;
        }
        if (next.tail(D_).norm() < 1e-12) break;
        a = next;
        normalize(a);
      }
    }
    return std::nullopt;
  }

  // Exhaustive search over one pivot per set (even sets lose their last point
  // first), in a fixed random projection to R^k where the pivots span a
  // unique hyperplane.
  std::optional<Hyperplane> enumerate() {
    const std::size_t k = sets_.size();
    std::mt19937_64 rng(options_.seed ^ 0x9e3779b97f4a7c15ULL);
    MatrixXq R(k, D_);
    Eigen::MatrixXd Rd(k, D_);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < D_; ++j) {
        const long v = static_cast<long>(rng() % 7) - 3;
        R(i, j) = v;
        Rd(i, j) = static_cast<double>(v);
      }
    }
    if (k == D_) {
      R.setIdentity();
      Rd.setIdentity();
    }
    std::vector<std::size_t> sizes(k);
    for (std::size_t i = 0; i < k; ++i) sizes[i] = sets_[i]->size() - (sets_[i]->size() % 2 == 0 ? 1 : 0);
    std::vector<std::size_t> pick(k, 0);
    std::uint64_t work = 0;
    for (;;) {
      if (++work > options_.enumeration_budget) return std::nullopt;
      MatrixXq J(k, k + 1);
      for (std::size_t i = 0; i < k; ++i) {
        J(i, 0) = 1;
        J.row(i).tail(k) = (R * (*sets_[i])[pick[i]]).transpose();
      }
      const MatrixXq N = nullspace<Rational>(J);
      if (N.cols() == 1) {
        Hyperplane h{N(0, 0), R.transpose() * N.col(0).tail(k)};
        if (bisects_all(h, sets_)) return h;
      }
      std::size_t i = 0;
      while (i < k && ++pick[i] == sizes[i]) pick[i++] = 0;
      if (i == k) return std::nullopt;
    }
  }

 private:
  struct Pivot {
    std::size_t lo;
    std::size_t hi;
  };

  void normalize(Eigen::VectorXd& a) const {
    const double n = a.tail(D_).norm();
    if (n > 0) a /= n;
  }

  std::vector<Pivot> medians(const Eigen::VectorXd& a) const {
    std::vector<Pivot> out;
    out.reserve(sets_.size());
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      const Eigen::VectorXd v = (scaled_[i] * a.tail(D_)).array() + a[0];
      std::vector<std::size_t> order(v.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return v[x] < v[y] || (v[x] == v[y] && x < y); });
      const std::size_t n = order.size();
      out.push_back(n % 2 ? Pivot{order[n / 2], order[n / 2]} : Pivot{order[n / 2 - 1], order[n / 2]});
    }
    return out;
  }

  Eigen::MatrixXd pivot_rows(const std::vector<Pivot>& pivots) const {
    Eigen::MatrixXd J(pivots.size(), D_ + 1);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      J(i, 0) = 1;
      J.row(i).tail(D_) = 0.5 * (scaled_[i].row(pivots[i].lo) + scaled_[i].row(pivots[i].hi));
    }
    return J;
  }

  double merit(const Eigen::VectorXd& a) const { return (pivot_rows(medians(a)) * a).cwiseAbs().maxCoeff(); }
  double merit_normalized(Eigen::VectorXd a) const {
    normalize(a);
    return merit(a);
  }

  static std::vector<std::size_t> flatten(const std::vector<Pivot>& pivots) {
    std::vector<std::size_t> out;
    for (const auto& p : pivots) {
      out.push_back(p.lo);
      out.push_back(p.hi);
    }
    return out;
  }

  // Exact projection of the rounded iterate onto the hyperplanes through the
  // pivot targets (medians, or midpoints of the two middle points).
  std::optional<Hyperplane> exact_candidate(const std::vector<Pivot>& pivots, const Eigen::VectorXd& a) const {
    const auto k = static_cast<Eigen::Index>(pivots.size());
    const auto width = static_cast<Eigen::Index>(D_) + 1;
    MatrixXq J(k, width);
    for (Eigen::Index i = 0; i < k; ++i) {
      const PointSet& S = *sets_[i];
      J(i, 0) = 1;
      for (std::size_t j = 0; j < D_; ++j) {
        const Rational mid = (S[pivots[i].lo][j] + S[pivots[i].hi][j]) / 2;
        J(i, j + 1) = (mid - mu_[j]) / sigma_[j];
      }
    }
    const MatrixXq N = nullspace<Rational>(J);
    if (N.cols() == 0) return std::nullopt;
    VectorXq ar(width);
    for (Eigen::Index j = 0; j < width; ++j) ar[j] = rationalize(a[j]);
    const MatrixXq gram = N.transpose() * N;
    const auto c = solve_exact<Rational>(gram, N.transpose() * ar);
    if (!c) return std::nullopt;
    const VectorXq scaled = N * *c;
    // Back to original coordinates: a0 + sum a_j (y_j - mu_j) / sigma_j.
    Hyperplane h;
    h.offset = scaled[0];
    h.normal.resize(D_);
    for (std::size_t j = 0; j < D_; ++j) {
      h.normal[j] = scaled[j + 1] / sigma_[j];
      h.offset -= h.normal[j] * mu_[j];
    }
    if (!bisects_all(h, sets_)) return std::nullopt;
    return h;
  }

  std::vector<const PointSet*> sets_;
  std::size_t D_;
  HamSandwichOptions options_;
  std::mt19937_64 rng_;
  VectorXq mu_;
  VectorXq sigma_;
  std::vector<Eigen::MatrixXd> scaled_;
};

}  // namespace

Hyperplane discrete_ham_sandwich(const std::vector<PointSet>& sets, const HamSandwichOptions& options) {
  std::vector<const PointSet*> nonempty;
  std::optional<std::size_t> D;
  for (const auto& S : sets) {
    for (const auto& y : S) {
      if (!D) D = static_cast<std::size_t>(y.size());
      if (static_cast<std::size_t>(y.size()) != *D) throw std::invalid_argument("ham sandwich points differ in dimension");
    }
    if (!S.empty()) nonempty.push_back(&S);
  }
  if (!D) throw std::invalid_argument("ham sandwich needs at least one point");
  if (*D == 0) throw std::invalid_argument("ham sandwich needs dimension >= 1");
  if (nonempty.size() > *D) {
    throw std::invalid_argument(std::to_string(nonempty.size()) + " sets cannot be bisected in R^" + std::to_string(*D));
  }
  Search search(nonempty, *D, options);
  if (auto h = search.newton()) return *h;
  if (auto h = search.enumerate()) return *h;
  std::string sizes;
  for (std::size_t i = 0; i < sets.size(); ++i) sizes += (i ? ", " : "") + std::to_string(sets[i].size());
  throw DegenerateConfiguration("no bisecting hyperplane found for sets of sizes [" + sizes + "] in R^" +
                                std::to_string(*D));
}

namespace {

PolynomialBisector polynomial_ham_impl(const std::vector<PointSet>& sets, const Ideal* ideal,
                                       const PolynomialHamOptions& options) {
  std::optional<std::size_t> d;
  std::size_t k = 0;
  for (const auto& S : sets) {
    for (const auto& x : S) {
      if (!d) d = static_cast<std::size_t>(x.size());
      if (static_cast<std::size_t>(x.size()) != *d) throw std::invalid_argument("polynomial ham sandwich: mixed dimensions");
      if (ideal) {
        for (const auto& f : ideal->generators) {
          if (sign_at(f, x) != 0) throw std::invalid_argument("polynomial ham sandwich: point off the variety");
        }
      }
    }
    k += S.empty() ? 0 : 1;
  }
  if (!d) {
    const std::size_t dim = ideal ? ideal->dimension : 1;
    return {Polynomial::constant(dim, 1), 0, 1};
  }
  if (ideal && ideal->dimension != *d) throw std::invalid_argument("ideal and points differ in dimension");

  std::optional<std::size_t> m;
  for (std::size_t deg = 1; deg <= options.max_degree; ++deg) {
    const std::size_t E = ideal ? hilbert_function(*ideal, deg) : binomial(*d + deg, deg);
    if (E >= k + 1) {
      m = deg;
      break;
    }
  }
  if (!m) {
    throw std::invalid_argument(std::to_string(k) + " sets need a quotient space beyond degree " +
                                std::to_string(options.max_degree));
  }
  const std::vector<Monomial> reps = ideal ? quotient_basis(*ideal, *m).representatives : monomial_basis(*d, *m);
  if (reps.empty() || reps.front() != Monomial::one(*d)) {
    throw std::invalid_argument("the ideal contains a nonzero constant");
  }
  std::vector<Polynomial> basis;
  for (const auto& mono : reps) basis.push_back(Polynomial::term(mono, 1));
  const std::span<const Polynomial> nonconstant(basis.data() + 1, basis.size() - 1);

  std::vector<PointSet> lifted(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (const auto& x : sets[i]) lifted[i].push_back(veronese_lift(x, nonconstant));
  }
  const Hyperplane h = discrete_ham_sandwich(lifted, options.ham);
  Polynomial g = Polynomial::constant(*d, h.offset);
  for (std::size_t j = 0; j < nonconstant.size(); ++j) {
    if (h.normal[j] != 0) g.add_term(reps[j + 1], h.normal[j]);
  }
  g = g.normalized();
  if (ideal && !ideal->generators.empty() && !not_in_ideal(*ideal, g)) {
    throw std::logic_error("bisector fell into the ideal");
  }
  return {std::move(g), *m, reps.size()};
}

}  // namespace

PolynomialBisector polynomial_ham_sandwich(const std::vector<PointSet>& sets, const PolynomialHamOptions& options) {
  return polynomial_ham_impl(sets, nullptr, options);
}

PolynomialBisector polynomial_ham_sandwich(const std::vector<PointSet>& sets, const Ideal& ideal,
                                           const PolynomialHamOptions& options) {
  return polynomial_ham_impl(sets, &ideal, options);
}

// ------------------------------------------------------------------ grids

bool Box::contains(const Point& x) const {
  if (static_cast<std::size_t>(x.size()) != dimension()) return false;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    if (x[j] < lower[j] || x[j] > upper[j]) return false;
  }
  return true;
}

Box bounding_box(const PointSet& P) {
  if (P.empty()) throw std::invalid_argument("bounding box of an empty set");
  Box b{P.front(), P.front()};
  for (const auto& x : P) {
    if (x.size() != b.lower.size()) throw std::invalid_argument("bounding box: mixed dimensions");
    for (Eigen::Index j = 0; j < x.size(); ++j) {
      if (x[j] < b.lower[j]) b.lower[j] = x[j];
      if (x[j] > b.upper[j]) b.upper[j] = x[j];
    }
  }
  for (Eigen::Index j = 0; j < b.lower.size(); ++j) {
    const Rational margin = std::max(Rational(1, 2), (b.upper[j] - b.lower[j]) / 8);
    b.lower[j] -= margin;
    b.upper[j] += margin;
  }
  return b;
}

GridDecomposition::GridDecomposition(std::vector<Polynomial> factors, Box box, std::size_t resolution)
    : factors_(std::move(factors)), box_(std::move(box)), resolution_(resolution) {
  const std::size_t d = box_.dimension();
  if (d == 0) throw std::invalid_argument("grid needs dimension >= 1");
  if (resolution_ < 2) throw std::invalid_argument("grid resolution must be at least 2");
  for (std::size_t j = 0; j < d; ++j) {
    if (!(box_.lower[j] < box_.upper[j])) throw std::invalid_argument("grid box must have positive extent");
  }
  for (const auto& f : factors_) {
    if (f.dimension() != d) throw std::invalid_argument("grid factor dimension mismatch");
  }
  std::size_t total = 1;
  for (std::size_t j = 0; j < d; ++j) {
    if (total > (std::size_t{1} << 26) / resolution_) throw std::invalid_argument("grid too large");
    total *= resolution_;
  }
  std::vector<SignEvaluator> evaluators;
  for (const auto& f : factors_) evaluators.emplace_back(f);

  const std::size_t F = factors_.size();
  signs_.assign(total * F, 0);
  labels_.assign(total, -1);
  std::vector<double> approx(d);
  for (std::size_t cell = 0; cell < total; ++cell) {
    const Point c = cell_center(cell);
    for (std::size_t j = 0; j < d; ++j) approx[j] = to_double(c[j]);
    for (std::size_t f = 0; f < F; ++f) signs_[cell * F + f] = static_cast<std::int8_t>(evaluators[f].sign(c, approx));
  }

  auto nonzero = [&](std::size_t cell) {
    for (std::size_t f = 0; f < F; ++f) {
      if (signs_[cell * F + f] == 0) return false;
    }
    return true;
  };
  auto same = [&](std::size_t a, std::size_t b) {
    return std::equal(signs_.begin() + a * F, signs_.begin() + (a + 1) * F, signs_.begin() + b * F);
  };
  std::vector<std::size_t> stride(d);
  stride[d - 1] = 1;
  for (std::size_t j = d - 1; j > 0; --j) stride[j - 1] = stride[j] * resolution_;

  std::deque<std::size_t> queue;
  for (std::size_t start = 0; start < total; ++start) {
    if (labels_[start] != -1 || !nonzero(start)) continue;
    const long id = static_cast<long>(component_count_++);
    labels_[start] = id;
    queue.push_back(start);
    while (!queue.empty()) {
      const std::size_t cell = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < d; ++j) {
        const std::size_t coord = (cell / stride[j]) % resolution_;
        if (coord > 0) {
          const std::size_t nb = cell - stride[j];
          if (labels_[nb] == -1 && same(cell, nb)) {
            labels_[nb] = id;
            queue.push_back(nb);
          }
        }
        if (coord + 1 < resolution_) {
          const std::size_t nb = cell + stride[j];
          if (labels_[nb] == -1 && same(cell, nb)) {
            labels_[nb] = id;
            queue.push_back(nb);
          }
        }
      }
    }
  }
}

std::size_t GridDecomposition::cell_index(const std::vector<std::size_t>& multi) const {
  std::size_t index = 0;
  for (auto c : multi) index = index * resolution_ + c;
  return index;
}

std::vector<std::size_t> GridDecomposition::cell_multi_index(std::size_t cell) const {
  std::vector<std::size_t> multi(dimension());
  for (std::size_t j = dimension(); j > 0; --j) {
    multi[j - 1] = cell % resolution_;
    cell /= resolution_;
  }
  return multi;
}

Point GridDecomposition::cell_center(std::size_t cell) const {
  const auto multi = cell_multi_index(cell);
  Point c(dimension());
  const Rational twice_res(2 * resolution_);
  for (std::size_t j = 0; j < dimension(); ++j) {
    c[j] = box_.lower[j] + Rational(2 * multi[j] + 1) / twice_res * (box_.upper[j] - box_.lower[j]);
  }
  return c;
}

std::size_t GridDecomposition::locate(const Point& x) const {
  if (!box_.contains(x)) throw std::invalid_argument("point outside the grid box");
  std::vector<std::size_t> multi(dimension());
  for (std::size_t j = 0; j < dimension(); ++j) {
    const Rational t = (x[j] - box_.lower[j]) / (box_.upper[j] - box_.lower[j]) * Rational(resolution_);
    const Integer floor = numerator(t) / denominator(t);
    multi[j] = std::min(resolution_ - 1, static_cast<std::size_t>(floor.convert_to<unsigned long long>()));
  }
  return cell_index(multi);
}

std::size_t CellAssignment::max_count() const {
  return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

CellAssignment assign_points(const GridDecomposition& grid, const PointSet& P) {
  CellAssignment out;
  out.counts.assign(grid.component_count(), 0);
  const std::size_t F = grid.factors().size();
  const std::size_t d = grid.dimension();
  std::vector<int> s(F);
  for (const auto& x : P) {
    const std::size_t home = grid.locate(x);
    bool zero = false;
    for (std::size_t f = 0; f < F; ++f) {
      s[f] = sign_at(grid.factors()[f], x);
      zero = zero || s[f] == 0;
    }
    if (zero) {
      out.labels.push_back(kOnZeroSet);
      ++out.on_zero_set;
      continue;
    }
    auto matches = [&](std::size_t cell) {
      if (grid.label(cell) < 0) return false;
      for (std::size_t f = 0; f < F; ++f) {
        if (grid.sign(cell, f) != s[f]) return false;
      }
      return true;
    };
    long label = kUnresolved;
    if (matches(home)) {
      label = grid.label(home);
    } else {
      const auto centre = grid.cell_multi_index(home);
      std::vector<int> offset(d, -1);
      for (;;) {
        bool inside = true;
        std::vector<std::size_t> nb(d);
        for (std::size_t j = 0; j < d; ++j) {
          const long c = static_cast<long>(centre[j]) + offset[j];
          inside = inside && c >= 0 && c < static_cast<long>(grid.resolution());
          nb[j] = static_cast<std::size_t>(std::max(0L, c));
        }
        if (inside && matches(grid.cell_index(nb))) {
          label = grid.label(grid.cell_index(nb));
          break;
        }
        std::size_t j = 0;
        while (j < d && ++offset[j] == 2) offset[j++] = -1;
        if (j == d) break;
      }
    }
    out.labels.push_back(label);
    if (label >= 0) {
      ++out.counts[static_cast<std::size_t>(label)];
    } else {
      ++out.unresolved;
    }
  }
  return out;
}

Cells cells(const Polynomial& g, const PointSet& P, const Box& box, std::size_t resolution) {
  return cells(std::vector<Polynomial>{g}, P, box, resolution);
}

Cells cells(const std::vector<Polynomial>& factors, const PointSet& P, const Box& box, std::size_t resolution) {
  GridDecomposition grid(factors, box, resolution);
  CellAssignment assignment = assign_points(grid, P);
  return {std::move(grid), std::move(assignment)};
}

// ------------------------------------------------------------ partitioning

double degree_envelope(double c_D, double c_1, std::size_t rounds, std::size_t m0, double variety_dimension) {
  const double log_m0 = std::log2(static_cast<double>(std::max<std::size_t>(m0, 1)));
  const double t = static_cast<double>(rounds);
  double bound = c_D * std::min(t, log_m0);
  if (t >= log_m0) {
    const double c_2 = c_1 / (1.0 - std::pow(2.0, -1.0 / variety_dimension));
    bound += c_2 * std::pow(2.0, t / variety_dimension);
  }
  return bound;
}

namespace {

std::size_t default_resolution(std::size_t d) {
  switch (d) {
    case 1: return 256;
    case 2: return 64;
    case 3: return 24;
    default: return 8;
  }
}

std::size_t default_max_resolution(std::size_t d) {
  switch (d) {
    case 1: return 1 << 16;
    case 2: return 1024;
    case 3: return 96;
    default: return 16;
  }
}

// True when each component of `fine` lies inside a single component of `coarse`.
bool refines(const GridDecomposition& fine, const GridDecomposition& coarse) {
  std::vector<long> parent(fine.component_count(), -2);
  for (std::size_t cell = 0; cell < fine.cell_count(); ++cell) {
    const long f = fine.label(cell);
    if (f < 0) continue;
    const long c = coarse.label(cell);
    if (c < 0) return false;
    auto& p = parent[static_cast<std::size_t>(f)];
    if (p == -2) {
      p = c;
    } else if (p != c) {
      return false;
    }
  }
  return true;
}

double variety_dimension_of(const std::optional<Ideal>& ideal, std::size_t d) {
  if (!ideal || ideal->generators.empty()) return static_cast<double>(d);
  if (ideal->declared_variety_dim) return std::max(1, *ideal->declared_variety_dim);
  try {
    return std::max(1, estimate_hilbert_polynomial(*ideal, 0, 10).degree);
  } catch (const RangeTooSmall&) {
    return static_cast<double>(d);
  }
}

}  // namespace

PartitionPolynomial partitioning_polynomial(const PointSet& P, std::size_t r, const std::optional<Ideal>& ideal,
                                            const PartitionOptions& options) {
  if (P.empty()) throw std::invalid_argument("partitioning needs a non-empty point set");
  const std::size_t d = static_cast<std::size_t>(P.front().size());
  if (r > P.size() && P.size() >= 2) throw std::invalid_argument("r must not exceed |P|");
  const Box box = options.box ? *options.box : bounding_box(P);
  const std::size_t m = P.size();

  PartitionPolynomial out;
  out.r = r;
  out.envelope.m0 = options.m0;
  out.envelope.variety_dimension = variety_dimension_of(ideal, d);
  std::size_t res = options.resolution.value_or(default_resolution(d));
  const std::size_t max_res = std::max(res, options.max_resolution.value_or(default_max_resolution(d)));

  if (m < 2 || r <= 1) {
    out.g = Polynomial::constant(d, 1);
    out.resolution = res;
    out.grid.emplace(std::vector<Polynomial>{}, box, res);
    out.assignment = assign_points(*out.grid, P);
    return out;
  }

  std::size_t t = 0;
  while ((std::size_t{1} << t) < r) ++t;
  out.rounds = t;
  const double log_m0 = std::log2(static_cast<double>(std::max<std::size_t>(options.m0, 1)));

  for (;; res *= 2) {
    std::vector<Polynomial> factors;
    std::vector<PartitionRound> history;
    GridDecomposition grid(factors, box, res);
    CellAssignment asg = assign_points(grid, P);
    bool ok = asg.unresolved == 0;
    int degree = 0;
    for (std::size_t i = 1; ok && i <= t; ++i) {
      PartitionRound round;
      round.index = i;
      round.largest_before = asg.max_count();
      std::vector<PointSet> heavy(grid.component_count());
      for (std::size_t p = 0; p < m; ++p) {
        if (asg.labels[p] >= 0) heavy[static_cast<std::size_t>(asg.labels[p])].push_back(P[p]);
      }
      std::erase_if(heavy, [&](const PointSet& S) { return (S.size() << i) <= m; });
      round.heavy_components = heavy.size();
      if (!heavy.empty()) {
        PolynomialBisector h = ideal ? polynomial_ham_sandwich(heavy, *ideal, options.bisector)
                                     : polynomial_ham_sandwich(heavy, options.bisector);
        round.bisector_degree = h.g.degree();
        factors.push_back(std::move(h.g));
        GridDecomposition next(factors, box, res);
        round.refines = refines(next, grid);
        grid = std::move(next);
        asg = assign_points(grid, P);
      }
      degree += round.bisector_degree;
      round.degree_after = degree;
      round.largest_after = asg.max_count();
      history.push_back(round);
      ok = asg.unresolved == 0 && (round.largest_after << i) <= m;
    }
    if (ok) {
      out.factors = std::move(factors);
      out.history = std::move(history);
      out.resolution = res;
      out.grid.emplace(std::move(grid));
      out.assignment = std::move(asg);
      out.degree = degree;
      break;
    }
    if (res * 2 > max_res) {
      throw ResolutionTooCoarse("grid resolution " + std::to_string(res) +
                                " cannot separate the points; maximum is " + std::to_string(max_res));
    }
    ++out.restarts;
  }

  out.g = Polynomial::constant(d, 1);
  for (const auto& f : out.factors) out.g = out.g * f;

  auto& env = out.envelope;
  for (const auto& round : out.history) {
    const double deg = round.bisector_degree;
    if (static_cast<double>(round.index) < log_m0) {
      env.c_D = std::max(env.c_D, deg);
    } else {
      env.c_1 = std::max(env.c_1, deg / std::pow(2.0, static_cast<double>(round.index) / env.variety_dimension));
    }
  }
  env.c_2 = env.c_1 / (1.0 - std::pow(2.0, -1.0 / env.variety_dimension));
  env.bound = degree_envelope(env.c_D, env.c_1, out.rounds, env.m0, env.variety_dimension);
  return out;
}

}  // namespace incidence
