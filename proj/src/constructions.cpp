#include "incidence/constructions.hpp"

#include "incidence/linalg.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace incidence {

BipartiteInstance st_grid(std::size_t N) {
  if (N == 0) throw std::invalid_argument("st_grid needs N >= 1");
  const long n = static_cast<long>(N);
  PointSet P;
  P.reserve(2 * N * N * N);
  for (long x = 1; x <= n; ++x) {
    for (long y = 1; y <= 2 * n * n; ++y) P.push_back(make_point({x, y}));
  }
  PointSet Q;
  Q.reserve(N * N * N);
  for (long a = 1; a <= n; ++a) {
    for (long b = 1; b <= n * n; ++b) Q.push_back(make_point({a, b}));
  }
  // p2 - q1 p1 - q2 = 0
  Polynomial f = parse_polynomial("x2 - x1*x3 - x4", 4);
  EdgePredicate pred(2, 2, {std::move(f)}, Formula::atom(0, Relation::eq));
  return {std::move(P), std::move(Q), std::move(pred)};
}

BipartiteInstance hyperplane_dual(const PointSet& P, const PointSet& H, std::size_t d) {
  if (d == 0) throw std::invalid_argument("hyperplane_dual needs d >= 1");
  Polynomial f = Polynomial::constant(2 * d, -1);
  for (std::size_t i = 0; i < d; ++i) f += Polynomial::variable(2 * d, i) * Polynomial::variable(2 * d, d + i);
  EdgePredicate pred(d, d, {std::move(f)}, Formula::atom(0, Relation::eq));
  BipartiteInstance inst{P, H, std::move(pred)};
  inst.validate();
  return inst;
}

namespace {

// Rational point ((u+v)/2, (u-v)/2) on x^2 + y^2 = 1/2, where (u, v) is the
// Pythagorean point of the unit circle at parameter t. Parameters start at 1:
// two integer parameters t1 > t2 >= 1 never give perpendicular radii, so no two
// points of one circle are at unit distance.
std::pair<Rational, Rational> half_circle_point(long t) {
  const Rational tt(t);
  const Rational den = 1 + tt * tt;
  const Rational u = (1 - tt * tt) / den;
  const Rational v = 2 * tt / den;
  return {(u + v) / 2, (u - v) / 2};
}

PointSet two_circles(std::size_t first, std::size_t second) {
  PointSet P;
  for (std::size_t j = 0; j < first; ++j) {
    auto [a, b] = half_circle_point(static_cast<long>(j) + 1);
    P.push_back(make_point({a, b, 0, 0}));
  }
  for (std::size_t j = 0; j < second; ++j) {
    auto [a, b] = half_circle_point(static_cast<long>(j) + 1);
    P.push_back(make_point({0, 0, a, b}));
  }
  return P;
}

}  // namespace

PointSet orthogonal_circles_r4(std::size_t n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("orthogonal_circles_r4 needs an even n >= 2");
  return two_circles(n / 2, n / 2);
}

PointSet lopsided_circles_r4(std::size_t n, std::size_t small) {
  if (small > n) throw std::invalid_argument("lopsided_circles_r4: small exceeds n");
  return two_circles(small, n - small);
}

BipartiteInstance unit_distance_instance(const PointSet& P) {
  if (P.empty()) throw std::invalid_argument("unit_distance_instance needs a non-empty point set");
  const std::size_t d = P.front().size();
  Polynomial f = Polynomial::constant(2 * d, -1);
  for (std::size_t i = 0; i < d; ++i) {
    const Polynomial diff = Polynomial::variable(2 * d, i) - Polynomial::variable(2 * d, d + i);
    f += diff * diff;
  }
  EdgePredicate pred(d, d, {std::move(f)}, Formula::atom(0, Relation::eq));
  BipartiteInstance inst{P, P, std::move(pred)};
  inst.validate();
  return inst;
}

std::uint64_t unit_distance_count(const PointSet& P) {
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < P.size(); ++i) {
    for (std::size_t j = i + 1; j < P.size(); ++j) {
      if ((P[i] - P[j]).squaredNorm() == 1) ++count;
    }
  }
  return count;
}

namespace {

// Circumsphere of affinely independent points inside their affine hull.
struct HullSphere {
  Point origin;
  MatrixXq directions;  // columns p_j - p_0
  MatrixXq gram;
  Point center;
  Rational radius2;

  bool contains(const Point& x) const {
    const Point rel = x - origin;
    auto mu = solve_exact<Rational>(gram, directions.transpose() * rel);
    if (!mu || directions * *mu != rel) return false;
    return (x - center).squaredNorm() == radius2;
  }
};

std::optional<HullSphere> hull_sphere(const PointSet& P, const std::vector<std::size_t>& pick) {
  const auto d = P[pick[0]].size();
  const auto s = static_cast<Eigen::Index>(pick.size()) - 1;
  HullSphere h;
  h.origin = P[pick[0]];
  h.directions.resize(d, s);
  for (Eigen::Index j = 0; j < s; ++j) h.directions.col(j) = P[pick[j + 1]] - h.origin;
  h.gram = h.directions.transpose() * h.directions;
  // 2 G lambda = diag(G)
  VectorXq rhs = h.gram.diagonal();
  auto lambda = solve_exact<Rational>(MatrixXq(Rational(2) * h.gram), rhs);
  if (!lambda) return std::nullopt;
  h.center = h.origin + h.directions * *lambda;
  h.radius2 = (h.center - h.origin).squaredNorm();
  return h;
}

// Calls visit(pick) for each size-s subset of [0, n) in lexicographic order
// until visit returns false.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t s, Visit&& visit) {
  if (s > n) return;
  std::vector<std::size_t> pick(s);
  for (std::size_t i = 0; i < s; ++i) pick[i] = i;
  for (;;) {
    if (!visit(pick)) return;
    std::size_t i = s;
    while (i > 0 && pick[i - 1] == n - s + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
  }
}

std::size_t common_dimension(const PointSet& P) {
  const auto d = P.front().size();
  for (const auto& p : P) {
    if (p.size() != d) throw std::invalid_argument("points of different dimensions");
  }
  return static_cast<std::size_t>(d);
}

}  // namespace

Outcome sphere_condition_check(const PointSet& P, std::size_t k, std::uint64_t budget) {
  if (P.empty()) return Outcome::yes;
  const std::size_t d = common_dimension(P);
  if (d < 3) throw std::invalid_argument("sphere_condition_check needs d >= 3");
  if (k <= 1) return Outcome::no;
  std::uint64_t work = 0;
  bool exhausted = false;
  bool violated = false;
  for (std::size_t s = 2; s + 1 <= d && !violated && !exhausted; ++s) {
    for_each_subset(P.size(), s, [&](const std::vector<std::size_t>& pick) {
      work += P.size();
      if (work > budget) {
        exhausted = true;
        return false;
      }
      const auto sphere = hull_sphere(P, pick);
      if (!sphere) return true;
      std::size_t on = 0;
      for (const auto& x : P) on += sphere->contains(x) ? 1 : 0;
      if (on >= k) violated = true;
      return !violated;
    });
  }
  if (violated) return Outcome::no;
  return exhausted ? Outcome::undecided : Outcome::yes;
}

Outcome orthogonal_circle_condition(const PointSet& P, std::size_t k, std::uint64_t budget) {
  if (P.empty()) return Outcome::yes;
  if (common_dimension(P) != 4) throw std::invalid_argument("orthogonal_circle_condition works in R^4");
  if (k <= 1) return Outcome::no;
  struct Circle {
    Point center;
    std::vector<std::size_t> members;
  };
  std::vector<Circle> heavy;
  std::set<std::vector<std::size_t>> seen;
  std::uint64_t work = 0;
  bool exhausted = false;
  const Rational half(1, 2);
  for_each_subset(P.size(), 3, [&](const std::vector<std::size_t>& pick) {
    work += P.size();
    if (work > budget) {
      exhausted = true;
      return false;
    }
    const auto sphere = hull_sphere(P, pick);
    if (!sphere || sphere->radius2 != half) return true;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < P.size(); ++i) {
      if (sphere->contains(P[i])) members.push_back(i);
    }
    if (members.size() >= k && seen.insert(members).second) heavy.push_back({sphere->center, std::move(members)});
    return true;
  });
  if (exhausted) return Outcome::undecided;
  for (std::size_t a = 0; a < heavy.size(); ++a) {
    for (std::size_t b = a + 1; b < heavy.size(); ++b) {
      if (heavy[a].center != heavy[b].center) continue;
      bool orthogonal = true;
      for (auto i : heavy[a].members) {
        for (auto j : heavy[b].members) {
          if ((P[i] - heavy[a].center).dot(P[j] - heavy[a].center) != 0) orthogonal = false;
        }
      }
      if (orthogonal) return Outcome::no;
    }
  }
  return Outcome::yes;
}

BipartiteInstance random_point_line(std::size_t points, std::size_t lines, std::uint64_t seed) {
  if (points < 2) throw std::invalid_argument("random_point_line needs at least two points");
  std::mt19937_64 rng(seed);
  long g = 1;
  while (static_cast<std::size_t>((2 * g + 1) * (2 * g + 1)) < 2 * points) ++g;
  auto coord = [&] { return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * g + 1)) - g; };
  std::set<std::pair<long, long>> used;
  PointSet P;
  while (P.size() < points) {
    const long x = coord();
    const long y = coord();
    if (used.insert({x, y}).second) P.push_back(make_point({x, y}));
  }
  std::set<std::pair<std::string, std::string>> seen;
  PointSet Q;
  for (std::size_t attempt = 0; Q.size() < lines && attempt < 100 * lines + 100; ++attempt) {
    const std::size_t i = rng() % points;
    const std::size_t j = rng() % points;
    if (i == j) continue;
    MatrixXq a(2, 2);
    a.row(0) = P[i].transpose();
    a.row(1) = P[j].transpose();
    auto q = solve_exact<Rational>(a, VectorXq::Ones(2));
    if (!q) continue;  // the two points are collinear with the origin
    if (seen.insert({to_string((*q)(0)), to_string((*q)(1))}).second) Q.push_back(*q);
  }
  return hyperplane_dual(P, Q, 2);
}

std::vector<std::string> generator_names() { return {"st_grid", "point_line", "unit_r4", "unit_r4_lopsided"}; }

BipartiteInstance generate(const GeneratorSpec& spec) {
  if (spec.name == "st_grid") return st_grid(spec.N);
  if (spec.name == "point_line") return random_point_line(spec.n, spec.n, spec.seed);
  if (spec.name == "unit_r4") return unit_distance_instance(orthogonal_circles_r4(spec.n));
  if (spec.name == "unit_r4_lopsided") {
    if (spec.k < 1) throw std::invalid_argument("unit_r4_lopsided needs k >= 1");
    return unit_distance_instance(lopsided_circles_r4(spec.n, std::min(spec.n, spec.k - 1)));
  }
  throw std::invalid_argument("unknown generator '" + spec.name + "'");
}

}  // namespace incidence
