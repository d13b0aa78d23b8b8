#pragma once

#include "incidence/semialg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace incidence {

/// P = [1..N] x [1..2N^2]; Q = lines y = a x + b, a in [1..N], b in [1..N^2],
/// stored as (a, b). Every line meets exactly N points, so there are N^4 edges.
BipartiteInstance st_grid(std::size_t N);

/// Points vs. hyperplanes <p, q> = 1. H holds the coefficient vectors q.
BipartiteInstance hyperplane_dual(const PointSet& P, const PointSet& H, std::size_t d);

/// n/2 points on x1^2 + x2^2 = 1/2 (x3 = x4 = 0) and n/2 on x3^2 + x4^2 = 1/2
/// (x1 = x2 = 0), all with rational coordinates. Throws for odd n or n < 2.
PointSet orthogonal_circles_r4(std::size_t n);

/// Like orthogonal_circles_r4 but with only `small` points on the first
/// circle; the remaining n - small go on the second. Throws when small > n.
PointSet lopsided_circles_r4(std::size_t n, std::size_t small);

/// Two copies of P with |p - q|^2 - 1 = 0 as the edge relation.
BipartiteInstance unit_distance_instance(const PointSet& P);

/// Number of unordered pairs {p, q} of P with |p - q| = 1, by exact arithmetic.
std::uint64_t unit_distance_count(const PointSet& P);

/// Whether every (d-3)-sphere in R^d holds fewer than k points of P. Spheres are
/// fitted through affinely independent subsets of 2..d-1 points.
Outcome sphere_condition_check(const PointSet& P, std::size_t k, std::uint64_t budget = 50'000'000);

/// Whether, for every pair of concentric circles of radius 1/sqrt(2) lying in
/// orthogonal 2-planes of R^4, one of them holds fewer than k points of P.
Outcome orthogonal_circle_condition(const PointSet& P, std::size_t k, std::uint64_t budget = 50'000'000);

/// Random point-line incidences in the plane (lines <p, q> = 1, so lines through
/// the origin are excluded). Points lie on a small integer grid and every line
/// is spanned by two of the points, which keeps the incidence count non-trivial.
BipartiteInstance random_point_line(std::size_t points, std::size_t lines, std::uint64_t seed);

struct GeneratorSpec {
  std::string name;
  std::size_t N = 0;
  std::size_t n = 0;
  std::size_t d = 2;
  std::size_t k = 2;
  std::uint64_t seed = 1;
};

/// Names accepted by generate().
std::vector<std::string> generator_names();

/// Dispatches on spec.name:
///   st_grid (N), point_line (n points, n lines, seed), unit_r4 (n),
///   unit_r4_lopsided (n; k - 1 points on the first circle).
/// Throws std::invalid_argument on an unknown name or bad parameters.
BipartiteInstance generate(const GeneratorSpec& spec);

}  // namespace incidence
