#pragma once

#include "incidence/ideal.hpp"
#include "incidence/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace incidence {

// ------------------------------------------------------------ ham sandwich

/// Locus offset + <normal, y> = 0.
struct Hyperplane {
  Rational offset;
  VectorXq normal;

  /// Sign of offset + <normal, y>.
  int side(const Point& y) const;
};

class DegenerateConfiguration : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HamSandwichOptions {
  std::uint64_t seed = 0x5eed;
  int restarts = 48;
  int iterations = 120;
  /// Pivot tuples examined by the exhaustive fallback.
  std::uint64_t enumeration_budget = 2'000'000;
};

/// Counts of points strictly on the positive / negative side.
struct SideCounts {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t on = 0;
};

SideCounts count_sides(const Hyperplane& h, const PointSet& S);

/// A hyperplane in R^D whose open halfspaces each hold at most |S_i|/2 points
/// of every S_i. Needs at most D sets; empty sets are ignored. Throws
/// DegenerateConfiguration when no bisector is found.
Hyperplane discrete_ham_sandwich(const std::vector<PointSet>& sets, const HamSandwichOptions& options = {});

struct PolynomialBisector {
  Polynomial g;
  /// Degree bound m of the quotient space used for the lift.
  std::size_t degree_bound = 0;
  /// E_m = dimension of that quotient space.
  std::size_t basis_size = 0;
};

struct PolynomialHamOptions {
  std::size_t max_degree = 16;
  HamSandwichOptions ham;
};

/// Polynomial bisecting every S_i. Uses the smallest m whose quotient space
/// R[x]_{<=m} / I_{<=m} has dimension at least (number of non-empty sets) + 1,
/// lifts through the graded-lex smallest monomial representatives and cuts
/// with a hyperplane. With an ideal, every point must lie on its zero set and
/// the result is outside the ideal. The result is normalized (primitive
/// integer coefficients, positive leading coefficient).
PolynomialBisector polynomial_ham_sandwich(const std::vector<PointSet>& sets, const PolynomialHamOptions& options = {});
PolynomialBisector polynomial_ham_sandwich(const std::vector<PointSet>& sets, const Ideal& ideal,
                                           const PolynomialHamOptions& options = {});

// ------------------------------------------------------------------ grids

struct Box {
  VectorXq lower;
  VectorXq upper;

  std::size_t dimension() const { return static_cast<std::size_t>(lower.size()); }
  bool contains(const Point& x) const;
};

/// Bounding box of P grown by a margin of 1/8 of each extent (at least 1/2).
Box bounding_box(const PointSet& P);

/// Lattice of resolution^d cells over a box. Each cell records the signs of
/// the factors at its center; cells with no zero sign are flood-filled into
/// components of axis-adjacent cells with identical sign vectors.
class GridDecomposition {
 public:
  GridDecomposition(std::vector<Polynomial> factors, Box box, std::size_t resolution);

  const std::vector<Polynomial>& factors() const { return factors_; }
  const Box& box() const { return box_; }
  std::size_t resolution() const { return resolution_; }
  std::size_t dimension() const { return box_.dimension(); }
  std::size_t cell_count() const { return labels_.size(); }
  std::size_t component_count() const { return component_count_; }

  /// Component of a cell, or -1 when some factor vanishes at its center.
  long label(std::size_t cell) const { return labels_[cell]; }
  /// Sign of factor j at the center of `cell`.
  int sign(std::size_t cell, std::size_t factor) const { return signs_[cell * factors_.size() + factor]; }

  /// Linear index <-> multi-index (first coordinate varies slowest).
  std::size_t cell_index(const std::vector<std::size_t>& multi) const;
  std::vector<std::size_t> cell_multi_index(std::size_t cell) const;
  Point cell_center(std::size_t cell) const;
  /// Cell containing x (upper faces belong to the lower cell on the box boundary).
  std::size_t locate(const Point& x) const;

 private:
  std::vector<Polynomial> factors_;
  Box box_;
  std::size_t resolution_;
  std::vector<std::int8_t> signs_;
  std::vector<long> labels_;
  std::size_t component_count_ = 0;
};

inline constexpr long kOnZeroSet = -1;
inline constexpr long kUnresolved = -2;

struct CellAssignment {
  /// Per point: component id, kOnZeroSet, or kUnresolved.
  std::vector<long> labels;
  std::vector<std::size_t> counts;
  std::size_t on_zero_set = 0;
  std::size_t unresolved = 0;

  std::size_t max_count() const;
};

/// Points whose exact sign vector is zero somewhere go to the zero set. Others
/// join the component of their own cell when its sign vector matches theirs,
/// otherwise the first matching cell among the 3^d neighbors, otherwise they
/// are unresolved. Throws when a point lies outside the box.
CellAssignment assign_points(const GridDecomposition& grid, const PointSet& P);

struct Cells {
  GridDecomposition grid;
  CellAssignment assignment;
};

Cells cells(const Polynomial& g, const PointSet& P, const Box& box, std::size_t resolution);
Cells cells(const std::vector<Polynomial>& factors, const PointSet& P, const Box& box, std::size_t resolution);

// ------------------------------------------------------------ partitioning

struct PartitionRound {
  std::size_t index = 0;  // i, so the round builds g_i = g_{i-1} h_{i-1}
  std::size_t heavy_components = 0;
  std::size_t largest_before = 0;
  std::size_t largest_after = 0;
  int bisector_degree = 0;
  int degree_after = 0;
  bool refines = true;
};

struct DegreeEnvelope {
  std::size_t m0 = 4;
  double variety_dimension = 1;
  /// Largest bisector degree among rounds i < log2 m0.
  double c_D = 0;
  /// Largest deg h_{i-1} / 2^{i/d'} among rounds i >= log2 m0.
  double c_1 = 0;
  double c_2 = 0;
  /// c_D min(t, log2 m0) + c_2 2^{t/d'} (second term only when t >= log2 m0).
  double bound = 0;
};

/// c_D min(t, log2 m0) + [t >= log2 m0] c_1 / (1 - 2^{-1/d'}) 2^{t/d'}.
double degree_envelope(double c_D, double c_1, std::size_t rounds, std::size_t m0, double variety_dimension);

struct PartitionPolynomial {
  Polynomial g;
  std::vector<Polynomial> factors;
  std::size_t r = 1;
  std::size_t rounds = 0;
  std::size_t resolution = 0;
  std::optional<GridDecomposition> grid;
  CellAssignment assignment;
  std::vector<PartitionRound> history;
  DegreeEnvelope envelope;
  /// deg g (0 for g = 1).
  int degree = 0;
  /// Number of grid refinements that were needed.
  std::size_t restarts = 0;
};

struct PartitionOptions {
  std::optional<std::size_t> resolution;
  std::optional<std::size_t> max_resolution;
  std::optional<Box> box;
  std::size_t m0 = 4;
  PolynomialHamOptions bisector;
};

class ResolutionTooCoarse : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Iterated polynomial ham-sandwich partition: for i = 1..ceil(log2 r) the
/// grid components of {g_{i-1} != 0} holding more than m/2^i points are
/// bisected simultaneously, g_i = g_{i-1} h_{i-1}. Every grid component of the
/// result holds at most m/2^t <= m/r points at the returned resolution. The
/// grid resolution doubles until that holds; past max_resolution the call
/// throws ResolutionTooCoarse. For |P| < 2 or r <= 1 the result is g = 1.
PartitionPolynomial partitioning_polynomial(const PointSet& P, std::size_t r, const std::optional<Ideal>& ideal = std::nullopt,
                                            const PartitionOptions& options = {});

}  // namespace incidence
