#pragma once

#include "incidence/polynomial.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace incidence {

// ------------------------------------------------------------ predicates

enum class Relation { geq, gt, eq, leq, lt, neq };

bool satisfies(int sign, Relation relation);
std::string_view relation_name(Relation relation);

/// Atom `f_index (relation) 0`; index is zero-based.
struct SignCondition {
  std::size_t index = 0;
  Relation relation = Relation::geq;
  friend bool operator==(const SignCondition&, const SignCondition&) = default;
};

/// Boolean combination of sign conditions. Text form is prefix notation with
/// one-based polynomial indices, e.g. `(and (geq 1) (not (gt 2)))`.
class Formula {
 public:
  enum class Kind { atom, conjunction, disjunction, negation };

  static Formula atom(std::size_t index, Relation relation);
  static Formula all_of(std::vector<Formula> children);
  static Formula any_of(std::vector<Formula> children);
  static Formula negate(Formula child);

  static Formula parse(std::string_view text);

  Kind kind() const { return kind_; }
  const SignCondition& condition() const { return condition_; }
  const std::vector<Formula>& children() const { return children_; }

  /// Largest polynomial index referenced (zero-based); nullopt if none.
  std::optional<std::size_t> max_index() const;

  /// `sign(i)` is called lazily for the atoms that are actually inspected.
  template <typename SignFn>
  bool evaluate(SignFn&& sign) const {
    switch (kind_) {
      case Kind::atom:
        return satisfies(sign(condition_.index), condition_.relation);
      case Kind::conjunction:
        for (const auto& c : children_) {
          if (!c.evaluate(sign)) return false;
        }
        return true;
      case Kind::disjunction:
        for (const auto& c : children_) {
          if (c.evaluate(sign)) return true;
        }
        return false;
      case Kind::negation:
        return !children_.front().evaluate(sign);
    }
    return false;
  }

  friend bool operator==(const Formula&, const Formula&) = default;

 private:
  Kind kind_ = Kind::atom;
  SignCondition condition_;
  std::vector<Formula> children_;
};

std::string to_string(const Formula& formula);

/// Semi-algebraic edge relation on R^{d1} x R^{d2}: polynomials in d1 + d2
/// variables (p coordinates first) combined by a formula.
class EdgePredicate {
 public:
  /// Throws std::invalid_argument when a polynomial has the wrong dimension,
  /// the formula references a missing polynomial, or a declared complexity t
  /// is smaller than the polynomial count or a polynomial degree.
  EdgePredicate(std::size_t d1, std::size_t d2, std::vector<Polynomial> polynomials, Formula formula,
                std::optional<std::size_t> complexity = std::nullopt);

  std::size_t d1() const { return d1_; }
  std::size_t d2() const { return d2_; }
  const std::vector<Polynomial>& polynomials() const { return polynomials_; }
  const Formula& formula() const { return formula_; }
  /// Description complexity t.
  std::size_t complexity() const { return complexity_; }

  /// Exact evaluation on a single pair.
  bool holds(const Point& p, const Point& q) const;

 private:
  std::size_t d1_;
  std::size_t d2_;
  std::vector<Polynomial> polynomials_;
  Formula formula_;
  std::size_t complexity_;
};

struct BipartiteInstance {
  PointSet P;
  PointSet Q;
  EdgePredicate predicate;

  /// Throws when a point dimension disagrees with the predicate.
  void validate() const;
  std::size_t m() const { return P.size(); }
  std::size_t n() const { return Q.size(); }
};

// ------------------------------------------------------------- edge counts

struct EdgeOptions {
  /// Refuse instances with more than this many pairs.
  std::uint64_t pair_cap = 50'000'000;
  bool collect_edges = true;
};

struct EdgeSet {
  std::uint64_t count = 0;
  /// (index into P, index into Q), ordered by P then Q.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

class PairCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

EdgeSet edges(const BipartiteInstance& instance, const EdgeOptions& options = {});

/// Three-valued answer for budgeted exhaustive searches.
enum class Outcome { yes, no, undecided };
std::string_view outcome_name(Outcome outcome);

struct BicliqueWitness {
  std::vector<std::size_t> p_side;
  std::vector<std::size_t> q_side;
};

struct KkkResult {
  /// yes: K_{k,k}-free; no: a witness was found; undecided: budget exhausted.
  Outcome free = Outcome::undecided;
  std::optional<BicliqueWitness> witness;
  std::uint64_t work = 0;
};

KkkResult is_kkk_free(const BipartiteInstance& instance, std::size_t k, std::uint64_t budget = 50'000'000);

// --------------------------------------------------------------- set systems

using Subset = boost::dynamic_bitset<>;

struct SetSystem {
  std::size_t ground_size = 0;
  std::vector<Subset> sets;

  /// Builds a system from element lists; throws on out-of-range elements.
  static SetSystem from_lists(std::size_t ground_size, const std::vector<std::vector<std::size_t>>& lists);
  std::size_t size() const { return sets.size(); }
  SetSystem deduplicated() const;
};

enum class Side {
  /// {N(q) : q in Q}, ground set P.
  q_neighborhoods,
  /// {N(p) : p in P}, ground set Q.
  p_neighborhoods
};

SetSystem neighborhood_system(const BipartiteInstance& instance, Side side);
SetSystem neighborhood_system(std::size_t m, std::size_t n, const EdgeSet& edges, Side side);

/// Interchanges ground set and family: F* = {{A in F : p in A} : p in P}.
SetSystem dual(const SetSystem& system);

struct BudgetedValue {
  long value = 0;
  /// False when the budget ran out; `value` is then a lower bound.
  bool decided = true;
};

/// pi_F(z): maximum number of distinct traces on a z-element subset.
BudgetedValue shatter_function(const SetSystem& system, std::size_t z, std::uint64_t budget = 200'000'000);

/// Largest z with pi_F(z) = 2^z; -1 for the empty family.
BudgetedValue vc_dimension(const SetSystem& system, std::uint64_t budget = 200'000'000);

/// Index pairs (i < j) whose sets have symmetric difference of size exactly 1.
std::vector<std::pair<std::size_t, std::size_t>> unit_distance_graph(const SetSystem& system);

struct SeparationResult {
  Outcome separated = Outcome::undecided;
  std::optional<std::vector<std::size_t>> violating;
};

/// Whether every k sets have |union minus intersection| >= delta.
SeparationResult is_k_delta_separated(const SetSystem& system, std::size_t k, std::size_t delta,
                                      std::uint64_t budget = 200'000'000);

// -------------------------------------------------------- sign patterns

using SignVector = std::vector<int>;

/// Distinct sign vectors realized at the probes (a lower bound on the number
/// of sign patterns of the family).
std::set<SignVector> sign_pattern_census(const std::vector<Polynomial>& polynomials, const PointSet& probes);

/// (50 t l / d)^d, the sign-pattern bound for l polynomials of degree <= t in d
/// variables. nullopt unless l >= d >= 2.
std::optional<Rational> milnor_thom_bound(std::size_t polynomial_count, std::size_t dimension, std::size_t degree);

}  // namespace incidence
