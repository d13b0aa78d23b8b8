#include "incidence/semialg.hpp"

#include "incidence/sign_filter.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace incidence {

// ------------------------------------------------------------ predicates

bool satisfies(int sign, Relation relation) {
  switch (relation) {
    case Relation::geq: return sign >= 0;
    case Relation::gt: return sign > 0;
    case Relation::eq: return sign == 0;
    case Relation::leq: return sign <= 0;
    case Relation::lt: return sign < 0;
    case Relation::neq: return sign != 0;
  }
  return false;
}

std::string_view relation_name(Relation relation) {
  switch (relation) {
    case Relation::geq: return "geq";
    case Relation::gt: return "gt";
    case Relation::eq: return "eq";
    case Relation::leq: return "leq";
    case Relation::lt: return "lt";
    case Relation::neq: return "neq";
  }
  return "?";
}

Formula Formula::atom(std::size_t index, Relation relation) {
  Formula f;
  f.kind_ = Kind::atom;
  f.condition_ = {index, relation};
  return f;
}

Formula Formula::all_of(std::vector<Formula> children) {
  Formula f;
  f.kind_ = Kind::conjunction;
  f.children_ = std::move(children);
  return f;
}

Formula Formula::any_of(std::vector<Formula> children) {
  Formula f;
  f.kind_ = Kind::disjunction;
  f.children_ = std::move(children);
  return f;
}

Formula Formula::negate(Formula child) {
  Formula f;
  f.kind_ = Kind::negation;
  f.children_.push_back(std::move(child));
  return f;
}

std::optional<std::size_t> Formula::max_index() const {
  if (kind_ == Kind::atom) return condition_.index;
  std::optional<std::size_t> best;
  for (const auto& c : children_) {
    if (auto i = c.max_index(); i && (!best || *i > *best)) best = i;
  }
  return best;
}

namespace {

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = expression();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return f;
  }

 private:
  Formula expression() {
    expect('(');
    const std::string op = word();
    Formula out;
    if (op == "and" || op == "or") {
      std::vector<Formula> children;
      for (skip_space(); peek() != ')'; skip_space()) children.push_back(expression());
      if (children.empty()) fail("empty '" + op + "'");
      out = op == "and" ? Formula::all_of(std::move(children)) : Formula::any_of(std::move(children));
    } else if (op == "not") {
      out = Formula::negate(expression());
    } else {
      const Relation rel = relation(op);
      const std::string idx = word();
      std::size_t index = 0;
      try {
        index = std::stoul(idx);
      } catch (const std::exception&) {
        fail("bad polynomial index '" + idx + "'");
      }
      if (index == 0) fail("polynomial indices are one-based");
      out = Formula::atom(index - 1, rel);
    }
    expect(')');
    return out;
  }

  Relation relation(const std::string& op) const {
    for (Relation r : {Relation::geq, Relation::gt, Relation::eq, Relation::leq, Relation::lt, Relation::neq}) {
      if (relation_name(r) == op) return r;
    }
    fail("unknown operator '" + op + "'");
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a word");
    return std::string(text_.substr(start, pos_ - start));
  }
  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  char peek() const {
    if (pos_ >= text_.size()) fail("unexpected end of formula");
    return text_[pos_];
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("formula parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula Formula::parse(std::string_view text) { return FormulaParser(text).parse(); }

std::string to_string(const Formula& formula) {
  switch (formula.kind()) {
    case Formula::Kind::atom:
      return "(" + std::string(relation_name(formula.condition().relation)) + " " +
             std::to_string(formula.condition().index + 1) + ")";
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction: {
      std::string out = formula.kind() == Formula::Kind::conjunction ? "(and" : "(or";
      for (const auto& c : formula.children()) out += " " + to_string(c);
      return out + ")";
    }
    case Formula::Kind::negation:
      return "(not " + to_string(formula.children().front()) + ")";
  }
  return {};
}

EdgePredicate::EdgePredicate(std::size_t d1, std::size_t d2, std::vector<Polynomial> polynomials, Formula formula,
                             std::optional<std::size_t> complexity)
    : d1_(d1), d2_(d2), polynomials_(std::move(polynomials)), formula_(std::move(formula)) {
  std::size_t t = polynomials_.size();
  for (const auto& f : polynomials_) {
    if (f.dimension() != d1 + d2) throw std::invalid_argument("predicate polynomial must have d1 + d2 variables");
    if (!f.is_zero()) t = std::max(t, static_cast<std::size_t>(f.degree()));
  }
  if (auto i = formula_.max_index(); i && *i >= polynomials_.size()) {
    throw std::invalid_argument("formula references polynomial " + std::to_string(*i + 1) + " of " +
                                std::to_string(polynomials_.size()));
  }
  if (complexity) {
    if (*complexity < t) {
      throw std::invalid_argument("declared complexity " + std::to_string(*complexity) + " is below required " +
                                  std::to_string(t));
    }
    t = *complexity;
  }
  complexity_ = t;
}

bool EdgePredicate::holds(const Point& p, const Point& q) const {
  if (static_cast<std::size_t>(p.size()) != d1_ || static_cast<std::size_t>(q.size()) != d2_) {
    throw std::invalid_argument("point dimension does not match predicate");
  }
  Point joined(p.size() + q.size());
  joined << p, q;
  return formula_.evaluate([&](std::size_t i) { return sign_at(polynomials_[i], joined); });
}

void BipartiteInstance::validate() const {
  for (const auto& p : P) {
    if (static_cast<std::size_t>(p.size()) != predicate.d1()) throw std::invalid_argument("P point has wrong dimension");
  }
  for (const auto& q : Q) {
    if (static_cast<std::size_t>(q.size()) != predicate.d2()) throw std::invalid_argument("Q point has wrong dimension");
  }
}

// ------------------------------------------------------------- edge counts

EdgeSet edges(const BipartiteInstance& instance, const EdgeOptions& options) {
  instance.validate();
  const auto pairs = static_cast<std::uint64_t>(instance.m()) * static_cast<std::uint64_t>(instance.n());
  if (pairs > options.pair_cap) {
    throw PairCapExceeded("instance has " + std::to_string(pairs) + " pairs, cap is " +
                          std::to_string(options.pair_cap));
  }
  const auto& polys = instance.predicate.polynomials();
  std::vector<std::vector<double>> q_approx;
  q_approx.reserve(instance.n());
  for (const auto& q : instance.Q) q_approx.push_back(to_doubles(q));

  EdgeSet out;
  std::vector<int> memo(polys.size());
  for (std::size_t i = 0; i < instance.m(); ++i) {
    std::vector<SignEvaluator> restricted;
    restricted.reserve(polys.size());
    for (const auto& f : polys) restricted.emplace_back(partial_evaluate(f, instance.P[i]));
    for (std::size_t j = 0; j < instance.n(); ++j) {
      std::fill(memo.begin(), memo.end(), 2);
      const bool edge = instance.predicate.formula().evaluate([&](std::size_t a) {
        if (memo[a] == 2) memo[a] = restricted[a].sign(instance.Q[j], q_approx[j]);
        return memo[a];
      });
      if (edge) {
        ++out.count;
        if (options.collect_edges) out.edges.emplace_back(i, j);
      }
    }
  }
  return out;
}

std::string_view outcome_name(Outcome outcome) {
  switch (outcome) {
    case Outcome::yes: return "yes";
    case Outcome::no: return "no";
    case Outcome::undecided: return "undecided";
  }
  return "?";
}

KkkResult is_kkk_free(const BipartiteInstance& instance, std::size_t k, std::uint64_t budget) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  const EdgeSet e = edges(instance);
  const bool q_smaller = instance.n() <= instance.m();
  // Vertices of the smaller side, each with its neighborhood on the other side.
  const SetSystem side = neighborhood_system(instance.m(), instance.n(), e,
                                             q_smaller ? Side::q_neighborhoods : Side::p_neighborhoods);
  std::vector<std::size_t> candidates;
  for (std::size_t v = 0; v < side.size(); ++v) {
    if (side.sets[v].count() >= k) candidates.push_back(v);
  }

  KkkResult result;
  std::vector<std::size_t> chosen;
  bool exhausted = false;
  std::optional<std::pair<std::vector<std::size_t>, Subset>> found;

  std::function<void(std::size_t, const Subset&)> search = [&](std::size_t start, const Subset& common) {
    if (chosen.size() == k) {
      found.emplace(chosen, common);
      return;
    }
    for (std::size_t i = start; i < candidates.size() && !found && !exhausted; ++i) {
      if (candidates.size() - i < k - chosen.size()) break;
      if (++result.work > budget) {
        exhausted = true;
        return;
      }
      Subset next = common & side.sets[candidates[i]];
      if (next.count() < k) continue;
      chosen.push_back(candidates[i]);
      search(i + 1, next);
      chosen.pop_back();
    }
  };
  Subset all(side.ground_size);
  all.set();
  search(0, all);

  if (found) {
    BicliqueWitness w;
    std::vector<std::size_t> other;
    for (auto b = found->second.find_first(); b != Subset::npos && other.size() < k; b = found->second.find_next(b)) {
      other.push_back(b);
    }
    if (q_smaller) {
      w.q_side = found->first;
      w.p_side = other;
    } else {
      w.p_side = found->first;
      w.q_side = other;
    }
    result.free = Outcome::no;
    result.witness = std::move(w);
  } else {
    result.free = exhausted ? Outcome::undecided : Outcome::yes;
  }
  return result;
}

// --------------------------------------------------------------- set systems

SetSystem SetSystem::from_lists(std::size_t ground_size, const std::vector<std::vector<std::size_t>>& lists) {
  SetSystem s;
  s.ground_size = ground_size;
  for (const auto& l : lists) {
    Subset b(ground_size);
    for (auto e : l) {
      if (e >= ground_size) throw std::out_of_range("set element outside the ground set");
      b.set(e);
    }
    s.sets.push_back(std::move(b));
  }
  return s;
}

SetSystem SetSystem::deduplicated() const {
  SetSystem out{ground_size, sets};
  std::sort(out.sets.begin(), out.sets.end());
  out.sets.erase(std::unique(out.sets.begin(), out.sets.end()), out.sets.end());
  return out;
}

SetSystem neighborhood_system(std::size_t m, std::size_t n, const EdgeSet& e, Side side) {
  SetSystem s;
  const bool by_q = side == Side::q_neighborhoods;
  s.ground_size = by_q ? m : n;
  s.sets.assign(by_q ? n : m, Subset(s.ground_size));
  for (const auto& [i, j] : e.edges) {
    if (by_q) {
      s.sets[j].set(i);
    } else {
      s.sets[i].set(j);
    }
  }
  return s;
}

SetSystem neighborhood_system(const BipartiteInstance& instance, Side side) {
  return neighborhood_system(instance.m(), instance.n(), edges(instance), side);
}

SetSystem dual(const SetSystem& system) {
  SetSystem out;
  out.ground_size = system.size();
  out.sets.assign(system.ground_size, Subset(system.size()));
  for (std::size_t a = 0; a < system.size(); ++a) {
    const auto& set = system.sets[a];
    for (auto p = set.find_first(); p != Subset::npos; p = set.find_next(p)) out.sets[p].set(a);
  }
  return out;
}

BudgetedValue shatter_function(const SetSystem& system, std::size_t z, std::uint64_t budget) {
  if (z > system.ground_size) throw std::invalid_argument("z exceeds the ground set size");
  if (z > 62) throw std::invalid_argument("z too large for trace packing");
  if (system.sets.empty()) return {0, true};
  const std::uint64_t cap = std::min<std::uint64_t>(std::uint64_t{1} << z, system.deduplicated().size());
  std::vector<std::size_t> pick(z);
  for (std::size_t i = 0; i < z; ++i) pick[i] = i;
  std::vector<std::uint64_t> traces(system.size());
  std::uint64_t work = 0;
  long best = 0;
  for (;;) {
    work += system.size();
    if (work > budget) return {best, false};
    for (std::size_t a = 0; a < system.size(); ++a) {
      std::uint64_t t = 0;
      for (std::size_t j = 0; j < z; ++j) {
        if (system.sets[a][pick[j]]) t |= std::uint64_t{1} << j;
      }
      traces[a] = t;
    }
    std::vector<std::uint64_t> sorted(traces);
    std::sort(sorted.begin(), sorted.end());
    const auto distinct = static_cast<long>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    best = std::max(best, distinct);
    if (static_cast<std::uint64_t>(best) == cap) return {best, true};
    // Next z-combination in lexicographic order.
    std::size_t i = z;
    while (i > 0 && pick[i - 1] == system.ground_size - z + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < z; ++j) pick[j] = pick[j - 1] + 1;
  }
  return {best, true};
}

BudgetedValue vc_dimension(const SetSystem& system, std::uint64_t budget) {
  if (system.sets.empty()) return {-1, true};
  const std::size_t distinct = system.deduplicated().size();
  long d0 = 0;
  std::uint64_t spent = 0;
  for (std::size_t z = 1; z <= system.ground_size && z < 62; ++z) {
    if ((std::uint64_t{1} << z) > distinct) break;
    const auto pi = shatter_function(system, z, budget - std::min(spent, budget));
    spent += system.size();  // coarse; the callee enforces the remaining budget
    if (!pi.decided) return {d0, false};
    if (pi.value != (long{1} << z)) break;
    d0 = static_cast<long>(z);
  }
  return {d0, true};
}

std::vector<std::pair<std::size_t, std::size_t>> unit_distance_graph(const SetSystem& system) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < system.size(); ++i) {
    for (std::size_t j = i + 1; j < system.size(); ++j) {
      if ((system.sets[i] ^ system.sets[j]).count() == 1) out.emplace_back(i, j);
    }
  }
  return out;
}

SeparationResult is_k_delta_separated(const SetSystem& system, std::size_t k, std::size_t delta,
                                      std::uint64_t budget) {
  if (k < 2) throw std::invalid_argument("separation needs k >= 2");
  SeparationResult result;
  if (system.size() < k) {
    result.separated = Outcome::yes;
    return result;
  }
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  std::uint64_t work = 0;
  const std::size_t n = system.size();
  for (;;) {
    if (++work > budget) {
      result.separated = Outcome::undecided;
      return result;
    }
    Subset uni = system.sets[pick[0]];
    Subset inter = system.sets[pick[0]];
    for (std::size_t j = 1; j < k; ++j) {
      uni |= system.sets[pick[j]];
      inter &= system.sets[pick[j]];
    }
    if ((uni - inter).count() < delta) {
      result.separated = Outcome::no;
      result.violating = pick;
      return result;
    }
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  result.separated = Outcome::yes;
  return result;
}

// -------------------------------------------------------- sign patterns

std::set<SignVector> sign_pattern_census(const std::vector<Polynomial>& polynomials, const PointSet& probes) {
  if (probes.empty()) throw std::invalid_argument("sign pattern census needs at least one probe");
  std::vector<SignEvaluator> evaluators;
  for (const auto& f : polynomials) evaluators.emplace_back(f);
  std::set<SignVector> patterns;
  for (const auto& x : probes) {
    const auto approx = to_doubles(x);
    SignVector s;
    s.reserve(evaluators.size());
    for (const auto& e : evaluators) s.push_back(e.sign(x, approx));
    patterns.insert(std::move(s));
  }
  return patterns;
}

std::optional<Rational> milnor_thom_bound(std::size_t polynomial_count, std::size_t dimension, std::size_t degree) {
  if (dimension < 2 || polynomial_count < dimension) return std::nullopt;
  const Rational base(Integer(50) * degree * polynomial_count, Integer(dimension));
  Rational out = 1;
  for (std::size_t i = 0; i < dimension; ++i) out *= base;
  return out;
}

}  // namespace incidence
