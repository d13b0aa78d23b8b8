#pragma once

#include "incidence/bounds.hpp"
#include "incidence/constructions.hpp"
#include "incidence/io.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace incidence {

struct ExperimentConfig {
  /// Generator; each size is fed to it as N for st_grid and as n otherwise.
  GeneratorSpec generator;
  std::vector<std::size_t> sizes;
  /// K_{k,k} hypothesis gate.
  std::size_t k = 2;
  std::vector<bounds::Kind> bounds{bounds::Kind::planar};
  bounds::Params params;
  std::uint64_t seed = 1;
  std::uint64_t kkk_budget = 50'000'000;
  std::uint64_t pair_cap = 50'000'000;
  bool check_hypothesis = true;
  /// Record wall time in reports. Off by default so reports are byte-stable.
  bool timing = false;

  /// Throws std::invalid_argument unless sizes increase strictly, eps >= 0,
  /// budgets are positive and k >= 1.
  void validate() const;
};

struct SweepRow {
  std::size_t size = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  std::uint64_t edges = 0;
  /// One value per selected bound, evaluated with constant 1.
  std::vector<double> bound_values;
  Outcome hypothesis = Outcome::undecided;
  double seconds = 0;
  /// Non-empty when generation or counting failed.
  std::string error;
};

struct Fit {
  double slope = 0;
  double intercept = 0;
  double stderr_slope = 0;
  std::size_t points = 0;
};

struct SweepResult {
  ExperimentConfig config;
  std::vector<SweepRow> rows;
  /// Exponent of edges against m; present only with >= 4 successful rows.
  std::optional<Fit> fit;
  bool partial = false;
};

/// Generates, counts, evaluates bounds and the hypothesis gate for every size.
/// The gate is K_{k,k}-freeness, plus the orthogonal-circle condition for the
/// unit_r4 generators. Sizes run in parallel; rows are kept in size order. A
/// failing size stops the sweep; the result is then flagged partial.
SweepResult run_sweep(const ExperimentConfig& config);

/// Least squares of log(value) on log(size). Needs >= 2 rows, positive
/// entries and at least two distinct sizes; errors name the offending row.
Fit fit_exponent(const std::vector<std::pair<double, double>>& rows);

enum class Verdict { pass, bound_failed, hypothesis_failed, skipped };
std::string_view verdict_name(Verdict verdict);

struct BoundReport {
  bounds::Kind kind;
  std::vector<Verdict> verdicts;
  /// max edges / bound over rows whose hypothesis holds; the smallest passing c.
  double smallest_constant = 0;
  std::size_t failures = 0;
};

struct VerifyReport {
  double constant = 1;
  std::vector<BoundReport> bounds;
  /// No bound_failed verdict anywhere.
  bool passed = true;
};

/// edges <= c * bound for every row whose hypothesis gate answered yes. Rows
/// with a violated hypothesis are reported as such, undecided gates and failed
/// rows as skipped; neither counts as a bound failure.
VerifyReport verify_bounds(const SweepResult& result, double constant);

// Reports. Column order: size,m,n,edges,hypothesis,<bound names...>[,seconds].
void write_csv(const SweepResult& result, std::ostream& out);
void write_dat(const SweepResult& result, std::ostream& out);
Json sweep_to_json(const SweepResult& result);
SweepResult sweep_from_json(const Json& json);
Json verify_to_json(const VerifyReport& report, const SweepResult& result);
Json fit_to_json(const Fit& fit);

/// Parses "2,3,4" or "2..10" (inclusive) into sizes.
std::vector<std::size_t> parse_sizes(std::string_view text);

}  // namespace incidence
