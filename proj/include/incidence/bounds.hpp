#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace incidence::bounds {

// Right-hand sides of the incidence / Zarankiewicz upper bounds. Every
// evaluator takes the hidden constant `c` explicitly and throws
// std::invalid_argument on negative sizes, negative eps, or exponent
// parameters that make a denominator vanish.

/// c (m n^{1-1/k} + n).
double kovari_sos_turan(double m, double n, int k, double c = 1.0);
/// c (m n^{1-1/d} + n), for a family whose shatter function is O(z^d).
double shatter_bound(double m, double n, int d, double c = 1.0);
/// c (m n^{1-1/d2} + n).
double semialgebraic_shatter_bound(double m, double n, int d2, double c = 1.0);
/// c ((mn)^{2/3} + m + n).
double planar(double m, double n, double c = 1.0);
/// c ((mn)^{d/(d+1)+eps} + m + n).
double equal_dimension(double m, double n, int d, double eps, double c = 1.0);
/// c (m^{d2(d1-1)/(d1 d2-1)+eps} n^{d1(d2-1)/(d1 d2-1)} + m + n).
double general(double m, double n, int d1, int d2, double eps, double c = 1.0);
/// c (m^{(d-1)s/(ds-1)+eps} n^{d(s-1)/(ds-1)} + m + n), points vs. varieties.
double varieties(double m, double n, int d, int s, double eps, double c = 1.0);
/// c n^{8/5+eps}.
double unit_distances_r4(double n, double eps, double c = 1.0);
/// c n^{2d/(d+1)+eps}.
double unit_distances_rd(double n, int d, double eps, double c = 1.0);
/// Points vs. tubes in R^d: c (m^{(2d-2)(d-1)/(d(2d-2)-1)+eps} n^{d(2d-3)/(d(2d-2)-1)} + m + n).
double tubes(double m, double n, int d, double eps, double c = 1.0);

/// Named selection used by the harness and the CLI.
enum class Kind { kst, shatter, semialgebraic, planar, equal_dim, general, varieties, unit_r4, unit_rd, tubes };

struct Params {
  int k = 2;
  int d = 2;
  int d1 = 2;
  int d2 = 2;
  int s = 2;
  double eps = 0.1;
};

std::string_view name(Kind kind);
std::optional<Kind> parse_kind(std::string_view text);
std::vector<Kind> all_kinds();

/// Evaluates `kind` at (m, n) with constant c.
double evaluate(Kind kind, double m, double n, const Params& params, double c = 1.0);

}  // namespace incidence::bounds
