#include "incidence/bounds.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace incidence::bounds {

namespace {

void check_sizes(double m, double n) {
  if (!(m >= 0) || !(n >= 0)) throw std::invalid_argument("bound sizes must be non-negative");
}
void check_eps(double eps) {
  if (!(eps >= 0)) throw std::invalid_argument("eps must be non-negative");
}
void check_positive(int v, const char* what) {
  if (v < 1) throw std::invalid_argument(std::string(what) + " must be at least 1");
}

}  // namespace

double kovari_sos_turan(double m, double n, int k, double c) {
  check_sizes(m, n);
  check_positive(k, "k");
  return c * (m * std::pow(n, 1.0 - 1.0 / k) + n);
}

double shatter_bound(double m, double n, int d, double c) {
  check_sizes(m, n);
  check_positive(d, "d");
  return c * (m * std::pow(n, 1.0 - 1.0 / d) + n);
}

double semialgebraic_shatter_bound(double m, double n, int d2, double c) { return shatter_bound(m, n, d2, c); }

double planar(double m, double n, double c) {
  check_sizes(m, n);
  return c * (std::pow(m * n, 2.0 / 3.0) + m + n);
}

double equal_dimension(double m, double n, int d, double eps, double c) {
  check_sizes(m, n);
  check_eps(eps);
  check_positive(d, "d");
  return c * (std::pow(m * n, static_cast<double>(d) / (d + 1) + eps) + m + n);
}

double general(double m, double n, int d1, int d2, double eps, double c) {
  check_sizes(m, n);
  check_eps(eps);
  check_positive(d1, "d1");
  check_positive(d2, "d2");
  const double den = static_cast<double>(d1) * d2 - 1;
  if (den == 0) throw std::invalid_argument("d1 * d2 = 1 leaves the exponents undefined");
  const double a = d2 * (d1 - 1) / den + eps;
  const double b = d1 * (d2 - 1) / den;
  return c * (std::pow(m, a) * std::pow(n, b) + m + n);
}

double varieties(double m, double n, int d, int s, double eps, double c) {
  check_sizes(m, n);
  check_eps(eps);
  check_positive(d, "d");
  check_positive(s, "s");
  const double den = static_cast<double>(d) * s - 1;
  if (den == 0) throw std::invalid_argument("d * s = 1 leaves the exponents undefined");
  return c * (std::pow(m, (d - 1) * s / den + eps) * std::pow(n, d * (s - 1) / den) + m + n);
}

double unit_distances_r4(double n, double eps, double c) {
  check_sizes(0, n);
  check_eps(eps);
  return c * std::pow(n, 8.0 / 5.0 + eps);
}

double unit_distances_rd(double n, int d, double eps, double c) {
  check_sizes(0, n);
  check_eps(eps);
  if (d < 3) throw std::invalid_argument("unit-distance bound needs d >= 3");
  return c * std::pow(n, 2.0 * d / (d + 1) + eps);
}

double tubes(double m, double n, int d, double eps, double c) {
  check_sizes(m, n);
  check_eps(eps);
  if (d < 2) throw std::invalid_argument("tube bound needs d >= 2");
  const double den = static_cast<double>(d) * (2 * d - 2) - 1;
  const double a = (2.0 * d - 2) * (d - 1) / den + eps;
  const double b = d * (2.0 * d - 3) / den;
  return c * (std::pow(m, a) * std::pow(n, b) + m + n);
}

namespace {

constexpr std::array<std::pair<Kind, std::string_view>, 10> kNames{{
    {Kind::kst, "kst"},
    {Kind::shatter, "shatter"},
    {Kind::semialgebraic, "semialgebraic"},
    {Kind::planar, "planar"},
    {Kind::equal_dim, "equal_dim"},
    {Kind::general, "general"},
    {Kind::varieties, "varieties"},
    {Kind::unit_r4, "unit_r4"},
    {Kind::unit_rd, "unit_rd"},
    {Kind::tubes, "tubes"},
}};

}  // namespace

std::string_view name(Kind kind) {
  for (const auto& [k, n] : kNames) {
    if (k == kind) return n;
  }
  return "?";
}

std::optional<Kind> parse_kind(std::string_view text) {
  for (const auto& [k, n] : kNames) {
    if (n == text) return k;
  }
  return std::nullopt;
}

std::vector<Kind> all_kinds() {
  std::vector<Kind> out;
  for (const auto& entry : kNames) out.push_back(entry.first);
  return out;
}

double evaluate(Kind kind, double m, double n, const Params& p, double c) {
  switch (kind) {
    case Kind::kst: return kovari_sos_turan(m, n, p.k, c);
    case Kind::shatter: return shatter_bound(m, n, p.d, c);
    case Kind::semialgebraic: return semialgebraic_shatter_bound(m, n, p.d2, c);
    case Kind::planar: return planar(m, n, c);
    case Kind::equal_dim: return equal_dimension(m, n, p.d, p.eps, c);
    case Kind::general: return general(m, n, p.d1, p.d2, p.eps, c);
    case Kind::varieties: return varieties(m, n, p.d, p.s, p.eps, c);
    case Kind::unit_r4: return unit_distances_r4(n, p.eps, c);
    case Kind::unit_rd: return unit_distances_rd(n, p.d, p.eps, c);
    case Kind::tubes: return tubes(m, n, p.d, p.eps, c);
  }
  throw std::invalid_argument("unknown bound kind");
}

}  // namespace incidence::bounds
