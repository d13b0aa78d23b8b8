#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

namespace incidence {

/// A line a x + b y + c = 0 or a circle of radius `radius` around (cx, cy).
/// Cutting geometry runs in double precision.
struct Curve {
  enum class Kind { line, circle };
  Kind kind = Kind::line;
  double a = 0, b = 0, c = 0;
  double cx = 0, cy = 0, radius = 0;

  static Curve line(double a, double b, double c);
  static Curve circle(double cx, double cy, double radius);
};

/// Text form, one curve per line: `line a b c` or `circle cx cy r`; `#` starts a comment.
std::vector<Curve> parse_curves(std::istream& in);
std::string to_string(const Curve& curve);

/// `lines` random lines followed by `circles` random circles around [-1, 1]^2.
std::vector<Curve> random_curves(std::size_t lines, std::size_t circles, std::uint64_t seed);

/// A cell of the vertical decomposition: the region over (x_left, x_right)
/// between the bottom and top boundary pieces. Piece ids are 2j for line j or
/// the lower arc of circle j, 2j+1 for the upper arc of circle j, and -1 for
/// an unbounded side.
struct CuttingCell {
  double x_left = -std::numeric_limits<double>::infinity();
  double x_right = std::numeric_limits<double>::infinity();
  long bottom = -1;
  long top = -1;
  std::size_t crossings = 0;
};

struct CuttingOptions {
  /// Sample size floor(sample_constant * r * ln(r + 1)).
  double sample_constant = 0.75;
  /// Accept when max crossings <= crossing_constant * n / r ...
  double crossing_constant = 8.0;
  /// ... and cells <= cell_constant * r^2.
  double cell_constant = 8.0;
  std::size_t max_attempts = 8;
};

struct CuttingResult {
  std::vector<CuttingCell> cells;
  std::vector<std::size_t> sample;
  std::size_t sample_size = 0;
  std::size_t max_crossing = 0;
  double crossing_limit = 0;
  double cell_limit = 0;
  std::size_t attempts = 0;
  std::uint64_t seed_used = 0;
  bool accepted = false;
};

/// Random-sample cutting: samples curves, builds the vertical decomposition of
/// the sample and counts, per cell, the input curves meeting its interior.
/// Attempt j uses seed + j; the first accepted attempt is returned, otherwise
/// the attempt with the smallest max crossing, flagged not accepted.
CuttingResult planar_cutting(const std::vector<Curve>& curves, std::size_t r, std::uint64_t seed,
                             const CuttingOptions& options = {});

/// Vertical decomposition of the given curves with crossing counts against
/// `probes` (curves whose index is in `skip` are boundaries, not probes).
std::vector<CuttingCell> vertical_decomposition(const std::vector<Curve>& curves, const std::vector<Curve>& probes,
                                                const std::vector<std::size_t>& probe_skip = {});

}  // namespace incidence
