#pragma once

#include "incidence/polynomial.hpp"

#include <span>
#include <vector>

namespace incidence {

/// Exact sign evaluation with a floating-point fast path.
///
/// The double-precision value is trusted only when its magnitude exceeds a
/// forward error bound on the computation; otherwise the sign is recomputed
/// with exact rationals. The result is always the exact sign.
class SignEvaluator {
 public:
  explicit SignEvaluator(Polynomial f);

  const Polynomial& polynomial() const { return exact_; }

  int operator()(const Point& x) const;
  /// `approx` must hold the coordinates of `x` rounded to double.
  int sign(const Point& x, std::span<const double> approx) const;

  /// Number of calls that needed the exact path (diagnostics only).
  std::size_t exact_fallbacks() const { return fallbacks_; }

 private:
  Polynomial exact_;
  std::vector<double> coefficients_;
  std::vector<std::uint32_t> exponents_;  // row-major, term_count x dimension
  std::size_t dimension_ = 0;
  double error_factor_ = 0.0;
  mutable std::size_t fallbacks_ = 0;
};

std::vector<double> to_doubles(const Point& x);

}  // namespace incidence
