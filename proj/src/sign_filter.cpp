#include "incidence/sign_filter.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace incidence {

SignEvaluator::SignEvaluator(Polynomial f) : exact_(std::move(f)), dimension_(exact_.dimension()) {
  coefficients_.reserve(exact_.term_count());
  exponents_.reserve(exact_.term_count() * dimension_);
  for (const auto& [m, c] : exact_.terms()) {
    coefficients_.push_back(to_double(c));
    for (std::size_t i = 0; i < dimension_; ++i) exponents_.push_back(m[i]);
  }
  const double degree = exact_.is_zero() ? 0.0 : static_cast<double>(exact_.degree());
  const double terms = static_cast<double>(exact_.term_count());
  constexpr double unit = std::numeric_limits<double>::epsilon() / 2;
  // Per-term rounding of inputs, coefficient and products plus summation; doubled.
  error_factor_ = 2.0 * (2.0 * degree + terms + 2.0) * unit;
}

int SignEvaluator::operator()(const Point& x) const {
  const auto approx = to_doubles(x);
  return sign(x, approx);
}

int SignEvaluator::sign(const Point& x, std::span<const double> approx) const {
  if (approx.size() != dimension_ || static_cast<std::size_t>(x.size()) != dimension_) {
    throw std::invalid_argument("dimension mismatch in sign evaluation");
  }
  if (exact_.is_zero()) return 0;
  double value = 0.0;
  double magnitude = 0.0;
  for (std::size_t t = 0; t < coefficients_.size(); ++t) {
    double term = coefficients_[t];
    const std::uint32_t* e = exponents_.data() + t * dimension_;
    for (std::size_t i = 0; i < dimension_; ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) term *= approx[i];
    }
    value += term;
    magnitude += std::fabs(term);
  }
  const double bound = error_factor_ * magnitude;
  if (std::isfinite(value) && std::isfinite(magnitude) && magnitude > 1e-250 && std::fabs(value) > bound) {
    return value > 0 ? 1 : -1;
  }
  ++fallbacks_;
  return sign_at(exact_, x);
}

std::vector<double> to_doubles(const Point& x) {
  std::vector<double> out(static_cast<std::size_t>(x.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i) out[static_cast<std::size_t>(i)] = to_double(x[i]);
  return out;
}

}  // namespace incidence
