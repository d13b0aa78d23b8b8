#pragma once

#include "incidence/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace incidence {

/// Incrementally maintained row space over an exact field.
///
/// Each stored row is keyed by its highest nonzero column (its pivot) and
/// scaled so the pivot entry is 1. Columns are expected to be ordered so the
/// highest index is the leading monomial; reduction then mirrors top-reduction
/// of polynomials.
template <typename Scalar>
class RowEchelon {
 public:
  explicit RowEchelon(Eigen::Index columns) : columns_(columns) {}

  Eigen::Index columns() const { return columns_; }
  Eigen::Index rank() const { return static_cast<Eigen::Index>(rows_.size()); }

  /// Adds `row`; returns true iff it was independent of the stored rows.
  bool insert(VectorX<Scalar> row) {
    reduce(row);
    const auto lead = leading_index(row);
    if (!lead) return false;
    const Scalar pivot = row[*lead];
    row /= pivot;
    rows_.emplace(*lead, std::move(row));
    return true;
  }

  bool contains(VectorX<Scalar> row) const {
    reduce(row);
    return !leading_index(row).has_value();
  }

  /// Reduces `row` modulo the stored row space until its leading column is
  /// not a pivot.
  void reduce(VectorX<Scalar>& row) const {
    require_width(row);
    for (auto lead = leading_index(row); lead; lead = leading_index(row, *lead)) {
      auto it = rows_.find(*lead);
      if (it == rows_.end()) return;
      const Scalar factor = row[*lead];
      const VectorX<Scalar>& pivot_row = it->second;
      for (Eigen::Index j = 0; j <= *lead; ++j) {
        if (pivot_row[j] != Scalar(0)) row[j] -= factor * pivot_row[j];
      }
    }
  }

  std::vector<Eigen::Index> pivots() const {
    std::vector<Eigen::Index> out;
    for (const auto& [p, r] : rows_) out.push_back(p);
    return out;
  }

 private:
  void require_width(const VectorX<Scalar>& row) const {
    if (row.size() != columns_) throw std::invalid_argument("row width mismatch in RowEchelon");
  }

  static std::optional<Eigen::Index> leading_index(const VectorX<Scalar>& row) {
    return leading_index(row, row.size());
  }
  // Highest nonzero index at or below `bound`.
  static std::optional<Eigen::Index> leading_index(const VectorX<Scalar>& row, Eigen::Index bound) {
    for (Eigen::Index j = std::min(bound, row.size() - 1); j >= 0; --j) {
      if (row[j] != Scalar(0)) return j;
    }
    return std::nullopt;
  }

  Eigen::Index columns_;
  std::map<Eigen::Index, VectorX<Scalar>> rows_;
};

/// Exact rank by row reduction.
template <typename Scalar>
Eigen::Index exact_rank(const MatrixX<Scalar>& m) {
  RowEchelon<Scalar> echelon(m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) echelon.insert(m.row(i).transpose());
  return echelon.rank();
}

/// Basis of {v : m v = 0}, one vector per column, by Gauss-Jordan elimination.
template <typename Scalar>
MatrixX<Scalar> nullspace(MatrixX<Scalar> m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index sel = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (m(i, c) != Scalar(0)) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    m.row(r).swap(m.row(sel));
    const Scalar p = m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) /= p;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == Scalar(0)) continue;
      const Scalar f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) {
        if (m(r, j) != Scalar(0)) m(i, j) -= f * m(r, j);
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  MatrixX<Scalar> basis(cols, cols - static_cast<Eigen::Index>(pivot_cols.size()));
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    VectorX<Scalar> v = VectorX<Scalar>::Constant(cols, Scalar(0));
    v[free] = Scalar(1);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m(static_cast<Eigen::Index>(i), free);
    basis.col(k++) = v;
  }
  return basis;
}

/// Solves the square system a x = b exactly; nullopt when a is singular.
template <typename Scalar>
std::optional<VectorX<Scalar>> solve_exact(MatrixX<Scalar> a, VectorX<Scalar> b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve_exact expects a square system");
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index sel = -1;
    for (Eigen::Index i = c; i < n; ++i) {
      if (a(i, c) != Scalar(0)) {
        sel = i;
        break;
      }
    }
    if (sel < 0) return std::nullopt;
    a.row(c).swap(a.row(sel));
    std::swap(b[c], b[sel]);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (a(i, c) == Scalar(0)) continue;
      const Scalar f = a(i, c) / a(c, c);
      for (Eigen::Index j = c; j < n; ++j) a(i, j) -= f * a(c, j);
      b[i] -= f * b[c];
    }
  }
  VectorX<Scalar> x(n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    Scalar s = b[i];
    for (Eigen::Index j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  return x;
}

}  // namespace incidence
