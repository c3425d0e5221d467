#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "bioclass/errors.hpp"

namespace bioclass {

/// Pearson correlations between the rows of a matrix.
///
/// Rows with zero variance have no defined correlation; their row and column
/// are set to 0 (diagonal included) and the row index is listed in
/// `zero_variance_rows`. Every other diagonal entry is exactly 1.
struct CorrelationMatrix {
  Eigen::MatrixXd values;
  std::vector<std::size_t> zero_variance_rows;

  [[nodiscard]] bool degenerate() const noexcept { return !zero_variance_rows.empty(); }
  [[nodiscard]] Eigen::Index size() const noexcept { return values.rows(); }
  double operator()(Eigen::Index i, Eigen::Index j) const { return values(i, j); }
};

// Relative threshold on centered sum of squares below which a row counts as
// constant. Covers the rounding left when centering a constant row.
inline constexpr double kZeroVarianceRelTol = 1e-24;

template <typename Derived>
CorrelationMatrix row_correlation(const Eigen::MatrixBase<Derived>& matrix) {
  const Eigen::Index rows = matrix.rows();
  const Eigen::Index cols = matrix.cols();
  if (cols < 2) throw DimensionError("row_correlation: need at least 2 columns");

  Eigen::MatrixXd z = matrix.template cast<double>();
  std::vector<bool> dead(static_cast<std::size_t>(rows), false);
  CorrelationMatrix out;

  for (Eigen::Index i = 0; i < rows; ++i) {
    auto row = z.row(i);
    const double sumsq = row.squaredNorm();
    row.array() -= row.mean();
    const double ss = row.squaredNorm();
    if (ss <= kZeroVarianceRelTol * sumsq || ss == 0.0) {
      dead[static_cast<std::size_t>(i)] = true;
      out.zero_variance_rows.push_back(static_cast<std::size_t>(i));
      row.setZero();
    } else {
      row /= std::sqrt(ss);
    }
  }

  out.values.resize(rows, rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    out.values(i, i) = dead[static_cast<std::size_t>(i)] ? 0.0 : 1.0;
    for (Eigen::Index j = i + 1; j < rows; ++j) {
      const double c = std::clamp(z.row(i).dot(z.row(j)), -1.0, 1.0);
      out.values(i, j) = c;
      out.values(j, i) = c;
    }
  }
  return out;
}

}  // namespace bioclass
