// Copyright (c) the sgmres developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "sgmres/svd.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace sgmres {

std::pair<double, double> svd_extrema(const DenseMatrix& m) {
  if (m.nrows() < m.ncols()) {
    throw DimensionError("svd_extrema: expects nrows >= ncols");
  }
  if (m.ncols() == 0) return {0.0, 0.0};
  Eigen::Map<const Eigen::MatrixXd> em(
      m.data(), static_cast<Eigen::Index>(m.nrows()),
      static_cast<Eigen::Index>(m.ncols()));
  // BDCSVD resolves sigma_min down to ~u * sigma_max, which is what the
  // condition-number diagnostics need in the ill-conditioned regimes.
  Eigen::BDCSVD<Eigen::MatrixXd> svd(em);
  const auto& sv = svd.singularValues();
  return {sv(0), sv(sv.size() - 1)};
}

}  // namespace sgmres
