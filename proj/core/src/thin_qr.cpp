// Copyright (c) the sgmres developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "sgmres/thin_qr.hpp"

#include <algorithm>
#include <cmath>

namespace sgmres {

double ThinQRState::append(std::span<const double> c) {
  const std::size_t s = u_.nrows();
  const std::size_t i = u_.ncols();
  if (c.size() != s) throw DimensionError("qr_append: column length mismatch");

  std::vector<double> r(c.begin(), c.end());
  std::vector<double> h(i, 0.0);
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t j = 0; j < i; ++j) {
      const double g = dot(u_.col(j), r);
      axpy(-g, u_.col(j), r);
      h[j] += g;
    }
  }
  double alpha = norm2(r);
  if (alpha > 0.0) {
    scale(1.0 / alpha, r);
  } else {
    // Exactly dependent column. Keep U orthonormal by orthogonalizing a unit
    // vector instead; T's zero diagonal keeps the reconstruction C = U T
    // exact regardless of the direction chosen.
    for (std::size_t k = 0; k < s; ++k) {
      std::fill(r.begin(), r.end(), 0.0);
      r[k] = 1.0;
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t j = 0; j < i; ++j) {
          axpy(-dot(u_.col(j), r), u_.col(j), r);
        }
      }
      const double nrm = norm2(r);
      if (nrm > 0.5) {
        scale(1.0 / nrm, r);
        break;
      }
    }
    alpha = 0.0;
  }

  // Grow T by one row and one column.
  DenseMatrix t_new(i + 1, i + 1);
  for (std::size_t cc = 0; cc < i; ++cc) {
    for (std::size_t rr = 0; rr <= cc; ++rr) t_new(rr, cc) = t_(rr, cc);
  }
  for (std::size_t rr = 0; rr < i; ++rr) t_new(rr, i) = h[rr];
  t_new(i, i) = alpha;
  t_ = std::move(t_new);
  u_.append_col(r);
  return alpha;
}

std::vector<double> back_substitute(const DenseMatrix& t,
                                    std::span<const double> rhs) {
  const std::size_t n = t.ncols();
  if (t.nrows() != n) throw DimensionError("back_substitute: T not square");
  if (rhs.size() != n) throw DimensionError("back_substitute: rhs length");

  double fro = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r <= c; ++r) fro += t(r, c) * t(r, c);
  }
  fro = std::sqrt(fro);
  const double threshold = kUnitRoundoff * fro;

  std::vector<double> y(rhs.begin(), rhs.end());
  for (std::size_t j = n; j-- > 0;) {
    const double d = t(j, j);
    if (std::abs(d) <= threshold || d == 0.0) {
      throw SingularSystemError("back_substitute: singular diagonal", j);
    }
    y[j] /= d;
    for (std::size_t r = 0; r < j; ++r) y[r] -= t(r, j) * y[j];
  }
  return y;
}

}  // namespace sgmres
