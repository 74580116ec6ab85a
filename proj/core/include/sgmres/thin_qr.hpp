// Copyright (c) the sgmres developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "sgmres/types.hpp"

namespace sgmres {

/// Incrementally maintained thin QR factorization C_{1:i} = U_{1:i} T_{1:i}
/// with U (s x i) orthonormal and T (i x i) upper triangular.
///
/// Columns are appended with modified Gram-Schmidt plus one full
/// reorthogonalization pass ("twice is enough"), so U stays orthonormal to
/// O(u) even when the appended columns are nearly dependent. A numerically
/// dependent column is accepted and reported through a ~0 diagonal of T;
/// rejecting it is the caller's call.
class ThinQRState {
 public:
  explicit ThinQRState(std::size_t nrows) : u_(nrows, 0) {}

  std::size_t nrows() const { return u_.nrows(); }
  std::size_t ncols() const { return u_.ncols(); }

  const DenseMatrix& u() const { return u_; }
  const DenseMatrix& t() const { return t_; }

  /// Appends column c of C; returns the new diagonal entry T[i][i].
  double append(std::span<const double> c);

 private:
  DenseMatrix u_;
  DenseMatrix t_;
};

/// Same as state.append(c); spelled as a free function to mirror the rest of
/// the kernel API.
inline double qr_append(ThinQRState& state, std::span<const double> c) {
  return state.append(c);
}

/// Solves T y = rhs for upper-triangular T by back substitution.
/// Throws SingularSystemError when a diagonal entry falls below
/// u * ||T||_F, carrying the 0-based offending index.
std::vector<double> back_substitute(const DenseMatrix& t,
                                    std::span<const double> rhs);

}  // namespace sgmres
