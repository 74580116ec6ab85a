// Copyright (c) the sgmres developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>

#include "sgmres/types.hpp"

namespace sgmres {

/// Largest and smallest singular values of a small dense matrix
/// (nrows >= ncols; intended for sketched matrices of a few hundred
/// columns at most). Diagnostic accuracy: relative 1e-6 or better.
std::pair<double, double> svd_extrema(const DenseMatrix& m);

}  // namespace sgmres
