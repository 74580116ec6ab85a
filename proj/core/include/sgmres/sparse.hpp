// Copyright (c) the sgmres developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sgmres/types.hpp"

namespace sgmres {

/// Compressed-sparse-row matrix. Within each row col_idx is strictly
/// increasing; row_ptr[0] = 0 and row_ptr[nrows] = nnz.
struct SparseMatrixCsr {
  std::size_t nrows = 0;
  std::size_t ncols = 0;
  std::vector<std::size_t> row_ptr;
  std::vector<std::size_t> col_idx;
  std::vector<double> values;

  std::size_t nnz() const { return values.size(); }

  /// Checks the structural invariants; throws Error on violation.
  void validate() const;
};

struct Triplet {
  std::size_t row;
  std::size_t col;
  double value;
};

/// Builds CSR from unordered triplets. Duplicate (row, col) entries are
/// summed; rows end up with strictly increasing column indices.
SparseMatrixCsr csr_from_triplets(std::size_t nrows, std::size_t ncols,
                                  std::vector<Triplet> triplets);

/// Dense column-major to CSR (every entry stored, including zeros dropped).
SparseMatrixCsr csr_from_dense(const DenseMatrix& dense);

/// y = A * x with fixed per-row accumulation order (ascending column index).
std::vector<double> spmv(const SparseMatrixCsr& a, std::span<const double> x);

/// sqrt of the sum of squares of the stored values.
double frobenius_norm(const SparseMatrixCsr& a);

}  // namespace sgmres
