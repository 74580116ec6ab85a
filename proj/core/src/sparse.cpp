// Copyright (c) the sgmres developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "sgmres/sparse.hpp"

#include <algorithm>
#include <cmath>

namespace sgmres {

void SparseMatrixCsr::validate() const {
  if (row_ptr.size() != nrows + 1) throw Error("csr: row_ptr length");
  if (row_ptr.front() != 0) throw Error("csr: row_ptr[0] != 0");
  if (row_ptr.back() != values.size() || col_idx.size() != values.size()) {
    throw Error("csr: nnz bookkeeping inconsistent");
  }
  for (std::size_t r = 0; r < nrows; ++r) {
    if (row_ptr[r] > row_ptr[r + 1]) throw Error("csr: row_ptr not monotone");
    for (std::size_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k) {
      if (col_idx[k] >= ncols) throw Error("csr: column index out of range");
      if (k > row_ptr[r] && col_idx[k] <= col_idx[k - 1]) {
        throw Error("csr: column indices not strictly increasing");
      }
    }
  }
}

SparseMatrixCsr csr_from_triplets(std::size_t nrows, std::size_t ncols,
                                  std::vector<Triplet> triplets) {
  std::sort(triplets.begin(), triplets.end(),
            [](const Triplet& a, const Triplet& b) {
              return a.row != b.row ? a.row < b.row : a.col < b.col;
            });
  SparseMatrixCsr a;
  a.nrows = nrows;
  a.ncols = ncols;
  a.row_ptr.assign(nrows + 1, 0);
  for (std::size_t k = 0; k < triplets.size();) {
    const std::size_t r = triplets[k].row;
    const std::size_t c = triplets[k].col;
    if (r >= nrows || c >= ncols) throw Error("triplet index out of range");
    double sum = 0.0;
    for (; k < triplets.size() && triplets[k].row == r && triplets[k].col == c;
         ++k) {
      sum += triplets[k].value;
    }
    a.col_idx.push_back(c);
    a.values.push_back(sum);
    ++a.row_ptr[r + 1];
  }
  for (std::size_t r = 0; r < nrows; ++r) a.row_ptr[r + 1] += a.row_ptr[r];
  return a;
}

SparseMatrixCsr csr_from_dense(const DenseMatrix& dense) {
  SparseMatrixCsr a;
  a.nrows = dense.nrows();
  a.ncols = dense.ncols();
  a.row_ptr.assign(a.nrows + 1, 0);
  for (std::size_t r = 0; r < a.nrows; ++r) {
    for (std::size_t c = 0; c < a.ncols; ++c) {
      const double v = dense(r, c);
      if (v != 0.0) {
        a.col_idx.push_back(c);
        a.values.push_back(v);
      }
    }
    a.row_ptr[r + 1] = a.values.size();
  }
  return a;
}

std::vector<double> spmv(const SparseMatrixCsr& a, std::span<const double> x) {
  if (x.size() != a.ncols) throw DimensionError("spmv: length mismatch");
  std::vector<double> y(a.nrows);
  for (std::size_t r = 0; r < a.nrows; ++r) {
    double acc = 0.0;
    for (std::size_t k = a.row_ptr[r]; k < a.row_ptr[r + 1]; ++k) {
      acc += a.values[k] * x[a.col_idx[k]];
    }
    y[r] = acc;
  }
  return y;
}

double frobenius_norm(const SparseMatrixCsr& a) {
  double acc = 0.0;
  for (double v : a.values) acc += v * v;
  return std::sqrt(acc);
}

}  // namespace sgmres
