// Copyright (c) the sgmres developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgmres {

/// Unit roundoff of IEEE double precision, 2^-53.
inline constexpr double kUnitRoundoff = 0x1p-53;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Incompatible operand shapes.
struct DimensionError : Error {
  using Error::Error;
};

/// A triangular system with a zero (or sub-threshold) diagonal entry.
/// `index` is the 0-based position of the offending diagonal.
struct SingularSystemError : Error {
  std::size_t index;
  SingularSystemError(const std::string& what, std::size_t idx)
      : Error(what), index(idx) {}
};

/// A matrix construction hit a zero diagonal/pivot at 0-based `index`.
struct ZeroPivotError : Error {
  std::size_t index;
  ZeroPivotError(const std::string& what, std::size_t idx)
      : Error(what), index(idx) {}
};

/// Column-major dense matrix of doubles.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t nrows, std::size_t ncols)
      : nrows_(nrows), ncols_(ncols), data_(nrows * ncols, 0.0) {}

  std::size_t nrows() const { return nrows_; }
  std::size_t ncols() const { return ncols_; }

  double& operator()(std::size_t r, std::size_t c) {
    return data_[c * nrows_ + r];
  }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[c * nrows_ + r];
  }

  std::span<double> col(std::size_t c) {
    return {data_.data() + c * nrows_, nrows_};
  }
  std::span<const double> col(std::size_t c) const {
    return {data_.data() + c * nrows_, nrows_};
  }

  /// Appends one column; column-major layout makes this contiguous.
  void append_col(std::span<const double> v) {
    if (v.size() != nrows_) throw DimensionError("append_col: length mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++ncols_;
  }

  const double* data() const { return data_.data(); }
  double* data() { return data_.data(); }

 private:
  std::size_t nrows_ = 0;
  std::size_t ncols_ = 0;
  std::vector<double> data_;
};

// Small vector kernels. Accumulation is in index order so results are
// reproducible run-to-run.

inline double dot(std::span<const double> x, std::span<const double> y) {
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

inline double norm2(std::span<const double> x) {
  return std::sqrt(dot(x, x));
}

/// y += alpha * x
inline void axpy(double alpha, std::span<const double> x,
                 std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

inline void scale(double alpha, std::span<double> x) {
  for (double& v : x) v *= alpha;
}

/// y = M * x for a dense column-major matrix.
inline std::vector<double> matvec(const DenseMatrix& m,
                                  std::span<const double> x) {
  if (x.size() != m.ncols()) throw DimensionError("matvec: length mismatch");
  std::vector<double> y(m.nrows(), 0.0);
  for (std::size_t c = 0; c < m.ncols(); ++c) axpy(x[c], m.col(c), y);
  return y;
}

/// y = M^T * x.
inline std::vector<double> matvec_transposed(const DenseMatrix& m,
                                             std::span<const double> x) {
  if (x.size() != m.nrows()) {
    throw DimensionError("matvec_transposed: length mismatch");
  }
  std::vector<double> y(m.ncols());
  for (std::size_t c = 0; c < m.ncols(); ++c) y[c] = dot(m.col(c), x);
  return y;
}

}  // namespace sgmres
