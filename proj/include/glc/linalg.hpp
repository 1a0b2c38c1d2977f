#pragma once

#include <cstddef>
#include <vector>

#include "glc/field.hpp"

namespace glc {

/// Dense row-major matrix over Q or F_p.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const Scalar& zero)
      : rows_(rows), cols_(cols), a_(rows * cols, zero) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> row_reduce();
  std::size_t rank() const;
  /// Basis of {v : M v = 0}.
  std::vector<std::vector<Scalar>> nullspace() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> a_;
};

/// Incrementally maintained row space in echelon form; used to test
/// membership of vectors in a span.
class RowSpace {
 public:
  RowSpace(std::size_t dim, Scalar zero) : dim_(dim), zero_(std::move(zero)) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  /// Adds v; returns false when v was already in the span.
  bool insert(std::vector<Scalar> v);
  bool contains(std::vector<Scalar> v) const;

 private:
  void reduce(std::vector<Scalar>& v) const;

  std::size_t dim_;
  Scalar zero_;
  std::vector<std::vector<Scalar>> rows_;  // each with a unit pivot
  std::vector<std::size_t> pivots_;
};

/// Sparse row: (column, value) pairs with increasing columns and no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

/// Rank of a list of sparse rows by echelon elimination; sparse rows keep
/// the fill-in low where the dense Matrix would touch every entry.
std::size_t sparse_rank(std::vector<SparseRow> rows);

}  // namespace glc
