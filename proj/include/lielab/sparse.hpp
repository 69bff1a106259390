#pragma once

#include <cstdint>
#include <vector>

#include "lielab/rational.hpp"

namespace lielab {

struct SparseEntry {
  std::uint32_t index;
  Rational value;
  bool operator==(const SparseEntry&) const = default;
};

// Strictly increasing indices, no stored zeros.
using SparseVector = std::vector<SparseEntry>;

// y += a * x
void axpy(SparseVector& y, const Rational& a, const SparseVector& x);
SparseVector scaled(const SparseVector& x, const Rational& a);
Rational entry(const SparseVector& v, std::uint32_t index);
SparseVector sparse_from_dense(const RationalVector& v);
RationalVector dense_from_sparse(const SparseVector& v, std::size_t n);
// Sorts by index and merges duplicates; drops zeros.
void normalize(SparseVector& v);

// Column-major sparse matrix; columns are images of domain basis vectors.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const SparseVector& column(std::size_t j) const { return columns_[j]; }
  SparseVector& column(std::size_t j) { return columns_[j]; }
  const std::vector<SparseVector>& columns() const { return columns_; }

  std::size_t nonzeros() const;
  bool is_zero() const;
  SparseVector apply(const SparseVector& x) const;
  // (*this) * rhs, i.e. apply rhs first.
  SparseMatrix compose(const SparseMatrix& rhs) const;
  SparseMatrix transposed() const;
  RationalMatrix to_dense() const;
  static SparseMatrix from_dense(const RationalMatrix& m);

  bool operator==(const SparseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVector> columns_;
};

}  // namespace lielab
