#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lielab/sparse.hpp"

namespace lielab {

// Connected components of the bipartite row/column sparsity graph. Columns in
// different blocks have disjoint row supports, so rank and kernel split.
struct Block {
  std::vector<std::uint32_t> cols;
  std::vector<std::uint32_t> rows;
};
std::vector<Block> sparsity_blocks(const SparseMatrix& a);

// Exact rank. `rank` eliminates blocks independently (OpenMP over blocks);
// `rank_serial` runs a single fraction-free elimination over the whole matrix.
std::size_t rank(const SparseMatrix& a);
std::size_t rank_serial(const SparseMatrix& a);

// Reduced row echelon form of the span of `rows` (leading coefficient 1,
// sorted by leading index, zero rows dropped).
std::vector<SparseVector> rref(std::vector<SparseVector> rows);

// Kernel basis in reduced echelon form.
std::vector<SparseVector> kernel(const SparseMatrix& a);

// Particular solution of a x = b taking every non-pivot variable to be zero,
// where pivots are the columns independent of the columns before them.
std::optional<SparseVector> solve(const SparseMatrix& a, const SparseVector& b);

// Incrementally built echelon basis of a subspace of Q^dim.
class Echelon {
 public:
  explicit Echelon(std::size_t dim = 0) : dim_(dim) {}

  // Returns true when v was independent of the current span.
  bool insert(SparseVector v);
  // Projection killing every pivot coordinate; linear, zero exactly on the span.
  SparseVector residue(SparseVector v) const;
  bool contains(const SparseVector& v) const { return residue(v).empty(); }

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  std::vector<std::uint32_t> pivots() const;
  std::vector<SparseVector> basis() const;  // reduced echelon form

 private:
  std::size_t dim_;
  std::map<std::uint32_t, SparseVector> rows_;  // leading index -> row with leading 1
};

}  // namespace lielab
