#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lielab/errors.hpp"
#include "lielab/rational.hpp"
#include "lielab/sparse.hpp"

namespace lielab {

// [x_i, x_j] = sum of c * x_k over the listed (k, c); keys have i < j, all 1-based.
using RawBrackets = std::map<std::pair<int, int>, std::vector<std::pair<int, Rational>>>;

// Basis indices in the public API are 1-based (x_1 .. x_n). Coordinate vectors
// (RationalVector, SparseVector) are 0-based positions: x_i sits at position i-1.
class LieAlgebra {
 public:
  // Checks index ranges and every Jacobi triple; the only way to build one.
  static LieAlgebra validate(const RawBrackets& brackets, int dim, std::string name = "");

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  LieAlgebra renamed(std::string name) const;

  // [x_i, x_j] for 1-based i, j.
  const SparseVector& bracket(int i, int j) const;
  // Same with 0-based positions; the hot path for cochain assembly.
  const SparseVector& structure(std::size_t a, std::size_t b) const { return table_[a * dim_ + b]; }
  SparseVector bracket(const SparseVector& x, const SparseVector& y) const;
  RationalVector bracket(const RationalVector& x, const RationalVector& y) const;

  // Matrix of ad(x_i) in the column convention of LinearMap.
  RationalMatrix ad(int i) const;
  // Canonical table: i<j keys, k ascending, no zero coefficients.
  RawBrackets brackets() const;
  std::size_t bracket_count() const;
  bool is_abelian() const;

 private:
  LieAlgebra(int dim, std::string name, std::vector<SparseVector> table)
      : dim_(dim), name_(std::move(name)), table_(std::move(table)) {}

  int dim_ = 0;
  std::string name_;
  std::vector<SparseVector> table_;  // dim*dim, antisymmetric
};

// First Jacobi failure in lexicographic (i<j<k) order, 1-based; nullopt when the
// identity holds. The parallel version splits the outer index across threads.
struct JacobiFailure {
  int i, j, k;
  SparseVector residual;
};
std::optional<JacobiFailure> find_jacobi_failure(int dim, const std::vector<SparseVector>& table);
std::optional<JacobiFailure> find_jacobi_failure_serial(int dim, const std::vector<SparseVector>& table);

class Subspace {
 public:
  Subspace() = default;
  // Span of `vectors`, stored in reduced echelon form.
  Subspace(int ambient_dim, const std::vector<RationalVector>& vectors);
  static Subspace zero(int n) { return Subspace(n, {}); }
  static Subspace whole(int n);
  // Span of the given basis vectors x_i (1-based).
  static Subspace spanned_by(int n, const std::vector<int>& indices);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<RationalVector>& basis() const { return basis_; }
  bool contains(const RationalVector& v) const;
  // 0-based pivot positions, and the complementary standard positions.
  std::vector<int> pivots() const;
  std::vector<int> complement() const;

  bool operator==(const Subspace&) const = default;

 private:
  int ambient_ = 0;
  std::vector<RationalVector> basis_;
};

// matrix[r][c] is the coefficient of x_{r+1} in t(x_{c+1}): columns are images.
struct LinearMap {
  RationalMatrix matrix;

  static LinearMap zero(int n) { return {zero_matrix(n, n)}; }
  static LinearMap identity(int n) { return {identity_matrix(n)}; }
  int dim() const { return static_cast<int>(matrix.size()); }
  RationalVector apply(const RationalVector& v) const;
  SparseVector image(std::size_t position) const;  // t(x_{position+1})
  bool operator==(const LinearMap&) const = default;
};

Subspace center(const LieAlgebra& g);
Subspace derived_subalgebra(const LieAlgebra& g);
// p = dim g - dim [g,g]
int abelianization_dim(const LieAlgebra& g);

LieAlgebra abelian(int n);
LieAlgebra direct_product(const LieAlgebra& g1, const LieAlgebra& g2);
bool is_ideal(const LieAlgebra& g, const Subspace& h);
LieAlgebra quotient(const LieAlgebra& g, const Subspace& ideal);

LinearMap inner_derivation(const LieAlgebra& g, int i);
bool is_derivation(const LieAlgebra& g, const LinearMap& t);
std::vector<LinearMap> derivation_space(const LieAlgebra& g);
LieAlgebra adjoin_derivation(const LieAlgebra& g, const LinearMap& t);

// Structure constants in the basis y_j = sum_i P[i][j] x_i (P invertible).
LieAlgebra change_basis(const LieAlgebra& g, const RationalMatrix& p);

std::string render_vector(const SparseVector& v);  // "x3 - 1/2*x5"

}  // namespace lielab
