#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lielab/algebra.hpp"
#include "lielab/sparse.hpp"

namespace lielab {

enum class Coefficients { Trivial, Adjoint };
enum class CochainKind { CE, Leibniz };

std::string to_string(Coefficients c);

// Basis of C^k(g,V) (alternating tuples i1<...<ik) or CL^k(g,V) (all tuples),
// V = C or g. Ordered lexicographically on tuples, then by the value index.
// Tuple entries and values are 0-based positions.
class CochainBasis {
 public:
  CochainBasis(CochainKind kind, Coefficients coefficients, int n, int degree);

  CochainKind kind() const { return kind_; }
  Coefficients coefficients() const { return coefficients_; }
  int n() const { return n_; }
  int degree() const { return degree_; }
  std::size_t value_dim() const { return coefficients_ == Coefficients::Adjoint ? n_ : 1; }
  std::size_t tuple_count() const { return tuple_count_; }
  std::size_t size() const { return tuple_count_ * value_dim(); }

  std::vector<int> tuple(std::size_t tuple_index) const;
  // Position of `tuple` (sorted for CE); value ignored for trivial coefficients.
  std::size_t index(const std::vector<int>& tuple, int value = 0) const;
  std::size_t tuple_index(const std::vector<int>& tuple) const;

 private:
  CochainKind kind_;
  Coefficients coefficients_;
  int n_, degree_;
  std::size_t tuple_count_;
  std::vector<std::vector<std::size_t>> binom_;
};

struct CoboundaryMatrix {
  CochainBasis source;
  CochainBasis target;
  SparseMatrix matrix;
};

enum class Assembly { Parallel, Serial };

// Chevalley-Eilenberg d: C^k -> C^{k+1}, 0 <= k <= dim.
CoboundaryMatrix ce_coboundary(const LieAlgebra& g, Coefficients c, int k, Assembly mode = Assembly::Parallel);
// Leibniz delta: CL^k -> CL^{k+1}, k in {1, 2}.
CoboundaryMatrix leibniz_coboundary(const LieAlgebra& g, Coefficients c, int k,
                                    Assembly mode = Assembly::Parallel);

// Brute-force versions: evaluate the defining formulas on every target tuple.
CoboundaryMatrix ce_coboundary_reference(const LieAlgebra& g, Coefficients c, int k);
CoboundaryMatrix leibniz_coboundary_reference(const LieAlgebra& g, Coefficients c, int k);

// Inclusion of alternating cochains into tensor cochains of the same degree.
SparseMatrix alternating_inclusion(int n, Coefficients c, int k);

struct CohomologyReport {
  int degree = 0;
  Coefficients coefficients = Coefficients::Trivial;
  bool leibniz = false;
  std::size_t dimC = 0, dimZ = 0, dimB = 0, dimH = 0;
  std::optional<std::vector<SparseVector>> kernel;  // cocycle basis, reduced echelon form
  bool operator==(const CohomologyReport&) const = default;
};

CohomologyReport cohomology(const LieAlgebra& g, Coefficients c, int k, bool with_kernel = false);
// ZL^k with B^k taken from the CE image: HL^k = ZL^k / B^k. k in {1, 2}.
CohomologyReport leibniz_cocycles(const LieAlgebra& g, Coefficients c, int k = 2, bool with_kernel = false);

// Size of a dense matrix C^k -> C^{k+1}; used for resource guards.
std::size_t coboundary_cells(CochainKind kind, Coefficients c, int n, int k);

}  // namespace lielab
