#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lielab/algebra.hpp"
#include "lielab/rational.hpp"

namespace lielab {

// a + b*sqrt(s) for a fixed squarefree s > 1 shared by a root system (s = 0 when unused).
struct SurdNumber {
  Rational a, b;
  bool operator==(const SurdNumber&) const = default;
};
SurdNumber operator+(const SurdNumber& x, const SurdNumber& y);
// Compares numerically; both numbers must use the same s.
int compare(const SurdNumber& x, const SurdNumber& y, int s);
std::string to_string(const SurdNumber& x, int s);

using Root = std::vector<SurdNumber>;

struct RootSystem {
  char type = 'A';
  int rank = 1;
  int surd = 0;  // 3 for E6, 2 for E7, else 0
  std::vector<Root> positive_roots;  // sorted lexicographically by exact value
  std::string label() const { return std::string(1, type) + std::to_string(rank); }
};

// Types A..G with the usual rank ranges; throws UnsupportedType otherwise.
RootSystem positive_roots(char type, int rank);
std::string render_root(const RootSystem& rs, const Root& r);

// First (i, j, k) in lexicographic order of 0-based root positions with
// α+β, α+γ and β+γ all positive roots, where α, β, γ are roots i, j, k.
struct PropertyPWitness {
  int alpha, beta, gamma;
};
std::optional<PropertyPWitness> property_P(const RootSystem& rs);
std::optional<PropertyPWitness> property_P_serial(const RootSystem& rs);

// The algebra analogue on root vectors: first 1-based triple with
// [x_a,x_b], [x_a,x_c], [x_b,x_c] all nonzero.
std::optional<PropertyPWitness> bracket_property_P(const LieAlgebra& g);

struct NilradicalModel {
  LieAlgebra algebra;
  std::vector<std::string> labels;
};

// Lie algebra spanned by linearly independent square matrices under the
// commutator, in the order given. Throws CrossCheckMismatch if not closed.
LieAlgebra lie_algebra_from_matrices(const std::string& name, const std::vector<RationalMatrix>& matrices);

// A (rank >= 1), B, C, D (rank >= 2) from matrix models; (G, 2) and (F, 4) from
// the catalog tables. E types throw UnsupportedType.
NilradicalModel nilradical(char type, int rank);

}  // namespace lielab
