#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "lielab/algebra.hpp"
#include "lielab/cochain.hpp"

namespace lielab {

// B(x_i, x_j) = matrix[i-1][j-1]; symmetric.
struct BilinearForm {
  RationalMatrix matrix;
  int dim() const { return static_cast<int>(matrix.size()); }
  static BilinearForm zero(int n) { return {zero_matrix(n, n)}; }
  bool operator==(const BilinearForm&) const = default;
};

// Coefficients over the lexicographic basis of alternating k-forms, i.e. the
// trivial CE cochain basis of degree k. Used for 2-forms and 3-forms.
struct AltForm {
  int n = 0;
  int degree = 0;
  SparseVector coefficients;
  bool is_zero() const { return coefficients.empty(); }
  bool operator==(const AltForm&) const = default;
};

// Builds B from "ω^i∘ω^j" style terms: each (i, j, c) with 1-based i <= j adds
// c*(ω^i⊗ω^j + ω^j⊗ω^i) when i < j and c*ω^i⊗ω^i when i == j.
BilinearForm form_from_terms(int n, const std::vector<std::tuple<int, int, Rational>>& terms);
// Alternating form from (1-based sorted index tuple, coefficient) terms.
AltForm alt_form(int n, const std::vector<std::pair<std::vector<int>, Rational>>& terms);

bool is_invariant(const LieAlgebra& g, const BilinearForm& b);
// Echelon basis of (S²g*)^g, as vectors over the pairs i <= j in lex order.
std::vector<BilinearForm> invariant_symmetric_forms(const LieAlgebra& g);

// I_B(X,Y,Z) = B([X,Y],Z). Throws NotInvariant.
AltForm koszul_map(const LieAlgebra& g, const BilinearForm& b);
// d of a trivial-coefficient alternating form.
AltForm exterior_derivative(const LieAlgebra& g, const AltForm& w);

struct KoszulAnalysis {
  std::size_t invariant_dim = 0;
  int p = 0;  // dim H¹(g,C) = dim g - dim [g,g]
  int c = 0;  // dim center
  std::vector<BilinearForm> invariant_basis;
  std::vector<BilinearForm> ker_basis;
  std::vector<AltForm> image_basis;  // reduced echelon
  // Invariant basis positions spanning the chosen complement W of ker I.
  std::vector<std::size_t> complement_positions;
  bool i_null = false;
  bool i_exact = false;
  bool quadratic = false;
  // False only when a degenerate verdict rests on randomized evaluation.
  bool quadratic_certified = true;
};

KoszulAnalysis koszul_analysis(const LieAlgebra& g);
// dim ker I == p(p+1)/2.
bool ker_koszul_isomorphism_check(const LieAlgebra& g);

// Seeded search for a nondegenerate element of span(forms).
struct QuadraticVerdict {
  bool quadratic = false;
  bool certified = true;
  BilinearForm witness;  // nondegenerate element when quadratic
};
QuadraticVerdict quadratic_test(const LieAlgebra& g, const std::vector<BilinearForm>& forms,
                                std::uint64_t seed = 0x5eed);

// One coefficient slot of a 2-cochain: the symmetric and alternating parts of
// the scalar form obtained by pairing with the dual of x_{value+1}.
struct CochainPart {
  int value = -1;  // 0-based value index; -1 for trivial coefficients
  BilinearForm symmetric;
  AltForm alternating;
};

struct CoupledCocycle {
  Coefficients coefficients = Coefficients::Trivial;
  SparseVector cochain;  // element of CL²(g,V) in the Leibniz basis
  std::vector<CochainPart> parts;
};

// Splits a Leibniz 2-cochain into per-value symmetric and alternating parts.
std::vector<CochainPart> split_cochain(int n, Coefficients c, const SparseVector& cochain);
// Inverse of split_cochain for a single part.
SparseVector leibniz_cochain(int n, Coefficients c, const CochainPart& part);

// Basis of a complement of Z² ⊕ ZL²₀ in ZL².
std::vector<CoupledCocycle> coupled_basis(const LieAlgebra& g, Coefficients c);
std::vector<CoupledCocycle> coupled_basis(const LieAlgebra& g, Coefficients c, const KoszulAnalysis& a);

struct DecompositionReport {
  Coefficients coefficients = Coefficients::Trivial;
  std::size_t h2 = 0, zl20 = 0, coupled = 0, hl2 = 0, hl2_direct = 0;
  std::size_t z2 = 0, zl2 = 0;
};
// Theorem sum against the direct kernel computation; throws CrossCheckMismatch.
DecompositionReport hl2_decomposition(const LieAlgebra& g, Coefficients c);
// Same, reusing an analysis already computed for g.
DecompositionReport hl2_decomposition(const LieAlgebra& g, Coefficients c, const KoszulAnalysis& a);
// dim of the symmetric Leibniz 2-cocycles, computed from δ directly.
std::size_t symmetric_cocycle_dim(const LieAlgebra& g, Coefficients c);

struct UncouplingFlags {
  bool adjoint = false;
  bool trivial = false;
};
UncouplingFlags uncoupling_flags(const LieAlgebra& g);

// (θ_X γ)(U,V) = -γ([X,U],V) - γ(U,[X,V]); X is 1-based.
AltForm coadjoint_action(const LieAlgebra& g, int x_index, const AltForm& gamma);
// Codimension-one splitting along x_{x1_index}: checks I_B = d(ω¹∧f) + I_{B₂}∘π₂
// and dγ = ω¹∧θ(γ) + d_{g₂}γ∘π₂ for every basis 2-form γ of g₂.
bool codim1_split_check(const LieAlgebra& g, int x1_index, const BilinearForm& b);

// Rendered as ω^1∘ω^5, ω^3⊗ω^3, ω^{1,2,3}.
std::string render_form(const BilinearForm& b);
std::string render_alt(const AltForm& w);
std::string render_cocycle(const CoupledCocycle& c);

nlohmann::ordered_json to_json(const KoszulAnalysis& a);
nlohmann::ordered_json to_json(const DecompositionReport& r);
nlohmann::ordered_json to_json(const CohomologyReport& r);
KoszulAnalysis koszul_analysis_from_json(const nlohmann::ordered_json& j);
DecompositionReport decomposition_from_json(const nlohmann::ordered_json& j);

}  // namespace lielab
