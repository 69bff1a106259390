#include "lielab/koszul.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "lielab/linalg.hpp"

namespace lielab {

namespace {

std::size_t pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  return static_cast<std::size_t>(i) * n - static_cast<std::size_t>(i) * (i - 1) / 2 + (j - i);
}

BilinearForm form_from_pairs(int n, const SparseVector& v) {
  auto b = BilinearForm::zero(n);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) pairs.emplace_back(i, j);
  for (const auto& e : v) {
    const auto [i, j] = pairs[e.index];
    b.matrix[i][j] = e.value;
    b.matrix[j][i] = e.value;
  }
  return b;
}

// Koszul image coefficients without the invariance check.
SparseVector koszul_coefficients(const LieAlgebra& g, const BilinearForm& b) {
  const int n = g.dim();
  CochainBasis basis(CochainKind::CE, Coefficients::Trivial, n, 3);
  SparseVector out;
  for (std::size_t t = 0; t < basis.tuple_count(); ++t) {
    const auto ijk = basis.tuple(t);
    Rational s = 0;
    for (const auto& e : g.structure(ijk[0], ijk[1])) s += e.value * b.matrix[e.index][ijk[2]];
    if (s != 0) out.push_back({static_cast<std::uint32_t>(t), s});
  }
  return out;
}

Rational eval2(const AltForm& w, const SparseVector& u, const SparseVector& v) {
  CochainBasis basis(CochainKind::CE, Coefficients::Trivial, w.n, 2);
  Rational s = 0;
  for (const auto& a : u)
    for (const auto& b : v) {
      if (a.index == b.index) continue;
      const int i = static_cast<int>(std::min(a.index, b.index)), j = static_cast<int>(std::max(a.index, b.index));
      const Rational c = entry(w.coefficients, static_cast<std::uint32_t>(basis.index({i, j})));
      if (c == 0) continue;
      s += (a.index < b.index ? 1 : -1) * c * a.value * b.value;
    }
  return s;
}

SparseVector unit(int position) { return {{static_cast<std::uint32_t>(position), 1}}; }

Subspace bracket_span(const LieAlgebra& g, const Subspace& h) {
  const int n = g.dim();
  std::vector<RationalVector> vs;
  for (int i = 0; i < n; ++i) {
    RationalVector xi(n);
    xi[i] = 1;
    for (const auto& v : h.basis()) vs.push_back(g.bracket(xi, v));
  }
  return Subspace(n, vs);
}

bool totally_isotropic(const Subspace& u, const std::vector<BilinearForm>& forms) {
  for (const auto& b : forms)
    for (const auto& x : u.basis())
      for (const auto& y : u.basis()) {
        Rational s = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
          if (x[i] == 0) continue;
          for (std::size_t j = 0; j < y.size(); ++j)
            if (y[j] != 0) s += x[i] * b.matrix[i][j] * y[j];
        }
        if (s != 0) return false;
      }
  return true;
}

RationalMatrix combine(const std::vector<BilinearForm>& forms, const std::vector<Integer>& t) {
  const int n = forms.front().dim();
  auto m = zero_matrix(n, n);
  for (std::size_t f = 0; f < forms.size(); ++f) {
    if (t[f] == 0) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (forms[f].matrix[i][j] != 0) m[i][j] += Rational(t[f]) * forms[f].matrix[i][j];
  }
  return m;
}

std::string index_label(const std::vector<int>& one_based) {
  std::string s = "ω^";
  if (one_based.size() == 1 && one_based[0] < 10) return s + std::to_string(one_based[0]);
  s += "{";
  for (std::size_t i = 0; i < one_based.size(); ++i) s += (i ? "," : "") + std::to_string(one_based[i]);
  return s + "}";
}

std::string join_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    Rational c = terms[t].first;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (t == 0)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (c != 1) out += to_string(c) + "*";
    out += terms[t].second;
  }
  return out;
}

std::vector<std::pair<Rational, std::string>> form_terms(const BilinearForm& b) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (int i = 0; i < b.dim(); ++i)
    for (int j = i; j < b.dim(); ++j) {
      if (b.matrix[i][j] == 0) continue;
      terms.emplace_back(b.matrix[i][j], i == j ? index_label({i + 1}) + "⊗" + index_label({i + 1})
                                                : index_label({i + 1}) + "∘" + index_label({j + 1}));
    }
  return terms;
}

std::vector<std::pair<Rational, std::string>> alt_terms(const AltForm& w) {
  std::vector<std::pair<Rational, std::string>> terms;
  CochainBasis basis(CochainKind::CE, Coefficients::Trivial, w.n, w.degree);
  for (const auto& e : w.coefficients) {
    auto t = basis.tuple(e.index);
    for (int& x : t) ++x;
    terms.emplace_back(e.value, index_label(t));
  }
  return terms;
}

// Symmetric 2-cochains in CL²(g,V): column (i<=j, v) is e_v ⊗ (ω^i⊗ω^j + ω^j⊗ω^i), or ω^i⊗ω^i.
SparseMatrix symmetric_inclusion(int n, Coefficients c) {
  CochainBasis ten(CochainKind::Leibniz, c, n, 2);
  const int m = static_cast<int>(ten.value_dim());
  SparseMatrix s(ten.size(), static_cast<std::size_t>(n) * (n + 1) / 2 * m);
  std::size_t col = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int v = 0; v < m; ++v) {
        SparseVector e{{static_cast<std::uint32_t>(ten.index({i, j}, v)), 1}};
        if (i != j) e.push_back({static_cast<std::uint32_t>(ten.index({j, i}, v)), 1});
        normalize(e);
        s.column(col++) = std::move(e);
      }
  return s;
}

std::vector<SparseVector> koszul_columns(const LieAlgebra& g, const std::vector<BilinearForm>& forms) {
  std::vector<SparseVector> cols(forms.size());
  const long q = static_cast<long>(forms.size());
#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < q; ++t) cols[t] = koszul_coefficients(g, forms[t]);
  return cols;
}

}  // namespace

BilinearForm form_from_terms(int n, const std::vector<std::tuple<int, int, Rational>>& terms) {
  auto b = BilinearForm::zero(n);
  for (const auto& [i, j, c] : terms) {
    if (i < 1 || j < 1 || i > n || j > n) throw IndexOutOfRange("form index outside 1.." + std::to_string(n));
    b.matrix[i - 1][j - 1] += c;
    if (i != j) b.matrix[j - 1][i - 1] += c;
  }
  return b;
}

AltForm alt_form(int n, const std::vector<std::pair<std::vector<int>, Rational>>& terms) {
  AltForm w{n, terms.empty() ? 0 : static_cast<int>(terms.front().first.size()), {}};
  CochainBasis basis(CochainKind::CE, Coefficients::Trivial, n, w.degree);
  for (const auto& [tuple, c] : terms) {
    if (static_cast<int>(tuple.size()) != w.degree) throw DegreeOutOfRange("mixed degrees in alternating form");
    std::vector<int> z(tuple);
    for (int& x : z) {
      if (x < 1 || x > n) throw IndexOutOfRange("form index outside 1.." + std::to_string(n));
      --x;
    }
    if (!std::is_sorted(z.begin(), z.end()) || std::adjacent_find(z.begin(), z.end()) != z.end())
      throw IndexOutOfRange("alternating form indices must be strictly increasing");
    w.coefficients.push_back({static_cast<std::uint32_t>(basis.index(z)), c});
  }
  normalize(w.coefficients);
  return w;
}

bool is_invariant(const LieAlgebra& g, const BilinearForm& b) {
  const int n = g.dim();
  if (b.dim() != n) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (b.matrix[i][j] != b.matrix[j][i]) return false;
  for (int z = 0; z < n; ++z)
    for (int a = 0; a < n; ++a)
      for (int c = a; c < n; ++c) {
        Rational s = 0;
        for (const auto& e : g.structure(z, a)) s += e.value * b.matrix[e.index][c];
        for (const auto& e : g.structure(z, c)) s += e.value * b.matrix[a][e.index];
        if (s != 0) return false;
      }
  return true;
}

std::vector<BilinearForm> invariant_symmetric_forms(const LieAlgebra& g) {
  const int n = g.dim();
  const std::size_t unknowns = static_cast<std::size_t>(n) * (n + 1) / 2;
  // One equation per (z, a <= b): sum_k c_{za}^k s_{kb} + c_{zb}^k s_{ak} = 0.
  std::vector<SparseVector> eqs;
  for (int z = 0; z < n; ++z)
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) {
        SparseVector row;
        for (const auto& e : g.structure(z, a)) row.push_back({static_cast<std::uint32_t>(pair_index(n, e.index, b)), e.value});
        for (const auto& e : g.structure(z, b)) row.push_back({static_cast<std::uint32_t>(pair_index(n, a, e.index)), e.value});
        normalize(row);
        if (!row.empty()) eqs.push_back(std::move(row));
      }
  SparseMatrix rows_as_cols(unknowns, eqs.size());
  for (std::size_t r = 0; r < eqs.size(); ++r) rows_as_cols.column(r) = std::move(eqs[r]);
  std::vector<BilinearForm> out;
  for (const auto& k : kernel(rows_as_cols.transposed())) out.push_back(form_from_pairs(n, k));
  return out;
}

AltForm koszul_map(const LieAlgebra& g, const BilinearForm& b) {
  if (!is_invariant(g, b)) throw NotInvariant("bilinear form is not symmetric and invariant");
  return {g.dim(), 3, koszul_coefficients(g, b)};
}

AltForm exterior_derivative(const LieAlgebra& g, const AltForm& w) {
  const auto d = ce_coboundary(g, Coefficients::Trivial, w.degree);
  return {g.dim(), w.degree + 1, d.matrix.apply(w.coefficients)};
}

QuadraticVerdict quadratic_test(const LieAlgebra& g, const std::vector<BilinearForm>& forms, std::uint64_t seed) {
  const int n = g.dim();
  QuadraticVerdict v;
  v.witness = BilinearForm::zero(n);
  if (forms.empty()) return v;
  const std::size_t q = forms.size();

  std::mt19937_64 rng(seed);
  auto attempt = [&](long long range) {
    std::uniform_int_distribution<long long> dist(-range, range);
    std::vector<Integer> t(q);
    for (auto& x : t) x = Integer(std::to_string(dist(rng)));
    auto m = combine(forms, t);
    if (determinant(m) != 0) {
      v.quadratic = true;
      v.witness = {std::move(m)};
      return true;
    }
    return false;
  };
  for (long long range : {4LL, 1LL << 10, 1LL << 20, 1LL << 40})
    for (int trial = 0; trial < 4; ++trial)
      if (attempt(range)) return v;

  // Exact certificates of degeneracy.
  // A common radical vector, or a common isotropic subspace of more than half the dimension.
  {
    SparseMatrix stacked(static_cast<std::size_t>(n) * q, n);
    for (int j = 0; j < n; ++j) {
      SparseVector col;
      for (std::size_t f = 0; f < q; ++f)
        for (int i = 0; i < n; ++i)
          if (forms[f].matrix[i][j] != 0) col.push_back({static_cast<std::uint32_t>(f * n + i), forms[f].matrix[i][j]});
      stacked.column(j) = std::move(col);
    }
    if (rank(stacked) < static_cast<std::size_t>(n)) return v;
  }
  std::vector<Subspace> candidates{center(g)};
  for (Subspace c = derived_subalgebra(g); c.dim() > 0;) {
    candidates.push_back(c);
    Subspace next = bracket_span(g, c);
    if (next.dim() == c.dim()) break;
    c = next;
  }
  for (const auto& u : candidates)
    if (2 * u.dim() > n && totally_isotropic(u, forms)) return v;

  // det(Σ t_i B_i) has degree <= n in each t_i, so vanishing on {0..n}^q is exact.
  const double grid = std::pow(static_cast<double>(n + 1), static_cast<double>(q));
  if (grid <= 20000) {
    std::vector<Integer> t(q, 0);
    while (true) {
      auto m = combine(forms, t);
      if (determinant(m) != 0) {
        v.quadratic = true;
        v.witness = {std::move(m)};
        return v;
      }
      std::size_t p = 0;
      while (p < q && t[p] == n) t[p++] = 0;
      if (p == q) break;
      t[p] += 1;
    }
    return v;
  }
  for (int trial = 0; trial < 32; ++trial)
    if (attempt(1LL << 60)) return v;
  v.certified = false;
  return v;
}

KoszulAnalysis koszul_analysis(const LieAlgebra& g) {
  KoszulAnalysis a;
  const int n = g.dim();
  a.invariant_basis = invariant_symmetric_forms(g);
  a.invariant_dim = a.invariant_basis.size();
  a.p = abelianization_dim(g);
  a.c = center(g).dim();

  const auto cols = koszul_columns(g, a.invariant_basis);
  SparseMatrix k(CochainBasis(CochainKind::CE, Coefficients::Trivial, n, 3).size(), cols.size());
  for (std::size_t t = 0; t < cols.size(); ++t) k.column(t) = cols[t];

  std::vector<char> lead(cols.size(), 0);
  for (const auto& v : kernel(k)) {
    lead[v.front().index] = 1;
    BilinearForm b = BilinearForm::zero(n);
    for (const auto& e : v)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b.matrix[i][j] += e.value * a.invariant_basis[e.index].matrix[i][j];
    a.ker_basis.push_back(std::move(b));
  }
  for (std::size_t t = 0; t < cols.size(); ++t)
    if (!lead[t]) a.complement_positions.push_back(t);
  for (auto& r : rref(cols)) a.image_basis.push_back({n, 3, std::move(r)});

  a.i_null = a.image_basis.empty();
  a.i_exact = true;
  if (!a.i_null) {
    const auto d2 = ce_coboundary(g, Coefficients::Trivial, 2);
    Echelon e(d2.matrix.rows());
    for (const auto& col : d2.matrix.columns()) e.insert(col);
    for (const auto& w : a.image_basis) a.i_exact = a.i_exact && e.contains(w.coefficients);
  }
  const auto q = quadratic_test(g, a.invariant_basis);
  a.quadratic = q.quadratic;
  a.quadratic_certified = q.certified;
  return a;
}

bool ker_koszul_isomorphism_check(const LieAlgebra& g) {
  const auto a = koszul_analysis(g);
  return a.ker_basis.size() == static_cast<std::size_t>(a.p) * (a.p + 1) / 2;
}

std::vector<CochainPart> split_cochain(int n, Coefficients c, const SparseVector& cochain) {
  CochainBasis ten(CochainKind::Leibniz, c, n, 2);
  CochainBasis alt(CochainKind::CE, Coefficients::Trivial, n, 2);
  const std::size_t m = ten.value_dim();
  std::map<int, RationalMatrix> psi;
  for (const auto& e : cochain) {
    const int v = c == Coefficients::Adjoint ? static_cast<int>(e.index % m) : -1;
    const auto ij = ten.tuple(e.index / m);
    auto [it, fresh] = psi.try_emplace(v, zero_matrix(n, n));
    it->second[ij[0]][ij[1]] = e.value;
  }
  std::vector<CochainPart> parts;
  for (const auto& [v, m2] : psi) {
    CochainPart p{v, BilinearForm::zero(n), {n, 2, {}}};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        p.symmetric.matrix[i][j] = (m2[i][j] + m2[j][i]) / 2;
        if (i < j && m2[i][j] != m2[j][i])
          p.alternating.coefficients.push_back({static_cast<std::uint32_t>(alt.index({i, j})), (m2[i][j] - m2[j][i]) / 2});
      }
    parts.push_back(std::move(p));
  }
  return parts;
}

SparseVector leibniz_cochain(int n, Coefficients c, const CochainPart& part) {
  CochainBasis ten(CochainKind::Leibniz, c, n, 2);
  CochainBasis alt(CochainKind::CE, Coefficients::Trivial, n, 2);
  const int v = std::max(part.value, 0);
  SparseVector out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (part.symmetric.matrix[i][j] != 0)
        out.push_back({static_cast<std::uint32_t>(ten.index({i, j}, v)), part.symmetric.matrix[i][j]});
  for (const auto& e : part.alternating.coefficients) {
    const auto ij = alt.tuple(e.index);
    out.push_back({static_cast<std::uint32_t>(ten.index({ij[0], ij[1]}, v)), e.value});
    out.push_back({static_cast<std::uint32_t>(ten.index({ij[1], ij[0]}, v)), -e.value});
  }
  normalize(out);
  return out;
}

std::vector<CoupledCocycle> coupled_basis(const LieAlgebra& g, Coefficients c) {
  return coupled_basis(g, c, koszul_analysis(g));
}

std::vector<CoupledCocycle> coupled_basis(const LieAlgebra& g, Coefficients c, const KoszulAnalysis& a) {
  if (a.i_null) return {};
  const int n = g.dim();
  const bool adjoint = c == Coefficients::Adjoint;
  std::vector<RationalVector> values;
  if (adjoint) {
    values = center(g).basis();
  } else {
    values.push_back(RationalVector{1});
  }
  if (values.empty() || a.complement_positions.empty()) return {};

  CochainBasis c3(CochainKind::CE, c, n, 3);
  CochainBasis l2(CochainKind::Leibniz, c, n, 2);
  const std::size_t m = c3.value_dim();

  // Candidates z_r ⊗ B_t for B_t in the complement W; F(z⊗B) = z⊗I_B.
  struct Candidate {
    std::size_t value, form;
    SparseVector image;
  };
  std::vector<Candidate> cand;
  for (std::size_t r = 0; r < values.size(); ++r)
    for (std::size_t t : a.complement_positions) {
      const auto ib = koszul_coefficients(g, a.invariant_basis[t]);
      SparseVector f;
      for (const auto& e : ib)
        for (std::size_t v = 0; v < values[r].size(); ++v)
          if (values[r][v] != 0) f.push_back({static_cast<std::uint32_t>(e.index * m + v), e.value * values[r][v]});
      normalize(f);
      cand.push_back({r, t, std::move(f)});
    }

  const auto d2 = ce_coboundary(g, c, 2);
  Echelon im(d2.matrix.rows());
  for (const auto& col : d2.matrix.columns()) im.insert(col);
  // residue is linear and vanishes exactly on Im d, so its kernel on the
  // candidates is F^{-1}(B³) in candidate coordinates.
  SparseMatrix res(d2.matrix.rows(), cand.size());
  for (std::size_t k = 0; k < cand.size(); ++k) res.column(k) = im.residue(cand[k].image);

  const auto alt_incl = alternating_inclusion(n, c, 2);
  std::vector<CoupledCocycle> out;
  for (const auto& coef : kernel(res)) {
    SparseVector psi0, rhs;
    for (const auto& e : coef) {
      const auto& cd = cand[e.index];
      axpy(rhs, e.value, cd.image);
      const auto& b = a.invariant_basis[cd.form].matrix;
      SparseVector term;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (b[i][j] == 0) continue;
          for (std::size_t v = 0; v < values[cd.value].size(); ++v)
            if (values[cd.value][v] != 0)
              term.push_back({static_cast<std::uint32_t>(l2.index({i, j}, static_cast<int>(v))), b[i][j] * values[cd.value][v]});
        }
      normalize(term);
      axpy(psi0, e.value, term);
    }
    // δψ₀ = -F(ψ₀) on symmetric invariant c-valued cochains, so dψ₁ = F(ψ₀).
    const auto psi1 = solve(d2.matrix, rhs);
    if (!psi1) throw CrossCheckMismatch("coupled lift has no solution although F(ψ₀) ∈ B³");
    CoupledCocycle cc;
    cc.coefficients = c;
    cc.cochain = psi0;
    axpy(cc.cochain, 1, alt_incl.apply(*psi1));
    cc.parts = split_cochain(n, c, cc.cochain);
    out.push_back(std::move(cc));
  }
  return out;
}

std::size_t symmetric_cocycle_dim(const LieAlgebra& g, Coefficients c) {
  const auto s = symmetric_inclusion(g.dim(), c);
  const auto delta = leibniz_coboundary(g, c, 2);
  return s.cols() - rank(delta.matrix.compose(s));
}

DecompositionReport hl2_decomposition(const LieAlgebra& g, Coefficients c) {
  return hl2_decomposition(g, c, koszul_analysis(g));
}

DecompositionReport hl2_decomposition(const LieAlgebra& g, Coefficients c, const KoszulAnalysis& a) {
  DecompositionReport r;
  r.coefficients = c;
  // C² vanishes below dimension 2.
  if (g.dim() >= 2) {
    const auto h = cohomology(g, c, 2);
    r.h2 = h.dimH;
    r.z2 = h.dimZ;
  }
  r.zl20 = symmetric_cocycle_dim(g, c);
  r.coupled = coupled_basis(g, c, a).size();
  r.hl2 = r.h2 + r.zl20 + r.coupled;
  const auto l = leibniz_cocycles(g, c, 2);
  r.zl2 = l.dimZ;
  r.hl2_direct = l.dimH;
  if (r.hl2 != r.hl2_direct || r.zl2 != r.z2 + r.zl20 + r.coupled)
    throw CrossCheckMismatch("HL² decomposition " + std::to_string(r.h2) + " + " + std::to_string(r.zl20) + " + " +
                             std::to_string(r.coupled) + " disagrees with direct dim " + std::to_string(r.hl2_direct) +
                             " for " + g.name() + " (" + to_string(c) + ")");
  return r;
}

UncouplingFlags uncoupling_flags(const LieAlgebra& g) {
  const auto a = koszul_analysis(g);
  UncouplingFlags f{coupled_basis(g, Coefficients::Adjoint, a).empty(), coupled_basis(g, Coefficients::Trivial, a).empty()};
  if (f.adjoint && !f.trivial) throw CrossCheckMismatch("adjoint uncoupling without trivial uncoupling");
  return f;
}

AltForm coadjoint_action(const LieAlgebra& g, int x_index, const AltForm& gamma) {
  const int n = g.dim();
  if (x_index < 1 || x_index > n) throw IndexOutOfRange("x" + std::to_string(x_index) + " outside 1.." + std::to_string(n));
  if (gamma.degree != 2 || gamma.n != n) throw DegreeOutOfRange("coadjoint action expects a 2-form on g");
  CochainBasis basis(CochainKind::CE, Coefficients::Trivial, n, 2);
  AltForm out{n, 2, {}};
  const int x = x_index - 1;
  for (std::size_t t = 0; t < basis.tuple_count(); ++t) {
    const auto uv = basis.tuple(t);
    const Rational s = -eval2(gamma, g.structure(x, uv[0]), unit(uv[1])) - eval2(gamma, unit(uv[0]), g.structure(x, uv[1]));
    if (s != 0) out.coefficients.push_back({static_cast<std::uint32_t>(t), s});
  }
  return out;
}

bool codim1_split_check(const LieAlgebra& g, int x1_index, const BilinearForm& b) {
  const int n = g.dim();
  if (x1_index < 1 || x1_index > n) throw IndexOutOfRange("x" + std::to_string(x1_index) + " outside 1.." + std::to_string(n));
  const int x = x1_index - 1;
  std::vector<int> others;
  for (int i = 1; i <= n; ++i)
    if (i != x1_index) others.push_back(i);
  if (!is_ideal(g, Subspace::spanned_by(n, others))) throw NotAnIdeal("span of the other basis vectors is not an ideal");
  if (!is_invariant(g, b)) throw NotInvariant("bilinear form is not symmetric and invariant");

  CochainBasis two(CochainKind::CE, Coefficients::Trivial, n, 2);
  CochainBasis three(CochainKind::CE, Coefficients::Trivial, n, 3);
  // (ω^x ∧ α) on a sorted basis triple, for a 2-form α.
  auto wedge_x = [&](const AltForm& alpha) {
    AltForm out{n, 3, {}};
    for (std::size_t t = 0; t < three.tuple_count(); ++t) {
      const auto p = three.tuple(t);
      Rational s = 0;
      if (p[0] == x) s = eval2(alpha, unit(p[1]), unit(p[2]));
      if (p[1] == x) s = -eval2(alpha, unit(p[0]), unit(p[2]));
      if (p[2] == x) s = eval2(alpha, unit(p[0]), unit(p[1]));
      if (s != 0) out.coefficients.push_back({static_cast<std::uint32_t>(t), s});
    }
    return out;
  };
  auto sum = [](AltForm a, const AltForm& c) {
    axpy(a.coefficients, 1, c.coefficients);
    return a;
  };

  // (i) I_B = d(ω^x ∧ f) + I_{B₂}∘π₂ with f = B(·, x).
  AltForm xf{n, 2, {}};
  for (int a = 0; a < n; ++a)
    if (a != x && b.matrix[a][x] != 0)
      xf.coefficients.push_back({static_cast<std::uint32_t>(two.index({std::min(a, x), std::max(a, x)})),
                                 a > x ? b.matrix[a][x] : Rational(-b.matrix[a][x])});
  normalize(xf.coefficients);
  AltForm ib2{n, 3, {}};
  for (std::size_t t = 0; t < three.tuple_count(); ++t) {
    const auto p = three.tuple(t);
    if (std::find(p.begin(), p.end(), x) != p.end()) continue;
    Rational s = 0;
    for (const auto& e : g.structure(p[0], p[1])) s += e.value * b.matrix[e.index][p[2]];
    if (s != 0) ib2.coefficients.push_back({static_cast<std::uint32_t>(t), s});
  }
  if (koszul_map(g, b) != sum(exterior_derivative(g, xf), ib2)) return false;

  // (ii) for γ = ω^{a,c} with a, c != x.
  const auto d2 = ce_coboundary(g, Coefficients::Trivial, 2);
  for (std::size_t t = 0; t < two.tuple_count(); ++t) {
    const auto ac = two.tuple(t);
    if (ac[0] == x || ac[1] == x) continue;
    AltForm gamma{n, 2, {{static_cast<std::uint32_t>(t), 1}}};
    AltForm dg2{n, 3, {}};
    for (std::size_t s = 0; s < three.tuple_count(); ++s) {
      const auto p = three.tuple(s);
      if (std::find(p.begin(), p.end(), x) != p.end()) continue;
      const Rational v = -eval2(gamma, g.structure(p[0], p[1]), unit(p[2])) +
                         eval2(gamma, g.structure(p[0], p[2]), unit(p[1])) -
                         eval2(gamma, g.structure(p[1], p[2]), unit(p[0]));
      if (v != 0) dg2.coefficients.push_back({static_cast<std::uint32_t>(s), v});
    }
    const AltForm lhs{n, 3, d2.matrix.apply(gamma.coefficients)};
    if (lhs != sum(wedge_x(coadjoint_action(g, x1_index, gamma)), dg2)) return false;
  }
  return true;
}

std::string render_form(const BilinearForm& b) { return join_terms(form_terms(b)); }
std::string render_alt(const AltForm& w) { return join_terms(alt_terms(w)); }

std::string render_cocycle(const CoupledCocycle& c) {
  std::string out;
  for (const auto& p : c.parts) {
    auto terms = form_terms(p.symmetric);
    for (auto& t : alt_terms(p.alternating)) terms.push_back(std::move(t));
    const auto body = join_terms(terms);
    if (!out.empty()) out += " + ";
    out += p.value < 0 ? body : "x" + std::to_string(p.value + 1) + "⊗(" + body + ")";
  }
  return out.empty() ? "0" : out;
}

nlohmann::ordered_json to_json(const KoszulAnalysis& a) {
  nlohmann::ordered_json j;
  j["invariant_dim"] = a.invariant_dim;
  j["p"] = a.p;
  j["c"] = a.c;
  j["ker_dim"] = a.ker_basis.size();
  j["im_dim"] = a.image_basis.size();
  j["i_null"] = a.i_null;
  j["i_exact"] = a.i_exact;
  j["quadratic"] = a.quadratic;
  j["quadratic_certified"] = a.quadratic_certified;
  return j;
}

nlohmann::ordered_json to_json(const DecompositionReport& r) {
  nlohmann::ordered_json j;
  j["coefficients"] = to_string(r.coefficients);
  j["h2"] = r.h2;
  j["zl20"] = r.zl20;
  j["coupled"] = r.coupled;
  j["hl2"] = r.hl2;
  j["hl2_direct"] = r.hl2_direct;
  j["z2"] = r.z2;
  j["zl2"] = r.zl2;
  return j;
}

nlohmann::ordered_json to_json(const CohomologyReport& r) {
  nlohmann::ordered_json j;
  j["degree"] = r.degree;
  j["coefficients"] = to_string(r.coefficients);
  j["dimC"] = r.dimC;
  j["dimZ"] = r.dimZ;
  j["dimB"] = r.dimB;
  j["dimH"] = r.dimH;
  if (r.kernel) {
    auto& k = j["kernel"] = nlohmann::ordered_json::array();
    for (const auto& v : *r.kernel) {
      auto& row = k.emplace_back(nlohmann::ordered_json::array());
      for (const auto& e : v) row.push_back({e.index, to_string(e.value)});
    }
  }
  return j;
}

KoszulAnalysis koszul_analysis_from_json(const nlohmann::ordered_json& j) {
  // Only the scalar summary is serialized; bases are recovered as empty
  // placeholders of the stated sizes.
  KoszulAnalysis a;
  a.invariant_dim = j.at("invariant_dim").get<std::size_t>();
  a.p = j.at("p").get<int>();
  a.c = j.at("c").get<int>();
  a.ker_basis.resize(j.at("ker_dim").get<std::size_t>());
  a.image_basis.resize(j.at("im_dim").get<std::size_t>());
  a.i_null = j.at("i_null").get<bool>();
  a.i_exact = j.at("i_exact").get<bool>();
  a.quadratic = j.at("quadratic").get<bool>();
  a.quadratic_certified = j.value("quadratic_certified", true);
  return a;
}

DecompositionReport decomposition_from_json(const nlohmann::ordered_json& j) {
  DecompositionReport r;
  r.coefficients = j.at("coefficients").get<std::string>() == "adjoint" ? Coefficients::Adjoint : Coefficients::Trivial;
  r.h2 = j.at("h2").get<std::size_t>();
  r.zl20 = j.at("zl20").get<std::size_t>();
  r.coupled = j.at("coupled").get<std::size_t>();
  r.hl2 = j.at("hl2").get<std::size_t>();
  r.hl2_direct = j.at("hl2_direct").get<std::size_t>();
  r.z2 = j.value("z2", std::size_t{0});
  r.zl2 = j.value("zl2", std::size_t{0});
  return r;
}

}  // namespace lielab
