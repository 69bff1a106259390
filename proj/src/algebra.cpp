#include "lielab/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "lielab/linalg.hpp"

namespace lielab {

namespace {

// [v, x_c] for a coordinate vector v.
SparseVector bracket_with_basis(int n, const std::vector<SparseVector>& table, const SparseVector& v,
                                std::size_t c) {
  SparseVector out;
  for (const auto& e : v) axpy(out, e.value, table[e.index * n + c]);
  return out;
}

SparseVector jacobi_residual(int n, const std::vector<SparseVector>& table, std::size_t a, std::size_t b,
                             std::size_t c) {
  SparseVector r = bracket_with_basis(n, table, table[a * n + b], c);
  const auto t2 = bracket_with_basis(n, table, table[b * n + c], a);
  const auto t3 = bracket_with_basis(n, table, table[c * n + a], b);
  axpy(r, 1, t2);
  axpy(r, 1, t3);
  return r;
}

std::optional<JacobiFailure> first_failure_at(int n, const std::vector<SparseVector>& table, std::size_t a) {
  for (std::size_t b = a + 1; b < static_cast<std::size_t>(n); ++b)
    for (std::size_t c = b + 1; c < static_cast<std::size_t>(n); ++c) {
      auto r = jacobi_residual(n, table, a, b, c);
      if (!r.empty())
        return JacobiFailure{static_cast<int>(a) + 1, static_cast<int>(b) + 1, static_cast<int>(c) + 1,
                             std::move(r)};
    }
  return std::nullopt;
}

}  // namespace

std::optional<JacobiFailure> find_jacobi_failure_serial(int dim, const std::vector<SparseVector>& table) {
  for (std::size_t a = 0; a < static_cast<std::size_t>(dim); ++a)
    if (auto f = first_failure_at(dim, table, a)) return f;
  return std::nullopt;
}

std::optional<JacobiFailure> find_jacobi_failure(int dim, const std::vector<SparseVector>& table) {
  std::vector<std::optional<JacobiFailure>> per_index(dim);
#pragma omp parallel for schedule(dynamic, 1)
  for (int a = 0; a < dim; ++a) per_index[a] = first_failure_at(dim, table, static_cast<std::size_t>(a));
  for (auto& f : per_index)
    if (f) return std::move(f);
  return std::nullopt;
}

std::string render_vector(const SparseVector& v) {
  if (v.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& e : v) {
    Rational c = e.value;
    if (!first) {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    } else if (c < 0) {
      out << "-";
      c = -c;
    }
    if (c != 1) out << c.get_str() << "*";
    out << "x" << e.index + 1;
    first = false;
  }
  return out.str();
}

LieAlgebra LieAlgebra::validate(const RawBrackets& brackets, int dim, std::string name) {
  if (dim < 0) throw IndexOutOfRange("negative dimension");
  std::vector<SparseVector> table(static_cast<std::size_t>(dim) * dim);
  for (const auto& [key, terms] : brackets) {
    const auto [i, j] = key;
    if (i < 1 || j < 1 || i > dim || j > dim)
      throw IndexOutOfRange("bracket [x" + std::to_string(i) + ",x" + std::to_string(j) + "] outside 1.." +
                            std::to_string(dim));
    if (i >= j) throw IndexOutOfRange("bracket keys need i < j, got (" + std::to_string(i) + "," +
                                      std::to_string(j) + ")");
    SparseVector v;
    for (const auto& [k, c] : terms) {
      if (k < 1 || k > dim)
        throw IndexOutOfRange("x" + std::to_string(k) + " outside 1.." + std::to_string(dim));
      v.push_back({static_cast<std::uint32_t>(k - 1), c});
    }
    normalize(v);
    table[(i - 1) * dim + (j - 1)] = v;
    table[(j - 1) * dim + (i - 1)] = scaled(v, -1);
  }
  if (auto f = find_jacobi_failure(dim, table)) throw JacobiViolation(f->i, f->j, f->k, render_vector(f->residual));
  return LieAlgebra(dim, std::move(name), std::move(table));
}

LieAlgebra LieAlgebra::renamed(std::string name) const {
  LieAlgebra g = *this;
  g.name_ = std::move(name);
  return g;
}

const SparseVector& LieAlgebra::bracket(int i, int j) const {
  if (i < 1 || j < 1 || i > dim_ || j > dim_)
    throw IndexOutOfRange("basis index outside 1.." + std::to_string(dim_));
  return structure(i - 1, j - 1);
}

SparseVector LieAlgebra::bracket(const SparseVector& x, const SparseVector& y) const {
  SparseVector out;
  for (const auto& a : x)
    for (const auto& b : y) axpy(out, a.value * b.value, structure(a.index, b.index));
  return out;
}

RationalVector LieAlgebra::bracket(const RationalVector& x, const RationalVector& y) const {
  return dense_from_sparse(bracket(sparse_from_dense(x), sparse_from_dense(y)), dim_);
}

RationalMatrix LieAlgebra::ad(int i) const {
  auto m = zero_matrix(dim_, dim_);
  for (int c = 0; c < dim_; ++c)
    for (const auto& e : structure(i - 1, c)) m[e.index][c] = e.value;
  return m;
}

RawBrackets LieAlgebra::brackets() const {
  RawBrackets out;
  for (int a = 0; a < dim_; ++a)
    for (int b = a + 1; b < dim_; ++b) {
      const auto& v = structure(a, b);
      if (v.empty()) continue;
      auto& terms = out[{a + 1, b + 1}];
      for (const auto& e : v) terms.emplace_back(static_cast<int>(e.index) + 1, e.value);
    }
  return out;
}

std::size_t LieAlgebra::bracket_count() const {
  std::size_t n = 0;
  for (int a = 0; a < dim_; ++a)
    for (int b = a + 1; b < dim_; ++b) n += structure(a, b).size();
  return n;
}

bool LieAlgebra::is_abelian() const {
  return std::all_of(table_.begin(), table_.end(), [](const SparseVector& v) { return v.empty(); });
}

Subspace::Subspace(int ambient_dim, const std::vector<RationalVector>& vectors) : ambient_(ambient_dim) {
  std::vector<SparseVector> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) rows.push_back(sparse_from_dense(v));
  for (const auto& r : rref(std::move(rows))) basis_.push_back(dense_from_sparse(r, ambient_));
}

Subspace Subspace::whole(int n) {
  std::vector<RationalVector> vs;
  for (int i = 0; i < n; ++i) {
    RationalVector v(n);
    v[i] = 1;
    vs.push_back(std::move(v));
  }
  return Subspace(n, vs);
}

Subspace Subspace::spanned_by(int n, const std::vector<int>& indices) {
  std::vector<RationalVector> vs;
  for (int i : indices) {
    if (i < 1 || i > n) throw IndexOutOfRange("x" + std::to_string(i) + " outside 1.." + std::to_string(n));
    RationalVector v(n);
    v[i - 1] = 1;
    vs.push_back(std::move(v));
  }
  return Subspace(n, vs);
}

bool Subspace::contains(const RationalVector& v) const {
  RationalVector r = v;
  const auto piv = pivots();
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const int p = piv[k];
    if (r[p] == 0) continue;
    const Rational c = r[p];
    for (int j = 0; j < ambient_; ++j) r[j] -= c * basis_[k][j];
  }
  return is_zero(r);
}

std::vector<int> Subspace::pivots() const {
  std::vector<int> p;
  for (const auto& b : basis_)
    for (int j = 0; j < ambient_; ++j)
      if (b[j] != 0) {
        p.push_back(j);
        break;
      }
  return p;
}

std::vector<int> Subspace::complement() const {
  const auto p = pivots();
  std::vector<int> c;
  for (int j = 0; j < ambient_; ++j)
    if (std::find(p.begin(), p.end(), j) == p.end()) c.push_back(j);
  return c;
}

RationalVector LinearMap::apply(const RationalVector& v) const {
  const int n = dim();
  RationalVector out(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (matrix[r][c] != 0 && v[c] != 0) out[r] += matrix[r][c] * v[c];
  return out;
}

SparseVector LinearMap::image(std::size_t position) const {
  SparseVector out;
  for (int r = 0; r < dim(); ++r)
    if (matrix[r][position] != 0) out.push_back({static_cast<std::uint32_t>(r), matrix[r][position]});
  return out;
}

Subspace center(const LieAlgebra& g) {
  const int n = g.dim();
  // Unknown y; equations [x_i, y]_k = 0 for all i, k.
  SparseMatrix m(static_cast<std::size_t>(n) * n, n);
  for (int j = 0; j < n; ++j) {
    SparseVector col;
    for (int i = 0; i < n; ++i)
      for (const auto& e : g.structure(i, j)) col.push_back({static_cast<std::uint32_t>(i * n + e.index), e.value});
    m.column(j) = std::move(col);
  }
  std::vector<RationalVector> vs;
  for (const auto& k : kernel(m)) vs.push_back(dense_from_sparse(k, n));
  return Subspace(n, vs);
}

Subspace derived_subalgebra(const LieAlgebra& g) {
  const int n = g.dim();
  std::vector<RationalVector> vs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!g.structure(a, b).empty()) vs.push_back(dense_from_sparse(g.structure(a, b), n));
  return Subspace(n, vs);
}

int abelianization_dim(const LieAlgebra& g) { return g.dim() - derived_subalgebra(g).dim(); }

LieAlgebra abelian(int n) { return LieAlgebra::validate({}, n, "abelian_" + std::to_string(n)); }

LieAlgebra direct_product(const LieAlgebra& g1, const LieAlgebra& g2) {
  RawBrackets raw = g1.brackets();
  const int s = g1.dim();
  for (const auto& [key, terms] : g2.brackets()) {
    auto& t = raw[{key.first + s, key.second + s}];
    for (const auto& [k, c] : terms) t.emplace_back(k + s, c);
  }
  return LieAlgebra::validate(raw, g1.dim() + g2.dim(), g1.name() + "x" + g2.name());
}

bool is_ideal(const LieAlgebra& g, const Subspace& h) {
  for (int i = 1; i <= g.dim(); ++i) {
    RationalVector xi(g.dim());
    xi[i - 1] = 1;
    for (const auto& v : h.basis())
      if (!h.contains(g.bracket(xi, v))) return false;
  }
  return true;
}

LieAlgebra quotient(const LieAlgebra& g, const Subspace& ideal) {
  if (ideal.ambient_dim() != g.dim()) throw IndexOutOfRange("ideal lives in a different ambient space");
  if (!is_ideal(g, ideal)) throw NotAnIdeal("subspace is not an ideal of " + g.name());
  const auto piv = ideal.pivots();
  const auto comp = ideal.complement();
  std::vector<int> new_index(g.dim(), -1);
  for (std::size_t m = 0; m < comp.size(); ++m) new_index[comp[m]] = static_cast<int>(m) + 1;

  RawBrackets raw;
  for (std::size_t a = 0; a < comp.size(); ++a)
    for (std::size_t b = a + 1; b < comp.size(); ++b) {
      RationalVector v = dense_from_sparse(g.structure(comp[a], comp[b]), g.dim());
      // Subtract the ideal component: pivots of the echelon basis are killed.
      for (std::size_t k = 0; k < piv.size(); ++k) {
        const Rational c = v[piv[k]];
        if (c == 0) continue;
        for (int j = 0; j < g.dim(); ++j) v[j] -= c * ideal.basis()[k][j];
      }
      std::vector<std::pair<int, Rational>> terms;
      for (int j = 0; j < g.dim(); ++j)
        if (v[j] != 0) terms.emplace_back(new_index[j], v[j]);
      if (!terms.empty()) raw[{static_cast<int>(a) + 1, static_cast<int>(b) + 1}] = std::move(terms);
    }
  return LieAlgebra::validate(raw, static_cast<int>(comp.size()), g.name() + "/ideal");
}

LinearMap inner_derivation(const LieAlgebra& g, int i) { return {g.ad(i)}; }

bool is_derivation(const LieAlgebra& g, const LinearMap& t) {
  const int n = g.dim();
  if (t.dim() != n) return false;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      SparseVector lhs;
      for (const auto& e : g.structure(a, b)) axpy(lhs, e.value, t.image(e.index));
      SparseVector rhs = g.bracket(t.image(a), SparseVector{{static_cast<std::uint32_t>(b), 1}});
      axpy(rhs, 1, g.bracket(SparseVector{{static_cast<std::uint32_t>(a), 1}}, t.image(b)));
      if (lhs != rhs) return false;
    }
  return true;
}

std::vector<LinearMap> derivation_space(const LieAlgebra& g) {
  const int n = g.dim();
  // Unknown t_{r,c} at column r*n + c; equation rows (a<b, k).
  auto row = [n](int a, int b, int k) {
    return static_cast<std::uint32_t>(((a * n) + b) * n + k);
  };
  std::vector<SparseVector> cols(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      // t[x_a,x_b]: sum_m c_ab^m t(x_m), i.e. t_{k,m} c_ab^m at output k.
      for (const auto& e : g.structure(a, b))
        for (int k = 0; k < n; ++k) cols[k * n + e.index].push_back({row(a, b, k), e.value});
      // -[t x_a, x_b] = -sum_r t_{r,a} [x_r, x_b]
      for (int r = 0; r < n; ++r)
        for (const auto& e : g.structure(r, b)) cols[r * n + a].push_back({row(a, b, e.index), -e.value});
      // -[x_a, t x_b]
      for (int r = 0; r < n; ++r)
        for (const auto& e : g.structure(a, r)) cols[r * n + b].push_back({row(a, b, e.index), -e.value});
    }
  SparseMatrix m(static_cast<std::size_t>(n) * n * n, static_cast<std::size_t>(n) * n);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    normalize(cols[j]);
    m.column(j) = std::move(cols[j]);
  }
  std::vector<LinearMap> out;
  for (const auto& k : kernel(m)) {
    LinearMap t = LinearMap::zero(n);
    for (const auto& e : k) t.matrix[e.index / n][e.index % n] = e.value;
    out.push_back(std::move(t));
  }
  return out;
}

LieAlgebra adjoin_derivation(const LieAlgebra& g, const LinearMap& t) {
  if (!is_derivation(g, t)) throw NotADerivation("map is not a derivation of " + g.name());
  RawBrackets raw;
  for (const auto& [key, terms] : g.brackets()) {
    auto& out = raw[{key.first + 1, key.second + 1}];
    for (const auto& [k, c] : terms) out.emplace_back(k + 1, c);
  }
  for (int i = 0; i < g.dim(); ++i) {
    std::vector<std::pair<int, Rational>> terms;
    for (const auto& e : t.image(i)) terms.emplace_back(static_cast<int>(e.index) + 2, e.value);
    if (!terms.empty()) raw[{1, i + 2}] = std::move(terms);
  }
  return LieAlgebra::validate(raw, g.dim() + 1, "C" + g.name() + "_tau");
}

LieAlgebra change_basis(const LieAlgebra& g, const RationalMatrix& p) {
  const int n = g.dim();
  const auto pinv = inverse(p);
  if (!pinv) throw Error("change of basis matrix is singular");
  auto column = [&](int j) {
    SparseVector v;
    for (int i = 0; i < n; ++i)
      if (p[i][j] != 0) v.push_back({static_cast<std::uint32_t>(i), p[i][j]});
    return v;
  };
  RawBrackets raw;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const auto v = g.bracket(column(a), column(b));
      std::vector<std::pair<int, Rational>> terms;
      for (int r = 0; r < n; ++r) {
        Rational s = 0;
        for (const auto& e : v) s += (*pinv)[r][e.index] * e.value;
        if (s != 0) terms.emplace_back(r + 1, s);
      }
      if (!terms.empty()) raw[{a + 1, b + 1}] = std::move(terms);
    }
  return LieAlgebra::validate(raw, n, g.name());
}

}  // namespace lielab
