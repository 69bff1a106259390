#include "lielab/cochain.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "lielab/linalg.hpp"

namespace lielab {

std::string to_string(Coefficients c) { return c == Coefficients::Adjoint ? "adjoint" : "trivial"; }

CochainBasis::CochainBasis(CochainKind kind, Coefficients coefficients, int n, int degree)
    : kind_(kind), coefficients_(coefficients), n_(n), degree_(degree) {
  binom_.assign(n + 1, std::vector<std::size_t>(n + 1, 0));
  for (int a = 0; a <= n; ++a) {
    binom_[a][0] = 1;
    for (int b = 1; b <= a; ++b) binom_[a][b] = binom_[a - 1][b - 1] + (b < a ? binom_[a - 1][b] : 0);
  }
  if (kind == CochainKind::CE) {
    tuple_count_ = degree <= n ? binom_[n][degree] : 0;
  } else {
    tuple_count_ = 1;
    for (int i = 0; i < degree; ++i) tuple_count_ *= static_cast<std::size_t>(n);
  }
}

std::vector<int> CochainBasis::tuple(std::size_t t) const {
  std::vector<int> out(degree_);
  if (kind_ == CochainKind::Leibniz) {
    for (int p = degree_ - 1; p >= 0; --p) {
      out[p] = static_cast<int>(t % n_);
      t /= n_;
    }
    return out;
  }
  int v = 0;
  for (int p = 0; p < degree_; ++p) {
    // Skip over blocks of tuples starting with a smaller entry.
    while (true) {
      const std::size_t block = binom_[n_ - 1 - v][degree_ - 1 - p];
      if (t < block) break;
      t -= block;
      ++v;
    }
    out[p] = v++;
  }
  return out;
}

std::size_t CochainBasis::tuple_index(const std::vector<int>& tup) const {
  std::size_t idx = 0;
  if (kind_ == CochainKind::Leibniz) {
    for (int x : tup) idx = idx * n_ + x;
    return idx;
  }
  int prev = -1;
  for (int p = 0; p < degree_; ++p) {
    for (int v = prev + 1; v < tup[p]; ++v) idx += binom_[n_ - 1 - v][degree_ - 1 - p];
    prev = tup[p];
  }
  return idx;
}

std::size_t CochainBasis::index(const std::vector<int>& tup, int value) const {
  return tuple_index(tup) * value_dim() + (coefficients_ == Coefficients::Adjoint ? value : 0);
}

std::size_t coboundary_cells(CochainKind kind, Coefficients c, int n, int k) {
  return CochainBasis(kind, c, n, k).size() * CochainBasis(kind, c, n, k + 1).size();
}

namespace {

struct Preimage {
  int s, t;
  Rational c;
};

// For each w, the ordered pairs (s,t) with nonzero coefficient of x_w in [x_s,x_t].
std::vector<std::vector<Preimage>> preimages(const LieAlgebra& g, bool ordered_pairs) {
  const int n = g.dim();
  std::vector<std::vector<Preimage>> pre(n);
  for (int s = 0; s < n; ++s)
    for (int t = ordered_pairs ? 0 : s + 1; t < n; ++t)
      for (const auto& e : g.structure(s, t)) pre[e.index].push_back({s, t, e.value});
  return pre;
}

template <typename ColumnFn>
void fill_columns(SparseMatrix& m, Assembly mode, ColumnFn&& column) {
  const long cols = static_cast<long>(m.cols());
  if (mode == Assembly::Parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (long j = 0; j < cols; ++j) m.column(j) = column(static_cast<std::size_t>(j));
  } else {
    for (long j = 0; j < cols; ++j) m.column(j) = column(static_cast<std::size_t>(j));
  }
}

inline Rational sign(int parity) { return (parity & 1) ? Rational(-1) : Rational(1); }

void check_ce_degree(const LieAlgebra& g, int k) {
  if (k < 0 || k > g.dim())
    throw DegreeOutOfRange("CE degree " + std::to_string(k) + " outside 0.." + std::to_string(g.dim()));
}

void check_leibniz_degree(int k) {
  if (k < 1 || k > 2) throw DegreeOutOfRange("Leibniz degree " + std::to_string(k) + " outside 1..2");
}

}  // namespace

CoboundaryMatrix ce_coboundary(const LieAlgebra& g, Coefficients c, int k, Assembly mode) {
  check_ce_degree(g, k);
  const int n = g.dim();
  CochainBasis src(CochainKind::CE, c, n, k), tgt(CochainKind::CE, c, n, k + 1);
  SparseMatrix m(tgt.size(), src.size());
  const auto pre = preimages(g, false);
  const bool adjoint = c == Coefficients::Adjoint;
  const std::size_t m_val = src.value_dim();

  fill_columns(m, mode, [&](std::size_t col) {
    const int v = static_cast<int>(col % m_val);
    const auto I = src.tuple(col / m_val);
    std::vector<char> in_I(n, 0);
    for (int x : I) in_I[x] = 1;
    SparseVector out;
    std::vector<int> J(k + 1);
    auto insert_sorted = [&](const std::vector<int>& base, std::initializer_list<int> extra) {
      J.assign(base.begin(), base.end());
      for (int x : extra) J.insert(std::upper_bound(J.begin(), J.end(), x), x);
    };
    // sum_i (-1)^i [x_{J_i}, psi(J without J_i)]
    if (adjoint)
      for (int a = 0; a < n; ++a) {
        if (in_I[a]) continue;
        const int pos = static_cast<int>(std::lower_bound(I.begin(), I.end(), a) - I.begin());
        insert_sorted(I, {a});
        for (const auto& e : g.structure(a, v))
          out.push_back({static_cast<std::uint32_t>(tgt.index(J, e.index)), sign(pos) * e.value});
      }
    // sum_{i<j} (-1)^{i+j} psi([x_{J_i}, x_{J_j}], rest)
    std::vector<int> R;
    for (int wi = 0; wi < k; ++wi) {
      const int w = I[wi];
      R.assign(I.begin(), I.end());
      R.erase(R.begin() + wi);
      in_I[w] = 0;
      for (const auto& p : pre[w]) {
        if (in_I[p.s] || in_I[p.t]) continue;
        insert_sorted(R, {p.s, p.t});
        const int i = static_cast<int>(std::lower_bound(J.begin(), J.end(), p.s) - J.begin());
        const int j = static_cast<int>(std::lower_bound(J.begin(), J.end(), p.t) - J.begin());
        out.push_back({static_cast<std::uint32_t>(tgt.index(J, v)), sign(i + j + wi) * p.c});
      }
      in_I[w] = 1;
    }
    normalize(out);
    return out;
  });
  return {src, tgt, std::move(m)};
}

CoboundaryMatrix leibniz_coboundary(const LieAlgebra& g, Coefficients c, int k, Assembly mode) {
  check_leibniz_degree(k);
  const int n = g.dim();
  CochainBasis src(CochainKind::Leibniz, c, n, k), tgt(CochainKind::Leibniz, c, n, k + 1);
  SparseMatrix m(tgt.size(), src.size());
  const auto pre = preimages(g, true);
  const bool adjoint = c == Coefficients::Adjoint;
  const std::size_t m_val = src.value_dim();

  fill_columns(m, mode, [&](std::size_t col) {
    const int v = static_cast<int>(col % m_val);
    const auto a = src.tuple(col / m_val);
    SparseVector out;
    std::vector<int> b(k + 1);
    if (adjoint) {
      // [X_1, psi(X_2..X_{k+1})]
      for (int t = 0; t < n; ++t) {
        b[0] = t;
        std::copy(a.begin(), a.end(), b.begin() + 1);
        for (const auto& e : g.structure(t, v))
          out.push_back({static_cast<std::uint32_t>(tgt.index(b, e.index)), e.value});
      }
      // sum_{i=2}^{k+1} (-1)^i [psi(X_1..^X_i..), X_i]
      for (int i = 2; i <= k + 1; ++i)
        for (int t = 0; t < n; ++t) {
          for (int p = 0, q = 0; p <= k; ++p) b[p] = (p == i - 1) ? t : a[q++];
          for (const auto& e : g.structure(v, t))
            out.push_back({static_cast<std::uint32_t>(tgt.index(b, e.index)), sign(i) * e.value});
        }
    }
    // sum_{i<j} (-1)^{j+1} psi(X_1..X_{i-1}, [X_i,X_j], X_{i+1}..^X_j..)
    for (int i = 1; i <= k + 1; ++i)
      for (int j = i + 1; j <= k + 1; ++j)
        for (const auto& p : pre[a[i - 1]]) {
          // b = (a_1..a_{i-1}, s, a_{i+1}..a_{j-1}, t, a_j..a_k)
          int q = 0;
          for (int pos = 1; pos <= k + 1; ++pos) {
            if (pos == i) {
              b[pos - 1] = p.s;
              ++q;
            } else if (pos == j) {
              b[pos - 1] = p.t;
            } else {
              b[pos - 1] = a[q++];
            }
          }
          out.push_back({static_cast<std::uint32_t>(tgt.index(b, v)), sign(j + 1) * p.c});
        }
    normalize(out);
    return out;
  });
  return {src, tgt, std::move(m)};
}

namespace {

// A cochain as a multilinear function of coordinate vectors, valued in V
// (a 1-dimensional V for trivial coefficients).
using CochainFn = std::function<SparseVector(const std::vector<SparseVector>&)>;

SparseVector unit(int position) { return {{static_cast<std::uint32_t>(position), 1}}; }

// Expands multilinearly over the argument coordinates and calls `on_basis`.
SparseVector expand(const std::vector<SparseVector>& args,
                    const std::function<SparseVector(const std::vector<int>&)>& on_basis) {
  SparseVector out;
  std::vector<int> idx(args.size());
  std::function<void(std::size_t, Rational)> rec = [&](std::size_t p, Rational coef) {
    if (p == args.size()) {
      axpy(out, coef, on_basis(idx));
      return;
    }
    for (const auto& e : args[p]) {
      idx[p] = static_cast<int>(e.index);
      rec(p + 1, coef * e.value);
    }
  };
  rec(0, 1);
  return out;
}

SparseVector value_in_target(const LieAlgebra& g, Coefficients c, const SparseVector& x, const SparseVector& y) {
  (void)c;
  return g.bracket(x, y);
}

CoboundaryMatrix reference_matrix(const LieAlgebra& g, Coefficients c, CochainKind kind, int k,
                                  const std::function<SparseVector(const CochainFn&, const std::vector<int>&)>& d) {
  const int n = g.dim();
  CochainBasis src(kind, c, n, k), tgt(kind, c, n, k + 1);
  SparseMatrix m(tgt.size(), src.size());
  const std::size_t mv = src.value_dim();
  for (std::size_t col = 0; col < src.size(); ++col) {
    const int v = static_cast<int>(col % mv);
    const auto I = src.tuple(col / mv);
    CochainFn psi = [&](const std::vector<SparseVector>& args) {
      return expand(args, [&](const std::vector<int>& idx) -> SparseVector {
        if (kind == CochainKind::Leibniz) return idx == I ? unit(v) : SparseVector{};
        // alternating: sign of the sorting permutation when idx is a rearrangement of I
        std::vector<int> s = idx;
        int parity = 0;
        for (std::size_t x = 0; x < s.size(); ++x)
          for (std::size_t y = 0; y + 1 < s.size() - x; ++y)
            if (s[y] > s[y + 1]) {
              std::swap(s[y], s[y + 1]);
              ++parity;
            }
        if (s != I) return {};
        return scaled(unit(v), sign(parity));
      });
    };
    SparseVector column;
    for (std::size_t t = 0; t < tgt.tuple_count(); ++t) {
      const auto J = tgt.tuple(t);
      for (const auto& e : d(psi, J))
        column.push_back({static_cast<std::uint32_t>(t * mv + e.index), e.value});
    }
    normalize(column);
    m.column(col) = std::move(column);
  }
  return {src, tgt, std::move(m)};
}

}  // namespace

CoboundaryMatrix ce_coboundary_reference(const LieAlgebra& g, Coefficients c, int k) {
  check_ce_degree(g, k);
  const bool adjoint = c == Coefficients::Adjoint;
  return reference_matrix(g, c, CochainKind::CE, k, [&](const CochainFn& psi, const std::vector<int>& J) {
    // (d psi)(X_0..X_k) = sum_i (-1)^i [X_i, psi(..^X_i..)] + sum_{i<j} (-1)^{i+j} psi([X_i,X_j], ..^X_i..^X_j..)
    SparseVector out;
    const int len = static_cast<int>(J.size());
    for (int i = 0; i < len && adjoint; ++i) {
      std::vector<SparseVector> args;
      for (int p = 0; p < len; ++p)
        if (p != i) args.push_back(unit(J[p]));
      axpy(out, sign(i), value_in_target(g, c, unit(J[i]), psi(args)));
    }
    for (int i = 0; i < len; ++i)
      for (int j = i + 1; j < len; ++j) {
        std::vector<SparseVector> args{g.bracket(unit(J[i]), unit(J[j]))};
        for (int p = 0; p < len; ++p)
          if (p != i && p != j) args.push_back(unit(J[p]));
        axpy(out, sign(i + j), psi(args));
      }
    return out;
  });
}

CoboundaryMatrix leibniz_coboundary_reference(const LieAlgebra& g, Coefficients c, int k) {
  check_leibniz_degree(k);
  const bool adjoint = c == Coefficients::Adjoint;
  return reference_matrix(g, c, CochainKind::Leibniz, k, [&](const CochainFn& psi, const std::vector<int>& X) {
    // 1-based positions as in the defining formula.
    SparseVector out;
    const int len = static_cast<int>(X.size());  // k + 1
    if (adjoint) {
      std::vector<SparseVector> args;
      for (int p = 2; p <= len; ++p) args.push_back(unit(X[p - 1]));
      axpy(out, 1, g.bracket(unit(X[0]), psi(args)));
      for (int i = 2; i <= len; ++i) {
        std::vector<SparseVector> rest;
        for (int p = 1; p <= len; ++p)
          if (p != i) rest.push_back(unit(X[p - 1]));
        axpy(out, sign(i), g.bracket(psi(rest), unit(X[i - 1])));
      }
    }
    for (int i = 1; i <= len; ++i)
      for (int j = i + 1; j <= len; ++j) {
        std::vector<SparseVector> args;
        for (int p = 1; p <= len; ++p) {
          if (p == j) continue;
          args.push_back(p == i ? g.bracket(unit(X[i - 1]), unit(X[j - 1])) : unit(X[p - 1]));
        }
        axpy(out, sign(j + 1), psi(args));
      }
    return out;
  });
}

SparseMatrix alternating_inclusion(int n, Coefficients c, int k) {
  CochainBasis alt(CochainKind::CE, c, n, k), ten(CochainKind::Leibniz, c, n, k);
  SparseMatrix m(ten.size(), alt.size());
  const std::size_t mv = alt.value_dim();
  for (std::size_t col = 0; col < alt.size(); ++col) {
    const int v = static_cast<int>(col % mv);
    const auto I = alt.tuple(col / mv);
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    SparseVector out;
    do {
      int parity = 0;
      for (int x = 0; x < k; ++x)
        for (int y = x + 1; y < k; ++y)
          if (perm[x] > perm[y]) ++parity;
      std::vector<int> t(k);
      for (int i = 0; i < k; ++i) t[i] = I[perm[i]];
      out.push_back({static_cast<std::uint32_t>(ten.index(t, v)), sign(parity)});
    } while (std::next_permutation(perm.begin(), perm.end()));
    normalize(out);
    m.column(col) = std::move(out);
  }
  return m;
}

CohomologyReport cohomology(const LieAlgebra& g, Coefficients c, int k, bool with_kernel) {
  check_ce_degree(g, k);
  const auto out = ce_coboundary(g, c, k);
  CohomologyReport r;
  r.degree = k;
  r.coefficients = c;
  r.dimC = out.source.size();
  const std::size_t rank_out = rank(out.matrix);
  r.dimZ = r.dimC - rank_out;
  r.dimB = k > 0 ? rank(ce_coboundary(g, c, k - 1).matrix) : 0;
  r.dimH = r.dimZ - r.dimB;
  if (with_kernel) r.kernel = kernel(out.matrix);
  return r;
}

CohomologyReport leibniz_cocycles(const LieAlgebra& g, Coefficients c, int k, bool with_kernel) {
  check_leibniz_degree(k);
  const auto out = leibniz_coboundary(g, c, k);
  CohomologyReport r;
  r.degree = k;
  r.coefficients = c;
  r.leibniz = true;
  r.dimC = out.source.size();
  r.dimZ = r.dimC - rank(out.matrix);
  r.dimB = rank(ce_coboundary(g, c, k - 1).matrix);
  r.dimH = r.dimZ - r.dimB;
  if (with_kernel) r.kernel = kernel(out.matrix);
  return r;
}

}  // namespace lielab
