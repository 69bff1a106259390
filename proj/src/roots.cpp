#include "lielab/roots.hpp"

#include <algorithm>
#include <set>

#include "lielab/catalog_data.hpp"
#include "lielab/lie_io.hpp"
#include "lielab/linalg.hpp"

namespace lielab {

SurdNumber operator+(const SurdNumber& x, const SurdNumber& y) { return {x.a + y.a, x.b + y.b}; }

int compare(const SurdNumber& x, const SurdNumber& y, int s) {
  const Rational da = x.a - y.a, db = x.b - y.b;
  const int sa = sgn(da), sb = sgn(db);
  if (sb == 0 || s == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare da^2 with db^2 * s.
  const int c = sgn(da * da - db * db * s);
  return sa > 0 ? c : -c;
}

std::string to_string(const SurdNumber& x, int s) {
  if (x.b == 0 || s == 0) return to_string(x.a);
  const std::string surd = (x.b == 1 ? "" : x.b == -1 ? "-" : to_string(x.b) + "*") + "sqrt(" + std::to_string(s) + ")";
  if (x.a == 0) return surd;
  return to_string(x.a) + (x.b > 0 ? "+" : "") + surd;
}

namespace {

struct StructuralLess {
  bool operator()(const Root& x, const Root& y) const {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].a != y[i].a) return x[i].a < y[i].a;
      if (x[i].b != y[i].b) return x[i].b < y[i].b;
    }
    return false;
  }
};

Root sum(const Root& x, const Root& y) {
  Root r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

Root unit_combo(int len, std::initializer_list<std::pair<int, int>> terms) {
  Root r(len, SurdNumber{0, 0});
  for (auto [i, c] : terms) r[i].a += c;
  return r;
}

// ε_i ± ε_j over the first m coordinates of a length-len vector: i<j for +, j<i for -.
void add_pm_pairs(std::vector<Root>& out, int len, int m, bool plus, bool minus) {
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (plus) out.push_back(unit_combo(len, {{i, 1}, {j, 1}}));
      if (minus) out.push_back(unit_combo(len, {{i, 1}, {j, -1}}));
    }
}

// ½(±ε_1 ... ±ε_m) + last, with the parity of minus signs fixed.
void add_spinors(std::vector<Root>& out, int len, int m, bool even, SurdNumber last) {
  for (int mask = 0; mask < (1 << m); ++mask) {
    if ((__builtin_popcount(mask) % 2 == 0) != even) continue;
    Root r(len, SurdNumber{0, 0});
    for (int i = 0; i < m; ++i) r[i].a = (mask >> i & 1) ? Rational(-1, 2) : Rational(1, 2);
    r[len - 1] = last;
    out.push_back(std::move(r));
  }
}

}  // namespace

RootSystem positive_roots(char type, int rank) {
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  auto& out = rs.positive_roots;
  auto unsupported = [&] {
    return UnsupportedType("no root system of type " + std::string(1, type) + std::to_string(rank));
  };
  switch (type) {
    case 'A':
      if (rank < 1) throw unsupported();
      add_pm_pairs(out, rank + 1, rank + 1, false, true);
      break;
    case 'B':
    case 'C':
      if (rank < 2) throw unsupported();
      add_pm_pairs(out, rank, rank, true, true);
      for (int i = 0; i < rank; ++i) out.push_back(unit_combo(rank, {{i, type == 'B' ? 1 : 2}}));
      break;
    case 'D':
      if (rank < 2) throw unsupported();
      add_pm_pairs(out, rank, rank, true, true);
      break;
    case 'G':
      if (rank != 2) throw unsupported();
      // Short simple root ε1-ε2, long simple root -2ε1+ε2+ε3, in the plane x+y+z=0.
      for (auto [x, y, z] : std::vector<std::tuple<int, int, int>>{
               {1, -1, 0}, {-2, 1, 1}, {-1, 0, 1}, {0, -1, 1}, {1, -2, 1}, {-1, -1, 2}})
        out.push_back(unit_combo(3, {{0, x}, {1, y}, {2, z}}));
      break;
    case 'F':
      if (rank != 4) throw unsupported();
      add_pm_pairs(out, 4, 4, true, true);
      for (int i = 0; i < 4; ++i) out.push_back(unit_combo(4, {{i, 1}}));
      for (int mask = 0; mask < 8; ++mask) {
        Root r(4, SurdNumber{Rational(1, 2), 0});
        for (int i = 0; i < 3; ++i)
          if (mask >> i & 1) r[i + 1].a = Rational(-1, 2);
        out.push_back(std::move(r));
      }
      break;
    case 'E': {
      if (rank < 6 || rank > 8) throw unsupported();
      const int m = rank == 8 ? 8 : rank - 1;  // coordinates carrying ε_i ± ε_j
      // ε_i + ε_j (i<j) and ε_i - ε_j (j<i)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          if (i < j) out.push_back(unit_combo(rank, {{i, 1}, {j, 1}}));
          if (j < i) out.push_back(unit_combo(rank, {{i, 1}, {j, -1}}));
        }
      if (rank == 6) {
        rs.surd = 3;
        add_spinors(out, 6, 5, true, {0, Rational(1, 2)});
      } else if (rank == 7) {
        rs.surd = 2;
        Root r(7, SurdNumber{0, 0});
        r[6] = {0, 1};
        out.push_back(std::move(r));
        add_spinors(out, 7, 6, false, {0, Rational(1, 2)});
      } else {
        add_spinors(out, 8, 7, true, {Rational(1, 2), 0});
      }
      break;
    }
    default:
      throw unsupported();
  }
  const int s = rs.surd;
  std::sort(out.begin(), out.end(), [s](const Root& x, const Root& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (const int c = compare(x[i], y[i], s); c != 0) return c < 0;
    return false;
  });
  return rs;
}

std::string render_root(const RootSystem& rs, const Root& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? ", " : "") + to_string(r[i], rs.surd);
  return s + ")";
}

namespace {

struct RootIndex {
  std::set<Root, StructuralLess> members;
  explicit RootIndex(const RootSystem& rs) : members(rs.positive_roots.begin(), rs.positive_roots.end()) {}
  bool contains_sum(const Root& x, const Root& y) const { return members.count(sum(x, y)) != 0; }
};

}  // namespace

std::optional<PropertyPWitness> property_P(const RootSystem& rs) {
  const RootIndex idx(rs);
  const auto& r = rs.positive_roots;
  const long n = static_cast<long>(r.size());
  std::vector<std::optional<PropertyPWitness>> first(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    std::vector<int> partners;
    for (long j = 0; j < n; ++j)
      if (idx.contains_sum(r[i], r[j])) partners.push_back(static_cast<int>(j));
    for (int j : partners) {
      for (int k : partners)
        if (k != j && idx.contains_sum(r[j], r[k])) {
          first[i] = PropertyPWitness{static_cast<int>(i), j, k};
          break;
        }
      if (first[i]) break;
    }
  }
  for (const auto& w : first)
    if (w) return w;
  return std::nullopt;
}

std::optional<PropertyPWitness> property_P_serial(const RootSystem& rs) {
  const RootIndex idx(rs);
  const auto& r = rs.positive_roots;
  const int n = static_cast<int>(r.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (idx.contains_sum(r[i], r[j]) && idx.contains_sum(r[i], r[k]) && idx.contains_sum(r[j], r[k]))
          return PropertyPWitness{i, j, k};
  return std::nullopt;
}

std::optional<PropertyPWitness> bracket_property_P(const LieAlgebra& g) {
  const int n = g.dim();
  auto nz = [&](int a, int b) { return !g.structure(a, b).empty(); };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (nz(a, b) && nz(a, c) && nz(b, c)) return PropertyPWitness{a + 1, b + 1, c + 1};
  return std::nullopt;
}

namespace {

SparseVector vectorize(const RationalMatrix& m) {
  SparseVector v;
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m[i][j] != 0) v.push_back({static_cast<std::uint32_t>(i * n + j), m[i][j]});
  return v;
}

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) {
  auto ab = multiply(a, b);
  const auto ba = multiply(b, a);
  for (std::size_t i = 0; i < ab.size(); ++i)
    for (std::size_t j = 0; j < ab.size(); ++j) ab[i][j] -= ba[i][j];
  return ab;
}

}  // namespace

LieAlgebra lie_algebra_from_matrices(const std::string& name, const std::vector<RationalMatrix>& mats) {
  const std::size_t d = mats.size();
  const std::size_t n = d ? mats[0].size() : 0;
  SparseMatrix basis(n * n, d);
  for (std::size_t a = 0; a < d; ++a) basis.column(a) = vectorize(mats[a]);
  if (rank(basis) != d) throw CrossCheckMismatch("matrices for " + name + " are linearly dependent");
  RawBrackets raw;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      const auto target = vectorize(commutator(mats[a], mats[b]));
      if (target.empty()) continue;
      const auto coords = solve(basis, target);
      if (!coords || basis.apply(*coords) != target)
        throw CrossCheckMismatch("matrix model of " + name + " is not closed under brackets");
      auto& terms = raw[{static_cast<int>(a) + 1, static_cast<int>(b) + 1}];
      for (const auto& e : *coords) terms.emplace_back(static_cast<int>(e.index) + 1, e.value);
    }
  return LieAlgebra::validate(raw, static_cast<int>(d), name);
}

namespace {

NilradicalModel from_matrices(const std::string& name, const std::vector<RationalMatrix>& mats,
                              std::vector<std::string> labels) {
  return {lie_algebra_from_matrices(name, mats), std::move(labels)};
}

RationalMatrix unit_matrix(std::size_t n, std::initializer_list<std::tuple<std::size_t, std::size_t, int>> entries) {
  auto m = zero_matrix(n, n);
  for (auto [i, j, c] : entries) m[i][j] += c;
  return m;
}

std::string sub(const std::string& head, int i, int j) {
  return head + "_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

// Ẽ_{i,j} (i<j) then the second family, on 2n x 2n matrices offset by `o`.
void add_orthogonal_symplectic(int n, std::size_t size, std::size_t o, bool symplectic,
                               std::vector<RationalMatrix>& mats, std::vector<std::string>& labels) {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      mats.push_back(unit_matrix(size, {{o + i, o + j, 1}, {o + n + j, o + n + i, -1}}));
      labels.push_back(sub("Ẽ", i + 1, j + 1));
    }
  for (int k = 0; k < n; ++k)
    for (int l = symplectic ? k : k + 1; l < n; ++l) {
      mats.push_back(unit_matrix(size, {{o + k, o + n + l, 1}, {o + l, o + n + k, symplectic ? 1 : -1}}));
      labels.push_back(sub(symplectic ? "F̂" : "F̃", k + 1, l + 1));
    }
}

LieAlgebra embedded_algebra(const std::string& file) {
  const auto text = embedded_catalog_file(file);
  if (!text) throw UnknownName("catalog file " + file + " is not embedded");
  return parse_lie(*text);
}

}  // namespace

NilradicalModel nilradical(char type, int rank) {
  const std::string name = std::string(1, type) + std::to_string(rank) + "_plus";
  std::vector<RationalMatrix> mats;
  std::vector<std::string> labels;
  switch (type) {
    case 'A': {
      if (rank < 1) break;
      const std::size_t size = rank + 1;
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i + 1; j < size; ++j) {
          mats.push_back(unit_matrix(size, {{i, j, 1}}));
          labels.push_back(sub("E", static_cast<int>(i) + 1, static_cast<int>(j) + 1));
        }
      return from_matrices(name, mats, labels);
    }
    case 'B': {
      if (rank < 2) break;
      // Index 0 is the extra row/column; the D_n block sits at 1..2n.
      const std::size_t size = 2 * rank + 1;
      for (int q = 1; q <= rank; ++q) {
        mats.push_back(unit_matrix(size, {{0, static_cast<std::size_t>(rank + q), 1}, {static_cast<std::size_t>(q), 0, -1}}));
        labels.push_back("ṽ_" + std::to_string(q));
      }
      add_orthogonal_symplectic(rank, size, 1, false, mats, labels);
      return from_matrices(name, mats, labels);
    }
    case 'C':
    case 'D':
      if (rank < 2) break;
      add_orthogonal_symplectic(rank, 2 * rank, 0, type == 'C', mats, labels);
      return from_matrices(name, mats, labels);
    case 'G':
    case 'F': {
      if ((type == 'G' && rank != 2) || (type == 'F' && rank != 4)) break;
      auto g = embedded_algebra(type == 'G' ? "G2_plus.lie" : "F4_plus.lie").renamed(name);
      for (int i = 1; i <= g.dim(); ++i) labels.push_back("x" + std::to_string(i));
      return {std::move(g), std::move(labels)};
    }
    default:
      break;
  }
  if (type == 'E') throw UnsupportedType("E-type nilradicals need Chevalley structure constants, which are not built");
  throw UnsupportedType("no nilradical model for " + std::string(1, type) + std::to_string(rank));
}

}  // namespace lielab
