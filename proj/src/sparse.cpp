#include "lielab/sparse.hpp"

#include <algorithm>

namespace lielab {

void axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
  if (a == 0 || x.empty()) return;
  SparseVector out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].index < x[j].index)) {
      out.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].index < y[i].index) {
      out.push_back({x[j].index, a * x[j].value});
      ++j;
    } else {
      Rational s = y[i].value + a * x[j].value;
      if (s != 0) out.push_back({y[i].index, std::move(s)});
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

SparseVector scaled(const SparseVector& x, const Rational& a) {
  if (a == 0) return {};
  SparseVector out = x;
  for (auto& e : out) e.value *= a;
  return out;
}

Rational entry(const SparseVector& v, std::uint32_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const SparseEntry& e, std::uint32_t i) { return e.index < i; });
  if (it != v.end() && it->index == index) return it->value;
  return 0;
}

SparseVector sparse_from_dense(const RationalVector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.push_back({static_cast<std::uint32_t>(i), v[i]});
  return out;
}

RationalVector dense_from_sparse(const SparseVector& v, std::size_t n) {
  RationalVector out(n);
  for (const auto& e : v) out[e.index] = e.value;
  return out;
}

void normalize(SparseVector& v) {
  std::stable_sort(v.begin(), v.end(),
                   [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
  SparseVector out;
  out.reserve(v.size());
  for (auto& e : v) {
    if (!out.empty() && out.back().index == e.index)
      out.back().value += e.value;
    else
      out.push_back(std::move(e));
  }
  std::erase_if(out, [](const SparseEntry& e) { return e.value == 0; });
  v = std::move(out);
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const SparseVector& c) { return c.empty(); });
}

SparseVector SparseMatrix::apply(const SparseVector& x) const {
  SparseVector y;
  for (const auto& e : x) axpy(y, e.value, columns_[e.index]);
  return y;
}

SparseMatrix SparseMatrix::compose(const SparseMatrix& rhs) const {
  SparseMatrix out(rows_, rhs.cols());
  for (std::size_t j = 0; j < rhs.cols(); ++j) out.columns_[j] = apply(rhs.column(j));
  return out;
}

SparseMatrix SparseMatrix::transposed() const {
  SparseMatrix t(cols(), rows_);
  for (std::size_t j = 0; j < cols(); ++j)
    for (const auto& e : columns_[j]) t.columns_[e.index].push_back({static_cast<std::uint32_t>(j), e.value});
  return t;
}

RationalMatrix SparseMatrix::to_dense() const {
  auto m = zero_matrix(rows_, cols());
  for (std::size_t j = 0; j < cols(); ++j)
    for (const auto& e : columns_[j]) m[e.index][j] = e.value;
  return m;
}

SparseMatrix SparseMatrix::from_dense(const RationalMatrix& m) {
  const std::size_t r = m.size(), c = r ? m[0].size() : 0;
  SparseMatrix out(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (m[i][j] != 0) out.columns_[j].push_back({static_cast<std::uint32_t>(i), m[i][j]});
  return out;
}

}  // namespace lielab
