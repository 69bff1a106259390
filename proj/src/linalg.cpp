#include "lielab/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "lielab/parallel.hpp"

namespace lielab {

namespace {

using IntEntry = std::pair<std::uint32_t, Integer>;
using IntRow = std::vector<IntEntry>;

void make_primitive(IntRow& r) {
  if (r.empty()) return;
  Integer g = 0;
  for (const auto& e : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
    if (g == 1) break;
  }
  if (r.front().second < 0) g = -g;
  if (g != 1)
    for (auto& e : r) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

// Clears denominators; `local` maps global indices to local ones when non-null.
IntRow to_integer_row(const SparseVector& v, const std::vector<std::uint32_t>* local_rows) {
  Integer l = 1;
  for (const auto& e : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.value.get_den_mpz_t());
  IntRow r;
  r.reserve(v.size());
  for (const auto& e : v) {
    std::uint32_t idx = e.index;
    if (local_rows) {
      auto it = std::lower_bound(local_rows->begin(), local_rows->end(), idx);
      idx = static_cast<std::uint32_t>(it - local_rows->begin());
    }
    Integer x = l / e.value.get_den();
    x *= e.value.get_num();
    r.emplace_back(idx, std::move(x));
  }
  make_primitive(r);
  return r;
}

// v <- a*v - b*r, where both have the same leading index (which cancels).
void eliminate(IntRow& v, const Integer& a, const Integer& b, const IntRow& r) {
  IntRow out;
  out.reserve(v.size() + r.size());
  std::size_t i = 0, j = 0;
  Integer t;
  while (i < v.size() || j < r.size()) {
    if (j == r.size() || (i < v.size() && v[i].first < r[j].first)) {
      mpz_mul(t.get_mpz_t(), v[i].second.get_mpz_t(), a.get_mpz_t());
      out.emplace_back(v[i].first, t);
      ++i;
    } else if (i == v.size() || r[j].first < v[i].first) {
      mpz_mul(t.get_mpz_t(), r[j].second.get_mpz_t(), b.get_mpz_t());
      mpz_neg(t.get_mpz_t(), t.get_mpz_t());
      out.emplace_back(r[j].first, t);
      ++j;
    } else {
      mpz_mul(t.get_mpz_t(), v[i].second.get_mpz_t(), a.get_mpz_t());
      mpz_submul(t.get_mpz_t(), r[j].second.get_mpz_t(), b.get_mpz_t());
      if (t != 0) out.emplace_back(v[i].first, t);
      ++i;
      ++j;
    }
  }
  v = std::move(out);
  make_primitive(v);
}

std::size_t integer_rank(std::vector<IntRow> vecs, std::size_t dim) {
  std::stable_sort(vecs.begin(), vecs.end(),
                   [](const IntRow& x, const IntRow& y) { return x.size() < y.size(); });
  std::vector<IntRow> pivot(dim);
  std::size_t rank = 0;
  Integer g, a, b;
  for (auto& v : vecs) {
    while (!v.empty()) {
      const auto p = v.front().first;
      if (pivot[p].empty()) {
        pivot[p] = std::move(v);
        ++rank;
        break;
      }
      const Integer& lead_r = pivot[p].front().second;
      const Integer& lead_v = v.front().second;
      mpz_gcd(g.get_mpz_t(), lead_r.get_mpz_t(), lead_v.get_mpz_t());
      mpz_divexact(a.get_mpz_t(), lead_r.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), lead_v.get_mpz_t(), g.get_mpz_t());
      eliminate(v, a, b, pivot[p]);
    }
  }
  return rank;
}

// Row-major copy of the block with local column indices.
std::vector<SparseVector> block_rows(const SparseMatrix& a, const Block& blk) {
  std::vector<SparseVector> rows(blk.rows.size());
  for (std::uint32_t lj = 0; lj < blk.cols.size(); ++lj)
    for (const auto& e : a.column(blk.cols[lj])) {
      auto it = std::lower_bound(blk.rows.begin(), blk.rows.end(), e.index);
      rows[it - blk.rows.begin()].push_back({lj, e.value});
    }
  return rows;
}

std::size_t block_rank(const SparseMatrix& a, const Block& blk) {
  if (blk.rows.empty()) return 0;
  std::vector<IntRow> vecs;
  if (blk.cols.size() <= blk.rows.size()) {
    vecs.reserve(blk.cols.size());
    for (auto j : blk.cols) vecs.push_back(to_integer_row(a.column(j), &blk.rows));
    return integer_rank(std::move(vecs), blk.rows.size());
  }
  // Wide block: eliminate rows instead, so the echelon stays small.
  const auto rows = block_rows(a, blk);
  vecs.reserve(rows.size());
  for (const auto& r : rows) vecs.push_back(to_integer_row(r, nullptr));
  return integer_rank(std::move(vecs), blk.cols.size());
}

std::vector<SparseVector> block_kernel(const SparseMatrix& a, const Block& blk) {
  const std::size_t nc = blk.cols.size();
  auto reduced = rref(block_rows(a, blk));
  std::vector<int> pivot_row(nc, -1);
  for (std::size_t r = 0; r < reduced.size(); ++r) pivot_row[reduced[r].front().index] = static_cast<int>(r);
  // Column f of the reduced matrix, read off pivot rows.
  std::vector<SparseVector> column_entries(nc);
  for (std::size_t r = 0; r < reduced.size(); ++r)
    for (const auto& e : reduced[r])
      if (pivot_row[e.index] < 0)
        column_entries[e.index].push_back({reduced[r].front().index, e.value});
  std::vector<SparseVector> basis;
  for (std::uint32_t f = 0; f < nc; ++f) {
    if (pivot_row[f] >= 0) continue;
    SparseVector v;
    v.push_back({blk.cols[f], 1});
    for (const auto& e : column_entries[f]) v.push_back({blk.cols[e.index], -e.value});
    normalize(v);
    basis.push_back(std::move(v));
  }
  return rref(std::move(basis));
}

}  // namespace

std::vector<Block> sparsity_blocks(const SparseMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::uint32_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t j = 0; j < n; ++j) {
    const auto& c = a.column(j);
    for (std::size_t k = 1; k < c.size(); ++k) {
      auto r0 = find(c[0].index), r1 = find(c[k].index);
      if (r0 != r1) parent[std::max(r0, r1)] = std::min(r0, r1);
    }
  }
  std::vector<Block> blocks;
  std::vector<int> block_of_root(m, -1);
  std::vector<char> row_used(m, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& c = a.column(j);
    if (c.empty()) {
      blocks.push_back({{static_cast<std::uint32_t>(j)}, {}});
      continue;
    }
    auto root = find(c[0].index);
    if (block_of_root[root] < 0) {
      block_of_root[root] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[block_of_root[root]].cols.push_back(static_cast<std::uint32_t>(j));
    for (const auto& e : c) row_used[e.index] = 1;
  }
  for (std::size_t i = 0; i < m; ++i)
    if (row_used[i]) blocks[block_of_root[find(static_cast<std::uint32_t>(i))]].rows.push_back(static_cast<std::uint32_t>(i));
  return blocks;
}

std::size_t rank(const SparseMatrix& a) {
  const auto blocks = sparsity_blocks(a);
  std::size_t total = 0;
  const long nb = static_cast<long>(blocks.size());
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
  for (long b = 0; b < nb; ++b) total += block_rank(a, blocks[b]);
  return total;
}

std::size_t rank_serial(const SparseMatrix& a) {
  std::vector<IntRow> vecs;
  vecs.reserve(a.cols());
  for (const auto& c : a.columns())
    if (!c.empty()) vecs.push_back(to_integer_row(c, nullptr));
  return integer_rank(std::move(vecs), a.rows());
}

std::vector<SparseVector> rref(std::vector<SparseVector> rows) {
  std::uint32_t dim = 0;
  for (const auto& r : rows)
    if (!r.empty()) dim = std::max(dim, r.back().index + 1);
  Echelon e(dim);
  for (auto& r : rows) e.insert(std::move(r));
  return e.basis();
}

std::vector<SparseVector> kernel(const SparseMatrix& a) {
  const auto blocks = sparsity_blocks(a);
  std::vector<std::vector<SparseVector>> parts(blocks.size());
  const long nb = static_cast<long>(blocks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long b = 0; b < nb; ++b) parts[b] = block_kernel(a, blocks[b]);
  std::vector<SparseVector> out;
  for (auto& p : parts)
    for (auto& v : p) out.push_back(std::move(v));
  // Block supports are disjoint, so sorting the per-block reduced bases by
  // leading index yields the reduced echelon basis of the whole kernel.
  std::sort(out.begin(), out.end(),
            [](const SparseVector& x, const SparseVector& y) { return x.front().index < y.front().index; });
  return out;
}

std::optional<SparseVector> solve(const SparseMatrix& a, const SparseVector& b) {
  if (b.empty()) return SparseVector{};
  const auto blocks = sparsity_blocks(a);
  std::vector<int> block_of_row(a.rows(), -1);
  for (std::size_t k = 0; k < blocks.size(); ++k)
    for (auto r : blocks[k].rows) block_of_row[r] = static_cast<int>(k);
  std::vector<int> touched;
  for (const auto& e : b) {
    if (block_of_row[e.index] < 0) return std::nullopt;
    touched.push_back(block_of_row[e.index]);
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

  SparseVector x;
  for (int k : touched) {
    const auto& blk = blocks[k];
    const auto nc = static_cast<std::uint32_t>(blk.cols.size());
    auto rows = block_rows(a, blk);
    for (const auto& e : b) {
      if (block_of_row[e.index] != k) continue;
      auto it = std::lower_bound(blk.rows.begin(), blk.rows.end(), e.index);
      rows[it - blk.rows.begin()].push_back({nc, e.value});
    }
    for (const auto& r : rref(std::move(rows))) {
      const auto lead = r.front().index;
      if (lead == nc) return std::nullopt;
      if (r.back().index == nc) x.push_back({blk.cols[lead], r.back().value});
    }
  }
  normalize(x);
  return x;
}

bool Echelon::insert(SparseVector v) {
  v = residue(std::move(v));
  if (v.empty()) return false;
  const Rational inv = 1 / v.front().value;
  for (auto& e : v) e.value *= inv;
  const auto lead = v.front().index;
  rows_.emplace(lead, std::move(v));
  return true;
}

SparseVector Echelon::residue(SparseVector v) const {
  std::size_t pos = 0;
  while (pos < v.size()) {
    auto it = rows_.find(v[pos].index);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    const Rational c = v[pos].value;
    axpy(v, -c, it->second);
  }
  return v;
}

std::vector<std::uint32_t> Echelon::pivots() const {
  std::vector<std::uint32_t> p;
  p.reserve(rows_.size());
  for (const auto& [k, _] : rows_) p.push_back(k);
  return p;
}

std::vector<SparseVector> Echelon::basis() const {
  std::vector<SparseVector> out;
  std::vector<std::uint32_t> leads;
  out.reserve(rows_.size());
  leads.reserve(rows_.size());
  for (const auto& [k, r] : rows_) {
    leads.push_back(k);
    out.push_back(r);
  }
  // Back substitution, last pivot first: rows below are already reduced.
  for (std::size_t i = out.size(); i-- > 0;) {
    auto& r = out[i];
    for (std::size_t pos = 1; pos < r.size();) {
      auto it = std::lower_bound(leads.begin(), leads.end(), r[pos].index);
      if (it == leads.end() || *it != r[pos].index) {
        ++pos;
        continue;
      }
      const Rational c = r[pos].value;
      axpy(r, -c, out[it - leads.begin()]);
    }
  }
  return out;
}

}  // namespace lielab
