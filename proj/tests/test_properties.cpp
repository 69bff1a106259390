#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "lielab/catalog.hpp"
#include "lielab/cochain.hpp"
#include "lielab/koszul.hpp"
#include "lielab/linalg.hpp"
#include "lielab/parallel.hpp"

using namespace lielab;

namespace {

// Plain dense Gaussian elimination, independent of the library kernels.
std::size_t dense_rank(RationalMatrix m) {
  std::size_t r = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

RationalMatrix random_invertible(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  while (true) {
    RationalMatrix p(n, RationalVector(n));
    for (auto& row : p)
      for (auto& x : row) x = d(rng);
    if (determinant(p) != 0) return p;
  }
}

SparseMatrix random_sparse(std::size_t rows, std::size_t cols, double density, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> v(-3, 3);
  SparseMatrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i)
      if (u(rng) < density) {
        const int x = v(rng);
        if (x != 0) m.column(j).push_back({static_cast<std::uint32_t>(i), Rational(x)});
      }
  return m;
}

}  // namespace

TEST_CASE("invariants do not depend on the basis") {
  std::mt19937 rng(2024);
  for (const auto& g : {fixtures::g54(), fixtures::diamond(), catalog_algebra("g7_2_4"), heisenberg(2)}) {
    CAPTURE(g.name());
    const auto base = koszul_analysis(g);
    const auto h2 = cohomology(g, Coefficients::Adjoint, 2).dimH;
    const auto hl2 = leibniz_cocycles(g, Coefficients::Trivial).dimH;
    for (int t = 0; t < 2; ++t) {
      const auto h = change_basis(g, random_invertible(g.dim(), rng));
      const auto a = koszul_analysis(h);
      CHECK(a.invariant_dim == base.invariant_dim);
      CHECK(a.ker_basis.size() == base.ker_basis.size());
      CHECK(a.image_basis.size() == base.image_basis.size());
      CHECK(a.p == base.p);
      CHECK(a.c == base.c);
      CHECK(a.i_null == base.i_null);
      CHECK(a.i_exact == base.i_exact);
      CHECK(a.quadratic == base.quadratic);
      CHECK(cohomology(h, Coefficients::Adjoint, 2).dimH == h2);
      CHECK(leibniz_cocycles(h, Coefficients::Trivial).dimH == hl2);
    }
  }
}

TEST_CASE("rank kernels agree with a dense oracle") {
  std::mt19937 rng(99);
  for (int t = 0; t < 40; ++t) {
    const auto m = random_sparse(3 + t % 17, 2 + (t * 7) % 23, t % 3 == 0 ? 0.08 : 0.3, rng);
    const auto want = dense_rank(m.to_dense());
    CHECK(rank(m) == want);
    CHECK(rank_serial(m) == want);
    const auto k = kernel(m);
    CHECK(k.size() == m.cols() - want);
    for (const auto& v : k) CHECK(m.apply(v).empty());
  }
}

TEST_CASE("thread count does not change results") {
  const int saved = thread_count();
  const auto g = catalog_algebra("g7_2_4");
  std::vector<std::size_t> ranks;
  std::vector<SparseMatrix> mats;
  for (int threads : {1, 4}) {
    set_thread_count(threads);
    const auto d = ce_coboundary(g, Coefficients::Adjoint, 2);
    mats.push_back(d.matrix);
    ranks.push_back(rank(d.matrix));
  }
  set_thread_count(saved);
  CHECK(mats[0] == mats[1]);
  CHECK(ranks[0] == ranks[1]);
  CHECK(ranks[0] == rank_serial(mats[0]));
}

TEST_CASE("solve returns a particular solution") {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto m = random_sparse(8, 10, 0.35, rng);
    const SparseVector x{{1, Rational(2)}, {4, Rational(-1, 3)}};
    const auto b = m.apply(x);
    const auto s = solve(m, b);
    REQUIRE(s);
    CHECK(m.apply(*s) == b);
  }
  SparseMatrix z(2, 1);
  CHECK_FALSE(solve(z, {{0, Rational(1)}}));
}
