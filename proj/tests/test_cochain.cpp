#include "doctest.h"
#include "fixtures.hpp"
#include "lielab/cochain.hpp"
#include "lielab/linalg.hpp"

using namespace lielab;
using fixtures::sv;

namespace {

std::size_t ce(const CochainBasis& b, std::vector<int> one_based) {
  for (int& x : one_based) --x;
  return b.index(one_based);
}

}  // namespace

TEST_CASE("cochain basis indexing round-trips") {
  for (auto kind : {CochainKind::CE, CochainKind::Leibniz})
    for (int k = 0; k <= 4; ++k) {
      CochainBasis b(kind, Coefficients::Trivial, 6, k);
      for (std::size_t t = 0; t < b.tuple_count(); ++t) CHECK(b.tuple_index(b.tuple(t)) == t);
    }
  CHECK(CochainBasis(CochainKind::CE, Coefficients::Adjoint, 5, 2).size() == 50);
  CHECK(CochainBasis(CochainKind::Leibniz, Coefficients::Adjoint, 5, 2).size() == 125);
  // lexicographic order on tuples
  CochainBasis b(CochainKind::CE, Coefficients::Trivial, 4, 2);
  CHECK(b.tuple(0) == std::vector<int>{0, 1});
  CHECK(b.tuple(3) == std::vector<int>{1, 2});
  CHECK(b.tuple(5) == std::vector<int>{2, 3});
}

TEST_CASE("g5,4 trivial coboundaries match the worked example") {
  const auto g = fixtures::g54();
  const auto d1 = ce_coboundary(g, Coefficients::Trivial, 1);
  const auto& t = d1.target;
  CHECK(d1.matrix.column(2) == sv({{static_cast<unsigned>(ce(t, {1, 2})), -1}}));
  CHECK(d1.matrix.column(3) == sv({{static_cast<unsigned>(ce(t, {1, 3})), -1}}));
  CHECK(d1.matrix.column(4) == sv({{static_cast<unsigned>(ce(t, {2, 3})), -1}}));
  const auto d2 = ce_coboundary(g, Coefficients::Trivial, 2);
  CHECK(d2.matrix.column(ce(d2.source, {1, 5})) == sv({{static_cast<unsigned>(ce(d2.target, {1, 2, 3})), 1}}));
}

TEST_CASE("fast assembly equals the brute-force definition") {
  for (const auto& g : {fixtures::g54(), fixtures::sl2(), fixtures::diamond()})
    for (auto c : {Coefficients::Trivial, Coefficients::Adjoint}) {
      for (int k = 0; k <= g.dim(); ++k) {
        const auto fast = ce_coboundary(g, c, k);
        CHECK(fast.matrix == ce_coboundary_reference(g, c, k).matrix);
        CHECK(fast.matrix == ce_coboundary(g, c, k, Assembly::Serial).matrix);
      }
      for (int k = 1; k <= 2; ++k) {
        const auto fast = leibniz_coboundary(g, c, k);
        CHECK(fast.matrix == leibniz_coboundary_reference(g, c, k).matrix);
        CHECK(fast.matrix == leibniz_coboundary(g, c, k, Assembly::Serial).matrix);
      }
    }
}

TEST_CASE("d squares to zero and delta restricts to d") {
  for (const auto& g : {fixtures::g54(), fixtures::sl2(), fixtures::diamond()})
    for (auto c : {Coefficients::Trivial, Coefficients::Adjoint}) {
      for (int k = 0; k + 1 <= g.dim(); ++k)
        CHECK(ce_coboundary(g, c, k + 1).matrix.compose(ce_coboundary(g, c, k).matrix).is_zero());
      CHECK(leibniz_coboundary(g, c, 2).matrix.compose(leibniz_coboundary(g, c, 1).matrix).is_zero());
      for (int k = 1; k <= 2; ++k) {
        const auto lhs = leibniz_coboundary(g, c, k).matrix.compose(alternating_inclusion(g.dim(), c, k));
        const auto rhs = alternating_inclusion(g.dim(), c, k + 1).compose(ce_coboundary(g, c, k).matrix);
        CHECK(lhs == rhs);
      }
    }
}

TEST_CASE("g5,4 cohomology dimensions") {
  const auto g = fixtures::g54();
  const auto h2 = cohomology(g, Coefficients::Trivial, 2);
  CHECK(h2.dimZ == 6);
  CHECK(h2.dimB == 3);
  CHECK(h2.dimH == 3);
  CHECK(leibniz_cocycles(g, Coefficients::Trivial).dimZ == 10);
  CHECK(leibniz_cocycles(g, Coefficients::Trivial).dimH == 7);
  CHECK(leibniz_cocycles(g, Coefficients::Adjoint).dimZ == 32);
  CHECK(cohomology(g, Coefficients::Adjoint, 2).dimZ == 24);
}

TEST_CASE("degree guards") {
  const auto g = fixtures::g54();
  CHECK_THROWS_AS(ce_coboundary(g, Coefficients::Trivial, 6), DegreeOutOfRange);
  CHECK_THROWS_AS(ce_coboundary(g, Coefficients::Trivial, -1), DegreeOutOfRange);
  CHECK_THROWS_AS(leibniz_coboundary(g, Coefficients::Trivial, 3), DegreeOutOfRange);
}
