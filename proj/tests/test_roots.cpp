#include "doctest.h"

#include <algorithm>
#include <map>

#include "lielab/errors.hpp"
#include "lielab/koszul.hpp"
#include "lielab/roots.hpp"

using namespace lielab;

namespace {

bool is_positive_root(const RootSystem& rs, const Root& r) {
  return std::find(rs.positive_roots.begin(), rs.positive_roots.end(), r) != rs.positive_roots.end();
}

Root sum(const Root& a, const Root& b) {
  Root r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool witness_holds(const RootSystem& rs, const PropertyPWitness& w) {
  const auto& p = rs.positive_roots;
  return is_positive_root(rs, sum(p[w.alpha], p[w.beta])) && is_positive_root(rs, sum(p[w.alpha], p[w.gamma])) &&
         is_positive_root(rs, sum(p[w.beta], p[w.gamma]));
}

Root coords(std::initializer_list<int> xs) {
  Root r;
  for (int x : xs) r.push_back({Rational(x), Rational(0)});
  return r;
}

// Basis lookup by label; F̃_{k,l} with k > l is -F̃_{l,k}, and F̂ is symmetric.
struct Lookup {
  const NilradicalModel& m;
  SparseVector operator()(const std::string& head, int i, int j) const {
    int sign = 1;
    if (i > j) {
      std::swap(i, j);
      if (head == "F̃") sign = -1;
    }
    if (i == j && head == "F̃") return {};
    const auto label = head + "_{" + std::to_string(i) + "," + std::to_string(j) + "}";
    const auto it = std::find(m.labels.begin(), m.labels.end(), label);
    REQUIRE_MESSAGE(it != m.labels.end(), label);
    return {{static_cast<std::uint32_t>(it - m.labels.begin()), Rational(sign)}};
  }
  SparseVector v(int q) const {
    const auto it = std::find(m.labels.begin(), m.labels.end(), "ṽ_" + std::to_string(q));
    REQUIRE(it != m.labels.end());
    return {{static_cast<std::uint32_t>(it - m.labels.begin()), Rational(1)}};
  }
};

}  // namespace

TEST_CASE("surd arithmetic and ordering") {
  const SurdNumber half{Rational(1, 2), 0}, root3{0, 1}, mix{Rational(-1, 2), Rational(1, 2)};
  CHECK(compare(root3, SurdNumber{2, 0}, 3) < 0);   // √3 < 2
  CHECK(compare(root3, SurdNumber{Rational(3, 2), 0}, 3) > 0);
  CHECK(compare(mix, SurdNumber{0, 0}, 3) > 0);     // (√3 - 1)/2 > 0
  CHECK(compare(mix, half, 3) < 0);
  CHECK(half + mix == SurdNumber{0, Rational(1, 2)});
  CHECK(compare(SurdNumber{1, -1}, SurdNumber{0, 0}, 2) < 0);  // 1 - √2 < 0
}

TEST_CASE("positive root counts") {
  for (int l = 1; l <= 7; ++l) CHECK(positive_roots('A', l).positive_roots.size() == std::size_t(l * (l + 1) / 2));
  for (int l = 2; l <= 6; ++l) {
    CHECK(positive_roots('B', l).positive_roots.size() == std::size_t(l * l));
    CHECK(positive_roots('C', l).positive_roots.size() == std::size_t(l * l));
  }
  for (int l = 3; l <= 6; ++l) CHECK(positive_roots('D', l).positive_roots.size() == std::size_t(l * (l - 1)));
  CHECK(positive_roots('G', 2).positive_roots.size() == 6);
  CHECK(positive_roots('F', 4).positive_roots.size() == 24);
  CHECK(positive_roots('E', 6).positive_roots.size() == 36);
  CHECK(positive_roots('E', 7).positive_roots.size() == 63);
  CHECK(positive_roots('E', 8).positive_roots.size() == 120);
  CHECK_THROWS_AS(positive_roots('E', 5), UnsupportedType);
  CHECK_THROWS_AS(positive_roots('G', 3), UnsupportedType);
  CHECK_THROWS_AS(positive_roots('X', 2), UnsupportedType);
}

TEST_CASE("root vectors are distinct and sorted") {
  for (auto [t, l] : {std::pair{'B', 4}, {'E', 6}, {'E', 7}, {'F', 4}}) {
    const auto rs = positive_roots(t, l);
    for (std::size_t i = 1; i < rs.positive_roots.size(); ++i) {
      const auto& a = rs.positive_roots[i - 1];
      const auto& b = rs.positive_roots[i];
      int first = 0;
      for (std::size_t k = 0; k < a.size() && first == 0; ++k) first = compare(a[k], b[k], rs.surd);
      CHECK(first < 0);
    }
  }
}

TEST_CASE("E8 roots all have squared length 2") {
  const auto rs = positive_roots('E', 8);
  for (const auto& r : rs.positive_roots) {
    Rational n = 0;
    for (const auto& x : r) {
      CHECK(x.b == 0);
      n += x.a * x.a;
    }
    CHECK(n == 2);
  }
}

TEST_CASE("property P on root systems") {
  for (auto [t, l] : {std::pair{'A', 2}, {'A', 3}, {'A', 4}, {'A', 5}, {'D', 4}, {'D', 5}, {'E', 6}, {'B', 2}, {'C', 2}}) {
    CAPTURE(t);
    CAPTURE(l);
    const auto rs = positive_roots(t, l);
    CHECK_FALSE(property_P(rs));
    CHECK_FALSE(property_P_serial(rs));
  }
  // ε1, ε2, ε3 in B3: pairwise sums ε_i + ε_j are roots.
  const auto b3 = positive_roots('B', 3);
  REQUIRE(property_P(b3));
  CHECK(witness_holds(b3, *property_P(b3)));
  CHECK(witness_holds(b3, {static_cast<int>(std::find(b3.positive_roots.begin(), b3.positive_roots.end(),
                                                      coords({1, 0, 0})) - b3.positive_roots.begin()),
                           static_cast<int>(std::find(b3.positive_roots.begin(), b3.positive_roots.end(),
                                                      coords({0, 1, 0})) - b3.positive_roots.begin()),
                           static_cast<int>(std::find(b3.positive_roots.begin(), b3.positive_roots.end(),
                                                      coords({0, 0, 1})) - b3.positive_roots.begin())}));
  for (auto [t, l] : {std::pair{'F', 4}, {'G', 2}, {'C', 3}, {'B', 4}}) {
    const auto rs = positive_roots(t, l);
    const auto a = property_P(rs), b = property_P_serial(rs);
    REQUIRE(a);
    REQUIRE(b);
    CHECK(std::tie(a->alpha, a->beta, a->gamma) == std::tie(b->alpha, b->beta, b->gamma));
    CHECK(witness_holds(rs, *a));
  }
  const auto f4 = positive_roots('F', 4);
  const auto w = *property_P(f4);
  CHECK(render_root(f4, f4.positive_roots[w.alpha]) == "(0, 0, 0, 1)");
  CHECK(render_root(f4, f4.positive_roots[w.beta]) == "(0, 0, 1, 0)");
  CHECK(render_root(f4, f4.positive_roots[w.gamma]) == "(0, 1, 0, 0)");
}

TEST_CASE("nilradical dimensions match root counts") {
  for (auto [t, l] : {std::pair{'A', 1}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'C', 2}, {'C', 3}, {'D', 3}, {'D', 4},
                      {'G', 2}, {'F', 4}}) {
    CAPTURE(t);
    CAPTURE(l);
    const auto m = nilradical(t, l);
    CHECK(std::size_t(m.algebra.dim()) == positive_roots(t, l).positive_roots.size());
    CHECK(m.labels.size() == std::size_t(m.algebra.dim()));
  }
  CHECK(nilradical('D', 2).algebra.is_abelian());
  CHECK(nilradical('D', 2).algebra.dim() == 2);
  CHECK_THROWS_AS(nilradical('E', 6), UnsupportedType);
}

TEST_CASE("orthogonal and symplectic relations") {
  for (char t : {'B', 'C', 'D'}) {
    const int n = 3;
    const auto m = nilradical(t, n);
    const auto& g = m.algebra;
    const Lookup at{m};
    const std::string f = t == 'C' ? "F̂" : "F̃";
    const int s = t == 'C' ? 1 : -1;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = t == 'C' ? k : k + 1; l <= n; ++l) {
            CAPTURE(t);
            CAPTURE(i * 1000 + j * 100 + k * 10 + l);
            const auto lhs = g.bracket(at("Ẽ", i, j), at(f, k, l));
            SparseVector rhs;
            if (j == k) axpy(rhs, 1, at(f, i, l));
            if (j == l) axpy(rhs, s, at(f, i, k));
            CHECK(lhs == rhs);
          }
    // [Ẽ_ij, Ẽ_kl] = δ_jk Ẽ_il - δ_li Ẽ_kj
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = k + 1; l <= n; ++l) {
            SparseVector rhs;
            if (j == k) axpy(rhs, 1, at("Ẽ", i, l));
            if (l == i) axpy(rhs, -1, at("Ẽ", k, j));
            CHECK(g.bracket(at("Ẽ", i, j), at("Ẽ", k, l)) == rhs);
          }
    if (t == 'B')
      for (int q = 1; q <= n; ++q)
        for (int r = 1; r <= n; ++r) CHECK(g.bracket(at.v(q), at.v(r)) == at("F̃", r, q));
  }
}

TEST_CASE("bracket analogue of P on nilradicals") {
  // In a Chevalley basis [x_α, x_β] != 0 exactly when α+β is a root, so the two tests agree.
  for (auto [t, l] : {std::pair{'A', 4}, {'D', 4}, {'B', 3}, {'C', 3}, {'G', 2}, {'B', 2}}) {
    CAPTURE(t);
    CHECK(bracket_property_P(nilradical(t, l).algebra).has_value() == property_P(positive_roots(t, l)).has_value());
  }
  const auto f4 = nilradical('F', 4).algebra;
  const auto w = bracket_property_P(f4);
  REQUIRE(w);
  CHECK(std::tie(w->alpha, w->beta, w->gamma) == std::tuple{3, 4, 6});
  // The triple (3,4,9) also qualifies.
  CHECK_FALSE(f4.bracket(3, 4).empty());
  CHECK_FALSE(f4.bracket(3, 9).empty());
  CHECK_FALSE(f4.bracket(4, 9).empty());
}

TEST_CASE("nilradicals are I-null") {
  for (auto [t, l] : {std::pair{'A', 2}, {'A', 4}, {'B', 2}, {'B', 3}, {'C', 3}, {'D', 3}, {'D', 4}, {'G', 2}, {'F', 4}}) {
    CAPTURE(t);
    CAPTURE(l);
    CHECK(koszul_analysis(nilradical(t, l).algebra).i_null);
  }
}

TEST_CASE("matrix algebras must close") {
  auto e12 = zero_matrix(3, 3), e23 = zero_matrix(3, 3);
  e12[0][1] = 1;
  e23[1][2] = 1;
  CHECK_THROWS_AS(lie_algebra_from_matrices("open", {e12, e23}), CrossCheckMismatch);
  auto e13 = zero_matrix(3, 3);
  e13[0][2] = 1;
  const auto g = lie_algebra_from_matrices("n3", {e12, e23, e13});
  CHECK(g.bracket(1, 2) == SparseVector{{2, Rational(1)}});
  CHECK_THROWS_AS(lie_algebra_from_matrices("dep", {e12, e12}), CrossCheckMismatch);
}
