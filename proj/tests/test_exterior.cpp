#include "talex/exterior.hpp"

#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "talex/laurent.hpp"
#include "talex/matrix.hpp"

using namespace talex;

namespace {

RingMatrix random_small(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  RingMatrix a(n, m);
  std::uniform_int_distribution<int> pick(-2, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      int c = pick(rng);
      int e = pick(rng);
      a.at(i, j) = LaurentPoly::term(c, e);
    }
  return a;
}

ExteriorElement random_element(std::mt19937_64& rng, std::size_t n, std::size_t r) {
  ExteriorElement x;
  x.ambient = n;
  x.degree = r;
  std::uniform_int_distribution<int> pick(-2, 2);
  for (const auto& I : index_sets(n, r)) x.add_term(I, LaurentPoly::term(pick(rng), pick(rng)));
  return x;
}

}  // namespace

TEST_CASE("wedge_sign") {
  CHECK(wedge_sign({0}, {1}) == std::pair<int, IndexSet>{1, {0, 1}});
  CHECK(wedge_sign({1}, {0}) == std::pair<int, IndexSet>{-1, {0, 1}});
  CHECK(wedge_sign({0}, {0}).first == 0);
  CHECK(wedge_sign({1, 3}, {0, 2}) == std::pair<int, IndexSet>{-1, {0, 1, 2, 3}});
}

TEST_CASE("index set enumeration and ranking") {
  auto sets = index_sets(5, 2);
  CHECK(sets.size() == 10);
  CHECK(sets.front() == IndexSet{0, 1});
  CHECK(sets.back() == IndexSet{3, 4});
  for (std::size_t k = 0; k < sets.size(); ++k) CHECK(lex_rank(sets[k], 5) == k);
  CHECK(index_sets(4, 0).size() == 1);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(4, 5) == 0);
}

TEST_CASE("wedge product") {
  auto e0 = ExteriorElement::basis(3, {0});
  auto e1 = ExteriorElement::basis(3, {1});
  CHECK(wedge(e0, e1) == ExteriorElement::basis(3, {0, 1}));
  CHECK(wedge(e0, e0).is_zero());

  ExteriorElement x = e0;
  x.add_term({1}, LaurentPoly::t(1));
  CHECK(wedge(x, e1) == ExteriorElement::basis(3, {0, 1}));
}

TEST_CASE("graded commutativity") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 4;
    std::size_t p = rng() % 3, q = rng() % 3;
    ExteriorElement x = random_element(rng, n, p), y = random_element(rng, n, q);
    ExteriorElement xy = wedge(x, y), yx = wedge(y, x);
    if ((p * q) % 2) {
      for (auto& [k, v] : yx.coeffs) v = -v;
    }
    CHECK(xy.coeffs == yx.coeffs);
  }
}

TEST_CASE("exterior power matrices") {
  std::mt19937_64 rng(9);
  RingMatrix a = random_small(rng, 3, 3);
  CHECK(exterior_power_matrix(a, 1) == a);

  RingMatrix b = random_small(rng, 2, 2);
  RingMatrix b2 = exterior_power_matrix(b, 2);
  CHECK(b2.rows() == 1);
  CHECK(b2.at(0, 0) == b.det());

  for (int trial = 0; trial < 20; ++trial) {
    RingMatrix x = random_small(rng, 3, 3), y = random_small(rng, 3, 3);
    for (std::size_t r = 0; r <= 3; ++r) {
      CHECK(exterior_power_matrix(x * y, r) ==
            exterior_power_matrix(x, r) * exterior_power_matrix(y, r));
      CHECK(exterior_power_matrix(RingMatrix::identity(3), r) ==
            RingMatrix::identity(binomial(3, static_cast<long>(r))));
    }
  }
}

TEST_CASE("contraction") {
  // n = 2: e0 ^ e1 is the volume form.
  Contraction c2(2, ExteriorElement::basis(2, {1}));
  CHECK(c2(ExteriorElement::basis(2, {0})) == LaurentPoly(1));
  Contraction c2b(2, ExteriorElement::basis(2, {0}));
  CHECK(c2b(ExteriorElement::basis(2, {0})) == LaurentPoly());

  ExteriorElement alpha = ExteriorElement::basis(3, {0});
  alpha.add_term({2}, LaurentPoly::t(1));
  Contraction c3(3, alpha);
  CHECK(c3(ExteriorElement::basis(3, {0, 1})) == LaurentPoly::t(1));
}

TEST_CASE("contraction agrees with the wedge definition on basis elements") {
  for (std::size_t n = 2; n <= 5; ++n) {
    IndexSet full;
    for (std::size_t i = 0; i < n; ++i) full.push_back(i);
    for (std::size_t a = 0; a < n; ++a) {
      Contraction c(n, ExteriorElement::basis(n, {a}));
      for (const auto& V : index_sets(n, n - 1)) {
        ExteriorElement v = ExteriorElement::basis(n, V);
        ExteriorElement w = wedge(v, ExteriorElement::basis(n, {a}));
        auto it = w.coeffs.find(full);
        LaurentPoly expect = it == w.coeffs.end() ? LaurentPoly() : it->second;
        CHECK(c(v) == expect);
      }
    }
  }
}

TEST_CASE("duality d_r") {
  Duality d{2, 1};
  auto f = d.apply(ExteriorElement::basis(2, {0}));
  REQUIRE(f.size() == 2);
  CHECK(f[lex_rank({1}, 2)] == LaurentPoly(1));
  CHECK(f[lex_rank({0}, 2)] == LaurentPoly());

  // d_k of the full wedge is the constant functional 1 on degree 0.
  Duality dk{3, 3};
  auto g = dk.apply(ExteriorElement::basis(3, {0, 1, 2}));
  REQUIRE(g.size() == 1);
  CHECK(g[0] == LaurentPoly(1));
}

TEST_CASE("duality round trip") {
  std::mt19937_64 rng(15);
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t r = 0; r <= n; ++r)
      for (int trial = 0; trial < 10; ++trial) {
        Duality d{n, r};
        ExteriorElement x = random_element(rng, n, r);
        CHECK(d.inverse(d.apply(x)) == x);
      }
}
