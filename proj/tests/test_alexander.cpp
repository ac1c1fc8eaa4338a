#include "talex/alexander.hpp"

#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "talex/laurent.hpp"
#include "talex/matrix.hpp"

using namespace talex;

namespace {

std::vector<LaurentPoly> basis_col(std::size_t n, std::size_t i) {
  std::vector<LaurentPoly> c(n);
  c[i] = LaurentPoly(1);
  return c;
}

LaurentPoly rp(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  return LaurentPoly::term(d(rng), d(rng));
}

}  // namespace

TEST_CASE("free module: the Alexander function is the volume form") {
  Presentation pres{RingMatrix(3, 0)};
  CHECK(alexander_function(pres, {basis_col(3, 0), basis_col(3, 1), basis_col(3, 2)}) ==
        LaurentPoly(1));
  // Swapping two u-columns flips the sign.
  CHECK(alexander_function(pres, {basis_col(3, 1), basis_col(3, 0), basis_col(3, 2)}) ==
        LaurentPoly(-1));
}

TEST_CASE("single relator, zero deficiency") {
  RingMatrix m(1, 1);
  m.at(0, 0) = LaurentPoly::t(1) - LaurentPoly(1);
  Presentation pres{m};
  CHECK(pres.deficiency() == 0);
  CHECK(alexander_function(pres, {}) == LaurentPoly::t(1) - LaurentPoly(1));
}

TEST_CASE("rank excess makes the function vanish") {
  // R^2 presented with a zero relator presents a rank-2 module; with k = 1
  // the function must be identically zero.
  Presentation pres{RingMatrix(2, 1)};
  CHECK(pres.deficiency() == 1);
  CHECK(alexander_function(pres, {basis_col(2, 0)}) == LaurentPoly());
  CHECK(alexander_function(pres, {basis_col(2, 1)}) == LaurentPoly());
}

TEST_CASE("u-column count is checked") {
  Presentation pres{RingMatrix(2, 1)};
  CHECK_THROWS_AS(alexander_function(pres, {}), std::logic_error);
  CHECK_THROWS_AS(alexander_function(pres, {basis_col(2, 0), basis_col(2, 1)}),
                  std::logic_error);
}

TEST_CASE("multilinear and alternating in the u-columns") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    RingMatrix m(4, 2);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 2; ++j) m.at(i, j) = rp(rng);
    Presentation pres{m};
    std::vector<LaurentPoly> u(4), v(4), w(4);
    for (std::size_t i = 0; i < 4; ++i) {
      u[i] = rp(rng);
      v[i] = rp(rng);
      w[i] = rp(rng);
    }
    LaurentPoly s = rp(rng);

    std::vector<LaurentPoly> su_plus_v(4);
    for (std::size_t i = 0; i < 4; ++i) su_plus_v[i] = s * u[i] + v[i];
    CHECK(alexander_function(pres, {su_plus_v, w}) ==
          s * alexander_function(pres, {u, w}) + alexander_function(pres, {v, w}));
    CHECK(alexander_function(pres, {u, u}) == LaurentPoly());
    CHECK(alexander_function(pres, {u, v}) == -alexander_function(pres, {v, u}));
  }
}

TEST_CASE("elementary expansion changes the function by a unit only") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    RingMatrix m(3, 1);
    for (std::size_t i = 0; i < 3; ++i) m.at(i, 0) = rp(rng);
    Presentation pres{m};

    // Add one generator and one relator expressing it in the old ones.
    RingMatrix big(4, 2);
    for (std::size_t i = 0; i < 3; ++i) big.at(i, 0) = m.at(i, 0);
    for (std::size_t i = 0; i < 3; ++i) big.at(i, 1) = rp(rng);
    big.at(3, 1) = LaurentPoly(1);
    Presentation expanded{big};

    auto lift = [](std::vector<LaurentPoly> c) {
      c.push_back(LaurentPoly());
      return c;
    };
    std::vector<LaurentPoly> u(3), v(3);
    for (std::size_t i = 0; i < 3; ++i) {
      u[i] = rp(rng);
      v[i] = rp(rng);
    }
    LaurentPoly small_uv = alexander_function(pres, {u, v});
    LaurentPoly big_uv = alexander_function(expanded, {lift(u), lift(v)});
    // The two functions agree up to one unit, consistently across inputs.
    std::vector<LaurentPoly> a(3), b(3);
    for (std::size_t i = 0; i < 3; ++i) {
      a[i] = rp(rng);
      b[i] = rp(rng);
    }
    LaurentPoly small_ab = alexander_function(pres, {a, b});
    LaurentPoly big_ab = alexander_function(expanded, {lift(a), lift(b)});
    CHECK(small_uv * big_ab == small_ab * big_uv);
    if (!small_uv.is_zero()) CHECK(eq_up_to_unit(small_uv, big_uv));
  }
}

TEST_CASE("graded map compose and identity") {
  GradedMap id2 = GradedMap::identity(2);
  GradedMap f = GradedMap::make(2, 2, 0);
  std::mt19937_64 rng(7);
  for (std::size_t i = 0; i <= 2; ++i)
    for (std::size_t r = 0; r < f.blocks[i].rows(); ++r)
      for (std::size_t c = 0; c < f.blocks[i].cols(); ++c) f.blocks[i].at(r, c) = rp(rng);
  CHECK(graded_map_eq(graded_map_compose(id2, f), f));
  CHECK(graded_map_eq(graded_map_compose(f, id2), f));

  // Rank-0 maps are multiplications and compose like ring elements.
  GradedMap mp = GradedMap::make(0, 0, 0), mq = GradedMap::make(0, 0, 0);
  mp.blocks[0].at(0, 0) = LaurentPoly::t(1) - LaurentPoly(1);
  mq.blocks[0].at(0, 0) = LaurentPoly::t(-2) + LaurentPoly(3);
  GradedMap prod = graded_map_compose(mp, mq);
  CHECK(prod.blocks[0].at(0, 0) == mp.blocks[0].at(0, 0) * mq.blocks[0].at(0, 0));
}

TEST_CASE("graded map equality is unit-wide, one unit for all degrees") {
  std::mt19937_64 rng(11);
  GradedMap f = GradedMap::make(2, 2, 0);
  for (std::size_t i = 0; i <= 2; ++i)
    for (std::size_t r = 0; r < f.blocks[i].rows(); ++r)
      for (std::size_t c = 0; c < f.blocks[i].cols(); ++c) f.blocks[i].at(r, c) = rp(rng);

  GradedMap g = f;
  for (auto& b : g.blocks) b = Unit{-1, 3} * b;
  CHECK(graded_map_eq(f, g));

  // Negating a single degree breaks equality when other degrees are nonzero.
  GradedMap h = f;
  h.blocks[1] = Unit{-1, 0} * h.blocks[1];
  bool deg0_nonzero = !h.blocks[0].is_zero();
  bool deg1_nonzero = !h.blocks[1].is_zero();
  if (deg0_nonzero && deg1_nonzero) CHECK_FALSE(graded_map_eq(f, h));
}

TEST_CASE("normalize_units pins the first nonzero entry") {
  GradedMap f = GradedMap::make(1, 1, 0);
  f.blocks[0].at(0, 0) = -LaurentPoly::t(2) + LaurentPoly::t(3);
  f.blocks[1].at(0, 0) = LaurentPoly::t(5);
  f.normalize_units();
  CHECK(f.blocks[0].at(0, 0) == LaurentPoly(1) - LaurentPoly::t(1));
  CHECK(f.blocks[1].at(0, 0) == -LaurentPoly::t(3));
  GradedMap z = GradedMap::make(1, 1, 0);
  z.normalize_units();
  CHECK(z.is_zero());
}
