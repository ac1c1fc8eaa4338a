#include "talex/laurent.hpp"

#include <random>

#include "catch2/catch_amalgamated.hpp"

using namespace talex;

namespace {

LaurentPoly t(std::int64_t e) { return LaurentPoly::t(e); }

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<std::int64_t> lo(-3, 3);
  std::uniform_int_distribution<int> len(0, 4);
  LaurentPoly p;
  std::int64_t base = lo(rng);
  int n = len(rng);
  for (int k = 0; k <= n; ++k) p += LaurentPoly::term(coeff(rng), base + k);
  return p;
}

}  // namespace

TEST_CASE("addition") {
  CHECK(t(1) + LaurentPoly(1) + (t(-1) - LaurentPoly(1)) == t(1) + t(-1));
  LaurentPoly p = LaurentPoly::term(5, 2) - t(0);
  CHECK(p + LaurentPoly() == p);
  CHECK((t(1) - LaurentPoly(1)) + (LaurentPoly(1) - t(1)) == LaurentPoly());
  CHECK((t(1) - LaurentPoly(1)) + (LaurentPoly(1) - t(1)) == LaurentPoly(0));
}

TEST_CASE("multiplication") {
  LaurentPoly lhs = (t(1) - LaurentPoly(1)) * (t(-1) - LaurentPoly(1));
  CHECK(lhs == LaurentPoly(2) - t(1) - t(-1));
  LaurentPoly p = LaurentPoly::term(-2, -1) + LaurentPoly(3) - t(2);
  CHECK(p * LaurentPoly(1) == p);
  CHECK(p * LaurentPoly() == LaurentPoly());
}

TEST_CASE("normalize forces min exponent 0 and positive constant term") {
  auto [c1, u1] = (t(3) - t(2)).normalize();
  CHECK(c1 == LaurentPoly(1) - t(1));
  CHECK(u1 == Unit{-1, 2});

  auto [c2, u2] = LaurentPoly(1).normalize();
  CHECK(c2 == LaurentPoly(1));
  CHECK(u2 == Unit{1, 0});

  auto [c3, u3] = (-t(-1) + LaurentPoly(1) - t(1)).normalize();
  CHECK(c3 == LaurentPoly(1) - t(1) + t(2));
  CHECK(u3 == Unit{-1, -1});

  CHECK(LaurentPoly().normalize().first == LaurentPoly());
  CHECK(LaurentPoly().normalize().second == Unit{1, 0});
}

TEST_CASE("eq_up_to_unit") {
  CHECK(eq_up_to_unit(t(2) - t(1) + LaurentPoly(1), t(1) - LaurentPoly(1) + t(-1)));
  CHECK(eq_up_to_unit(t(1) - LaurentPoly(1), LaurentPoly(1) - t(1)));
  CHECK_FALSE(eq_up_to_unit(t(1) - LaurentPoly(1), t(1) + LaurentPoly(1)));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("normalize is idempotent and compatible with the unit action") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly p = random_poly(rng);
    auto [canon, u] = p.normalize();
    CHECK(u * canon == p);
    CHECK(canon.normalize().second == Unit{1, 0});
    CHECK(canon.normalize().first == canon);

    Unit v{(trial & 1) ? -1 : 1, static_cast<std::int64_t>(trial % 5) - 2};
    CHECK(eq_up_to_unit(p, v * p));
  }
}

TEST_CASE("eq_up_to_unit is an equivalence relation") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(eq_up_to_unit(a, a));
    if (eq_up_to_unit(a, b)) CHECK(eq_up_to_unit(b, a));
    if (eq_up_to_unit(a, b) && eq_up_to_unit(b, c)) CHECK(eq_up_to_unit(a, c));
  }
}

TEST_CASE("divexact") {
  LaurentPoly p = (t(2) - t(1) + LaurentPoly(1)) * (LaurentPoly(3) * t(-2) + t(1));
  CHECK(divexact(p, t(2) - t(1) + LaurentPoly(1)) == LaurentPoly(3) * t(-2) + t(1));
  CHECK(divexact(p, LaurentPoly(3) * t(-2) + t(1)) == t(2) - t(1) + LaurentPoly(1));
  CHECK(divexact(LaurentPoly(), p) == LaurentPoly());
  CHECK_THROWS_AS(divexact(t(1) + LaurentPoly(1), t(1) - LaurentPoly(1)), std::logic_error);
  CHECK_THROWS_AS(divexact(p, LaurentPoly()), std::logic_error);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng);
    if (b.is_zero()) continue;
    CHECK(divexact(a * b, b) == a);
  }
}

TEST_CASE("units") {
  CHECK((-t(3)).is_unit());
  CHECK_FALSE((t(1) + LaurentPoly(1)).is_unit());
  CHECK((-t(3)).as_unit() == Unit{-1, 3});
  CHECK(LaurentPoly::from_unit(Unit{-1, 3}) == -t(3));
  CHECK((Unit{-1, 2} * Unit{-1, -2}) == Unit{1, 0});
}

TEST_CASE("coefficients are arbitrary precision") {
  // (1 + t)^128 has a central coefficient far beyond 64 bits.
  LaurentPoly p = LaurentPoly(1) + t(1);
  LaurentPoly pow(1);
  for (int i = 0; i < 128; ++i) pow *= p;
  Int expect = 1;
  for (int i = 0; i < 128; ++i) expect *= 2;
  Int total = 0;
  for (std::int64_t e = 0; e <= 128; ++e) total += pow.coeff(e);
  CHECK(total == expect);
  CHECK(pow.coeff(64) > Int("170000000000000000000000000000000000"));
  CHECK(divexact(pow, p * p) * p * p == pow);
}

TEST_CASE("rendering") {
  LaurentPoly p = LaurentPoly::term(-2, -1) + LaurentPoly(3) - t(2);
  CHECK(p.to_string() == "-2*t^-1 + 3 - t^2");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK((LaurentPoly(1) - t(1) + t(2)).to_string() == "1 - t + t^2");
}
