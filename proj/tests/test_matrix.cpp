#include "talex/matrix.hpp"

#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "talex/laurent.hpp"

using namespace talex;

namespace {

// Independent determinant oracle: plain cofactor expansion along row 0.
LaurentPoly cofactor_det(const RingMatrix& a) {
  std::size_t n = a.rows();
  if (n == 0) return LaurentPoly(1);
  if (n == 1) return a.at(0, 0);
  LaurentPoly out;
  std::vector<std::size_t> rows;
  for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
  for (std::size_t j = 0; j < n; ++j) {
    if (a.at(0, j).is_zero()) continue;
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) cols.push_back(k);
    LaurentPoly term = a.at(0, j) * cofactor_det(a.submatrix(rows, cols));
    out += (j % 2) ? -term : term;
  }
  return out;
}

// Entries drawn from {0, +-1, +-t, +-t^-1}.
RingMatrix random_sparse(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  RingMatrix a(n, m);
  std::uniform_int_distribution<int> pick(0, 6);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) switch (pick(rng)) {
        case 0: a.at(i, j) = LaurentPoly(1); break;
        case 1: a.at(i, j) = LaurentPoly(-1); break;
        case 2: a.at(i, j) = LaurentPoly::t(1); break;
        case 3: a.at(i, j) = -LaurentPoly::t(1); break;
        case 4: a.at(i, j) = LaurentPoly::t(-1); break;
        case 5: a.at(i, j) = -LaurentPoly::t(-1); break;
        default: break;
      }
  return a;
}

}  // namespace

TEST_CASE("det basics") {
  RingMatrix a(2, 2);
  a.at(0, 0) = LaurentPoly::t(1);
  a.at(0, 1) = LaurentPoly(1);
  a.at(1, 1) = LaurentPoly::t(-1);
  CHECK(a.det() == LaurentPoly(1));

  CHECK(RingMatrix::identity(5).det() == LaurentPoly(1));
  CHECK(RingMatrix(0, 0).det() == LaurentPoly(1));
  CHECK(RingMatrix(3, 3).det() == LaurentPoly());

  RingMatrix bad(2, 3);
  CHECK_THROWS_AS(bad.det(), std::logic_error);
}

TEST_CASE("det matches cofactor expansion") {
  std::mt19937_64 rng(23);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 40; ++trial) {
      RingMatrix a = random_sparse(rng, n, n);
      CHECK(a.det() == cofactor_det(a));
    }
}

TEST_CASE("det is multiplicative") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    RingMatrix a = random_sparse(rng, 4, 4), b = random_sparse(rng, 4, 4);
    CHECK((a * b).det() == a.det() * b.det());
  }
}

TEST_CASE("minor") {
  CHECK(RingMatrix::identity(3).minor({0, 1}, {0, 1}) == LaurentPoly(1));
  std::mt19937_64 rng(31);
  RingMatrix a = random_sparse(rng, 4, 4);
  CHECK(a.minor({0, 1, 2, 3}, {0, 1, 2, 3}) == a.det());
  CHECK(a.minor({0, 2}, {1, 3}) == cofactor_det(a.submatrix({0, 2}, {1, 3})));
}

TEST_CASE("jacobi complementary minors: adjugate entries") {
  RingMatrix a(2, 2);
  a.at(0, 0) = LaurentPoly(2);          // a
  a.at(0, 1) = LaurentPoly::t(1);       // b
  a.at(1, 0) = LaurentPoly(1);          // c
  a.at(1, 1) = LaurentPoly::t(-1);      // d
  CHECK(a.jacobi_complementary({0}, {0}) == a.at(1, 1));
  CHECK(a.jacobi_complementary({0, 1}, {0, 1}) == LaurentPoly(1));
}

TEST_CASE("jacobi complementary minors match the explicit adjugate") {
  // det(A) * (L^r A^-1)_{I,J} = det(adj(A)[I|J]) / det(A)^{r-1} with the
  // adjugate built entrywise from cofactors.
  std::mt19937_64 rng(37);
  for (std::size_t n = 3; n <= 4; ++n)
    for (int trial = 0; trial < 30; ++trial) {
      RingMatrix a = random_sparse(rng, n, n);
      LaurentPoly d = cofactor_det(a);
      if (d.is_zero()) continue;
      RingMatrix adj(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          std::vector<std::size_t> rs, cs;
          for (std::size_t k = 0; k < n; ++k) {
            if (k != j) rs.push_back(k);
            if (k != i) cs.push_back(k);
          }
          LaurentPoly m = cofactor_det(a.submatrix(rs, cs));
          adj.at(i, j) = ((i + j) % 2) ? -m : m;
        }
      for (std::size_t r = 1; r <= n; ++r) {
        auto subsets = [n, r]() {
          std::vector<std::vector<std::size_t>> out;
          std::vector<std::size_t> cur(r);
          for (std::size_t i = 0; i < r; ++i) cur[i] = i;
          while (true) {
            out.push_back(cur);
            std::size_t i = r;
            while (i > 0 && cur[i - 1] == n - r + i - 1) --i;
            if (i == 0) break;
            ++cur[i - 1];
            for (std::size_t j = i; j < r; ++j) cur[j] = cur[j - 1] + 1;
          }
          return out;
        }();
        for (const auto& I : subsets)
          for (const auto& J : subsets) {
            LaurentPoly adj_minor = cofactor_det(adj.submatrix(I, J));
            LaurentPoly dpow(1);
            for (std::size_t k = 0; k + 1 < r; ++k) dpow *= d;
            CHECK(a.jacobi_complementary(I, J) * dpow == adj_minor);
          }
      }
    }
}

TEST_CASE("exact inverse for unit determinants") {
  std::mt19937_64 rng(41);
  int done = 0;
  while (done < 20) {
    RingMatrix a = random_sparse(rng, 3, 3);
    LaurentPoly d = a.det();
    if (!d.is_unit()) continue;
    ++done;
    CHECK(a * a.inverse_unit_det() == RingMatrix::identity(3));
    CHECK(a.inverse_unit_det() * a == RingMatrix::identity(3));
  }
}
