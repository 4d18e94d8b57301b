#include <random>

#include "doctest.h"
#include "repdim/linalg.hpp"
#include "repdim/polynomial.hpp"

using namespace repdim;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, std::uint32_t p) {
  Matrix m(r, c, p);
  std::uniform_int_distribution<Elem> d(0, p - 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

Polynomial poly(std::vector<std::int64_t> c, std::uint32_t p) {
  PrimeField F(p);
  std::vector<Elem> v;
  for (auto x : c) v.push_back(F.reduce(x));
  return Polynomial(v, p);
}

}  // namespace

TEST_CASE("rref examples") {
  auto r1 = rref(Matrix::from_ints({{1, 1}, {1, 1}}, 2));
  CHECK(r1.reduced == Matrix::from_ints({{1, 1}, {0, 0}}, 2));
  CHECK(r1.rank == 1);

  auto id = Matrix::identity(3, 5);
  auto r2 = rref(id);
  CHECK(r2.reduced == id);
  CHECK(r2.rank == 3);

  auto r3 = rref(Matrix::from_ints({{2, 4}, {1, 2}}, 5));
  CHECK(r3.reduced == Matrix::from_ints({{1, 2}, {0, 0}}, 5));
  CHECK(r3.rank == 1);
  CHECK(r3.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("modulus mismatch is an error") {
  CHECK_THROWS_AS(Matrix::identity(2, 3) * Matrix::identity(2, 5), Error);
  CHECK_THROWS_AS(PrimeField(4), Error);
  CHECK_THROWS_AS(PrimeField(65537), Error);
}

TEST_CASE("kernel basis examples") {
  auto k1 = kernel_basis(Matrix::from_ints({{1, 1}}, 2));
  REQUIRE(k1.size() == 1);
  CHECK(k1[0] == Vec{1, 1});

  CHECK(kernel_basis(Matrix::from_ints({{1, 2}, {3, 4}}, 5)).empty());

  const auto m = Matrix::from_ints({{1, 2, 3}}, 5);
  auto k3 = kernel_basis(m);
  CHECK(k3.size() == 2);
  for (const auto& v : k3) CHECK(is_zero(m * v));
}

TEST_CASE("solve_affine examples") {
  auto s = solve_affine(Matrix::from_ints({{2}}, 5), Vec{1});
  REQUIRE(s);
  CHECK(s->particular == Vec{3});
  CHECK(s->kernel.empty());

  CHECK_FALSE(solve_affine(Matrix::from_ints({{0}}, 5), Vec{1}));

  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = random_matrix(rng, 6, 9, 3);
    const Matrix x = random_matrix(rng, 9, 1, 3);
    const Vec b = m * x.column(0);
    auto sol = solve_affine(m, b);
    REQUIRE(sol);
    CHECK(m * sol->particular == b);
    for (const auto& k : sol->kernel) CHECK(is_zero(m * k));
  }
}

TEST_CASE("rref and kernel properties on random matrices") {
  std::mt19937 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
      const Matrix m = random_matrix(rng, r, c, p);
      const auto once = rref(m);
      CHECK(rref(once.reduced).reduced == once.reduced);
      const auto ker = kernel_basis(m);
      CHECK(once.rank + ker.size() == c);
      CHECK(rank(m) == once.rank);

      // Absence is confirmed by the augmented rank.
      const Matrix b = random_matrix(rng, r, 1, p);
      const auto sol = solve_affine(m, b.column(0));
      const bool consistent = rank(hstack(m, b)) == once.rank;
      CHECK(sol.has_value() == consistent);
      if (sol) CHECK(m * sol->particular == b.column(0));
    }
  }
}

TEST_CASE("inverse and echelon space") {
  const Matrix m = Matrix::from_ints({{1, 2}, {3, 4}}, 7);
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(m * *inv == Matrix::identity(2, 7));
  CHECK_FALSE(inverse(Matrix::from_ints({{1, 2}, {2, 4}}, 7)));

  EchelonSpace s(3, 3);
  CHECK(s.insert(Vec{1, 2, 0}));
  CHECK(s.insert(Vec{0, 1, 1}));
  CHECK_FALSE(s.insert(Vec{1, 0, 1}));  // (1,2,0) + (0,1,1) = (1,0,1) mod 3
  CHECK(s.contains(Vec{2, 1, 0}));
  CHECK(s.complement_indices().size() == 1);

  auto inter = subspace_intersection({Vec{1, 0, 0}, Vec{0, 1, 0}}, {Vec{0, 1, 0}, Vec{0, 0, 1}}, 3, 2);
  REQUIRE(inter.size() == 1);
  CHECK(inter[0] == Vec{0, 1, 0});
}

TEST_CASE("factor_poly examples") {
  // x^2 + x over GF(2) = x (x + 1)
  auto f1 = factor_poly(poly({0, 1, 1}, 2));
  REQUIRE(f1.size() == 2);
  CHECK(f1[0].factor == poly({0, 1}, 2));
  CHECK(f1[1].factor == poly({1, 1}, 2));
  CHECK(f1[0].multiplicity == 1);

  // x^2 + 1 over GF(2) = (x + 1)^2
  auto f2 = factor_poly(poly({1, 0, 1}, 2));
  REQUIRE(f2.size() == 1);
  CHECK(f2[0].factor == poly({1, 1}, 2));
  CHECK(f2[0].multiplicity == 2);

  // x^3 - 1 over GF(3) = (x - 1)^3
  auto f3 = factor_poly(poly({-1, 0, 0, 1}, 3));
  REQUIRE(f3.size() == 1);
  CHECK(f3[0].factor == poly({-1, 1}, 3));
  CHECK(f3[0].multiplicity == 3);

  CHECK_THROWS_AS(factor_poly(Polynomial({}, 5)), Error);
}

TEST_CASE("factor_poly reproduces random inputs with irreducible factors") {
  std::mt19937 rng(3);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (int trial = 0; trial < 30; ++trial) {
      // Products of random pieces force repeated factors and p-th powers.
      Polynomial f = Polynomial::constant(1, p);
      const int pieces = 1 + static_cast<int>(rng() % 3);
      for (int k = 0; k < pieces; ++k) {
        std::vector<Elem> c(1 + rng() % 4);
        for (auto& x : c) x = rng() % p;
        c.push_back(1);
        Polynomial g(c, p);
        f = f * pow(g, 1 + rng() % 3);
      }
      const auto fac = factor_poly(f);
      Polynomial prod = Polynomial::constant(1, p);
      for (const auto& [g, m] : fac) {
        CHECK(is_irreducible(g));
        prod = prod * pow(g, m);
      }
      CHECK(prod == f.monic());
    }
  }
}

TEST_CASE("characteristic polynomial") {
  // Cayley-Hamilton
  std::mt19937 rng(5);
  for (std::uint32_t p : {2u, 3u, 7u}) {
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t n = 1 + rng() % 6;
      const Matrix m = random_matrix(rng, n, n, p);
      const Polynomial chi = characteristic_polynomial(m);
      CHECK(chi.degree() == static_cast<int>(n));
      CHECK(chi.lead() == 1);
      CHECK(evaluate(chi, m).is_zero());
    }
  }
  // det relation on a fixed example: [[1,2],[3,4]] mod 7 has chi = x^2 - 5x - 2
  CHECK(characteristic_polynomial(Matrix::from_ints({{1, 2}, {3, 4}}, 7)) == poly({-2, -5, 1}, 7));
}
