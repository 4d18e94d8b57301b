#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "repdim/algebra.hpp"
#include "repdim/groups.hpp"

using namespace repdim;

TEST_CASE("validate accepts gallery algebras and names a failing triple") {
  for (std::uint32_t p : {2u, 3u}) {
    CHECK(validate(matrix_algebra(2, p)).ok);
    CHECK(validate(centrosymmetric_algebra(3, p)).ok);
    CHECK(validate(group_algebra(symmetric_group(3), p)).ok);
    CHECK(validate(ground_field(p)).ok);
  }
  Algebra m = matrix_algebra(2, 3);
  auto t = m.table();
  // Perturb E_00 E_01 = E_01 into 2 E_01.
  t[(0 * 4 + 1) * 4 + 1] = 2;
  Algebra bad(3, 4, t, m.unit());
  auto r = validate(bad);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.message.empty());
}

TEST_CASE("opposite and tensor product") {
  Algebra m = matrix_algebra(2, 2);
  Algebra op = opposite(m);
  CHECK(validate(op).ok);
  CHECK(op.coeff(0, 1, 1) == m.coeff(1, 0, 1));
  CHECK(opposite(op).same_table(m));

  Algebra k = group_algebra(cyclic_group(2), 2);
  Algebra t = tensor_product(k, m);
  CHECK(t.dim() == 8);
  CHECK(validate(t).ok);
  // (g (x) E_01)(g (x) E_10) = 1 (x) E_00
  const Vec x = t.basis_element(1 * 4 + 1), y = t.basis_element(1 * 4 + 2);
  CHECK(t.multiply(x, y) == t.basis_element(0 * 4 + 0));
  CHECK(t.generators().size() <= 4);
}

TEST_CASE("radical of small group algebras") {
  Algebra c2 = group_algebra(cyclic_group(2), 2);
  Ideal r = radical(c2);
  REQUIRE(r.dim() == 1);
  CHECK(r.basis[0] == Vec{1, 1});
  CHECK(radical(group_algebra(cyclic_group(2), 5)).dim() == 0);

  auto pv = profile(group_algebra(klein_four(), 2));
  CHECK(pv.radical_dims == std::vector<std::size_t>{4, 3, 1, 0});
  CHECK(pv.loewy_length == 3);
  auto pc = profile(group_algebra(cyclic_group(4), 2));
  CHECK(pc.loewy_length == 4);
  CHECK(profile(matrix_algebra(3, 5)).semisimple);
  // S3 over GF(3): blocks of dims 3 and 3, radical dimension 4.
  CHECK(radical(group_algebra(symmetric_group(3), 3)).dim() == 4);
  CHECK(radical(group_algebra(symmetric_group(3), 2)).dim() == 1);
}

TEST_CASE("radical agrees with the nilpotent-ideal oracle on random algebras") {
  std::mt19937 rng(17);
  int checked = 0;
  for (std::uint32_t p : {2u, 3u}) {
    for (int trial = 0; trial < 30; ++trial) {
      Algebra a = oracle::random_matrix_subalgebra(rng, p, 3, 5);
      if (p == 3 && a.dim() > 5) continue;
      REQUIRE(validate(a).ok);
      CHECK(radical(a) == make_ideal(a, oracle::brute_force_radical(a)));
      ++checked;
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("ideal closure, quotients and the centrosymmetric gallery") {
  Algebra c4 = group_algebra(cyclic_group(4), 2);
  Ideal rad = radical(c4);
  CHECK(rad.dim() == 3);
  CHECK(is_ideal(c4, rad.basis));
  auto q = quotient_algebra(c4, rad);
  CHECK(q.algebra.dim() == 1);
  CHECK(validate(q.algebra).ok);

  Ideal cl = ideal_closure(c4, {rad.basis[0]});
  CHECK(is_ideal(c4, cl.basis));
  CHECK(cl.dim() <= 3);

  auto pw = radical_powers(c4);
  REQUIRE(pw.size() == 5);
  CHECK(pw[4].dim() == 0);
  CHECK(ideal_product(c4, pw[1], pw[2]) == pw[3]);

  CHECK(centrosymmetric_algebra(2, 3).dim() == 2);
  CHECK(centrosymmetric_algebra(3, 3).dim() == 5);
  CHECK(centrosymmetric_algebra(4, 3).dim() == 8);
  CHECK(radical(centrosymmetric_algebra(3, 3)).dim() == 0);
  CHECK(radical(centrosymmetric_algebra(3, 2)).dim() > 0);
}

TEST_CASE("trivial quotient is rejected") {
  Algebra k = ground_field(3);
  CHECK_THROWS_AS(quotient_algebra(k, make_ideal(k, {Vec{1}})), Error);
}

TEST_CASE("named gallery algebras") {
  CHECK(gallery_algebra("matrix(2)", 2).dim() == 4);
  CHECK(gallery_algebra("centrosymmetric(3)", 2).dim() == 5);
  CHECK(gallery_algebra("group(klein4)", 2).dim() == 4);
  CHECK(gallery_algebra("group(cyclic2 x cyclic2)", 3).dim() == 4);
  CHECK_THROWS_AS(gallery_algebra("matrix", 2), Error);
  CHECK_THROWS_AS(gallery_algebra("upper(3)", 2), Error);
}
