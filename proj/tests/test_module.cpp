#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "repdim/groups.hpp"
#include "repdim/module.hpp"

using namespace repdim;

namespace {

// One-dimensional module of a group algebra with every generator acting by `value`.
Module character(const Algebra& kg, Elem value) {
  std::vector<Matrix> gens(kg.generators().size(), Matrix(1, 1, kg.p(), {value}));
  return Module(kg, 1, std::move(gens));
}

void check_sound(const Module& m) {
  const Decomposition& d = m.decomposition();
  const std::uint32_t p = m.p();
  const auto idem = d.idempotents();
  Matrix sum(m.dim(), m.dim(), p);
  for (std::size_t i = 0; i < idem.size(); ++i) {
    CHECK(is_homomorphism(m.rep(), m.rep(), idem[i]));
    for (std::size_t j = 0; j < idem.size(); ++j)
      CHECK((idem[i] * idem[j]).is_zero() == (i != j));
    sum = sum + idem[i];
  }
  CHECK(sum == Matrix::identity(m.dim(), p));
  std::size_t total = 0;
  for (const auto& s : d.summands) {
    total += s.multiplicity * s.module.dim();
    const EndAlgebra e = end_algebra(s.module);
    if (e.algebra.dim() <= 8 && p <= 3) CHECK(oracle::is_local_by_enumeration(e.algebra));
    for (std::size_t c = 0; c < s.multiplicity; ++c) {
      const Representation piece = restrict_rep(m.rep(), s.inclusions[c], s.projections[c]);
      CHECK(is_homomorphism(piece, s.module.rep(), s.to_representative[c]));
      CHECK(is_invertible(s.to_representative[c]));
    }
  }
  CHECK(total == m.dim());
}

}  // namespace

TEST_CASE("regular modules and their decompositions") {
  Algebra c2 = group_algebra(cyclic_group(2), 2);
  Module reg = regular_module(c2, Side::Left);
  CHECK(validate(reg).ok);
  CHECK(is_indecomposable(reg));
  CHECK(reg.act(c2.unit()) == Matrix::identity(2, 2));

  Module m2 = regular_module(matrix_algebra(2, 2), Side::Left);
  const auto& d = m2.decomposition();
  REQUIRE(d.summands.size() == 1);
  CHECK(d.summands[0].multiplicity == 2);
  CHECK(d.summands[0].module.dim() == 2);
  check_sound(m2);

  Algebra c2p5 = group_algebra(cyclic_group(2), 5);
  Module reg5 = regular_module(c2p5, Side::Left);
  const auto& d5 = reg5.decomposition();
  REQUIRE(d5.summands.size() == 2);
  CHECK(d5.summands[0].module.dim() == 1);
  CHECK(d5.summands[1].module.dim() == 1);

  Module k = character(c2, 1);
  Module mixed = direct_sum({k, k, reg}, c2);
  const auto& dm = mixed.decomposition();
  REQUIRE(dm.summands.size() == 2);
  for (const auto& s : dm.summands) CHECK(s.multiplicity == (s.module.dim() == 1 ? 2u : 1u));
  check_sound(mixed);
}

TEST_CASE("duality") {
  Algebra c2 = group_algebra(cyclic_group(2), 2);
  Module k = character(c2, 1);
  CHECK(dual_module(k).dim() == 1);
  Module right = regular_module(c2, Side::Right);
  Module dr = dual_module(right);
  CHECK(same_algebra(dr.algebra(), c2));
  Module left = regular_module(c2, Side::Left);
  Module drm(c2, dr.dim(), dr.generator_action());
  auto iso = is_isomorphic(drm, left);
  REQUIRE(iso);
  CHECK(is_homomorphism(drm.rep(), left.rep(), *iso));

  Module dd = dual_module(dual_module(left));
  Module ddm(c2, dd.dim(), dd.generator_action());
  CHECK(is_isomorphic(ddm, left));
}

TEST_CASE("Hom and End examples") {
  Algebra c2 = group_algebra(cyclic_group(2), 2);
  Module k = character(c2, 1);
  Module reg = regular_module(c2, Side::Left);
  CHECK(hom_space(k, k).size() == 1);
  CHECK(hom_space(reg, k).size() == 1);
  Algebra c2p5 = group_algebra(cyclic_group(2), 5);
  CHECK(hom_space(character(c2p5, 1), character(c2p5, 4)).empty());

  EndAlgebra e = end_algebra(reg);
  CHECK(e.algebra.dim() == 2);
  CHECK(e.algebra.is_commutative());
  CHECK(validate(e.algebra).ok);
  EndAlgebra e2 = end_algebra(direct_sum(reg, k));
  CHECK(e2.algebra.dim() == 5);
  CHECK(validate(e2.algebra).ok);
  CHECK(end_algebra(k).algebra.dim() == 1);

  // End of the regular module is A^op.
  Algebra m2 = matrix_algebra(2, 3);
  EndAlgebra em = end_algebra(regular_module(m2, Side::Left));
  CHECK(em.algebra.dim() == 4);
  CHECK(radical(em.algebra).dim() == 0);
}

TEST_CASE("isomorphism and add membership") {
  Algebra c2 = group_algebra(cyclic_group(2), 2);
  Module k = character(c2, 1);
  Module reg = regular_module(c2, Side::Left);
  auto self = is_isomorphic(reg, reg);
  REQUIRE(self);
  CHECK(is_invertible(*self));
  Algebra c2p5 = group_algebra(cyclic_group(2), 5);
  CHECK_FALSE(is_isomorphic(character(c2p5, 1), character(c2p5, 4)));

  CHECK(is_in_add(reg, direct_sum(reg, k)).member);
  CHECK_FALSE(is_in_add(k, reg).member);
  CHECK_FALSE(is_in_add(reg, k).member);
  CHECK_FALSE(factors_through_add(k.rep(), reg.rep()));
  CHECK_FALSE(factors_through_add(reg.rep(), k.rep()));
  CHECK(factors_through_add(reg.rep(), direct_sum(k, reg).rep()));
}

TEST_CASE("submodules and quotients") {
  Algebra c4 = group_algebra(cyclic_group(4), 2);
  Module reg = regular_module(c4, Side::Left);
  Ideal rad = radical(c4);
  auto sub = submodule(reg, rad.basis);
  CHECK(sub.module.dim() == 3);
  CHECK(validate(sub.module).ok);
  auto q = top(reg, rad);
  CHECK(q.module.dim() == 1);
  CHECK(validate(q.module).ok);
  CHECK(is_homomorphism(reg.rep(), q.module.rep(), q.projection));
  CHECK(is_homomorphism(sub.module.rep(), reg.rep(), sub.inclusion));
  CHECK_THROWS_AS(submodule(reg, {unit_vector(4, 1)}), Error);
  auto gen = submodule_generated(reg, {rad.basis[0]});
  CHECK(gen.module.dim() <= 3);
}

TEST_CASE("decomposition properties on random modules") {
  std::mt19937 rng(23);
  int checked = 0;
  for (std::uint32_t p : {2u, 3u}) {
    for (int trial = 0; trial < 12; ++trial) {
      auto ma = oracle::random_matrix_algebra(rng, p, 3, 6);
      const Algebra& a = ma.algebra;
      Module nat = Module::from_basis_action(a, ma.basis);
      REQUIRE(validate(nat).ok);
      Module reg = regular_module(a, Side::Left);
      Module m = direct_sum(nat, reg);
      check_sound(m);
      // Doubling doubles every multiplicity.
      const auto& d1 = m.decomposition();
      Module mm = direct_sum(m, m);
      const auto& d2 = mm.decomposition();
      REQUIRE(d1.summands.size() == d2.summands.size());
      for (std::size_t i = 0; i < d1.summands.size(); ++i) {
        bool hit = false;
        for (const auto& s : d2.summands)
          if (indecomposable_iso(s.module.rep(), d1.summands[i].module.rep()))
            hit = hit || s.multiplicity == 2 * d1.summands[i].multiplicity;
        CHECK(hit);
      }
      // Hom dimensions are preserved by duality.
      Module dn = dual_module(nat), dr = dual_module(reg);
      CHECK(hom_space(nat, reg).size() == hom_space(dr, dn).size());
      CHECK(hom_space(reg, nat).size() == hom_space(dn, dr).size());
      // add membership agrees with the composition criterion.
      CHECK(is_in_add(nat, reg).member == factors_through_add(nat.rep(), reg.rep()));
      CHECK(is_in_add(reg, m).member);
      ++checked;
    }
  }
  CHECK(checked == 24);
}
