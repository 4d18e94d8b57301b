#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "repdim/groups.hpp"
#include "repdim/projective.hpp"

using namespace repdim;

namespace {

Module trivial(const Algebra& kg) {
  std::vector<Matrix> gens(kg.generators().size(), Matrix(1, 1, kg.p(), {1}));
  return Module(kg, 1, std::move(gens));
}

}  // namespace

TEST_CASE("syzygies over k[C2]") {
  Algebra c2 = group_algebra(cyclic_group(2), 2);
  const ProjectiveSystem ps = projective_system(c2);
  REQUIRE(ps.projectives.size() == 1);
  CHECK(ps.projectives[0].dim() == 2);
  CHECK(ps.simples[0].dim() == 1);
  Module k = trivial(c2);
  const ProjectiveCover cov = projective_cover(ps, k);
  CHECK(cov.projective.dim() == 2);
  CHECK(is_isomorphic(cov.kernel.module, k));
  const Dimension pd = projective_dimension(ps, k, 12);
  CHECK(pd.kind == DimKind::Infinite);
  REQUIRE(pd.repetition);
  CHECK(*pd.repetition == std::make_pair(std::size_t{0}, std::size_t{1}));
  CHECK_FALSE(pd.by_summand_types);
  CHECK(to_string(pd) == "infinite");
  CHECK(projective_dimension(ps, regular_module(c2, Side::Left), 12) == Dimension{});
  CHECK(global_dimension(c2, 12).kind == DimKind::Infinite);
}

TEST_CASE("semisimple algebras have global dimension 0") {
  CHECK(global_dimension(group_algebra(symmetric_group(3), 5), 12) == Dimension{});
  CHECK(global_dimension(group_algebra(cyclic_group(3), 2), 12) == Dimension{});
  CHECK(global_dimension(matrix_algebra(2, 3), 12) == Dimension{});
}

TEST_CASE("End(A + k) over k[C2] has global dimension 2") {
  Algebra c2 = group_algebra(cyclic_group(2), 2);
  const EndAlgebra e = end_algebra(direct_sum(regular_module(c2, Side::Left), trivial(c2)));
  const Dimension g = global_dimension(e.algebra, 12);
  CHECK(g.kind == DimKind::Exact);
  CHECK(g.value == 2);
  CHECK(oracle::gldim_by_ext(e.algebra, 6) == std::optional<std::size_t>(2));
}

TEST_CASE("module action through words on a non-commutative algebra") {
  Algebra m2 = matrix_algebra(2, 3);
  Module reg = regular_module(m2, Side::Left);
  for (std::size_t i = 0; i < m2.dim(); ++i) CHECK(reg.act(m2.basis_element(i)) == m2.left_basis_matrix(i));
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Algebra u = oracle::random_matrix_subalgebra(rng, 3, 3, 6);
    Module ru = regular_module(u, Side::Left);
    for (std::size_t i = 0; i < u.dim(); ++i) CHECK(ru.act(u.basis_element(i)) == u.left_basis_matrix(i));
  }
}

TEST_CASE("unknown beyond the cap") {
  Algebra c2 = group_algebra(cyclic_group(2), 2);
  CHECK_THROWS_AS(projective_dimension(trivial(c2), kMaxResolutionLength + 1), Error);
  CHECK(combine_max({DimKind::Unknown, 3, {}, false}, {DimKind::Exact, 7, {}, false}).kind == DimKind::Unknown);
  CHECK(combine_max({DimKind::Unknown, 3, {}, false}, {DimKind::Infinite, 0, {}, false}).kind == DimKind::Infinite);
}

TEST_CASE("pd and gldim agree with the Ext oracle on random algebras") {
  std::mt19937 rng(71);
  int checked = 0;
  for (std::uint32_t p : {2u, 3u}) {
    for (int trial = 0; trial < 15; ++trial) {
      auto ma = oracle::random_matrix_algebra(rng, p, 3, 5);
      const Algebra& a = ma.algebra;
      const ProjectiveSystem ps = projective_system(a);
      Module nat = Module::from_basis_action(a, ma.basis);
      const Dimension pd = projective_dimension(ps, nat, 12);
      const auto pd_ext = oracle::pd_by_ext(nat, 6);
      if (pd.kind == DimKind::Exact) {
        CHECK(pd_ext == std::optional<std::size_t>(pd.value));
      } else {
        CHECK(pd.kind == DimKind::Infinite);
        CHECK_FALSE(pd_ext);
      }
      const Dimension gd = global_dimension(a, 12);
      const auto gd_ext = oracle::gldim_by_ext(a, 6);
      if (gd.kind == DimKind::Exact) {
        CHECK(gd_ext == std::optional<std::size_t>(gd.value));
      } else {
        CHECK(gd.kind == DimKind::Infinite);
        CHECK_FALSE(gd_ext);
      }
      CHECK(oracle::hom_dimension_by_kernel(nat, nat) == hom_space(nat, nat).size());
      ++checked;
    }
  }
  CHECK(checked == 30);
}
