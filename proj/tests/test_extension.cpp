#include "doctest.h"
#include "repdim/extension.hpp"
#include "repdim/groups.hpp"
#include "repdim/projective.hpp"

using namespace repdim;

namespace {

Subgroup subgroup_of(const FiniteGroup& g, const std::vector<std::string>& cycles, std::size_t degree) {
  std::vector<std::uint32_t> elems;
  for (const auto& c : cycles) elems.push_back(find_permutation(g, parse_cycles(c, degree)));
  return subgroup_generated(g, elems);
}

Extension ground_in(const Algebra& a) {
  return make_extension(ground_field(a.p()), a, Matrix::from_columns({a.unit()}, a.dim(), a.p()));
}

Extension identity_extension(const Algebra& a) { return make_extension(a, a, Matrix::identity(a.dim(), a.p())); }

Extension s3_c2(std::uint32_t p) {
  const FiniteGroup s3 = symmetric_group(3);
  return group_extension(s3, subgroup_of(s3, {"(1 2)"}, 3), p).ext;
}

Module trivial(const Algebra& kg) {
  return Module(kg, 1, std::vector<Matrix>(kg.generators().size(), Matrix(1, 1, kg.p(), {1})));
}

}  // namespace

TEST_CASE("make_extension") {
  const Algebra c2 = group_algebra(cyclic_group(2), 2);
  CHECK(validate(identity_extension(c2)).ok);
  CHECK(validate(ground_in(c2)).ok);
  const Algebra m2 = matrix_algebra(2, 2);
  CHECK_THROWS_AS(make_extension(ground_field(2), m2, Matrix::from_columns({unit_vector(4, 0)}, 4, 2)), Error);
  const Extension bad{ground_field(2), m2, Matrix::from_columns({unit_vector(4, 0)}, 4, 2)};
  CHECK(validate(bad).message == "embed(1_B) != 1_A");
}

TEST_CASE("bimodule views") {
  const Algebra c2 = group_algebra(cyclic_group(2), 2);
  CHECK(bimodule_views(identity_extension(c2)).tensor.dim() == 2);
  CHECK(bimodule_views(ground_in(c2)).tensor.dim() == 4);
  const BimoduleViews v = bimodule_views(s3_c2(2));
  CHECK(v.tensor.dim() == 18);
  CHECK(validate(v.bab).ok);
  CHECK(validate(v.aab).ok);
  CHECK(validate(v.baa).ok);
  CHECK(validate(v.tensor).ok);
}

TEST_CASE("split") {
  const Algebra c2 = group_algebra(cyclic_group(2), 2);
  for (const auto& ext : {identity_extension(c2), ground_in(c2), s3_c2(2)}) {
    const auto cert = check_split(ext);
    REQUIRE(cert);
    CHECK(verify_split(ext, *cert).ok);
  }
  auto cert = *check_split(s3_c2(2));
  cert.retraction(0, 0) ^= 1;
  CHECK_FALSE(verify_split(s3_c2(2), cert).ok);
}

TEST_CASE("separability") {
  const Algebra c2 = group_algebra(cyclic_group(2), 2);
  const auto sep = check_separable(s3_c2(2));
  REQUIRE(sep);
  CHECK(verify_separable(s3_c2(2), *sep).ok);
  CHECK(check_separable(identity_extension(c2)));
  const Extension k_c2 = ground_in(c2);
  CHECK_FALSE(check_separable(k_c2));
  const ExhaustiveResult ex = exhaustive_separability(k_c2);
  CHECK(ex.ran);
  CHECK_FALSE(ex.found);
  CHECK(ex.searched == 16);
  // Tampering with the lift breaks verification.
  SeparabilityCert bad = *sep;
  bad.lift.pop_back();
  CHECK_FALSE(verify_separable(s3_c2(2), bad).ok);
}

TEST_CASE("central projectivity and H-separability") {
  const Algebra c2 = group_algebra(cyclic_group(2), 2);
  const auto id_cp = check_centrally_projective(identity_extension(c2));
  REQUIRE(id_cp);
  CHECK(verify_summand_cert(identity_extension(c2), *id_cp).ok);
  CHECK_FALSE(check_centrally_projective(s3_c2(2)));
  const ExhaustiveResult ex = exhaustive_centrally_projective(s3_c2(2));
  if (ex.ran) CHECK_FALSE(ex.found);
  CHECK(check_centrally_projective(ground_in(c2)));

  CHECK(check_h_separable(identity_extension(c2)));
  const Extension k_m2 = ground_in(matrix_algebra(2, 2));
  const auto hs = check_h_separable(k_m2);
  REQUIRE(hs);
  CHECK(verify_summand_cert(k_m2, *hs).ok);
  CHECK_FALSE(check_h_separable(ground_in(c2)));
}

TEST_CASE("Frobenius systems") {
  const Algebra c2 = group_algebra(cyclic_group(2), 2);
  for (const auto& ext : {identity_extension(c2), ground_in(c2), s3_c2(2), s3_c2(3)}) {
    const auto sys = check_frobenius(ext);
    REQUIRE(sys);
    CHECK(verify_frobenius_system(ext, *sys).ok);
  }
  // k in k[C2]: coefficient of the identity with pairs (1, 1), (g, g).
  const Extension k_c2 = ground_in(c2);
  const FrobeniusSystem sys{Matrix(1, 2, 2, {1, 0}), {{unit_vector(2, 0), unit_vector(2, 0)},
                                                      {unit_vector(2, 1), unit_vector(2, 1)}}};
  CHECK(verify_frobenius_system(k_c2, sys).ok);
  FrobeniusSystem perturbed = sys;
  perturbed.pairs[1].second = unit_vector(2, 0);
  const auto r = verify_frobenius_system(k_c2, perturbed);
  CHECK_FALSE(r.ok);
  CHECK(r.message.find("a_") != std::string::npos);
  const FrobeniusSystem empty{Matrix::identity(2, 2), {}};
  CHECK(verify_frobenius_system(identity_extension(c2), empty).message.find("sum x_i E(y_i a) != a") == 0);
}

TEST_CASE("group extensions") {
  const FiniteGroup c4 = cyclic_group(4);
  const GroupExtension a = group_extension(c4, subgroup_generated(c4, {2}), 2);
  CHECK(a.system.pairs.size() == 2);
  CHECK_FALSE(a.casimir);
  const FiniteGroup a4 = alternating_group(4);
  const Subgroup v4 = subgroup_of(a4, {"(1 2)(3 4)", "(1 3)(2 4)"}, 4);
  const GroupExtension b = group_extension(a4, v4, 2);
  CHECK(b.system.pairs.size() == 3);
  REQUIRE(b.casimir);
  CHECK(verify_separable(b.ext, *b.casimir).ok);
  CHECK(check_separable(b.ext));
  const GroupExtension c = group_extension(a4, whole_group(a4), 2);
  CHECK(c.system.pairs.size() == 1);
  CHECK(c.system.e_map == Matrix::identity(12, 2));
}

TEST_CASE("probes") {
  const Algebra c2 = group_algebra(cyclic_group(2), 2);
  const Extension sc = s3_c2(2);
  const ProbeReport r = check_semisimple_on_probes(sc, {trivial(sc.a), regular_module(sc.a, Side::Left)});
  CHECK(r.universal);
  for (const auto& v : r.probes) CHECK(v.split);
  const ProbeReport k = check_semisimple_on_probes(ground_in(c2), {trivial(c2)});
  CHECK_FALSE(k.universal);
  CHECK_FALSE(k.probes[0].split);
  const ProbeReport id = check_semisimple_on_probes(identity_extension(c2), {trivial(c2)});
  CHECK(id.probes[0].split);
}

TEST_CASE("M-separability") {
  const Algebra c2 = group_algebra(cyclic_group(2), 2);
  CHECK(check_M_separable(regular_bimodule(c2)));
  const Extension sc = s3_c2(2);
  const BimoduleViews v = bimodule_views(sc);
  CHECK(check_M_separable(v.baa).has_value() == check_separable(sc).has_value());
  CHECK(check_M_separable(bimodule_views(ground_in(c2)).baa));
}

TEST_CASE("derived extensions") {
  const Algebra c2 = group_algebra(cyclic_group(2), 2);
  const Extension sc = s3_c2(2);
  const Extension e1 = endo_extension(sc, regular_module(sc.b, Side::Left));
  CHECK(e1.b.dim() == 2);
  CHECK(e1.a.dim() == 6);
  const FiniteGroup a4 = alternating_group(4);
  const GroupExtension va = group_extension(a4, subgroup_of(a4, {"(1 2)(3 4)", "(1 3)(2 4)"}, 4), 2);
  const Extension e2 = endo_extension(va.ext, trivial(va.ext.b));
  CHECK(e2.b.dim() == 1);
  CHECK(validate(e2).ok);

  const Extension t1 = tensor_extension(sc, ground_field(2));
  CHECK(t1.a.dim() == 6);
  const Extension t2 = tensor_extension(sc, c2);
  CHECK(check_separable(t2));

  const auto q0 = quotient_extension(sc, Ideal{sc.b.dim(), 2, {}});
  REQUIRE(q0.ext);
  CHECK(q0.ext->a.dim() == 6);
  const auto q1 = quotient_extension(sc, Ideal{2, 2, {unit_vector(2, 0), unit_vector(2, 1)}});
  CHECK_FALSE(q1.ext);
  CHECK_FALSE(q1.failure.empty());
  const auto q2 = quotient_extension(va.ext, radical(va.ext.b));
  REQUIRE(q2.ext);
  CHECK(q2.i == radical(va.ext.a));
  CHECK(profile(q2.ext->a).loewy_length == 1);
  CHECK(profile(q2.ext->b).loewy_length == 1);
}

TEST_CASE("double cosets split the B-bimodule A") {
  for (const auto& [g, cycles, deg] : {std::tuple{symmetric_group(3), std::vector<std::string>{"(1 2)"}, 3},
                                      std::tuple{alternating_group(4), std::vector<std::string>{"(1 2)(3 4)"}, 4}}) {
    const Subgroup h = subgroup_of(g, cycles, deg);
    const GroupExtension ge = group_extension(g, h, 2);
    const Bimodule bab = bimodule_views(ge.ext).bab;
    std::size_t pieces = 0;
    for (const auto& d : double_cosets(g, h)) {
      std::vector<Vec> span;
      for (auto x : d) span.push_back(unit_vector(g.order(), x));
      const SubmoduleResult sub = submodule(bab.as_module(), span);
      pieces += decompose(sub.module.rep()).pieces.size();
    }
    CHECK(pieces == decompose(bab.rep()).pieces.size());
  }
}
