#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "repdim/engine.hpp"

using namespace repdim;

namespace {

Module trivial(const Algebra& kg) {
  std::vector<Matrix> gens(kg.generators().size(), Matrix(1, 1, kg.p(), {1}));
  return Module(kg, 1, std::move(gens));
}

Subgroup generated(const FiniteGroup& g, const std::vector<std::string>& cycles, std::size_t degree) {
  std::vector<std::uint32_t> elems;
  for (const auto& c : cycles) elems.push_back(find_permutation(g, parse_cycles(c, degree)));
  return subgroup_generated(g, elems);
}

bool pool_has(const CandidatePool& pool, const Module& m) {
  for (const auto& e : pool.entries)
    if (e.module.dim() == m.dim() && is_isomorphic(e.module, m)) return true;
  return false;
}

}  // namespace

TEST_CASE("generator-cogenerator check") {
  const Algebra c2 = group_algebra(cyclic_group(2), 2);
  const Module reg = regular_module(c2, Side::Left);
  CHECK(generator_cogenerator_check(direct_sum(reg, dual_regular(c2))));
  CHECK_FALSE(generator_cogenerator_check(trivial(c2)));
  const Algebra s3 = group_algebra(symmetric_group(3), 5);
  CHECK(generator_cogenerator_check(regular_module(s3, Side::Left)));
  // A + k is a generator but over End(A + k) the dual is missing.
  const Algebra e = end_algebra(direct_sum(reg, trivial(c2))).algebra;
  CHECK_FALSE(generator_cogenerator_check(regular_module(e, Side::Left)));
}

TEST_CASE("self-injectivity") {
  for (const char* name : {"cyclic2", "cyclic4", "klein4", "sym3"})
    for (std::uint32_t p : {2u, 3u}) CHECK(is_self_injective(group_algebra(gallery_group(name), p)));
  const Algebra c2 = group_algebra(cyclic_group(2), 2);
  const Algebra e = end_algebra(direct_sum(regular_module(c2, Side::Left), trivial(c2))).algebra;
  CHECK_FALSE(is_self_injective(e));
  CHECK(oracle::gldim_by_ext(e, 8) == std::optional<std::size_t>(2));
  CHECK(is_self_injective(matrix_algebra(3, 2)));
}

TEST_CASE("default pool") {
  const Algebra s3 = group_algebra(symmetric_group(3), 5);
  const CandidatePool ss = default_pool(s3);
  CHECK(ss.entries.size() == 1 + projective_system(s3).simples.size());
  CHECK(ss.entries[0].module.dim() == 0);

  const Algebra c2 = group_algebra(cyclic_group(2), 2);
  CHECK(pool_has(default_pool(c2), trivial(c2)));

  const Algebra v4 = group_algebra(klein_four(), 2);
  const CandidatePool pool = default_pool(v4);
  const auto pows = radical_powers(v4);
  const Module reg = regular_module(v4, Side::Left);
  const Module q1 = quotient_module(reg, pows[1].basis).module;
  const Module q2 = quotient_module(reg, pows[2].basis).module;
  CHECK(q1.dim() == 1);
  CHECK(q2.dim() == 3);
  CHECK(pool_has(pool, q1));
  CHECK(pool_has(pool, q2));
  for (std::size_t i = 0; i < pool.entries.size(); ++i)
    for (std::size_t j = i + 1; j < pool.entries.size(); ++j) {
      const auto& x = pool.entries[i].module;
      const auto& y = pool.entries[j].module;
      CHECK_FALSE((x.dim() == y.dim() && (x.dim() == 0 || is_isomorphic(x, y))));
    }
  // Extra modules are deduplicated too.
  const CandidatePool more = default_pool(v4, {{q2, "extra"}, {power(q1, 2), "k^2"}});
  CHECK(more.entries.size() == pool.entries.size() + 1);
}

TEST_CASE("upper bounds and witnesses") {
  const Algebra s3 = group_algebra(symmetric_group(3), 5);
  const auto ss = repdim_upper_bound(s3, default_pool(s3));
  REQUIRE(ss);
  CHECK(ss->bound == 0);

  const Algebra c2 = group_algebra(cyclic_group(2), 2);
  const auto u2 = repdim_upper_bound(c2, default_pool(c2));
  REQUIRE(u2);
  CHECK(u2->bound == 2);
  CHECK(is_isomorphic(u2->witness, direct_sum(regular_module(c2, Side::Left), trivial(c2))));

  const Algebra v4 = group_algebra(klein_four(), 2);
  const auto u4 = repdim_upper_bound(v4, default_pool(v4));
  REQUIRE(u4);
  CHECK(u4->bound == 3);
  CHECK(u4->x_labels == std::vector<std::string>{"A/rad^1", "A/rad^2"});
  CHECK(generator_cogenerator_check(u4->witness));
  // The search uses block idempotents; the plain route decomposes End(M) itself.
  CHECK(global_dimension(end_algebra(u4->witness).algebra, 8) == Dimension{DimKind::Exact, 3, std::nullopt, false});
  CHECK(oracle::gldim_by_ext(end_algebra(u2->witness).algebra, 8) == std::optional<std::size_t>(2));
}

TEST_CASE("block endomorphism algebras") {
  for (const auto& [name, p] : {std::pair{"klein4", 2u}, std::pair{"sym3", 3u}, std::pair{"cyclic4", 2u}}) {
    const Algebra a = group_algebra(gallery_group(name), p);
    const Module m = basic_module({regular_module(a, Side::Left), dual_regular(a), loewy_generator_part(a)}, a);
    std::vector<Module> pieces;
    for (const auto& s : m.decomposition().summands) {
      CHECK(s.multiplicity == 1);
      pieces.push_back(s.module);
    }
    const BasicEnd b = basic_end(pieces, a);
    CHECK(validate(b.end.algebra).ok);
    CHECK(b.end.algebra.dim() == end_algebra(m).algebra.dim());
    CHECK(b.radical == radical(b.end.algebra));
    const Module sum = direct_sum(pieces, a);
    const std::size_t k = b.end.algebra.dim();
    for (std::size_t i = 0; i < k; ++i) {
      CHECK(is_homomorphism(sum.rep(), sum.rep(), b.end.maps[i]));
      for (std::size_t j = 0; j < k; j += 3) {
        Matrix prod(sum.dim(), sum.dim(), p);
        const auto c = b.end.algebra.product_of_basis(i, j);
        for (std::size_t t = 0; t < k; ++t) add_scaled(prod, c[t], b.end.maps[t]);
        CHECK(prod == b.end.maps[i] * b.end.maps[j]);
      }
    }
    const ProjectiveSystem ps = projective_system(b.end.algebra, b.idempotents, b.radical);
    CHECK(global_dimension(ps, 12) == global_dimension(b.end.algebra, 12));
  }
}

TEST_CASE("parallel search matches sequential search") {
  for (const auto& [name, p] : {std::pair{"cyclic4", 2u}, std::pair{"sym3", 3u}}) {
    const Algebra a = group_algebra(gallery_group(name), p);
    const CandidatePool pool = default_pool(a);
    SearchOptions seq;
    seq.max_subset = 2;
    SearchOptions par = seq;
    par.jobs = 4;
    const auto x = repdim_upper_bound(a, pool, seq);
    const auto y = repdim_upper_bound(a, pool, par);
    REQUIRE(x);
    REQUIRE(y);
    CHECK(x->bound == y->bound);
    CHECK(x->x_labels == y->x_labels);
    CHECK(x->witness.rep().gens == y->witness.rep().gens);
    CHECK(x->candidates_evaluated == y->candidates_evaluated);
    CHECK(x->candidates_skipped == y->candidates_skipped);
  }
}

TEST_CASE("lower bounds") {
  CHECK(repdim_lower_bound(matrix_algebra(2, 2)).bound == 0);
  const Algebra c2 = group_algebra(cyclic_group(2), 2);
  const LowerBound l2 = repdim_lower_bound(c2, GroupContext{cyclic_group(2)});
  CHECK(l2.bound == 2);
  CHECK(l2.provenance == LowerProvenance::NoRepdimOne);
  const Algebra v4 = group_algebra(klein_four(), 2);
  const LowerBound l4 = repdim_lower_bound(v4, GroupContext{klein_four()});
  CHECK(l4.bound == 3);
  CHECK(l4.provenance == LowerProvenance::HigmanRepInfinite);
  // A mismatched group context is ignored.
  CHECK(repdim_lower_bound(c2, GroupContext{klein_four()}).bound == 2);
  CHECK(repdim_lower_bound(v4).bound == 2);
  CHECK(repdim_lower_bound(v4, std::nullopt, true).provenance == LowerProvenance::UserAssertion);
  // The tensor square of k[C2] has the table of k[C2 x C2].
  const Algebra t = tensor_product(c2, c2);
  const FiniteGroup c2c2 = direct_product(cyclic_group(2), cyclic_group(2));
  CHECK(repdim_lower_bound(t, GroupContext{c2c2}).bound == 3);
}

TEST_CASE("reports") {
  auto report = [](const char* name, std::uint32_t p) {
    RepdimOptions o;
    o.group = GroupContext{gallery_group(name)};
    return repdim_report(group_algebra(o.group->group, p), o);
  };
  const RepdimReport s3 = report("sym3", 5);
  CHECK(s3.exact);
  CHECK(s3.upper->bound == 0);
  const RepdimReport c4 = report("cyclic4", 2);
  CHECK(c4.exact);
  CHECK(c4.upper->bound == 2);
  CHECK(c4.loewy_length == 4);
  CHECK(c4.loewy_bound_holds == std::optional<bool>(true));
  const RepdimReport v4 = report("klein4", 2);
  CHECK(v4.exact);
  CHECK(v4.witness_verified);
  CHECK(v4.lower.bound == 3);

  const RepdimReport c3 = repdim_report(centrosymmetric_algebra(3, 2));
  CHECK(c3.lower.bound <= c3.upper->bound);
  CHECK(c3.witness_verified);
}

TEST_CASE("approximation crosscheck") {
  std::mt19937_64 rng(7);
  const Algebra c2 = group_algebra(cyclic_group(2), 2);
  const Module m2 = direct_sum(regular_module(c2, Side::Left), trivial(c2));
  for (int i = 0; i < 10; ++i) {
    const Module y = random_module(c2, rng, 4);
    CHECK(y.dim() >= 1);
    CHECK(is_in_add(y, m2).member);
    const CrosscheckResult r = approximation_crosscheck(m2, y, 2);
    CHECK(r.ok);
    CHECK(r.steps == 0);
  }
  const Algebra v4 = group_algebra(klein_four(), 2);
  SearchOptions opts;
  opts.stop_at = 3;
  const auto u = repdim_upper_bound(v4, default_pool(v4), opts);
  REQUIRE(u);
  CHECK(u->candidates_evaluated == 1);
  bool some_outside = false;
  for (int i = 0; i < 10; ++i) {
    const Module y = random_module(v4, rng, 6);
    const CrosscheckResult r = approximation_crosscheck(u->witness, y, 3);
    CHECK(r.ok);
    CHECK(r.steps <= 1);
    // Claiming gldim 2 fails as soon as Y lies outside add(M).
    if (!is_in_add(y, u->witness).member) {
      some_outside = true;
      CHECK_FALSE(approximation_crosscheck(u->witness, y, 2).ok);
    }
  }
  CHECK(some_outside);
}

TEST_CASE("group corollary") {
  const FiniteGroup s3 = symmetric_group(3);
  const Subgroup c3 = generated(s3, {"(1 2 3)"}, 3);
  const CorollaryReport r3 = verify_group_corollary(s3, c3, 3);
  CHECK(r3.verdict == CorollaryVerdict::Pass);
  CHECK(r3.group_report.upper->bound == 2);
  CHECK(r3.subgroup_report.upper->bound == 2);
  CHECK(verify_group_corollary(s3, c3, 2).verdict == CorollaryVerdict::NotApplicable);
  CHECK(to_string(CorollaryVerdict::NotApplicable) == "not-applicable");
}
