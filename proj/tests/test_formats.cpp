#include <algorithm>
#include <functional>

#include "doctest.h"
#include "repdim/formats.hpp"

using namespace repdim;

namespace {

Subgroup subgroup_of(const FiniteGroup& g, const std::vector<std::string>& cycles, std::size_t degree) {
  std::vector<std::uint32_t> elems;
  for (const auto& c : cycles) elems.push_back(find_permutation(g, parse_cycles(c, degree)));
  return subgroup_generated(g, elems);
}

bool same_table(const Algebra& x, const Algebra& y) {
  if (x.p() != y.p() || x.dim() != y.dim() || x.unit() != y.unit()) return false;
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j)
      if (!std::ranges::equal(x.product_of_basis(i, j), y.product_of_basis(i, j))) return false;
  return true;
}

std::string error_of(const std::function<void()>& f, ErrorKind* kind = nullptr) {
  try {
    f();
  } catch (const Error& e) {
    if (kind) *kind = e.kind();
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("algebra documents round-trip") {
  for (const auto& a : {group_algebra(klein_four(), 2), group_algebra(symmetric_group(3), 3), matrix_algebra(2, 5),
                        centrosymmetric_algebra(3, 2)}) {
    const std::string doc = to_document(a);
    CHECK(document_type(doc) == "algebra");
    const Algebra b = algebra_from_document(doc);
    CHECK(same_table(a, b));
    CHECK(b.labels() == a.labels());
    CHECK(to_document(b) == doc);
  }
}

TEST_CASE("integers are reduced mod p") {
  const std::string doc = R"j({"type":"algebra","p":3,"dim":1,"unit":[4],"table":[[[-2]]]})j";
  const Algebra a = algebra_from_document(doc);
  CHECK(a.unit() == Vec{1});
  CHECK(a.product_of_basis(0, 0)[0] == 1);
}

TEST_CASE("module and group documents round-trip") {
  const Algebra v4 = group_algebra(klein_four(), 2);
  const Module m = direct_sum(regular_module(v4, Side::Left), dual_regular(v4));
  const Module back = module_from_document(to_document(m));
  CHECK(back.dim() == m.dim());
  CHECK(is_isomorphic(back, m));
  CHECK(module_from_document(to_document(Module::zero(v4))).dim() == 0);

  const FiniteGroup s3 = symmetric_group(3);
  const FiniteGroup g = group_from_document(to_document(s3));
  CHECK(g.table() == s3.table());
  CHECK(group_from_document(R"j({"type":"group","name":"alt4"})j").order() == 12);
  CHECK(group_from_document(R"j({"type":"group","degree":4,"generators":["(1 2 3 4)","(1 3)"]})j").order() == 8);
}

TEST_CASE("certificates survive a reload") {
  const FiniteGroup s3 = symmetric_group(3);
  const Extension e = group_extension(s3, subgroup_of(s3, {"(1 2)"}, 3), 3).ext;
  const auto fs = check_frobenius(e);
  REQUIRE(fs);
  const Certificate c{e, *fs};
  const Certificate back = certificate_from_document(to_document(c));
  CHECK(certificate_kind(back) == "frobenius");
  CHECK(verify(back).ok);

  const Extension e2 = group_extension(s3, subgroup_of(s3, {"(1 2 3)"}, 3), 3).ext;
  const auto sep = check_separable(e2);
  REQUIRE(sep);
  const Certificate c2 = certificate_from_document(to_document(Certificate{e2, *sep}));
  CHECK(certificate_kind(c2) == "separable");
  CHECK(verify(c2).ok);
  const auto split = check_split(e2);
  REQUIRE(split);
  CHECK(verify(certificate_from_document(to_document(Certificate{e2, *split}))).ok);

  // A corrupted payload is caught by verification, not by the parser.
  auto tampered = std::get<FrobeniusSystem>(back.payload);
  tampered.pairs.pop_back();
  CHECK_FALSE(verify(certificate_from_document(to_document(Certificate{e, tampered}))).ok);
}

TEST_CASE("report documents round-trip") {
  RepdimOptions o;
  o.group = GroupContext{cyclic_group(4)};
  const RepdimReport r = repdim_report(group_algebra(o.group->group, 2), o);
  const std::string doc = to_document(r);
  const RepdimReport back = report_from_document(doc);
  CHECK(back.exact == r.exact);
  CHECK(back.lower.bound == r.lower.bound);
  CHECK(back.lower.provenance == r.lower.provenance);
  REQUIRE(back.upper);
  CHECK(back.upper->bound == r.upper->bound);
  CHECK(back.upper->x_labels == r.upper->x_labels);
  CHECK(is_isomorphic(back.upper->witness, r.upper->witness));
  CHECK(back.loewy_bound_holds == r.loewy_bound_holds);
  CHECK(back.transcript == r.transcript);
  CHECK(to_document(back) == doc);
}

TEST_CASE("parse errors") {
  const std::string doc = to_document(group_algebra(cyclic_group(2), 2));
  ErrorKind kind{};
  const std::string truncated = error_of([&] { algebra_from_document(doc.substr(0, doc.size() / 2)); }, &kind);
  CHECK(kind == ErrorKind::Parse);
  CHECK(truncated.find("line ") != std::string::npos);

  const std::string missing =
      error_of([] { algebra_from_document(R"j({"type":"algebra","p":2,"dim":1,"unit":[1]})j"); }, &kind);
  CHECK(kind == ErrorKind::Parse);
  CHECK(missing.find("'table'") != std::string::npos);

  const std::string nested = error_of(
      [] { algebra_from_document(R"j({"type":"algebra","p":2,"dim":1,"unit":[1],"table":[[[1]],[[0]]]})j"); },
      &kind);
  CHECK(kind == ErrorKind::Parse);
  CHECK(nested.find("table") != std::string::npos);

  error_of([] { algebra_from_document(R"j({"type":"algebra","p":4,"dim":1,"unit":[1],"table":[[[1]]]})j"); }, &kind);
  CHECK(kind == ErrorKind::Parse);

  // Well-formed but not associative with a unit.
  error_of([] { algebra_from_document(R"j({"type":"algebra","p":2,"dim":1,"unit":[1],"table":[[[0]]]})j"); }, &kind);
  CHECK(kind == ErrorKind::Invalid);

  const std::string wrong = error_of([&] { module_from_document(doc); }, &kind);
  CHECK(kind == ErrorKind::Parse);
  CHECK(wrong.find("'module'") != std::string::npos);
}
