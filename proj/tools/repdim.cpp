// repdim: command-line front end.
//
// Exit status: 0 ok, 1 verification failure, 2 usage error, 3 input parse
// error, 4 cap exceeded.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "repdim/formats.hpp"
#include "suite.hpp"

using namespace repdim;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerification = 1, kUsage = 2, kParse = 3, kCap = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::optional<std::uint32_t> prime;
  std::uint64_t seed = 0;
  std::size_t cap_gldim = kDefaultGldimCap;
  std::vector<std::string> pool_extra;
  std::string out;
  std::size_t jobs = 1;
  std::string filter;
  std::string file;
  std::string group;
  std::string algebra;
  std::vector<std::string> subgroup;
  bool assert_rep_infinite = false;
};

// --out paths are relative to REPDIM_OUT_DIR when it is set.
std::string out_path(const std::string& path) {
  const char* dir = std::getenv("REPDIM_OUT_DIR");
  if (!dir || !*dir || std::filesystem::path(path).is_absolute()) return path;
  return (std::filesystem::path(dir) / path).string();
}

void write_out(const Flags& f, const std::string& doc) {
  if (!f.out.empty()) write_text_file(out_path(f.out), doc);
}

std::string render(const json& j) { return normalize_document(j.dump()); }

std::uint32_t need_prime(const Flags& f) {
  if (!f.prime) throw UsageError("--prime is required");
  return *f.prime;
}

FiniteGroup named_group(const std::string& name) {
  try {
    return gallery_group(name);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

// The algebra named by exactly one of --file, --group, --algebra.
struct Source {
  Algebra algebra;
  std::optional<FiniteGroup> group;
  std::string name;
};

Source resolve_algebra(const Flags& f) {
  const int given = !f.file.empty() + !f.group.empty() + !f.algebra.empty();
  if (given != 1) throw UsageError("give exactly one of --file, --group, --algebra");
  if (!f.file.empty()) {
    const std::string text = read_text_file(f.file);
    const std::string type = document_type(text);
    if (type == "algebra") {
      Algebra a = algebra_from_document(text);
      if (f.prime && *f.prime != a.p()) throw UsageError("--prime disagrees with the document");
      return {a, std::nullopt, f.file};
    }
    if (type == "group") {
      const FiniteGroup g = group_from_document(text);
      return {group_algebra(g, need_prime(f)), g, f.file};
    }
    throw Error(ErrorKind::Parse, "expected an algebra or group document, found '" + type + "'");
  }
  const std::uint32_t p = need_prime(f);
  if (!f.group.empty()) {
    const FiniteGroup g = named_group(f.group);
    return {group_algebra(g, p), g, "k[" + f.group + "]"};
  }
  try {
    return {gallery_algebra(f.algebra, p), std::nullopt, f.algebra};
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::uint32_t element(const FiniteGroup& g, const std::string& text) {
  for (std::uint32_t i = 0; i < g.order(); ++i)
    if (g.label(i) == text) return i;
  std::size_t degree = 0;
  const std::regex num("[0-9]+");
  for (std::sregex_iterator it(text.begin(), text.end(), num), end; it != end; ++it)
    degree = std::max<std::size_t>(degree, std::stoul(it->str()));
  try {
    return find_permutation(g, parse_cycles(text, degree));
  } catch (const Error& e) {
    throw UsageError("subgroup generator " + text + ": " + e.what());
  }
}

void print_table(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t w = 0;
  for (const auto& [k, v] : rows) w = std::max(w, k.size());
  for (const auto& [k, v] : rows) std::printf("%-*s  %s\n", static_cast<int>(w), k.c_str(), v.c_str());
}

std::string dims_text(const std::vector<std::size_t>& d) {
  std::string s;
  for (auto x : d) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

// ---------------------------------------------------------------------------

int algebra_info(const Flags& f) {
  const Source src = resolve_algebra(f);
  const Algebra& a = src.algebra;
  const AlgebraProfile prof = profile(a);
  const ProjectiveSystem ps = projective_system(a);
  std::vector<std::size_t> simple_dims, projective_dims;
  for (const auto& s : ps.simples) simple_dims.push_back(s.dim());
  for (const auto& pr : ps.projectives) projective_dims.push_back(pr.dim());
  const bool selfinj = is_self_injective(a);
  // Self-injective algebras have global dimension 0 or infinity.
  const std::string gd = selfinj && !prof.semisimple ? "infinite (self-injective, not semisimple)"
                                                     : to_string(global_dimension(a, f.cap_gldim));
  print_table({{"algebra", src.name + " over GF(" + std::to_string(a.p()) + ")"},
               {"dimension", std::to_string(a.dim())},
               {"radical powers", dims_text(prof.radical_dims)},
               {"Loewy length", std::to_string(prof.loewy_length)},
               {"semisimple", prof.semisimple ? "yes" : "no"},
               {"simples", dims_text(simple_dims)},
               {"projectives", dims_text(projective_dims)},
               {"self-injective", selfinj ? "yes" : "no"},
               {"global dimension", gd}});
  json doc = {{"type", "algebra-profile"},
              {"p", a.p()},
              {"dim", a.dim()},
              {"radical_dims", prof.radical_dims},
              {"loewy_length", prof.loewy_length},
              {"semisimple", prof.semisimple},
              {"simple_dims", simple_dims},
              {"projective_dims", projective_dims},
              {"self_injective", selfinj},
              {"global_dimension", gd}};
  write_out(f, render(doc));
  return kOk;
}

int group_info(const Flags& f) {
  FiniteGroup g;
  if (!f.file.empty() == !f.group.empty()) throw UsageError("give exactly one of --file, --group");
  g = f.file.empty() ? named_group(f.group) : group_from_document(read_text_file(f.file));
  std::vector<std::pair<std::string, std::string>> rows = {{"order", std::to_string(g.order())},
                                                           {"generators", std::to_string(g.generators().size())}};
  if (f.prime) {
    const HigmanVerdict h = higman_rep_type(g, *f.prime);
    const bool finite = h.type == RepType::Finite;
    rows.push_back({"Sylow " + std::to_string(*f.prime) + "-subgroup", "order " + std::to_string(h.sylow.order()) +
                                                                          (h.sylow_cyclic ? ", cyclic" : ", not cyclic")});
    rows.push_back({"k[G] over GF(" + std::to_string(*f.prime) + ")",
                    finite ? "representation-finite" : "representation-infinite"});
  }
  print_table(rows);
  write_out(f, to_document(g));
  return kOk;
}

int ext_classify(const Flags& f) {
  Extension ext;
  std::string name;
  if (!f.file.empty()) {
    if (!f.group.empty() || !f.subgroup.empty()) throw UsageError("--file excludes --group and --subgroup");
    ext = extension_from_document(read_text_file(f.file));
    name = f.file;
  } else {
    if (f.group.empty() || f.subgroup.empty()) throw UsageError("give --file, or --group with --subgroup");
    const FiniteGroup g = named_group(f.group);
    std::vector<std::uint32_t> gens;
    for (const auto& s : f.subgroup) gens.push_back(element(g, s));
    const Subgroup h = subgroup_generated(g, gens);
    ext = group_extension(g, h, need_prime(f)).ext;
    name = "k[H] <= k[" + f.group + "], |H| = " + std::to_string(h.order());
  }

  std::vector<Certificate> certs;
  json verdicts = json::object();
  bool all_verified = true;
  std::vector<std::pair<std::string, std::string>> rows = {{"extension", name}};
  auto record = [&](const std::string& property, const auto& cert) {
    std::string shown = cert ? "yes" : "no";
    if (cert) {
      Certificate c{ext, *cert};
      const bool ok = verify(c).ok;
      all_verified = all_verified && ok;
      if (!ok) shown += " (certificate FAILS verification)";
      certs.push_back(std::move(c));
    }
    verdicts[property] = cert.has_value();
    rows.push_back({property, shown});
  };
  record("split", check_split(ext));
  record("separable", check_separable(ext));
  record("centrally-projective", check_centrally_projective(ext));
  record("frobenius", check_frobenius(ext));
  record("h-separable", check_h_separable(ext));
  print_table(rows);

  json doc = {{"type", "classification"}, {"verdicts", verdicts}, {"extension", json::parse(to_document(ext))}};
  json cs = json::array();
  for (const auto& c : certs) cs.push_back(json::parse(to_document(c)));
  doc["certificates"] = cs;
  write_out(f, render(doc));
  return all_verified ? kOk : kVerification;
}

int repdim_report_cmd(const Flags& f) {
  const Source src = resolve_algebra(f);
  RepdimOptions o;
  o.search.gldim_cap = f.cap_gldim;
  o.search.jobs = f.jobs;
  if (src.group) o.group = GroupContext{*src.group};
  o.assert_rep_infinite = f.assert_rep_infinite;
  for (const auto& path : f.pool_extra) {
    const Module m = module_from_document(read_text_file(path));
    if (!same_algebra(m.algebra(), src.algebra)) throw UsageError("--pool-extra module is over a different algebra");
    o.pool_extra.push_back({m, std::filesystem::path(path).filename().string()});
  }
  const RepdimReport r = repdim_report(src.algebra, o);
  std::vector<std::pair<std::string, std::string>> rows = {
      {"algebra", src.name + " over GF(" + std::to_string(src.algebra.p()) + "), dim " +
                      std::to_string(src.algebra.dim())},
      {"repdim", suite::interval(r)},
      {"lower bound", std::to_string(r.lower.bound) + " (" + to_string(r.lower.provenance) + ")"},
      {"upper bound", r.upper ? std::to_string(r.upper->bound) : "none within the caps"},
      {"Loewy length", std::to_string(r.loewy_length)},
      {"self-injective", r.self_injective ? "yes" : "no"},
      {"witness verified", r.witness_verified ? "yes" : "no"}};
  if (r.upper) {
    std::string x = "A + D(A)";
    for (const auto& l : r.upper->x_labels) x += " + " + l;
    rows.push_back({"witness", x + ", dim " + std::to_string(r.upper->witness.dim())});
  }
  if (r.loewy_bound_holds) rows.push_back({"upper <= Loewy length", *r.loewy_bound_holds ? "yes" : "NO"});
  print_table(rows);
  for (const auto& line : r.transcript) std::printf("  %s\n", line.c_str());
  write_out(f, to_document(r));
  const bool ok = (!r.upper || r.witness_verified) && r.loewy_bound_holds.value_or(true);
  return ok ? kOk : kVerification;
}

int verify_paper(const Flags& f) {
  suite::SuiteOptions o;
  o.seed = f.seed;
  o.gldim_cap = f.cap_gldim;
  o.jobs = f.jobs;
  if (!f.filter.empty()) {
    if (!suite::known_filter(f.filter)) throw UsageError("--filter names no criterion: " + f.filter);
    o.filter = f.filter;
  }
  bool all = true;
  json doc = {{"type", "verification"}, {"seed", f.seed}};
  json crits = json::array();
  suite::run(o, [&](const suite::CriterionResult& r) {
    for (const auto& row : r.rows)
      std::printf("%-5s %-4s %s | expected %s | computed %s\n", r.criterion.id.c_str(), to_string(row.verdict).c_str(),
                  row.instance.c_str(), row.expected.c_str(), row.computed.c_str());
    std::printf("%-5s %-4s %s (%.2f s of %.0f s)\n", r.criterion.id.c_str(), r.passed() ? "PASS" : "FAIL",
                r.criterion.title.c_str(), r.seconds, r.criterion.budget_seconds);
    std::fflush(stdout);
    all = all && r.passed();
    json rows = json::array();
    for (const auto& row : r.rows)
      rows.push_back({{"instance", row.instance},
                      {"expected", row.expected},
                      {"computed", row.computed},
                      {"verdict", to_string(row.verdict)}});
    crits.push_back({{"id", r.criterion.id},
                     {"title", r.criterion.title},
                     {"passed", r.passed()},
                     {"within_budget", r.within_budget()},
                     {"rows", rows}});
  });
  doc["criteria"] = crits;
  doc["passed"] = all;
  write_out(f, render(doc));
  std::printf("%s\n", all ? "all criteria pass" : "some criteria FAIL");
  return all ? kOk : kVerification;
}

int verify_certificate(const Flags& f) {
  if (f.file.empty()) throw UsageError("--file is required");
  const Certificate c = certificate_from_document(read_text_file(f.file));
  const ValidationReport r = verify(c);
  std::printf("%s certificate: %s\n", certificate_kind(c).c_str(), r.ok ? "verified" : ("FAILS: " + r.message).c_str());
  return r.ok ? kOk : kVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with finite-dimensional algebras over prime fields"};
  app.require_subcommand(1);
  Flags f;

  auto prime = [&](CLI::App* s) { s->add_option("--prime", f.prime, "Characteristic p")->check(CLI::Range(2u, 65521u)); };
  auto out = [&](CLI::App* s) { s->add_option("--out", f.out, "Write a machine-readable document here"); };
  auto source = [&](CLI::App* s) {
    s->add_option("--file", f.file, "Algebra or group document");
    s->add_option("--group", f.group, "Gallery group, e.g. klein4, sym3, alt4, \"cyclic2 x cyclic2\"");
    s->add_option("--algebra", f.algebra, "matrix(n), centrosymmetric(n) or group(G)");
  };

  auto* alg = app.add_subcommand("algebra", "Algebra profiles");
  alg->require_subcommand(1);
  auto* alg_info = alg->add_subcommand("info", "Radical layers, simples, projectives, global dimension");
  source(alg_info);
  prime(alg_info);
  alg_info->add_option("--cap-gldim", f.cap_gldim, "Cap on resolution length");
  out(alg_info);

  auto* grp = app.add_subcommand("group", "Finite groups");
  grp->require_subcommand(1);
  auto* grp_info = grp->add_subcommand("info", "Order, Sylow subgroup, representation type");
  grp_info->add_option("--file", f.file, "Group document");
  grp_info->add_option("--group", f.group, "Gallery group");
  prime(grp_info);
  out(grp_info);

  auto* ext = app.add_subcommand("ext", "Algebra extensions");
  ext->require_subcommand(1);
  auto* ext_cls = ext->add_subcommand("classify", "Split, separable, centrally projective, Frobenius, H-separable");
  ext_cls->add_option("--file", f.file, "Extension document");
  ext_cls->add_option("--group", f.group, "Gallery group G");
  ext_cls->add_option("--subgroup", f.subgroup, "Generator of H in cycle notation (repeatable)");
  prime(ext_cls);
  out(ext_cls);

  auto* rd = app.add_subcommand("repdim", "Representation dimension");
  rd->require_subcommand(1);
  auto* rd_rep = rd->add_subcommand("report", "Lower and upper bounds with a verified witness");
  source(rd_rep);
  prime(rd_rep);
  rd_rep->add_option("--cap-gldim", f.cap_gldim, "Cap on global dimension per candidate");
  rd_rep->add_option("--pool-extra", f.pool_extra, "Module document added to the candidate pool (repeatable)");
  rd_rep->add_option("--jobs", f.jobs, "Parallel candidate evaluation")->check(CLI::Range(1, 64));
  rd_rep->add_option("--seed", f.seed, "Seed (the search itself is deterministic)");
  rd_rep->add_flag("--assert-rep-infinite", f.assert_rep_infinite, "Take the algebra as representation-infinite");
  out(rd_rep);

  auto* ver = app.add_subcommand("verify", "Verification");
  ver->require_subcommand(1);
  auto* ver_paper = ver->add_subcommand("paper", "Run the instance suite");
  ver_paper->add_option("--filter", f.filter, "Criterion id (AC1..AC12) or tag");
  ver_paper->add_option("--seed", f.seed, "Seed for random instances");
  ver_paper->add_option("--cap-gldim", f.cap_gldim, "Cap on global dimension per candidate");
  ver_paper->add_option("--jobs", f.jobs, "Parallel candidate evaluation")->check(CLI::Range(1, 64));
  out(ver_paper);
  auto* ver_cert = ver->add_subcommand("certificate", "Re-verify a certificate document");
  ver_cert->add_option("--file", f.file, "Certificate document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*alg_info) return algebra_info(f);
    if (*grp_info) return group_info(f);
    if (*ext_cls) return ext_classify(f);
    if (*rd_rep) return repdim_report_cmd(f);
    if (*ver_paper) return verify_paper(f);
    if (*ver_cert) return verify_certificate(f);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kUsage;
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::Parse:
      case ErrorKind::Invalid:
        std::fprintf(stderr, "input error: %s\n", e.what());
        return kParse;
      case ErrorKind::CapExceeded:
        std::fprintf(stderr, "cap exceeded: %s\n", e.what());
        return kCap;
      case ErrorKind::Verification:
        std::fprintf(stderr, "verification failure: %s\n", e.what());
        return kVerification;
      default:
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    }
  }
  return kUsage;
}
