#include "repdim/formats.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "repdim/error.hpp"

namespace repdim {

using json = nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Rendering: objects one key per line, arrays of scalars on one line.

bool scalar_array(const json& j) {
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

void emit(const json& j, std::string& out, std::size_t indent) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += inner + json(it.key()).dump() + ": ";
      emit(it.value(), out, indent + 2);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "}";
  } else if (j.is_array() && !j.empty() && !scalar_array(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += inner;
      emit(j[i], out, indent + 2);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "]";
  } else {
    out += j.dump();
  }
}

std::string render(const json& j) {
  std::string out;
  emit(j, out, 0);
  out += "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Writing.

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(json(std::vector<Elem>(m.row(i).begin(), m.row(i).end())));
  return {{"shape", {m.rows(), m.cols()}}, {"rows", rows}};
}

json pairs_json(const std::vector<ElementPair>& pairs) {
  json out = json::array();
  for (const auto& [x, y] : pairs) out.push_back({x, y});
  return out;
}

json algebra_json(const Algebra& a) {
  const std::size_t n = a.dim();
  json table = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) {
      const auto c = a.product_of_basis(i, j);
      row.push_back(json(std::vector<Elem>(c.begin(), c.end())));
    }
    table.push_back(row);
  }
  json out = {{"type", "algebra"}, {"p", a.p()}, {"dim", n}, {"unit", a.unit()}, {"table", table}};
  if (!a.labels().empty()) out["labels"] = a.labels();
  return out;
}

json action_json(const Module& m) {
  json action = json::array();
  if (m.dim() > 0)
    for (const auto& x : m.basis_action()) action.push_back(matrix_json(x));
  return {{"dim", m.dim()}, {"action", action}};
}

json module_json(const Module& m) {
  json out = action_json(m);
  out["type"] = "module";
  out["algebra"] = algebra_json(m.algebra());
  return out;
}

json group_json(const FiniteGroup& g) {
  json out = {{"type", "group"}, {"order", g.order()}, {"table", g.table()}};
  if (!g.labels().empty()) out["labels"] = g.labels();
  return out;
}

json extension_json(const Extension& e) {
  return {{"type", "extension"}, {"b", algebra_json(e.b)}, {"a", algebra_json(e.a)}, {"embed", matrix_json(e.embed)}};
}

// ---------------------------------------------------------------------------
// Reading, with the path of every field kept for diagnostics.

struct Node {
  const json* j;
  std::string path;
};

[[noreturn]] void fail(const Node& n, const std::string& what) {
  throw Error(ErrorKind::Parse, "field '" + (n.path.empty() ? std::string("(root)") : n.path) + "': " + what);
}

bool has(const Node& n, const char* key) { return n.j->is_object() && n.j->contains(key); }

Node field(const Node& n, const char* key) {
  if (!n.j->is_object()) fail(n, "expected an object");
  const auto it = n.j->find(key);
  const std::string path = n.path.empty() ? std::string(key) : n.path + "." + key;
  if (it == n.j->end()) throw Error(ErrorKind::Parse, "missing field '" + path + "'");
  return {&*it, path};
}

std::size_t array_size(const Node& n) {
  if (!n.j->is_array()) fail(n, "expected an array");
  return n.j->size();
}

Node item(const Node& n, std::size_t i) {
  if (!n.j->is_array() || i >= n.j->size()) fail(n, "expected an array with at least " + std::to_string(i + 1) + " entries");
  return {&(*n.j)[i], n.path + "[" + std::to_string(i) + "]"};
}

std::int64_t integer(const Node& n) {
  if (!n.j->is_number_integer()) fail(n, "expected an integer");
  if (n.j->is_number_unsigned()) {
    const auto u = n.j->get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(INT64_MAX)) fail(n, "integer out of range");
    return static_cast<std::int64_t>(u);
  }
  return n.j->get<std::int64_t>();
}

std::size_t count(const Node& n, std::size_t max) {
  const std::int64_t v = integer(n);
  if (v < 0 || static_cast<std::uint64_t>(v) > max) fail(n, "expected an integer in [0, " + std::to_string(max) + "]");
  return static_cast<std::size_t>(v);
}

bool boolean(const Node& n) {
  if (!n.j->is_boolean()) fail(n, "expected true or false");
  return n.j->get<bool>();
}

std::string text(const Node& n) {
  if (!n.j->is_string()) fail(n, "expected a string");
  return n.j->get<std::string>();
}

Elem elem(const Node& n, std::uint32_t p) {
  const std::int64_t v = integer(n) % static_cast<std::int64_t>(p);
  return static_cast<Elem>(v < 0 ? v + p : v);
}

Vec vec(const Node& n, std::uint32_t p, std::size_t size) {
  if (array_size(n) != size) fail(n, "expected " + std::to_string(size) + " entries, found " + std::to_string(n.j->size()));
  Vec out(size);
  for (std::size_t i = 0; i < size; ++i) out[i] = elem(item(n, i), p);
  return out;
}

Matrix matrix(const Node& n, std::uint32_t p) {
  const Node shape = field(n, "shape");
  if (array_size(shape) != 2) fail(shape, "expected [rows, cols]");
  const std::size_t r = count(item(shape, 0), kMaxMatrixSide);
  const std::size_t c = count(item(shape, 1), kMaxMatrixSide);
  const Node rows = field(n, "rows");
  if (array_size(rows) != r) fail(rows, "expected " + std::to_string(r) + " rows");
  Matrix m(r, c, p);
  for (std::size_t i = 0; i < r; ++i) {
    const Vec row = vec(item(rows, i), p, c);
    std::copy(row.begin(), row.end(), m.row(i).begin());
  }
  return m;
}

std::vector<ElementPair> pairs(const Node& n, std::uint32_t p, std::size_t dim) {
  std::vector<ElementPair> out;
  for (std::size_t i = 0; i < array_size(n); ++i) {
    const Node pr = item(n, i);
    if (array_size(pr) != 2) fail(pr, "expected a pair [x, y]");
    out.emplace_back(vec(item(pr, 0), p, dim), vec(item(pr, 1), p, dim));
  }
  return out;
}

std::uint32_t prime(const Node& n) {
  const Node pn = field(n, "p");
  const std::int64_t p = integer(pn);
  if (p < 2 || p > 65535 || !is_prime(static_cast<std::uint32_t>(p))) fail(pn, "expected a prime below 2^16");
  return static_cast<std::uint32_t>(p);
}

void check_valid(const ValidationReport& r, const std::string& what) {
  require(r.ok, ErrorKind::Invalid, what + ": " + r.message);
}

Algebra algebra_from(const Node& n) {
  const std::uint32_t p = prime(n);
  const std::size_t dim = count(field(n, "dim"), kMaxAlgebraDim);
  require(dim > 0, ErrorKind::Parse, "field '" + field(n, "dim").path + "': algebra dimension must be positive");
  const Vec unit = vec(field(n, "unit"), p, dim);
  std::vector<Elem> table;
  table.reserve(dim * dim * dim);
  const Node t = field(n, "table");
  if (array_size(t) != dim) fail(t, "expected " + std::to_string(dim) + " rows");
  for (std::size_t i = 0; i < dim; ++i) {
    const Node row = item(t, i);
    if (array_size(row) != dim) fail(row, "expected " + std::to_string(dim) + " entries");
    for (std::size_t j = 0; j < dim; ++j) {
      const Vec c = vec(item(row, j), p, dim);
      table.insert(table.end(), c.begin(), c.end());
    }
  }
  std::vector<std::string> labels;
  if (has(n, "labels")) {
    const Node l = field(n, "labels");
    if (array_size(l) != dim) fail(l, "expected " + std::to_string(dim) + " labels");
    for (std::size_t i = 0; i < dim; ++i) labels.push_back(text(item(l, i)));
  }
  Algebra a(p, dim, std::move(table), unit, std::move(labels));
  check_valid(validate(a), "invalid algebra");
  return a;
}

Module action_from(const Node& n, const Algebra& a) {
  const std::size_t dim = count(field(n, "dim"), kMaxModuleDim);
  const Node act = field(n, "action");
  if (dim == 0) return Module::zero(a);
  if (array_size(act) != a.dim()) fail(act, "expected one matrix per basis element (" + std::to_string(a.dim()) + ")");
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Matrix m = matrix(item(act, i), a.p());
    if (m.rows() != dim || m.cols() != dim) fail(item(act, i), "expected a " + std::to_string(dim) + " x " + std::to_string(dim) + " matrix");
    mats.push_back(std::move(m));
  }
  Module m = Module::from_basis_action(a, std::move(mats));
  check_valid(validate(m), "invalid module");
  return m;
}

FiniteGroup group_from(const Node& n) {
  if (has(n, "table")) {
    const Node t = field(n, "table");
    const std::size_t order = array_size(t);
    if (order == 0 || order > kMaxGroupOrder) fail(t, "expected between 1 and " + std::to_string(kMaxGroupOrder) + " rows");
    std::vector<std::vector<std::uint32_t>> table(order, std::vector<std::uint32_t>(order));
    for (std::size_t i = 0; i < order; ++i) {
      const Node row = item(t, i);
      if (array_size(row) != order) fail(row, "expected " + std::to_string(order) + " entries");
      for (std::size_t j = 0; j < order; ++j) table[i][j] = static_cast<std::uint32_t>(count(item(row, j), order - 1));
    }
    std::vector<std::string> labels;
    if (has(n, "labels")) {
      const Node l = field(n, "labels");
      if (array_size(l) != order) fail(l, "expected " + std::to_string(order) + " labels");
      for (std::size_t i = 0; i < order; ++i) labels.push_back(text(item(l, i)));
    }
    try {
      return FiniteGroup(std::move(table), std::move(labels));
    } catch (const Error& e) {
      throw Error(ErrorKind::Invalid, std::string("invalid group: ") + e.what());
    }
  }
  if (has(n, "generators")) {
    const std::size_t degree = count(field(n, "degree"), 64);
    const Node g = field(n, "generators");
    std::vector<Permutation> perms;
    for (std::size_t i = 0; i < array_size(g); ++i) {
      try {
        perms.push_back(parse_cycles(text(item(g, i)), degree));
      } catch (const Error& e) {
        fail(item(g, i), e.what());
      }
    }
    return group_from_generators(perms);
  }
  if (has(n, "name")) {
    const Node nm = field(n, "name");
    try {
      return gallery_group(text(nm));
    } catch (const Error& e) {
      fail(nm, e.what());
    }
  }
  fail(n, "expected one of 'table', 'generators' or 'name'");
}

Extension extension_from(const Node& n) {
  const Algebra b = algebra_from(field(n, "b"));
  const Algebra a = algebra_from(field(n, "a"));
  if (a.p() != b.p()) fail(n, "algebras over different primes");
  Matrix embed = matrix(field(n, "embed"), a.p());
  if (embed.rows() != a.dim() || embed.cols() != b.dim()) fail(field(n, "embed"), "expected a dim(A) x dim(B) matrix");
  return make_extension(b, a, std::move(embed));
}

LowerProvenance provenance_from(const Node& n) {
  const std::string s = text(n);
  for (auto p : {LowerProvenance::Semisimple, LowerProvenance::NoRepdimOne, LowerProvenance::HigmanRepInfinite,
                 LowerProvenance::UserAssertion})
    if (to_string(p) == s) return p;
  fail(n, "unknown provenance '" + s + "'");
}

json parse(const std::string& text_in) {
  try {
    return json::parse(text_in);
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text_in.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < upto; ++i) {
      if (text_in[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " + std::to_string(col) +
                                      ": malformed document");
  }
}

Node root(const json& j, const std::string& type) {
  const Node n{&j, ""};
  const std::string found = text(field(n, "type"));
  if (found != type) fail(field(n, "type"), "expected a '" + type + "' document, found '" + found + "'");
  return n;
}

}  // namespace

std::string certificate_kind(const Certificate& c) {
  struct Visitor {
    std::string operator()(const SplitCert&) const { return "split"; }
    std::string operator()(const SeparabilityCert&) const { return "separable"; }
    std::string operator()(const SummandCert&) const { return "summand"; }
    std::string operator()(const FrobeniusSystem&) const { return "frobenius"; }
  };
  return std::visit(Visitor{}, c.payload);
}

ValidationReport verify(const Certificate& c) {
  struct Visitor {
    const Extension& e;
    ValidationReport operator()(const SplitCert& x) const { return verify_split(e, x); }
    ValidationReport operator()(const SeparabilityCert& x) const { return verify_separable(e, x); }
    ValidationReport operator()(const SummandCert& x) const { return verify_summand_cert(e, x); }
    ValidationReport operator()(const FrobeniusSystem& x) const { return verify_frobenius_system(e, x); }
  };
  return std::visit(Visitor{c.ext}, c.payload);
}

std::string to_document(const Algebra& a) { return render(algebra_json(a)); }
std::string to_document(const Module& m) { return render(module_json(m)); }
std::string to_document(const FiniteGroup& g) { return render(group_json(g)); }
std::string to_document(const Extension& e) { return render(extension_json(e)); }

std::string to_document(const Certificate& c) {
  json out = {{"type", "certificate"}, {"kind", certificate_kind(c)}, {"extension", extension_json(c.ext)}};
  if (const auto* s = std::get_if<SplitCert>(&c.payload)) {
    out["retraction"] = matrix_json(s->retraction);
  } else if (const auto* s = std::get_if<SeparabilityCert>(&c.payload)) {
    out["element"] = s->element;
    out["lift"] = pairs_json(s->lift);
  } else if (const auto* s = std::get_if<SummandCert>(&c.payload)) {
    out["source"] = s->source;
    out["target"] = s->target;
    out["copies"] = s->witness.copies;
    out["injection"] = matrix_json(s->witness.injection);
    out["retraction"] = matrix_json(s->witness.retraction);
  } else if (const auto* s = std::get_if<FrobeniusSystem>(&c.payload)) {
    out["e_map"] = matrix_json(s->e_map);
    out["pairs"] = pairs_json(s->pairs);
  }
  return render(out);
}

std::string to_document(const RepdimReport& r) {
  json out = {{"type", "repdim-report"},
              {"algebra", algebra_json(r.algebra)},
              {"lower", {{"bound", r.lower.bound}, {"provenance", to_string(r.lower.provenance)}, {"detail", r.lower.detail}}},
              {"exact", r.exact},
              {"loewy_length", r.loewy_length},
              {"self_injective", r.self_injective},
              {"witness_verified", r.witness_verified},
              {"transcript", r.transcript}};
  out["loewy_bound_holds"] = r.loewy_bound_holds ? json(*r.loewy_bound_holds) : json(nullptr);
  if (r.upper) {
    out["upper"] = {{"bound", r.upper->bound},
                    {"x", r.upper->x_labels},
                    {"witness", action_json(r.upper->witness)},
                    {"evaluated", r.upper->candidates_evaluated},
                    {"skipped", r.upper->candidates_skipped}};
  } else {
    out["upper"] = nullptr;
  }
  return render(out);
}

Algebra algebra_from_document(const std::string& text_in) {
  const json j = parse(text_in);
  return algebra_from(root(j, "algebra"));
}

Module module_from_document(const std::string& text_in) {
  const json j = parse(text_in);
  const Node n = root(j, "module");
  return action_from(n, algebra_from(field(n, "algebra")));
}

FiniteGroup group_from_document(const std::string& text_in) {
  const json j = parse(text_in);
  return group_from(root(j, "group"));
}

Extension extension_from_document(const std::string& text_in) {
  const json j = parse(text_in);
  return extension_from(root(j, "extension"));
}

Certificate certificate_from_document(const std::string& text_in) {
  const json j = parse(text_in);
  const Node n = root(j, "certificate");
  Certificate c{extension_from(field(n, "extension")), SplitCert{}};
  const std::uint32_t p = c.ext.a.p();
  const std::size_t da = c.ext.a.dim();
  const std::string kind = text(field(n, "kind"));
  if (kind == "split") {
    c.payload = SplitCert{matrix(field(n, "retraction"), p)};
  } else if (kind == "separable") {
    const Node el = field(n, "element");
    c.payload = SeparabilityCert{vec(el, p, array_size(el)), pairs(field(n, "lift"), p, da)};
  } else if (kind == "summand") {
    SummandWitness w{count(field(n, "copies"), kMaxModuleDim), matrix(field(n, "injection"), p),
                     matrix(field(n, "retraction"), p)};
    c.payload = SummandCert{text(field(n, "source")), text(field(n, "target")), std::move(w)};
  } else if (kind == "frobenius") {
    c.payload = FrobeniusSystem{matrix(field(n, "e_map"), p), pairs(field(n, "pairs"), p, da)};
  } else {
    fail(field(n, "kind"), "unknown certificate kind '" + kind + "'");
  }
  return c;
}

RepdimReport report_from_document(const std::string& text_in) {
  const json j = parse(text_in);
  const Node n = root(j, "repdim-report");
  RepdimReport r;
  r.algebra = algebra_from(field(n, "algebra"));
  const Node lo = field(n, "lower");
  r.lower = {count(field(lo, "bound"), 3), provenance_from(field(lo, "provenance")), text(field(lo, "detail"))};
  r.exact = boolean(field(n, "exact"));
  r.loewy_length = count(field(n, "loewy_length"), kMaxAlgebraDim);
  r.self_injective = boolean(field(n, "self_injective"));
  r.witness_verified = boolean(field(n, "witness_verified"));
  const Node lb = field(n, "loewy_bound_holds");
  if (!lb.j->is_null()) r.loewy_bound_holds = boolean(lb);
  const Node tr = field(n, "transcript");
  for (std::size_t i = 0; i < array_size(tr); ++i) r.transcript.push_back(text(item(tr, i)));
  const Node up = field(n, "upper");
  if (!up.j->is_null()) {
    UpperBound u;
    u.bound = count(field(up, "bound"), kMaxResolutionLength);
    const Node x = field(up, "x");
    for (std::size_t i = 0; i < array_size(x); ++i) u.x_labels.push_back(text(item(x, i)));
    u.witness = action_from(field(up, "witness"), r.algebra);
    u.candidates_evaluated = count(field(up, "evaluated"), SIZE_MAX >> 1);
    u.candidates_skipped = count(field(up, "skipped"), SIZE_MAX >> 1);
    r.upper = std::move(u);
  }
  return r;
}

std::string normalize_document(const std::string& text_in) { return render(parse(text_in)); }

std::string document_type(const std::string& text_in) {
  const json j = parse(text_in);
  return text(field(Node{&j, ""}, "type"));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), ErrorKind::Parse, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text_in) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), ErrorKind::Invalid, "cannot write '" + path + "'");
  out << text_in;
}

}  // namespace repdim
