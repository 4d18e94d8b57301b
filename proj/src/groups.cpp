#include "repdim/groups.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>

namespace repdim {

FiniteGroup::FiniteGroup(std::vector<std::vector<std::uint32_t>> table, std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)) {
  const std::size_t n = table_.size();
  require(n >= 1, ErrorKind::Invalid, "group must be nonempty");
  require(n <= kMaxGroupOrder, ErrorKind::CapExceeded, "group order exceeds cap");
  for (const auto& row : table_) {
    require(row.size() == n, ErrorKind::Invalid, "Cayley table must be square");
    for (auto v : row) require(v < n, ErrorKind::Invalid, "Cayley table entry out of range");
  }
  for (std::uint32_t i = 0; i < n; ++i)
    require(table_[0][i] == i && table_[i][0] == i, ErrorKind::Invalid, "element 0 must be the identity");
  inverse_.assign(n, n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j)
      if (table_[i][j] == 0) {
        inverse_[i] = j;
        break;
      }
    require(inverse_[i] < n, ErrorKind::Invalid, "element without inverse");
  }
  if (!labels_.empty()) require(labels_.size() == n, ErrorKind::Invalid, "label count mismatch");
  // Greedy generating set.
  std::vector<char> in(n, 0);
  in[0] = 1;
  std::size_t covered = 1;
  for (std::uint32_t g = 1; g < n && covered < n; ++g) {
    if (in[g]) continue;
    gens_.push_back(g);
    // Closure of the current generated set.
    std::vector<std::uint32_t> elems;
    for (std::uint32_t x = 0; x < n; ++x)
      if (in[x]) elems.push_back(x);
    for (std::size_t q = 0; q < elems.size(); ++q)
      for (auto s : gens_) {
        const auto y = table_[elems[q]][s];
        if (!in[y]) {
          in[y] = 1;
          elems.push_back(y);
        }
      }
    covered = elems.size();
  }
}

std::string FiniteGroup::label(std::uint32_t g) const {
  return labels_.empty() ? "g" + std::to_string(g) : labels_[g];
}

std::size_t FiniteGroup::element_order(std::uint32_t g) const {
  std::size_t k = 1;
  for (std::uint32_t x = g; x != 0; x = table_[x][g]) ++k;
  return k;
}

bool Subgroup::contains(std::uint32_t g) const { return std::binary_search(elements.begin(), elements.end(), g); }

Permutation parse_cycles(const std::string& text, std::size_t degree) {
  Permutation perm(degree);
  std::iota(perm.begin(), perm.end(), 0u);
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  if (s.empty() || s == "()" || s == "e" || s == "1") return perm;
  const std::regex cycle_re(R"(\s*\(([0-9,\s]*)\)\s*)");
  std::size_t pos = 0;
  auto it = std::sregex_iterator(text.begin(), text.end(), cycle_re);
  for (; it != std::sregex_iterator(); ++it) {
    require(static_cast<std::size_t>(it->position()) == pos, ErrorKind::Parse, "bad cycle notation: " + text);
    pos += static_cast<std::size_t>(it->length());
    std::string body = (*it)[1];
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream in(body);
    std::vector<std::uint32_t> pts;
    long v;
    while (in >> v) {
      require(v >= 1 && static_cast<std::size_t>(v) <= degree, ErrorKind::Parse, "cycle point out of range: " + text);
      pts.push_back(static_cast<std::uint32_t>(v - 1));
    }
    // Cycles compose right-to-left, so apply each new cycle first.
    Permutation c(degree);
    std::iota(c.begin(), c.end(), 0u);
    for (std::size_t k = 0; k < pts.size(); ++k) {
      require(!std::count(pts.begin(), pts.begin() + static_cast<long>(k), pts[k]), ErrorKind::Parse,
              "repeated point in cycle: " + text);
      c[pts[k]] = pts[(k + 1) % pts.size()];
    }
    Permutation next(degree);
    for (std::size_t x = 0; x < degree; ++x) next[x] = perm[c[x]];
    perm = std::move(next);
  }
  require(pos == text.size(), ErrorKind::Parse, "bad cycle notation: " + text);
  return perm;
}

std::string format_cycles(const Permutation& perm) {
  std::string out;
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == i) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = perm[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

namespace {

Permutation compose(const Permutation& g, const Permutation& h) {
  Permutation r(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) r[x] = g[h[x]];
  return r;
}

}  // namespace

FiniteGroup group_from_generators(const std::vector<Permutation>& perms) {
  require(!perms.empty(), ErrorKind::Invalid, "no generators");
  const std::size_t degree = perms[0].size();
  for (const auto& g : perms) {
    require(g.size() == degree, ErrorKind::Invalid, "generators of different degree");
    std::vector<char> hit(degree, 0);
    for (auto v : g) {
      require(v < degree && !hit[v], ErrorKind::Invalid, "not a permutation");
      hit[v] = 1;
    }
  }
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::vector<Permutation> elems{id};
  std::map<Permutation, std::uint32_t> index_of{{id, 0}};
  for (std::size_t q = 0; q < elems.size(); ++q)
    for (const auto& s : perms) {
      Permutation y = compose(elems[q], s);
      if (index_of.emplace(y, static_cast<std::uint32_t>(elems.size())).second) {
        elems.push_back(std::move(y));
        require(elems.size() <= kMaxGroupOrder, ErrorKind::CapExceeded, "group order exceeds cap");
      }
    }
  const std::size_t n = elems.size();
  std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = index_of.at(compose(elems[i], elems[j]));
  std::vector<std::string> labels;
  for (const auto& e : elems) labels.push_back(format_cycles(e));
  return FiniteGroup(std::move(table), std::move(labels));
}

std::uint32_t find_permutation(const FiniteGroup& g, const Permutation& perm) {
  const std::string l = format_cycles(perm);
  for (std::uint32_t i = 0; i < g.order(); ++i)
    if (g.label(i) == l) return i;
  fail(ErrorKind::Invalid, "permutation " + l + " not in group");
}

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<std::uint32_t>& elements) {
  std::vector<char> in(g.order(), 0);
  std::vector<std::uint32_t> el{0};
  in[0] = 1;
  for (auto e : elements) require(e < g.order(), ErrorKind::Invalid, "element index out of range");
  for (std::size_t q = 0; q < el.size(); ++q)
    for (auto s : elements) {
      const auto y = g.mul(el[q], s);
      if (!in[y]) {
        in[y] = 1;
        el.push_back(y);
      }
    }
  std::sort(el.begin(), el.end());
  return Subgroup{std::move(el)};
}

Subgroup whole_group(const FiniteGroup& g) {
  Subgroup h;
  h.elements.resize(g.order());
  std::iota(h.elements.begin(), h.elements.end(), 0u);
  return h;
}

Subgroup trivial_subgroup() { return Subgroup{{0}}; }

bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (h.elements.empty() || h.elements[0] != 0) return false;
  if (!std::is_sorted(h.elements.begin(), h.elements.end())) return false;
  for (auto a : h.elements) {
    if (a >= g.order()) return false;
    for (auto b : h.elements)
      if (!h.contains(g.mul(a, b))) return false;
  }
  return true;
}

std::size_t index(const FiniteGroup& g, const Subgroup& h) {
  require(is_subgroup(g, h), ErrorKind::Invalid, "not a subgroup");
  return g.order() / h.order();
}

namespace {
bool normalizes(const FiniteGroup& g, const Subgroup& h, std::uint32_t x) {
  const auto xi = g.inv(x);
  for (auto a : h.elements)
    if (!h.contains(g.mul(g.mul(x, a), xi))) return false;
  return true;
}
}  // namespace

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  require(is_subgroup(g, h), ErrorKind::Invalid, "not a subgroup");
  for (auto x : g.generators())
    if (!normalizes(g, h, x)) return false;
  return true;
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  Subgroup n;
  for (std::uint32_t x = 0; x < g.order(); ++x)
    if (normalizes(g, h, x)) n.elements.push_back(x);
  return n;
}

NormalizerChain normalizer_chain(const FiniteGroup& g, const Subgroup& h) {
  require(is_subgroup(g, h), ErrorKind::Invalid, "not a subgroup");
  NormalizerChain out;
  out.chain.push_back(h);
  while (!is_normal(g, out.chain.back())) {
    Subgroup n = normalizer(g, out.chain.back());
    if (n == out.chain.back()) {
      out.status = ChainStatus::StabilizedNonNormal;
      return out;
    }
    out.chain.push_back(std::move(n));
  }
  out.status = ChainStatus::ReachedNormal;
  return out;
}

namespace {
bool is_power_of(std::size_t n, std::uint32_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}
}  // namespace

Subgroup sylow_subgroup(const FiniteGroup& g, std::uint32_t p) {
  require(is_prime(p), ErrorKind::Invalid, "sylow_subgroup needs a prime");
  std::size_t target = 1;
  for (std::size_t n = g.order(); n % p == 0; n /= p) target *= p;
  Subgroup cur = trivial_subgroup();
  while (cur.order() < target) {
    const Subgroup n = normalizer(g, cur);
    bool grown = false;
    for (auto x : n.elements) {
      if (cur.contains(x) || !is_power_of(g.element_order(x), p)) continue;
      std::vector<std::uint32_t> gens = cur.elements;
      gens.push_back(x);
      Subgroup next = subgroup_generated(g, gens);
      if (!is_power_of(next.order(), p)) continue;
      cur = std::move(next);
      grown = true;
      break;
    }
    require(grown, ErrorKind::Verification, "sylow search stalled");
  }
  return cur;
}

bool is_cyclic(const FiniteGroup& g, const Subgroup& h) {
  for (auto x : h.elements)
    if (g.element_order(x) == h.order()) return true;
  return false;
}

std::vector<std::uint32_t> coset_representatives(const FiniteGroup& g, const Subgroup& h, Side side) {
  require(is_subgroup(g, h), ErrorKind::Invalid, "not a subgroup");
  std::vector<char> done(g.order(), 0);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    reps.push_back(x);
    for (auto a : h.elements) done[side == Side::Left ? g.mul(x, a) : g.mul(a, x)] = 1;
  }
  return reps;
}

std::vector<std::vector<std::uint32_t>> double_cosets(const FiniteGroup& g, const Subgroup& h) {
  require(is_subgroup(g, h), ErrorKind::Invalid, "not a subgroup");
  std::vector<char> done(g.order(), 0);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<std::uint32_t> cls;
    for (auto a : h.elements)
      for (auto b : h.elements) {
        const auto y = g.mul(g.mul(a, x), b);
        if (!done[y]) {
          done[y] = 1;
          cls.push_back(y);
        }
      }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

Algebra group_algebra(const FiniteGroup& g, std::uint32_t p) {
  const std::size_t n = g.order();
  require(n <= kMaxAlgebraDim, ErrorKind::CapExceeded, "group algebra dimension exceeds cap");
  std::vector<Elem> table(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[(i * n + j) * n + g.mul(i, j)] = 1;
  std::vector<std::string> labels;
  for (std::uint32_t i = 0; i < n; ++i) labels.push_back(g.label(i));
  Algebra a(p, n, std::move(table), unit_vector(n, 0), std::move(labels));
  std::vector<Vec> gens;
  for (auto s : g.generators()) gens.push_back(unit_vector(n, s));
  return a.with_generators(std::move(gens));
}

HigmanVerdict higman_rep_type(const FiniteGroup& g, std::uint32_t p) {
  HigmanVerdict v;
  v.sylow = sylow_subgroup(g, p);
  v.sylow_cyclic = is_cyclic(g, v.sylow);
  v.type = v.sylow_cyclic ? RepType::Finite : RepType::Infinite;
  return v;
}

FiniteGroup cyclic_group(std::size_t n) {
  require(n >= 1, ErrorKind::Invalid, "cyclic group order must be positive");
  if (n == 1) return FiniteGroup({{0}}, {"()"});
  Permutation c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<std::uint32_t>((i + 1) % n);
  return group_from_generators({c});
}

FiniteGroup klein_four() {
  return group_from_generators({parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)});
}

FiniteGroup dihedral_group(std::size_t n) {
  require(n >= 2, ErrorKind::Invalid, "dihedral group needs n >= 2");
  if (n == 2) return klein_four();
  Permutation r(n), s(n);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = static_cast<std::uint32_t>((i + 1) % n);
    s[i] = static_cast<std::uint32_t>((n - i) % n);
  }
  return group_from_generators({r, s});
}

FiniteGroup symmetric_group(std::size_t n) {
  require(n >= 1 && n <= 7, ErrorKind::CapExceeded, "symmetric group degree must be 1..7");
  if (n == 1) return cyclic_group(1);
  if (n == 2) return group_from_generators({parse_cycles("(1 2)", 2)});
  Permutation cyc(n);
  for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<std::uint32_t>((i + 1) % n);
  return group_from_generators({parse_cycles("(1 2)", n), cyc});
}

FiniteGroup alternating_group(std::size_t n) {
  require(n >= 1 && n <= 7, ErrorKind::CapExceeded, "alternating group degree must be 1..7");
  if (n <= 2) return cyclic_group(1);
  std::vector<Permutation> gens;
  for (std::size_t k = 3; k <= n; ++k) gens.push_back(parse_cycles("(1 2 " + std::to_string(k) + ")", n));
  return group_from_generators(gens);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order();
  require(na * nb <= kMaxGroupOrder, ErrorKind::CapExceeded, "group order exceeds cap");
  std::vector<std::vector<std::uint32_t>> table(na * nb, std::vector<std::uint32_t>(na * nb));
  std::vector<std::string> labels;
  for (std::uint32_t i = 0; i < na; ++i)
    for (std::uint32_t j = 0; j < nb; ++j) labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
  for (std::uint32_t x = 0; x < na * nb; ++x)
    for (std::uint32_t y = 0; y < na * nb; ++y)
      table[x][y] = a.mul(x / nb, y / nb) * static_cast<std::uint32_t>(nb) + b.mul(x % nb, y % nb);
  return FiniteGroup(std::move(table), std::move(labels));
}

FiniteGroup gallery_group(const std::string& name) {
  const auto cross = name.find(" x ");
  if (cross != std::string::npos)
    return direct_product(gallery_group(name.substr(0, cross)), gallery_group(name.substr(cross + 3)));
  const std::regex re(R"(^\s*([a-z]+?)([0-9]*)\s*$)");
  std::smatch m;
  require(std::regex_match(name, m, re), ErrorKind::Parse, "unknown group: " + name);
  const std::string base = m[1];
  const std::size_t n = m[2].length() ? std::stoul(m[2]) : 0;
  if (base == "klein" && n == 4) return klein_four();
  require(n > 0, ErrorKind::Parse, "missing group parameter: " + name);
  if (base == "cyclic" || base == "c") return cyclic_group(n);
  if (base == "dihedral" || base == "d") return dihedral_group(n);
  if (base == "sym" || base == "s") return symmetric_group(n);
  if (base == "alt" || base == "a") return alternating_group(n);
  fail(ErrorKind::Parse, "unknown group: " + name);
}

Algebra gallery_algebra(const std::string& name, std::uint32_t p) {
  const std::regex re(R"(^\s*([a-z]+)\s*\(\s*(.+?)\s*\)\s*$)");
  std::smatch m;
  require(std::regex_match(name, m, re), ErrorKind::Parse, "unknown algebra: " + name);
  const std::string base = m[1];
  const std::string arg = m[2];
  if (base == "group") return group_algebra(gallery_group(arg), p);
  require(std::all_of(arg.begin(), arg.end(), [](unsigned char c) { return std::isdigit(c); }) && arg.size() < 4,
          ErrorKind::Parse, "bad parameter in " + name);
  const std::size_t n = std::stoul(arg);
  require(n > 0, ErrorKind::Parse, "bad parameter in " + name);
  if (base == "matrix") return matrix_algebra(n, p);
  if (base == "centrosymmetric") return centrosymmetric_algebra(n, p);
  fail(ErrorKind::Parse, "unknown algebra: " + name);
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
  require(is_subgroup(g, h), ErrorKind::Invalid, "not a subgroup");
  std::vector<std::uint32_t> pos(g.order(), 0);
  for (std::size_t i = 0; i < h.order(); ++i) pos[h.elements[i]] = static_cast<std::uint32_t>(i);
  std::vector<std::vector<std::uint32_t>> table(h.order(), std::vector<std::uint32_t>(h.order()));
  for (std::size_t i = 0; i < h.order(); ++i)
    for (std::size_t j = 0; j < h.order(); ++j) table[i][j] = pos[g.mul(h.elements[i], h.elements[j])];
  std::vector<std::string> labels;
  if (!g.labels().empty())
    for (auto e : h.elements) labels.push_back(g.label(e));
  return FiniteGroup(std::move(table), std::move(labels));
}

Matrix subgroup_embedding(const FiniteGroup& g, const Subgroup& h, std::uint32_t p) {
  Matrix m(g.order(), h.order(), p);
  for (std::size_t i = 0; i < h.order(); ++i) m(h.elements[i], i) = 1;
  return m;
}

GroupExtension group_extension(const FiniteGroup& g, const Subgroup& h, std::uint32_t p) {
  GroupExtension out{g, h, make_extension(group_algebra(subgroup_as_group(g, h), p), group_algebra(g, p),
                                          subgroup_embedding(g, h, p)),
                     {}, std::nullopt};
  const std::size_t n = g.order();
  out.system.e_map = subgroup_embedding(g, h, p).transpose();
  const auto reps = coset_representatives(g, h, Side::Left);
  for (auto r : reps) out.system.pairs.emplace_back(unit_vector(n, r), unit_vector(n, g.inv(r)));
  const auto check = verify_frobenius_system(out.ext, out.system);
  require(check.ok, ErrorKind::Verification, "canonical Frobenius system failed: " + check.message);
  const PrimeField F(p);
  const Elem idx = static_cast<Elem>(reps.size() % p);
  if (idx != 0) {
    SeparabilityCert cert;
    const Elem s = F.inv(idx);
    for (auto r : reps) cert.lift.emplace_back(vec_scale(F, s, unit_vector(n, r)), unit_vector(n, g.inv(r)));
    const BimoduleViews views = bimodule_views(out.ext);
    Vec v(n * n, 0);
    for (const auto& [x, y] : cert.lift)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) v[i * n + j] = F.add(v[i * n + j], F.mul(x[i], y[j]));
    cert.element = views.tensor_detail.projection * v;
    const auto sep = verify_separable(out.ext, cert);
    require(sep.ok, ErrorKind::Verification, "Casimir element failed: " + sep.message);
    out.casimir = std::move(cert);
  }
  return out;
}

}  // namespace repdim
