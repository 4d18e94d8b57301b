#include "repdim/module.hpp"

#include <algorithm>
#include <random>

#include "repdim/polynomial.hpp"

namespace repdim {

namespace {

void check_rep(const Representation& r) {
  require(r.dim <= kMaxModuleDim, ErrorKind::CapExceeded,
          "module dimension " + std::to_string(r.dim) + " exceeds cap " + std::to_string(kMaxModuleDim));
  for (const auto& g : r.gens)
    require(g.rows() == r.dim && g.cols() == r.dim && g.p() == r.p, ErrorKind::Mismatch,
            "action matrix has wrong shape or modulus");
}

void check_same(const Module& m, const Module& n) {
  require(same_algebra(m.algebra(), n.algebra()), ErrorKind::Mismatch, "modules over different algebras");
}

void check_compatible(const Representation& m, const Representation& n) {
  require(m.p == n.p && m.gens.size() == n.gens.size(), ErrorKind::Mismatch,
          "representations of different generating sets");
}

}  // namespace

// ---------------------------------------------------------------------------
// Module

Module::Module(Algebra a, std::size_t dim, std::vector<Matrix> generator_action) : d_(std::make_shared<Data>()) {
  require(generator_action.size() == a.generators().size(), ErrorKind::Mismatch,
          "need one action matrix per algebra generator");
  d_->rep = Representation{a.p(), dim, std::move(generator_action)};
  d_->algebra = std::move(a);
  check_rep(d_->rep);
}

Module Module::from_basis_action(Algebra a, std::vector<Matrix> basis_action) {
  require(basis_action.size() == a.dim(), ErrorKind::Mismatch, "need one action matrix per basis element");
  const std::size_t dim = basis_action[0].rows();
  for (const auto& m : basis_action)
    require(m.rows() == dim && m.cols() == dim && m.p() == a.p(), ErrorKind::Mismatch,
            "action matrix has wrong shape or modulus");
  std::vector<Matrix> gens;
  for (const auto& g : a.generators()) {
    Matrix s(dim, dim, a.p());
    for (std::size_t i = 0; i < a.dim(); ++i) add_scaled(s, g[i], basis_action[i]);
    gens.push_back(std::move(s));
  }
  Module m(a, dim, std::move(gens));
  std::call_once(m.d_->basis_once, [&] { m.d_->basis = std::move(basis_action); });
  return m;
}

Module Module::zero(Algebra a) {
  const std::uint32_t p = a.p();
  std::vector<Matrix> gens(a.generators().size(), Matrix(0, 0, p));
  Module m(std::move(a), 0, std::move(gens));
  return m;
}

const std::vector<Matrix>& Module::basis_action() const {
  std::call_once(d_->basis_once, [this] {
    const auto& w = algebra().word_expansion();
    const std::size_t n = algebra().dim(), d = dim();
    std::vector<Matrix> words;
    words.reserve(n);
    for (std::size_t t = 0; t < n; ++t)
      words.push_back(t == 0 ? Matrix::identity(d, p()) : generator_action()[w.generator[t]] * words[w.parent[t]]);
    std::vector<Matrix> basis(n, Matrix(d, d, p()));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < n; ++t) add_scaled(basis[i], w.coeffs(i, t), words[t]);
    d_->basis = std::move(basis);
  });
  return d_->basis;
}

Matrix Module::act(std::span<const Elem> a) const {
  require(a.size() == algebra().dim(), ErrorKind::Mismatch, "element length mismatch");
  Matrix s(dim(), dim(), p());
  const auto& b = basis_action();
  for (std::size_t i = 0; i < a.size(); ++i) add_scaled(s, a[i], b[i]);
  return s;
}

std::vector<Vec> Module::orbit(std::span<const Elem> v) const {
  const auto& w = algebra().word_expansion();
  const std::size_t n = algebra().dim();
  std::vector<Vec> words;
  words.reserve(n);
  for (std::size_t t = 0; t < n; ++t)
    words.push_back(t == 0 ? Vec(v.begin(), v.end()) : generator_action()[w.generator[t]] * words[w.parent[t]]);
  const PrimeField F(p());
  std::vector<Vec> out(n, Vec(dim(), 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < n; ++t)
      if (w.coeffs(i, t)) vec_axpy(F, w.coeffs(i, t), words[t], out[i]);
  return out;
}

const Decomposition& Module::decomposition() const {
  std::lock_guard<std::mutex> lock(d_->dec_mutex);
  if (!d_->dec) d_->dec = std::make_shared<const Decomposition>(decompose(*this, 0));
  return *d_->dec;
}

std::vector<Matrix> Decomposition::idempotents() const {
  std::vector<Matrix> out;
  for (const auto& s : summands)
    for (std::size_t c = 0; c < s.multiplicity; ++c) out.push_back(s.inclusions[c] * s.projections[c]);
  return out;
}

std::size_t Decomposition::piece_count() const {
  std::size_t n = 0;
  for (const auto& s : summands) n += s.multiplicity;
  return n;
}

bool same_algebra(const Algebra& a, const Algebra& b) { return a.shares_data(b) || a.same_table(b); }

ValidationReport validate(const Module& m) {
  const Algebra& a = m.algebra();
  const auto& basis = m.basis_action();
  if (m.act(a.unit()) != Matrix::identity(m.dim(), m.p())) return {false, "unit does not act as identity"};
  // g b_j must act as rho(g) rho(b_j) for every generator g.
  for (std::size_t g = 0; g < a.generators().size(); ++g)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vec prod = a.multiply(a.generators()[g], a.basis_element(j));
      if (m.act(prod) != m.generator_action()[g] * basis[j])
        return {false, "action fails on generator " + std::to_string(g) + " times basis element " +
                           std::to_string(j)};
    }
  return {true, "ok"};
}

// ---------------------------------------------------------------------------
// Constructions

Module regular_module(const Algebra& a, Side side) {
  if (side == Side::Left) {
    std::vector<Matrix> basis;
    for (std::size_t i = 0; i < a.dim(); ++i) basis.push_back(a.left_basis_matrix(i));
    return Module::from_basis_action(a, std::move(basis));
  }
  Algebra op = opposite(a);
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < a.dim(); ++i) basis.push_back(a.right_basis_matrix(i));
  return Module::from_basis_action(std::move(op), std::move(basis));
}

Module dual_module(const Module& m) {
  std::vector<Matrix> gens;
  for (const auto& g : m.generator_action()) gens.push_back(g.transpose());
  return Module(opposite(m.algebra()), m.dim(), std::move(gens));
}

Module direct_sum(const Module& a, const Module& b) {
  check_same(a, b);
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < a.generator_action().size(); ++i)
    gens.push_back(block_diagonal({a.generator_action()[i], b.generator_action()[i]}, a.p()));
  return Module(a.algebra(), a.dim() + b.dim(), std::move(gens));
}

Module direct_sum(const std::vector<Module>& parts, const Algebra& a) {
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < a.generators().size(); ++i) {
    std::vector<Matrix> blocks;
    for (const auto& m : parts) {
      require(same_algebra(m.algebra(), a), ErrorKind::Mismatch, "modules over different algebras");
      blocks.push_back(m.generator_action()[i]);
    }
    gens.push_back(block_diagonal(blocks, a.p()));
  }
  std::size_t dim = 0;
  for (const auto& m : parts) dim += m.dim();
  return Module(a, dim, std::move(gens));
}

Module power(const Module& m, std::size_t n) { return direct_sum(std::vector<Module>(n, m), m.algebra()); }

namespace {

// Restricts the action to an invariant subspace given by an rref basis.
Representation restrict_to(const Representation& r, const std::vector<Vec>& rref_basis,
                           const std::vector<std::size_t>& pivots, bool check = false) {
  // With B the basis as columns, g B = B S where S is read off the pivot rows.
  Representation out{r.p, rref_basis.size(), {}};
  const std::size_t k = rref_basis.size();
  const Matrix b = Matrix::from_columns(rref_basis, r.dim, r.p);
  for (const auto& g : r.gens) {
    const Matrix gb = g * b;
    Matrix s(k, k, r.p);
    for (std::size_t u = 0; u < k; ++u) std::copy(gb.row(pivots[u]).begin(), gb.row(pivots[u]).end(), s.row(u).begin());
    if (check) require(b * s == gb, ErrorKind::Invalid, "subspace is not a submodule");
    out.gens.push_back(std::move(s));
  }
  return out;
}

}  // namespace

SubmoduleResult submodule(const Module& m, const std::vector<Vec>& basis) {
  EchelonSpace space(m.dim(), m.p());
  for (const auto& v : basis) space.insert(v);
  Representation r = restrict_to(m.rep(), space.basis(), space.pivots(), true);
  Matrix incl = Matrix::from_columns(space.basis(), m.dim(), m.p());
  return {Module(m.algebra(), r.dim, std::move(r.gens)), std::move(incl)};
}

SubmoduleResult submodule_generated(const Module& m, const std::vector<Vec>& vectors) {
  EchelonSpace space(m.dim(), m.p());
  std::vector<Vec> queue;
  for (const auto& v : vectors)
    if (space.insert(v)) queue.push_back(v);
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (const auto& g : m.generator_action()) {
      Vec w = g * queue[q];
      if (space.insert(w)) queue.push_back(std::move(w));
    }
  return submodule(m, space.basis());
}

QuotientResult quotient_module(const Module& m, const std::vector<Vec>& invariant_subspace) {
  EchelonSpace space(m.dim(), m.p());
  for (const auto& v : invariant_subspace) space.insert(v);
  const auto comp = space.complement_indices();
  const std::size_t q = comp.size();
  auto project = [&](Vec v) {
    space.reduce(v);
    Vec out(q);
    for (std::size_t t = 0; t < q; ++t) out[t] = v[comp[t]];
    return out;
  };
  Matrix proj(q, m.dim(), m.p());
  for (std::size_t j = 0; j < m.dim(); ++j) {
    const Vec c = project(unit_vector(m.dim(), j));
    for (std::size_t t = 0; t < q; ++t) proj(t, j) = c[t];
  }
  std::vector<Matrix> gens;
  for (const auto& g : m.generator_action()) {
    for (const auto& v : space.basis())
      require(space.contains(g * v), ErrorKind::Invalid, "subspace is not a submodule");
    Matrix s(q, q, m.p());
    for (std::size_t t = 0; t < q; ++t) {
      const Vec img = project(g.column(comp[t]));
      for (std::size_t u = 0; u < q; ++u) s(u, t) = img[u];
    }
    gens.push_back(std::move(s));
  }
  return {Module(m.algebra(), q, std::move(gens)), std::move(proj)};
}

SubmoduleResult kernel_module(const Module& m, const Matrix& f) {
  require(f.cols() == m.dim(), ErrorKind::Mismatch, "homomorphism has wrong source dimension");
  return submodule(m, kernel_basis(f));
}

std::vector<Vec> radical_subspace(const Module& m, const Ideal& rad) {
  EchelonSpace space(m.dim(), m.p());
  for (const auto& r : rad.basis) {
    const Matrix a = m.act(r);
    for (std::size_t j = 0; j < m.dim() && space.dim() < m.dim(); ++j) space.insert(a.column(j));
  }
  return space.basis();
}

QuotientResult top(const Module& m, const Ideal& rad) { return quotient_module(m, radical_subspace(m, rad)); }

// ---------------------------------------------------------------------------
// Hom spaces

bool is_homomorphism(const Representation& m, const Representation& n, const Matrix& f) {
  if (f.rows() != n.dim || f.cols() != m.dim) return false;
  for (std::size_t g = 0; g < m.gens.size(); ++g)
    if (f * m.gens[g] != n.gens[g] * f) return false;
  return true;
}

namespace {

// Spanning tree of M from greedily chosen generators: every node is a root
// or a generator applied to an earlier node.
struct SpinTree {
  enum class Kind { Root, Node, Relation };
  struct Event {
    Kind kind;
    std::size_t node;    // new node, or source node of a relation
    std::size_t parent;  // for Node events
    std::size_t gen;
  };
  std::vector<Vec> vectors;
  std::vector<std::size_t> root_of;
  std::vector<Event> events;
  std::vector<Vec> roots;
  Matrix inverse;  // inverse of the matrix whose columns are `vectors`
};

SpinTree spin(const Representation& m) {
  SpinTree t;
  EchelonSpace space(m.dim, m.p);
  std::size_t q = 0;
  for (std::size_t j = 0; j < m.dim; ++j) {
    Vec e = unit_vector(m.dim, j);
    if (!space.insert(e)) continue;
    t.events.push_back({SpinTree::Kind::Root, t.vectors.size(), 0, 0});
    t.root_of.push_back(t.roots.size());
    t.roots.push_back(e);
    t.vectors.push_back(std::move(e));
    for (; q < t.vectors.size(); ++q)
      for (std::size_t g = 0; g < m.gens.size(); ++g) {
        Vec w = m.gens[g] * t.vectors[q];
        if (space.insert(w)) {
          t.events.push_back({SpinTree::Kind::Node, t.vectors.size(), q, g});
          t.root_of.push_back(t.root_of[q]);
          t.vectors.push_back(std::move(w));
        } else {
          t.events.push_back({SpinTree::Kind::Relation, q, 0, g});
        }
      }
  }
  auto inv = inverse(Matrix::from_columns(t.vectors, m.dim, m.p));
  require(inv.has_value(), ErrorKind::Verification, "spin basis is singular");
  t.inverse = std::move(*inv);
  return t;
}

}  // namespace

std::vector<Matrix> hom_basis(const Representation& m, const Representation& n) {
  check_compatible(m, n);
  if (m.dim == 0 || n.dim == 0) return {};
  const SpinTree tree = spin(m);
  const std::uint32_t p = m.p;
  const std::size_t dn = n.dim, r = tree.roots.size();
  // Unknowns are the images of the roots; `basis` maps current coordinates to them.
  Matrix basis = Matrix::identity(r * dn, p);
  std::size_t k = r * dn;
  std::vector<Matrix> image(tree.vectors.size());  // image of node t as dn x k
  std::vector<Vec> pending;
  const PrimeField F(p);

  auto flush = [&] {
    if (pending.empty()) return;
    const auto ker = kernel_basis(Matrix::from_rows(pending, k, p));
    const Matrix t = Matrix::from_columns(ker, k, p);
    for (auto& y : image)
      if (y.rows()) y = y * t;
    basis = basis * t;
    k = ker.size();
    pending.clear();
  };

  for (std::size_t e = 0; e < tree.events.size() && k > 0; ++e) {
    const auto& ev = tree.events[e];
    switch (ev.kind) {
      case SpinTree::Kind::Root: {
        const std::size_t root = tree.root_of[ev.node];
        image[ev.node] = basis.row_block(root * dn, dn);
        break;
      }
      case SpinTree::Kind::Node:
        image[ev.node] = n.gens[ev.gen] * image[ev.parent];
        break;
      case SpinTree::Kind::Relation: {
        const Vec w = m.gens[ev.gen] * tree.vectors[ev.node];
        const Vec c = tree.inverse * w;
        Matrix d = n.gens[ev.gen] * image[ev.node];
        for (std::size_t s = 0; s < c.size(); ++s)
          if (c[s]) add_scaled(d, F.neg(c[s]), image[s]);
        for (std::size_t i = 0; i < d.rows(); ++i) {
          auto row = d.row(i);
          if (!is_zero(row)) pending.emplace_back(row.begin(), row.end());
        }
        if (pending.size() >= k) flush();
        break;
      }
    }
  }
  flush();
  std::vector<Matrix> out;
  const std::size_t dm = m.dim;
  for (std::size_t c = 0; c < k; ++c) {
    Matrix y(dn, dm, p);
    for (std::size_t t = 0; t < dm; ++t)
      for (std::size_t i = 0; i < dn; ++i) y(i, t) = image[t](i, c);
    out.push_back(y * tree.inverse);
  }
  return out;
}

std::vector<Matrix> hom_space(const Module& m, const Module& n) {
  check_same(m, n);
  return hom_basis(m.rep(), n.rep());
}

// ---------------------------------------------------------------------------
// Endomorphism algebras

namespace {

// Coordinates of maps through their values on a generating set of M.
struct MapCoordinates {
  std::vector<Vec> generators;
  std::vector<std::size_t> rows;  // selected rows of the stacked images
  Matrix inverse;                 // inverse of the selected k x k block

  Vec stacked(const Matrix& f) const {
    Vec out;
    for (const auto& g : generators) {
      const Vec v = f * g;
      out.insert(out.end(), v.begin(), v.end());
    }
    return out;
  }
  Vec coordinates(const Vec& s) const {
    Vec sel(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) sel[i] = s[rows[i]];
    return inverse * sel;
  }
};

MapCoordinates map_coordinates(const Representation& m, const std::vector<Matrix>& maps) {
  MapCoordinates mc;
  EchelonSpace space(m.dim, m.p);
  for (std::size_t j = 0; j < m.dim && space.dim() < m.dim; ++j) {
    Vec e = unit_vector(m.dim, j);
    if (space.contains(e)) continue;
    mc.generators.push_back(e);
    std::vector<Vec> queue{e};
    space.insert(e);
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (const auto& g : m.gens) {
        Vec w = g * queue[q];
        if (space.insert(w)) queue.push_back(std::move(w));
      }
  }
  const std::size_t k = maps.size();
  std::vector<Vec> cols;
  for (const auto& f : maps) cols.push_back(mc.stacked(f));
  const std::size_t len = cols.empty() ? 0 : cols[0].size();
  // Rows of the stacked matrix where it has full column rank.
  const auto rr = rref(Matrix::from_rows(cols, len, m.p));
  require(rr.rank == k, ErrorKind::Verification, "Hom basis is not independent");
  mc.rows = rr.pivots;
  Matrix block(k, k, m.p);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) block(i, j) = cols[j][mc.rows[i]];
  auto inv = inverse(block);
  require(inv.has_value(), ErrorKind::Verification, "coordinate block is singular");
  mc.inverse = std::move(*inv);
  return mc;
}

EndAlgebra end_from_maps(const Representation& m, std::vector<Matrix> maps) {
  const std::size_t k = maps.size();
  require(k <= kMaxAlgebraDim, ErrorKind::CapExceeded,
          "endomorphism algebra dimension " + std::to_string(k) + " exceeds cap");
  const MapCoordinates mc = map_coordinates(m, maps);
  // Images of the generators under each map, reused for every product.
  std::vector<std::vector<Vec>> gen_images(k);
  for (std::size_t j = 0; j < k; ++j)
    for (const auto& g : mc.generators) gen_images[j].push_back(maps[j] * g);
  std::vector<Elem> table(k * k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Vec s;
      for (const auto& v : gen_images[j]) {
        const Vec w = maps[i] * v;
        s.insert(s.end(), w.begin(), w.end());
      }
      const Vec c = mc.coordinates(s);
      std::copy(c.begin(), c.end(), table.begin() + static_cast<long>((i * k + j) * k));
    }
  const Vec unit = mc.coordinates(mc.stacked(Matrix::identity(m.dim, m.p)));
  return {Algebra(m.p, k, std::move(table), unit), std::move(maps)};
}

}  // namespace

EndAlgebra end_algebra(const Representation& m) {
  require(m.dim > 0, ErrorKind::Invalid, "endomorphism algebra of the zero module");
  return end_from_maps(m, hom_basis(m, m));
}

EndAlgebra end_algebra(const Module& m) { return end_algebra(m.rep()); }

// ---------------------------------------------------------------------------
// Decomposition

Representation restrict_rep(const Representation& m, const Matrix& inclusion, const Matrix& projection) {
  Representation out{m.p, inclusion.cols(), {}};
  for (const auto& g : m.gens) out.gens.push_back(projection * (g * inclusion));
  return out;
}

namespace {

Matrix random_combination(const std::vector<Matrix>& maps, std::mt19937_64& rng, std::uint32_t p) {
  Matrix s(maps[0].rows(), maps[0].cols(), p);
  for (const auto& f : maps) add_scaled(s, static_cast<Elem>(rng() % p), f);
  return s;
}

// An endomorphism whose characteristic polynomial has two coprime factors,
// or nothing when the End ring is local.
std::optional<Matrix> splitting_endomorphism(const Representation& r, std::mt19937_64& rng) {
  if (r.dim <= 1) return std::nullopt;
  auto maps = hom_basis(r, r);
  if (maps.size() == 1) return std::nullopt;
  auto splits = [](const Matrix& phi) { return factor_poly(characteristic_polynomial(phi)).size() >= 2; };
  for (int t = 0; t < 4; ++t) {
    Matrix phi = random_combination(maps, rng, r.p);
    if (splits(phi)) return phi;
  }
  const std::vector<Matrix> saved = maps;
  EndAlgebra e = end_from_maps(r, std::move(maps));
  const Ideal rad = radical(e.algebra);
  if (e.algebra.dim() - rad.dim() == 1) return std::nullopt;
  Quotient q = quotient_algebra(e.algebra, rad);
  const Algebra& qa = q.algebra;
  if (qa.is_commutative()) {
    // Fixed points of Frobenius: one per simple factor of the commutative quotient.
    const std::size_t n = qa.dim();
    Matrix frob(n, n, r.p);
    for (std::size_t i = 0; i < n; ++i) {
      Vec c = qa.power(qa.basis_element(i), r.p);
      c[i] = qa.field().sub(c[i], 1);
      for (std::size_t j = 0; j < n; ++j) frob(j, i) = c[j];
    }
    const auto fixed = kernel_basis(frob);
    if (fixed.size() == 1) return std::nullopt;
    EchelonSpace scalars(n, r.p);
    scalars.insert(qa.unit());
    for (const auto& x : fixed) {
      if (scalars.contains(x)) continue;
      Matrix phi(r.dim, r.dim, r.p);
      for (std::size_t t = 0; t < n; ++t) add_scaled(phi, x[t], saved[q.representatives[t]]);
      if (splits(phi)) return phi;
    }
  }
  for (int t = 0; t < 512; ++t) {
    Matrix phi = random_combination(saved, rng, r.p);
    if (splits(phi)) return phi;
  }
  fail(ErrorKind::Verification, "no splitting endomorphism found for a decomposable module");
}

void split_recursive(const Representation& whole, const Matrix& incl, const Matrix& proj, std::mt19937_64& rng,
                     std::vector<RepPiece>& out) {
  const Representation r = restrict_rep(whole, incl, proj);
  const auto phi = splitting_endomorphism(r, rng);
  if (!phi) {
    out.push_back({incl, proj, 0, Matrix()});
    return;
  }
  const auto fac = factor_poly(characteristic_polynomial(*phi));
  const Polynomial f = pow(fac[0].factor, fac[0].multiplicity);
  Polynomial g = Polynomial::constant(1, r.p);
  for (std::size_t i = 1; i < fac.size(); ++i) g = g * pow(fac[i].factor, fac[i].multiplicity);
  const auto k1 = span_basis(kernel_basis(evaluate(f, *phi)), r.dim, r.p);
  const auto k2 = span_basis(kernel_basis(evaluate(g, *phi)), r.dim, r.p);
  require(k1.size() + k2.size() == r.dim && !k1.empty() && !k2.empty(), ErrorKind::Verification,
          "Fitting decomposition has wrong dimensions");
  std::vector<Vec> cols = k1;
  cols.insert(cols.end(), k2.begin(), k2.end());
  const Matrix w = Matrix::from_columns(cols, r.dim, r.p);
  const auto winv = inverse(w);
  require(winv.has_value(), ErrorKind::Verification, "Fitting pieces are not complementary");
  const std::size_t a = k1.size();
  const Matrix w1 = w.column_block(0, a), w2 = w.column_block(a, r.dim - a);
  const Matrix p1 = winv->row_block(0, a), p2 = winv->row_block(a, r.dim - a);
  split_recursive(whole, incl * w1, p1 * proj, rng, out);
  split_recursive(whole, incl * w2, p2 * proj, rng, out);
}

}  // namespace

RepDecomposition decompose(const Representation& m, std::uint64_t seed) {
  check_rep(m);
  RepDecomposition out;
  if (m.dim == 0) return out;
  std::mt19937_64 rng(seed);
  std::vector<RepPiece> pieces;
  split_recursive(m, Matrix::identity(m.dim, m.p), Matrix::identity(m.dim, m.p), rng, pieces);
  std::vector<Representation> reps;
  for (auto& piece : pieces) reps.push_back(restrict_rep(m, piece.inclusion, piece.projection));
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    bool found = false;
    for (std::size_t t = 0; t < out.representatives.size() && !found; ++t) {
      const std::size_t j = out.representatives[t];
      if (reps[j].dim != reps[i].dim) continue;
      if (auto iso = indecomposable_iso(reps[i], reps[j])) {
        pieces[i].type = t;
        pieces[i].to_representative = std::move(*iso);
        found = true;
      }
    }
    if (!found) {
      pieces[i].type = out.representatives.size();
      pieces[i].to_representative = Matrix::identity(reps[i].dim, m.p);
      out.representatives.push_back(i);
    }
  }
  out.pieces = std::move(pieces);
  return out;
}

Decomposition decompose(const Module& m, std::uint64_t seed) {
  const RepDecomposition rd = decompose(m.rep(), seed);
  Decomposition d;
  for (std::size_t t = 0; t < rd.representatives.size(); ++t) {
    const auto& rp = rd.pieces[rd.representatives[t]];
    Summand s;
    s.module = Module(m.algebra(), rp.inclusion.cols(), restrict_rep(m.rep(), rp.inclusion, rp.projection).gens);
    d.summands.push_back(std::move(s));
  }
  for (const auto& piece : rd.pieces) {
    Summand& s = d.summands[piece.type];
    ++s.multiplicity;
    s.inclusions.push_back(piece.inclusion);
    s.projections.push_back(piece.projection);
    s.to_representative.push_back(piece.to_representative);
  }
  return d;
}

std::optional<Matrix> indecomposable_iso(const Representation& x, const Representation& y) {
  check_compatible(x, y);
  if (x.dim != y.dim) return std::nullopt;
  const auto fs = hom_basis(x, y);
  if (fs.empty()) return std::nullopt;
  const auto gs = hom_basis(y, x);
  for (const auto& f : fs)
    for (const auto& g : gs)
      if (is_invertible(g * f)) return f;
  return std::nullopt;
}

namespace {

// For each summand type of `dm`, the matching type of `dn` and an iso between representatives.
std::vector<std::optional<std::pair<std::size_t, Matrix>>> match_summands(const Decomposition& dm,
                                                                          const Decomposition& dn) {
  std::vector<std::optional<std::pair<std::size_t, Matrix>>> out;
  for (const auto& s : dm.summands) {
    std::optional<std::pair<std::size_t, Matrix>> hit;
    for (std::size_t t = 0; t < dn.summands.size() && !hit; ++t)
      if (auto iso = indecomposable_iso(s.module.rep(), dn.summands[t].module.rep())) hit.emplace(t, std::move(*iso));
    out.push_back(std::move(hit));
  }
  return out;
}

}  // namespace

std::optional<Matrix> is_isomorphic(const Module& m, const Module& n) {
  check_same(m, n);
  if (m.dim() != n.dim()) return std::nullopt;
  if (m.dim() == 0) return Matrix(0, 0, m.p());
  const Decomposition& dm = m.decomposition();
  const Decomposition& dn = n.decomposition();
  if (dm.summands.size() != dn.summands.size()) return std::nullopt;
  const auto match = match_summands(dm, dn);
  Matrix iso(n.dim(), m.dim(), m.p());
  for (std::size_t i = 0; i < match.size(); ++i) {
    if (!match[i]) return std::nullopt;
    const auto& [t, phi] = *match[i];
    const Summand& a = dm.summands[i];
    const Summand& b = dn.summands[t];
    if (a.multiplicity != b.multiplicity) return std::nullopt;
    for (std::size_t c = 0; c < a.multiplicity; ++c) {
      const auto back = inverse(b.to_representative[c]);
      require(back.has_value(), ErrorKind::Verification, "representative map is not invertible");
      iso = iso + b.inclusions[c] * (*back * (phi * (a.to_representative[c] * a.projections[c])));
    }
  }
  require(is_invertible(iso) && is_homomorphism(m.rep(), n.rep(), iso), ErrorKind::Verification,
          "assembled isomorphism failed verification");
  return iso;
}

std::optional<Matrix> is_isomorphic(const Representation& m, const Representation& n, std::uint64_t seed) {
  check_compatible(m, n);
  if (m.dim != n.dim) return std::nullopt;
  if (m.dim == 0) return Matrix(0, 0, m.p);
  const RepDecomposition dm = decompose(m, seed);
  const RepDecomposition dn = decompose(n, seed);
  if (dm.representatives.size() != dn.representatives.size()) return std::nullopt;
  auto piece_rep = [](const Representation& r, const RepPiece& piece) {
    return restrict_rep(r, piece.inclusion, piece.projection);
  };
  std::vector<Representation> rn;
  for (auto i : dn.representatives) rn.push_back(piece_rep(n, dn.pieces[i]));
  // Pieces of each type in order.
  auto by_type = [](const RepDecomposition& d) {
    std::vector<std::vector<std::size_t>> out(d.representatives.size());
    for (std::size_t i = 0; i < d.pieces.size(); ++i) out[d.pieces[i].type].push_back(i);
    return out;
  };
  const auto tm = by_type(dm), tn = by_type(dn);
  Matrix iso(n.dim, m.dim, m.p);
  for (std::size_t t = 0; t < dm.representatives.size(); ++t) {
    const Representation x = piece_rep(m, dm.pieces[dm.representatives[t]]);
    std::optional<std::pair<std::size_t, Matrix>> hit;
    for (std::size_t u = 0; u < rn.size() && !hit; ++u)
      if (rn[u].dim == x.dim)
        if (auto phi = indecomposable_iso(x, rn[u])) hit.emplace(u, std::move(*phi));
    if (!hit || tm[t].size() != tn[hit->first].size()) return std::nullopt;
    for (std::size_t c = 0; c < tm[t].size(); ++c) {
      const RepPiece& a = dm.pieces[tm[t][c]];
      const RepPiece& b = dn.pieces[tn[hit->first][c]];
      const auto back = inverse(b.to_representative);
      require(back.has_value(), ErrorKind::Verification, "representative map is not invertible");
      iso = iso + b.inclusion * (*back * (hit->second * (a.to_representative * a.projection)));
    }
  }
  require(is_invertible(iso) && is_homomorphism(m, n, iso), ErrorKind::Verification,
          "assembled isomorphism failed verification");
  return iso;
}

bool is_indecomposable(const Module& m) { return m.dim() > 0 && m.decomposition().piece_count() == 1; }

AddMembership is_in_add(const Module& m, const Module& n) {
  check_same(m, n);
  AddMembership out;
  out.member = true;
  if (m.dim() == 0) return out;
  const auto match = match_summands(m.decomposition(), n.decomposition());
  for (const auto& x : match) {
    out.match.push_back(x ? std::optional<std::size_t>(x->first) : std::nullopt);
    if (!x) out.member = false;
  }
  return out;
}

bool factors_through_add(const Representation& m, const Representation& n) {
  check_compatible(m, n);
  if (m.dim == 0) return true;
  const auto fs = hom_basis(m, n);
  const auto gs = hom_basis(n, m);
  EchelonSpace space(m.dim * m.dim, m.p);
  for (const auto& f : fs)
    for (const auto& g : gs) {
      const Matrix c = g * f;
      space.insert(c.entries());
    }
  const Matrix id = Matrix::identity(m.dim, m.p);
  return space.contains(id.entries());
}

}  // namespace repdim
