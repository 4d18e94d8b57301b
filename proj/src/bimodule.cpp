#include "repdim/bimodule.hpp"

namespace repdim {

namespace {

Representation combined(const Module& l, const Module& r) {
  Representation rep{l.p(), l.dim(), l.generator_action()};
  for (const auto& g : r.generator_action()) rep.gens.push_back(g);
  return rep;
}

// Quotient of GF(p)^n by an invariant subspace, with standard-vector complement.
struct QuotientFrame {
  EchelonSpace space;
  std::vector<std::size_t> comp;

  Matrix projection(std::size_t n, std::uint32_t p) const {
    Matrix out(comp.size(), n, p);
    for (std::size_t j = 0; j < n; ++j) {
      Vec v = unit_vector(n, j);
      space.reduce(v);
      for (std::size_t i = 0; i < comp.size(); ++i) out(i, j) = v[comp[i]];
    }
    return out;
  }
  Matrix section(std::size_t n, std::uint32_t p) const {
    Matrix out(n, comp.size(), p);
    for (std::size_t i = 0; i < comp.size(); ++i) out(comp[i], i) = 1;
    return out;
  }
  TensorResult detail(std::size_t n, std::uint32_t p) const { return {comp.size(), projection(n, p), section(n, p)}; }
  Matrix induced(const Matrix& t) const {
    Matrix out(comp.size(), comp.size(), t.p());
    for (std::size_t j = 0; j < comp.size(); ++j) {
      Vec v = t.column(comp[j]);
      space.reduce(v);
      for (std::size_t i = 0; i < comp.size(); ++i) out(i, j) = v[comp[i]];
    }
    return out;
  }
};

// Relations m b (x) n - m (x) b n over the generators of B.
QuotientFrame tensor_relations(const Module& m_right, const Module& n_left) {
  const std::size_t dm = m_right.dim(), dn = n_left.dim(), d = dm * dn;
  require(d <= kMaxMatrixSide, ErrorKind::CapExceeded,
          "tensor space dimension " + std::to_string(d) + " exceeds " + std::to_string(kMaxMatrixSide));
  const std::uint32_t p = m_right.p();
  QuotientFrame q{EchelonSpace(d, p), {}};
  const Matrix im = Matrix::identity(dm, p), in = Matrix::identity(dn, p);
  for (std::size_t g = 0; g < n_left.generator_action().size(); ++g) {
    const Matrix rel = kronecker(m_right.generator_action()[g], in) - kronecker(im, n_left.generator_action()[g]);
    for (std::size_t c = 0; c < d && q.space.dim() < d; ++c) q.space.insert(rel.column(c));
  }
  q.comp = q.space.complement_indices();
  return q;
}

}  // namespace

Bimodule::Bimodule(Algebra left, Algebra right, std::size_t dim, std::vector<Matrix> left_gens,
                   std::vector<Matrix> right_gens)
    : right_(right),
      left_mod_(std::move(left), dim, std::move(left_gens)),
      right_mod_(opposite(right), dim, std::move(right_gens)) {
  require(left_mod_.p() == right_mod_.p(), ErrorKind::Mismatch, "bimodule over algebras with different primes");
  rep_ = combined(left_mod_, right_mod_);
}

Bimodule Bimodule::from_basis_actions(Algebra left, Algebra right, std::vector<Matrix> left_basis,
                                      std::vector<Matrix> right_basis) {
  Bimodule out;
  out.right_ = right;
  out.left_mod_ = Module::from_basis_action(std::move(left), std::move(left_basis));
  out.right_mod_ = Module::from_basis_action(opposite(right), std::move(right_basis));
  require(out.left_mod_.dim() == out.right_mod_.dim(), ErrorKind::Mismatch, "left and right actions differ in size");
  out.rep_ = combined(out.left_mod_, out.right_mod_);
  return out;
}

Module Bimodule::as_module() const {
  return Module(tensor_product(left_algebra(), opposite(right_)), dim(), rep_.gens);
}

ValidationReport validate(const Bimodule& m) {
  if (auto r = validate(m.left_module()); !r.ok) return {false, "left action: " + r.message};
  if (auto r = validate(m.right_module()); !r.ok) return {false, "right action: " + r.message};
  for (std::size_t i = 0; i < m.left_module().generator_action().size(); ++i)
    for (std::size_t j = 0; j < m.right_module().generator_action().size(); ++j) {
      const Matrix& l = m.left_module().generator_action()[i];
      const Matrix& r = m.right_module().generator_action()[j];
      if (l * r != r * l)
        return {false, "left generator " + std::to_string(i) + " and right generator " + std::to_string(j) +
                           " do not commute"};
    }
  return {true, ""};
}

bool is_bimodule_map(const Bimodule& m, const Bimodule& n, const Matrix& f) {
  require(same_algebra(m.left_algebra(), n.left_algebra()) && same_algebra(m.right_algebra(), n.right_algebra()),
          ErrorKind::Mismatch, "bimodules over different algebras");
  return is_homomorphism(m.rep(), n.rep(), f);
}

Bimodule regular_bimodule(const Algebra& a) {
  std::vector<Matrix> l, r;
  for (const auto& g : a.generators()) {
    l.push_back(a.left_matrix(g));
    r.push_back(a.right_matrix(g));
  }
  return Bimodule(a, a, a.dim(), std::move(l), std::move(r));
}

Bimodule restrict_scalars(const Bimodule& m, const Algebra& c, const Matrix& left_map, const Algebra& d,
                          const Matrix& right_map) {
  require(left_map.rows() == m.left_algebra().dim() && left_map.cols() == c.dim() &&
              right_map.rows() == m.right_algebra().dim() && right_map.cols() == d.dim(),
          ErrorKind::Mismatch, "restriction maps have the wrong shape");
  std::vector<Matrix> l, r;
  for (const auto& g : c.generators()) l.push_back(m.left_act(left_map * g));
  for (const auto& g : d.generators()) r.push_back(m.right_act(right_map * g));
  return Bimodule(c, d, m.dim(), std::move(l), std::move(r));
}

Bimodule direct_sum(const Bimodule& a, const Bimodule& b) {
  require(same_algebra(a.left_algebra(), b.left_algebra()) && same_algebra(a.right_algebra(), b.right_algebra()),
          ErrorKind::Mismatch, "bimodules over different algebras");
  auto sum = [&](const Module& x, const Module& y) {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < x.generator_action().size(); ++i)
      out.push_back(block_diagonal({x.generator_action()[i], y.generator_action()[i]}, a.p()));
    return out;
  };
  return Bimodule(a.left_algebra(), a.right_algebra(), a.dim() + b.dim(), sum(a.left_module(), b.left_module()),
                  sum(a.right_module(), b.right_module()));
}

Module tensor_over(const Bimodule& m, const Module& n, TensorResult* detail) {
  require(same_algebra(m.right_algebra(), n.algebra()), ErrorKind::Mismatch,
          "tensor factors over different algebras");
  const QuotientFrame q = tensor_relations(m.right_module(), n);
  const Matrix in = Matrix::identity(n.dim(), m.p());
  std::vector<Matrix> gens;
  for (const auto& g : m.left_module().generator_action()) gens.push_back(q.induced(kronecker(g, in)));
  if (detail) *detail = q.detail(m.dim() * n.dim(), m.p());
  return Module(m.left_algebra(), q.comp.size(), std::move(gens));
}

Bimodule tensor_over(const Bimodule& m, const Bimodule& n, TensorResult* detail) {
  require(same_algebra(m.right_algebra(), n.left_algebra()), ErrorKind::Mismatch,
          "tensor factors over different algebras");
  const QuotientFrame q = tensor_relations(m.right_module(), n.left_module());
  const Matrix im = Matrix::identity(m.dim(), m.p()), in = Matrix::identity(n.dim(), m.p());
  std::vector<Matrix> l, r;
  for (const auto& g : m.left_module().generator_action()) l.push_back(q.induced(kronecker(g, in)));
  for (const auto& g : n.right_module().generator_action()) r.push_back(q.induced(kronecker(im, g)));
  if (detail) *detail = q.detail(m.dim() * n.dim(), m.p());
  return Bimodule(m.left_algebra(), n.right_algebra(), q.comp.size(), std::move(l), std::move(r));
}

Bimodule left_dual(const Bimodule& m, std::vector<Matrix>* maps) {
  const Algebra& s = m.left_algebra();
  const Algebra& r = m.right_algebra();
  const std::uint32_t p = m.p();
  const Module reg = regular_module(s, Side::Left);
  const auto hom = hom_basis(m.left_module().rep(), reg.rep());
  const std::size_t rows = s.dim(), cols = m.dim();
  EchelonSpace space(rows * cols, p);
  for (const auto& f : hom) space.insert(f.entries());
  const std::size_t d = space.dim();
  std::vector<Matrix> basis;
  for (const auto& v : space.basis()) basis.emplace_back(rows, cols, p, v);
  auto action = [&](auto&& op) {
    Matrix out(d, d, p);
    for (std::size_t j = 0; j < d; ++j) {
      const Matrix img = op(basis[j]);
      const Vec c = space.coordinates(img.entries());
      for (std::size_t i = 0; i < d; ++i) out(i, j) = c[i];
    }
    return out;
  };
  std::vector<Matrix> lg, rg;
  for (const auto& g : m.right_module().generator_action())
    lg.push_back(action([&](const Matrix& f) { return f * g; }));
  for (const auto& g : s.generators()) {
    const Matrix rs = s.right_matrix(g);
    rg.push_back(action([&](const Matrix& f) { return rs * f; }));
  }
  if (maps) *maps = basis;
  return Bimodule(r, s, d, std::move(lg), std::move(rg));
}

std::optional<SummandWitness> summand_witness(const Representation& m, const Representation& n) {
  const std::uint32_t p = m.p;
  if (m.dim == 0) return SummandWitness{0, Matrix(0, 0, p), Matrix(0, 0, p)};
  const auto fs = hom_basis(m, n);
  const auto gs = hom_basis(n, m);
  if (fs.empty() || gs.empty()) return std::nullopt;
  std::vector<Vec> cols;
  for (const auto& f : fs)
    for (const auto& g : gs) {
      const Matrix c = g * f;
      cols.emplace_back(c.entries().begin(), c.entries().end());
    }
  const Matrix sys = Matrix::from_columns(cols, m.dim * m.dim, p);
  const Matrix id = Matrix::identity(m.dim, p);
  const auto sol = solve_affine(sys, id.entries());
  if (!sol) return std::nullopt;
  SummandWitness w;
  w.copies = fs.size();
  w.injection = Matrix(fs.size() * n.dim, m.dim, p);
  w.retraction = Matrix(m.dim, fs.size() * n.dim, p);
  const PrimeField F(p);
  for (std::size_t a = 0; a < fs.size(); ++a) {
    Matrix back(m.dim, n.dim, p);
    for (std::size_t b = 0; b < gs.size(); ++b) add_scaled(back, sol->particular[a * gs.size() + b], gs[b]);
    for (std::size_t i = 0; i < n.dim; ++i)
      for (std::size_t j = 0; j < m.dim; ++j) {
        w.injection(a * n.dim + i, j) = fs[a](i, j);
        w.retraction(j, a * n.dim + i) = back(j, i);
      }
  }
  require(verify_summand_witness(m, n, w), ErrorKind::Verification, "summand witness failed verification");
  return w;
}

bool verify_summand_witness(const Representation& m, const Representation& n, const SummandWitness& w) {
  const std::size_t big = w.copies * n.dim;
  if (w.injection.rows() != big || w.injection.cols() != m.dim || w.retraction.rows() != m.dim ||
      w.retraction.cols() != big)
    return false;
  if (w.retraction * w.injection != Matrix::identity(m.dim, m.p)) return false;
  for (std::size_t a = 0; a < w.copies; ++a) {
    if (!is_homomorphism(m, n, w.injection.row_block(a * n.dim, n.dim))) return false;
    if (!is_homomorphism(n, m, w.retraction.column_block(a * n.dim, n.dim))) return false;
  }
  return true;
}

bool in_add_by_decomposition(const Representation& m, const Representation& n, std::uint64_t seed) {
  if (m.dim == 0) return true;
  const RepDecomposition dm = decompose(m, seed);
  const RepDecomposition dn = decompose(n, seed);
  std::vector<Representation> targets;
  for (auto t : dn.representatives)
    targets.push_back(restrict_rep(n, dn.pieces[t].inclusion, dn.pieces[t].projection));
  for (auto t : dm.representatives) {
    const Representation x = restrict_rep(m, dm.pieces[t].inclusion, dm.pieces[t].projection);
    bool hit = false;
    for (const auto& y : targets)
      if (y.dim == x.dim && indecomposable_iso(x, y)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

}  // namespace repdim
