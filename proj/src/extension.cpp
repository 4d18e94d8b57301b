#include "repdim/extension.hpp"

namespace repdim {

namespace {

inline constexpr std::size_t kExhaustiveLimit = std::size_t{1} << 16;

// Number of elements of GF(p)^n, or nullopt above the exhaustive limit.
std::optional<std::size_t> space_size(std::uint32_t p, std::size_t n) {
  std::size_t s = 1;
  for (std::size_t i = 0; i < n; ++i) {
    s *= p;
    if (s > kExhaustiveLimit) return std::nullopt;
  }
  return s;
}

bool next_vector(Vec& v, std::uint32_t p) {
  for (auto& x : v) {
    if (++x < p) return true;
    x = 0;
  }
  return false;
}

// Multiplication A (x)_k A -> A on the basis i * n + j.
Matrix multiplication_matrix(const Algebra& a) {
  const std::size_t n = a.dim();
  Matrix mu(n, n * n, a.p());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto prod = a.product_of_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) mu(k, i * n + j) = prod[k];
    }
  return mu;
}

Matrix flat_columns(const std::vector<Matrix>& ms, std::size_t rows, std::uint32_t p) {
  std::vector<Vec> cols;
  for (const auto& m : ms) cols.emplace_back(m.entries().begin(), m.entries().end());
  return Matrix::from_columns(cols, rows, p);
}

Matrix stack_rows(const std::vector<Matrix>& blocks, std::size_t cols, std::uint32_t p) {
  Matrix out(0, cols, p);
  for (const auto& b : blocks) out = vstack(out, b);
  return out;
}

// Sum x_i (x) y_i as a vector of A (x)_k A.
Vec pairs_to_tensor(const std::vector<ElementPair>& pairs, std::size_t n, const PrimeField& F) {
  Vec v(n * n, 0);
  for (const auto& [x, y] : pairs)
    for (std::size_t i = 0; i < n; ++i) {
      if (!x[i]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (y[j]) v[i * n + j] = F.add(v[i * n + j], F.mul(x[i], y[j]));
    }
  return v;
}

std::vector<ElementPair> tensor_to_pairs(std::span<const Elem> v, const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<ElementPair> out;
  for (std::size_t i = 0; i < n; ++i) {
    Vec y(v.begin() + static_cast<long>(i * n), v.begin() + static_cast<long>((i + 1) * n));
    if (!is_zero(y)) out.emplace_back(a.basis_element(i), std::move(y));
  }
  return out;
}

// Centrality a e = e a of a tensor element, for each generator of A.
Matrix centrality_rows(const Bimodule& t, std::size_t a_gens) {
  std::vector<Matrix> rows;
  const auto& g = t.rep().gens;
  for (std::size_t i = 0; i < a_gens; ++i) rows.push_back(g[i] - g[a_gens + i]);
  return stack_rows(rows, t.dim(), t.p());
}

Bimodule restriction_of(const Extension& ext, bool left_b, bool right_b) {
  const Matrix id = Matrix::identity(ext.a.dim(), ext.a.p());
  return restrict_scalars(regular_bimodule(ext.a), left_b ? ext.b : ext.a, left_b ? ext.embed : id,
                          right_b ? ext.b : ext.a, right_b ? ext.embed : id);
}

Module restrict_to_b(const Extension& ext, const Module& x) {
  std::vector<Matrix> gens;
  for (const auto& g : ext.b.generators()) gens.push_back(x.act(ext.embed * g));
  return Module(ext.b, x.dim(), std::move(gens));
}

std::optional<SummandCert> summand_cert(const Representation& source, const Representation& target,
                                        std::string source_name, std::string target_name) {
  const bool by_decomposition = in_add_by_decomposition(source, target);
  auto w = summand_witness(source, target);
  require(by_decomposition == w.has_value(), ErrorKind::Verification,
          "add membership of " + source_name + " in " + target_name + ": decomposition and linear criteria disagree");
  if (!w) return std::nullopt;
  return SummandCert{std::move(source_name), std::move(target_name), std::move(*w)};
}

}  // namespace

ValidationReport validate(const Extension& ext) {
  const Algebra& a = ext.a;
  const Algebra& b = ext.b;
  if (a.p() != b.p()) return {false, "algebras over different primes"};
  if (ext.embed.rows() != a.dim() || ext.embed.cols() != b.dim() || ext.embed.p() != a.p())
    return {false, "embedding has the wrong shape"};
  if (ext.embed * b.unit() != a.unit()) return {false, "embed(1_B) != 1_A"};
  for (std::size_t i = 0; i < b.dim(); ++i) {
    const Vec ei = ext.embed.column(i);
    for (std::size_t j = 0; j < b.dim(); ++j) {
      const Vec lhs = ext.embed * b.multiply(b.basis_element(i), b.basis_element(j));
      if (lhs != a.multiply(ei, ext.embed.column(j)))
        return {false, "embed(b_" + std::to_string(i) + " b_" + std::to_string(j) + ") != embed(b_" +
                           std::to_string(i) + ") embed(b_" + std::to_string(j) + ")"};
    }
  }
  if (rank(ext.embed) != b.dim()) return {false, "embedding is not injective"};
  return {true, ""};
}

Extension make_extension(Algebra b, Algebra a, Matrix embed) {
  Extension ext{std::move(b), std::move(a), std::move(embed)};
  const auto r = validate(ext);
  require(r.ok, ErrorKind::Invalid, "invalid extension: " + r.message);
  return ext;
}

BimoduleViews bimodule_views(const Extension& ext) {
  BimoduleViews v;
  v.bab = restriction_of(ext, true, true);
  v.aab = restriction_of(ext, false, true);
  v.baa = restriction_of(ext, true, false);
  v.tensor = tensor_over(v.aab, v.baa, &v.tensor_detail);
  return v;
}

// ---------------------------------------------------------------------------
// Split

std::optional<SplitCert> check_split(const Extension& ext) {
  const std::uint32_t p = ext.a.p();
  const Bimodule bab = restriction_of(ext, true, true);
  const Bimodule bb = regular_bimodule(ext.b);
  const auto homs = hom_basis(bab.rep(), bb.rep());
  if (homs.empty()) return std::nullopt;
  std::vector<Matrix> composed;
  for (const auto& h : homs) composed.push_back(h * ext.embed);
  const std::size_t nb = ext.b.dim();
  const auto sol = solve_affine(flat_columns(composed, nb * nb, p), Matrix::identity(nb, p).entries());
  if (!sol) return std::nullopt;
  SplitCert cert{Matrix(nb, ext.a.dim(), p)};
  for (std::size_t k = 0; k < homs.size(); ++k) add_scaled(cert.retraction, sol->particular[k], homs[k]);
  require(verify_split(ext, cert).ok, ErrorKind::Verification, "split certificate failed verification");
  return cert;
}

ValidationReport verify_split(const Extension& ext, const SplitCert& cert) {
  const Matrix& r = cert.retraction;
  if (r.rows() != ext.b.dim() || r.cols() != ext.a.dim()) return {false, "retraction has the wrong shape"};
  if (r * ext.embed != Matrix::identity(ext.b.dim(), ext.a.p())) return {false, "retraction o embed != id_B"};
  if (!is_bimodule_map(restriction_of(ext, true, true), regular_bimodule(ext.b), r))
    return {false, "retraction is not a B-bimodule map"};
  return {true, ""};
}

// ---------------------------------------------------------------------------
// Separability

namespace {

struct SeparabilitySystem {
  Bimodule tensor;
  TensorResult detail;
  Matrix mu;       // dim A x dim T
  Matrix central;  // rows of (a - a') e = 0 over generators
};

SeparabilitySystem separability_system(const Extension& ext) {
  SeparabilitySystem s;
  const Bimodule aab = restriction_of(ext, false, true);
  const Bimodule baa = restriction_of(ext, true, false);
  s.tensor = tensor_over(aab, baa, &s.detail);
  s.mu = multiplication_matrix(ext.a) * s.detail.section;
  s.central = centrality_rows(s.tensor, ext.a.generators().size());
  return s;
}

}  // namespace

std::optional<SeparabilityCert> check_separable(const Extension& ext) {
  const SeparabilitySystem s = separability_system(ext);
  const Matrix sys = vstack(s.mu, s.central);
  Vec rhs(sys.rows(), 0);
  std::copy(ext.a.unit().begin(), ext.a.unit().end(), rhs.begin());
  const auto sol = solve_affine(sys, rhs);
  if (!sol) return std::nullopt;
  SeparabilityCert cert;
  cert.element = sol->particular;
  cert.lift = tensor_to_pairs(s.detail.section * cert.element, ext.a);
  require(verify_separable(ext, cert).ok, ErrorKind::Verification, "separability certificate failed verification");
  return cert;
}

ValidationReport verify_separable(const Extension& ext, const SeparabilityCert& cert) {
  const Algebra& a = ext.a;
  const SeparabilitySystem s = separability_system(ext);
  if (cert.element.size() != s.tensor.dim()) return {false, "element has the wrong length"};
  const PrimeField F(a.p());
  for (const auto& [x, y] : cert.lift)
    if (x.size() != a.dim() || y.size() != a.dim()) return {false, "lift pair has the wrong length"};
  if (s.detail.projection * pairs_to_tensor(cert.lift, a.dim(), F) != cert.element)
    return {false, "lift does not map to the element"};
  Vec prod(a.dim(), 0);
  for (const auto& [x, y] : cert.lift) prod = vec_add(F, prod, a.multiply(x, y));
  if (prod != a.unit()) return {false, "sum x_i y_i != 1"};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Vec b = a.basis_element(i);
    if (s.tensor.left_act(b) * cert.element != s.tensor.right_act(b) * cert.element)
      return {false, "a e != e a for basis element " + std::to_string(i)};
  }
  return {true, ""};
}

ExhaustiveResult exhaustive_separability(const Extension& ext) {
  const SeparabilitySystem s = separability_system(ext);
  ExhaustiveResult out;
  const auto size = space_size(ext.a.p(), s.tensor.dim());
  if (!size) return out;
  out.ran = true;
  Vec e(s.tensor.dim(), 0);
  do {
    ++out.searched;
    if (s.mu * e == ext.a.unit() && is_zero(s.central * e)) {
      out.found = true;
      break;
    }
  } while (next_vector(e, ext.a.p()));
  return out;
}

// ---------------------------------------------------------------------------
// Summand certificates

std::optional<SummandCert> check_centrally_projective(const Extension& ext) {
  return summand_cert(restriction_of(ext, true, true).rep(), regular_bimodule(ext.b).rep(), "_B A _B", "_B B _B");
}

std::optional<SummandCert> check_h_separable(const Extension& ext) {
  const Bimodule t = tensor_over(restriction_of(ext, false, true), restriction_of(ext, true, false));
  return summand_cert(t.rep(), regular_bimodule(ext.a).rep(), "A (x)_B A", "_A A _A");
}

ValidationReport verify_summand_cert(const Extension& ext, const SummandCert& cert) {
  Representation source, target;
  if (cert.source == "_B A _B" && cert.target == "_B B _B") {
    source = restriction_of(ext, true, true).rep();
    target = regular_bimodule(ext.b).rep();
  } else if (cert.source == "A (x)_B A" && cert.target == "_A A _A") {
    source = tensor_over(restriction_of(ext, false, true), restriction_of(ext, true, false)).rep();
    target = regular_bimodule(ext.a).rep();
  } else {
    return {false, "unknown certificate kind " + cert.source + " in " + cert.target};
  }
  if (!verify_summand_witness(source, target, cert.witness)) return {false, "summand witness does not verify"};
  return {true, ""};
}

namespace {

// All elements of the span of `basis`, or nullopt above the exhaustive limit.
std::optional<std::vector<Matrix>> enumerate_span(const std::vector<Matrix>& basis, std::size_t rows,
                                                  std::size_t cols, std::uint32_t p) {
  if (!space_size(p, basis.size())) return std::nullopt;
  std::vector<Matrix> out;
  Vec c(basis.size(), 0);
  do {
    Matrix m(rows, cols, p);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (c[k]) add_scaled(m, c[k], basis[k]);
    out.push_back(std::move(m));
  } while (next_vector(c, p));
  return out;
}

bool is_nilpotent_matrix(const Matrix& m) { return matrix_power(m, m.rows()).is_zero(); }

}  // namespace

ExhaustiveResult exhaustive_centrally_projective(const Extension& ext) {
  const Representation m = restriction_of(ext, true, true).rep();
  const Representation n = regular_bimodule(ext.b).rep();
  ExhaustiveResult out;
  const auto fs = hom_basis(m, n);
  const auto gs = hom_basis(n, m);
  if (space_size(m.p, fs.size() * gs.size())) {
    std::vector<Matrix> comps;
    for (const auto& f : fs)
      for (const auto& g : gs) comps.push_back(g * f);
    out.ran = true;
    out.method = "coefficients of id = sum c g f";
    const Matrix id = Matrix::identity(m.dim, m.p);
    Vec c(comps.size(), 0);
    do {
      ++out.searched;
      Matrix sum(m.dim, m.dim, m.p);
      for (std::size_t k = 0; k < comps.size(); ++k)
        if (c[k]) add_scaled(sum, c[k], comps[k]);
      if (sum == id) {
        out.found = true;
        break;
      }
    } while (next_vector(c, m.p));
    return out;
  }
  out.method = "pairs through each indecomposable summand";
  const RepDecomposition d = decompose(m);
  for (auto t : d.representatives) {
    const RepPiece& piece = d.pieces[t];
    if (piece.projection * piece.inclusion != Matrix::identity(piece.inclusion.cols(), m.p)) return out;
    const Representation x = restrict_rep(m, piece.inclusion, piece.projection);
    const auto ends = enumerate_span(hom_basis(x, x), x.dim, x.dim, m.p);
    const auto xf = enumerate_span(hom_basis(x, n), n.dim, x.dim, m.p);
    const auto xg = enumerate_span(hom_basis(n, x), x.dim, n.dim, m.p);
    if (!ends || !xf || !xg || xf->size() * xg->size() > kExhaustiveLimit) return out;
    out.searched += ends->size();
    for (const auto& e : *ends)
      if (!is_nilpotent_matrix(e) && !is_invertible(e)) return out;  // not local: argument does not apply
    bool found = false;
    for (const auto& f : *xf) {
      for (const auto& g : *xg) {
        ++out.searched;
        if (is_invertible(g * f)) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) {
      out.ran = true;
      return out;
    }
  }
  out.ran = true;
  out.found = true;
  return out;
}

// ---------------------------------------------------------------------------
// Frobenius

std::optional<FrobeniusSystem> check_frobenius(const Extension& ext) {
  const Algebra& a = ext.a;
  const Algebra& b = ext.b;
  const std::uint32_t p = a.p();
  const std::size_t n = a.dim();
  const Bimodule aab = restriction_of(ext, false, true);
  const Bimodule baa = restriction_of(ext, true, false);
  // Both one-sided restrictions must be projective.
  if (!summand_witness(baa.left_module().rep(), regular_module(b, Side::Left).rep())) return std::nullopt;
  if (!summand_witness(aab.right_module().rep(), regular_module(b, Side::Right).rep())) return std::nullopt;
  std::vector<Matrix> maps;
  const Bimodule dual = left_dual(baa, &maps);
  const auto iso = is_isomorphic(aab.rep(), dual.rep());
  if (!iso) return std::nullopt;
  const Vec e_coords = *iso * a.unit();
  FrobeniusSystem sys;
  sys.e_map = Matrix(b.dim(), n, p);
  for (std::size_t k = 0; k < maps.size(); ++k) add_scaled(sys.e_map, e_coords[k], maps[k]);
  // Dual pairs with x_i = b_i; unknowns are the coordinates of y_0 .. y_{n-1}.
  const Matrix ee = ext.embed * sys.e_map;  // A -> A through B
  std::vector<Matrix> lefts;
  for (std::size_t i = 0; i < n; ++i) lefts.push_back(a.left_basis_matrix(i));
  Matrix sysm(2 * n * n, n * n, p);
  Vec rhs(2 * n * n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    const Matrix ks = ee * a.right_basis_matrix(s);
    for (std::size_t i = 0; i < n; ++i) {
      const Matrix blk1 = lefts[i] * ks;
      const Matrix blk2 = a.left_matrix(ee * a.product_of_basis(s, i));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          sysm(s * n + r, i * n + c) = blk1(r, c);
          sysm(n * n + s * n + r, i * n + c) = blk2(r, c);
        }
    }
    rhs[s * n + s] = 1;
    rhs[n * n + s * n + s] = 1;
  }
  const auto sol = solve_affine(sysm, rhs);
  require(sol.has_value(), ErrorKind::Verification, "no dual basis for the Frobenius homomorphism");
  for (std::size_t i = 0; i < n; ++i) {
    Vec y(sol->particular.begin() + static_cast<long>(i * n), sol->particular.begin() + static_cast<long>((i + 1) * n));
    if (!is_zero(y)) sys.pairs.emplace_back(a.basis_element(i), std::move(y));
  }
  const auto check = verify_frobenius_system(ext, sys);
  require(check.ok, ErrorKind::Verification, "extracted Frobenius system failed verification: " + check.message);
  return sys;
}

ValidationReport verify_frobenius_system(const Extension& ext, const FrobeniusSystem& sys) {
  const Algebra& a = ext.a;
  const Algebra& b = ext.b;
  const std::size_t n = a.dim();
  const PrimeField F(a.p());
  const Matrix& e = sys.e_map;
  if (e.rows() != b.dim() || e.cols() != n) return {false, "E has the wrong shape"};
  for (const auto& [x, y] : sys.pairs)
    if (x.size() != n || y.size() != n) return {false, "pair has the wrong length"};
  for (std::size_t s = 0; s < n; ++s) {
    const Vec as = a.basis_element(s);
    for (std::size_t j = 0; j < b.dim(); ++j) {
      const Vec bj = b.basis_element(j);
      const Vec eb = ext.embed.column(j);
      if (e * a.multiply(eb, as) != b.multiply(bj, e * as))
        return {false, "E(b a) != b E(a) for b_" + std::to_string(j) + ", a_" + std::to_string(s)};
      if (e * a.multiply(as, eb) != b.multiply(e * as, bj))
        return {false, "E(a b) != E(a) b for a_" + std::to_string(s) + ", b_" + std::to_string(j)};
    }
    Vec lhs(n, 0), rhs(n, 0);
    for (const auto& [x, y] : sys.pairs) {
      lhs = vec_add(F, lhs, a.multiply(x, ext.embed * (e * a.multiply(y, as))));
      rhs = vec_add(F, rhs, a.multiply(ext.embed * (e * a.multiply(as, x)), y));
    }
    if (lhs != as) return {false, "sum x_i E(y_i a) != a for a_" + std::to_string(s)};
    if (rhs != as) return {false, "sum E(a x_i) y_i != a for a_" + std::to_string(s)};
  }
  return {true, ""};
}

// ---------------------------------------------------------------------------
// Probes and M-separability

ProbeReport check_semisimple_on_probes(const Extension& ext, const std::vector<Module>& probes) {
  ProbeReport report;
  report.universal = check_separable(ext).has_value();
  const Bimodule aab = restriction_of(ext, false, true);
  for (const auto& x : probes) {
    require(same_algebra(x.algebra(), ext.a), ErrorKind::Mismatch, "probe is not a module over A");
    const std::uint32_t p = x.p();
    TensorResult detail;
    const Module t = tensor_over(aab, restrict_to_b(ext, x), &detail);
    // Multiplication A (x)_k X -> X on the basis i * dim X + j.
    Matrix mu(x.dim(), ext.a.dim() * x.dim(), p);
    for (std::size_t i = 0; i < ext.a.dim(); ++i)
      for (std::size_t j = 0; j < x.dim(); ++j)
        for (std::size_t r = 0; r < x.dim(); ++r) mu(r, i * x.dim() + j) = x.basis_action()[i](r, j);
    const Matrix mubar = mu * detail.section;
    const auto homs = hom_basis(x.rep(), t.rep());
    ProbeVerdict v;
    std::vector<Matrix> composed;
    for (const auto& h : homs) composed.push_back(mubar * h);
    if (x.dim() == 0) {
      v.split = true;
    } else if (!homs.empty()) {
      const auto sol = solve_affine(flat_columns(composed, x.dim() * x.dim(), p),
                                    Matrix::identity(x.dim(), p).entries());
      if (sol) {
        Matrix s(t.dim(), x.dim(), p);
        for (std::size_t k = 0; k < homs.size(); ++k) add_scaled(s, sol->particular[k], homs[k]);
        require(mubar * s == Matrix::identity(x.dim(), p) && is_homomorphism(x.rep(), t.rep(), s),
                ErrorKind::Verification, "probe section failed verification");
        v.split = true;
        v.section = std::move(s);
      }
    }
    report.probes.push_back(std::move(v));
  }
  return report;
}

std::optional<SummandCert> check_M_separable(const Bimodule& m) {
  const Algebra& r = m.right_algebra();
  require(summand_witness(m.right_module().rep(), regular_module(r, Side::Right).rep()).has_value(),
          ErrorKind::Invalid, "M is not projective as a right module");
  const Bimodule dual = left_dual(m);
  const Bimodule t = tensor_over(m, dual);
  return summand_cert(regular_bimodule(m.left_algebra()).rep(), t.rep(), "_S S _S", "M (x)_R *M");
}

// ---------------------------------------------------------------------------
// Derived extensions

Extension endo_extension(const Extension& ext, const Module& y) {
  require(same_algebra(y.algebra(), ext.b), ErrorKind::Mismatch, "Y is not a module over B");
  const std::uint32_t p = ext.a.p();
  TensorResult detail;
  const Module n = tensor_over(restriction_of(ext, false, true), y, &detail);
  const EndAlgebra ey = end_algebra(y);
  const EndAlgebra en = end_algebra(n);
  const Matrix basis = flat_columns(en.maps, n.dim() * n.dim(), p);
  const Matrix ida = Matrix::identity(ext.a.dim(), p);
  std::vector<Vec> cols;
  for (const auto& f : ey.maps) {
    const Matrix induced = detail.projection * (kronecker(ida, f) * detail.section);
    const auto sol = solve_affine(basis, induced.entries());
    require(sol.has_value(), ErrorKind::Verification, "id (x) f is not an A-endomorphism");
    cols.push_back(sol->particular);
  }
  return make_extension(ey.algebra, en.algebra, Matrix::from_columns(cols, en.algebra.dim(), p));
}

Extension tensor_extension(const Extension& ext, const Algebra& c) {
  require(c.p() == ext.a.p(), ErrorKind::Mismatch, "tensor factor over a different prime");
  return make_extension(tensor_product(ext.b, c), tensor_product(ext.a, c),
                        kronecker(ext.embed, Matrix::identity(c.dim(), c.p())));
}

QuotientExtension quotient_extension(const Extension& ext, const Ideal& j) {
  const Algebra& a = ext.a;
  const Algebra& b = ext.b;
  const std::uint32_t p = a.p();
  require(j.ambient == b.dim() && is_ideal(b, j.basis), ErrorKind::Invalid, "J is not an ideal of B");
  QuotientExtension out;
  std::vector<Vec> ej;
  for (const auto& v : j.basis) ej.push_back(ext.embed * v);
  out.i = ideal_closure(a, ej);
  std::vector<Vec> image;
  for (std::size_t c = 0; c < b.dim(); ++c) image.push_back(ext.embed.column(c));
  const auto meet = subspace_intersection(out.i.basis, image, a.dim(), p);
  if (span_basis(meet, a.dim(), p) != span_basis(ej, a.dim(), p)) {
    out.failure = "I meet B != J";
    return out;
  }
  if (one_sided_sum(a, ej).basis != out.i.basis) {
    out.failure = "A J + J A != I";
    return out;
  }
  if (j.dim() == b.dim() || out.i.dim() == a.dim()) {
    out.failure = "quotient algebra is zero";
    return out;
  }
  const Quotient qa = quotient_algebra(a, out.i);
  const Quotient qb = quotient_algebra(b, j);
  std::vector<Vec> cols;
  for (auto r : qb.representatives) cols.push_back(qa.projection * ext.embed.column(r));
  out.ext = make_extension(qb.algebra, qa.algebra, Matrix::from_columns(cols, qa.algebra.dim(), p));
  return out;
}

}  // namespace repdim
