#include "repdim/projective.hpp"

namespace repdim {

ProjectiveSystem projective_system(const Algebra& a) {
  ProjectiveSystem ps;
  ps.algebra = a;
  ps.radical = radical(a);
  Module reg = regular_module(a, Side::Left);
  const Decomposition& d = reg.decomposition();
  for (const auto& s : d.summands) {
    // A projection onto a summand of the regular module is right multiplication by e = eps(1).
    const Matrix eps = s.inclusions[0] * s.projections[0];
    Vec e = eps * a.unit();
    const Matrix r = a.right_matrix(e);
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < a.dim(); ++j) cols.push_back(r.column(j));
    SubmoduleResult p = submodule(reg, cols);
    require(p.module.dim() == s.module.dim(), ErrorKind::Verification, "A e has the wrong dimension");
    ps.idempotents.push_back(std::move(e));
    ps.multiplicities.push_back(s.multiplicity);
    ps.simples.push_back(top(p.module, ps.radical).module);
    ps.projectives.push_back(std::move(p.module));
    ps.projective_inclusions.push_back(std::move(p.inclusion));
  }
  return ps;
}

ProjectiveSystem projective_system(const Algebra& a, const std::vector<Vec>& idempotents,
                                   std::optional<Ideal> radical) {
  const PrimeField& F = a.field();
  Vec sum = a.zero();
  for (std::size_t i = 0; i < idempotents.size(); ++i) {
    for (std::size_t j = 0; j < idempotents.size(); ++j) {
      const Vec prod = a.multiply(idempotents[i], idempotents[j]);
      require(i == j ? prod == idempotents[i] : is_zero(prod), ErrorKind::Invalid,
              "idempotents are not orthogonal");
    }
    sum = vec_add(F, sum, idempotents[i]);
  }
  require(sum == a.unit(), ErrorKind::Invalid, "idempotents do not sum to 1");
  ProjectiveSystem ps;
  ps.algebra = a;
  ps.radical = radical ? std::move(*radical) : repdim::radical(a);
  const Module reg = regular_module(a, Side::Left);
  for (const auto& e : idempotents) {
    const Matrix r = a.right_matrix(e);
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < a.dim(); ++j) cols.push_back(r.column(j));
    SubmoduleResult p = submodule(reg, cols);
    ps.idempotents.push_back(e);
    ps.multiplicities.push_back(1);
    ps.simples.push_back(top(p.module, ps.radical).module);
    ps.projectives.push_back(std::move(p.module));
    ps.projective_inclusions.push_back(std::move(p.inclusion));
  }
  return ps;
}

ProjectiveCover projective_cover(const ProjectiveSystem& ps, const Module& m) {
  require(same_algebra(ps.algebra, m.algebra()), ErrorKind::Mismatch, "module over a different algebra");
  const std::uint32_t p = m.p();
  EchelonSpace cur(m.dim(), p);
  for (const auto& v : radical_subspace(m, ps.radical)) cur.insert(v);
  std::vector<std::size_t> types;
  std::vector<Vec> images;  // m_c in e_j M
  for (std::size_t j = 0; j < ps.idempotents.size() && cur.dim() < m.dim(); ++j) {
    const Matrix ej = m.act(ps.idempotents[j]);
    for (std::size_t c = 0; c < m.dim() && cur.dim() < m.dim(); ++c) {
      Vec v = ej.column(c);
      if (cur.contains(v)) continue;
      for (const auto& w : m.orbit(v)) cur.insert(w);
      types.push_back(j);
      images.push_back(std::move(v));
    }
  }
  require(cur.dim() == m.dim(), ErrorKind::Verification, "projective cover does not reach M");
  std::vector<Module> parts;
  std::size_t pdim = 0;
  for (auto j : types) {
    parts.push_back(ps.projectives[j]);
    pdim += ps.projectives[j].dim();
  }
  Module pmod = parts.empty() ? Module::zero(m.algebra()) : direct_sum(parts, m.algebra());
  Matrix map(m.dim(), pdim, p);
  const PrimeField F(p);
  std::size_t col = 0;
  for (std::size_t c = 0; c < types.size(); ++c) {
    const auto orbit = m.orbit(images[c]);
    const Matrix& incl = ps.projective_inclusions[types[c]];
    for (std::size_t t = 0; t < incl.cols(); ++t, ++col) {
      Vec img(m.dim(), 0);
      for (std::size_t i = 0; i < incl.rows(); ++i)
        if (incl(i, t)) vec_axpy(F, incl(i, t), orbit[i], img);
      for (std::size_t r = 0; r < m.dim(); ++r) map(r, col) = img[r];
    }
  }
  require(is_homomorphism(pmod.rep(), m.rep(), map), ErrorKind::Verification, "cover map is not a homomorphism");
  require(rank(map) == m.dim(), ErrorKind::Verification, "cover map is not onto");
  SubmoduleResult ker = kernel_module(pmod, map);
  EchelonSpace radp(pdim, p);
  for (const auto& v : radical_subspace(pmod, ps.radical)) radp.insert(v);
  for (std::size_t t = 0; t < ker.inclusion.cols(); ++t)
    require(radp.contains(ker.inclusion.column(t)), ErrorKind::Verification, "cover is not minimal");
  return {std::move(pmod), std::move(types), std::move(map), std::move(ker)};
}

std::string to_string(const Dimension& d) {
  switch (d.kind) {
    case DimKind::Exact:
      return std::to_string(d.value);
    case DimKind::Infinite:
      return "infinite";
    case DimKind::Unknown:
      return "unknown(>" + std::to_string(d.value) + ")";
  }
  return "?";
}

namespace {

// Indecomposable summand representatives of M, one per isomorphism class.
std::vector<Representation> summand_types(const Module& m) {
  std::vector<Representation> out;
  for (const auto& s : m.decomposition().summands) out.push_back(s.module.rep());
  return out;
}

bool same_types(const std::vector<Representation>& x, const std::vector<Representation>& y) {
  if (x.size() != y.size()) return false;
  for (const auto& a : x) {
    bool hit = false;
    for (const auto& b : y)
      if (a.dim == b.dim && indecomposable_iso(a, b)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

}  // namespace

Resolution projective_resolution(const ProjectiveSystem& ps, const Module& m, std::size_t cap,
                                 const ResolutionOptions& options) {
  const bool detect_repetition = options.detect_repetition;
  require(cap <= kMaxResolutionLength, ErrorKind::CapExceeded,
          "resolution cap " + std::to_string(cap) + " exceeds " + std::to_string(kMaxResolutionLength));
  Resolution res;
  res.syzygies.push_back(m);
  if (m.dim() == 0) return res;
  std::vector<std::vector<Representation>> types;
  if (detect_repetition) types.push_back(summand_types(m));
  for (std::size_t i = 0; i <= cap; ++i) {
    res.covers.push_back(projective_cover(ps, res.syzygies[i]));
    Module next = res.covers.back().kernel.module;
    if (next.dim() == 0) {
      res.pd = {DimKind::Exact, i, std::nullopt, false};
      res.syzygies.push_back(std::move(next));
      return res;
    }
    if (next.dim() > options.max_syzygy_dim) break;
    if (!detect_repetition) {
      res.syzygies.push_back(std::move(next));
      continue;
    }
    for (std::size_t j = 0; j <= i; ++j) {
      if (res.syzygies[j].dim() != next.dim()) continue;
      if (is_isomorphic(res.syzygies[j], next)) {
        res.pd = {DimKind::Infinite, 0, std::make_pair(j, i + 1), false};
        res.syzygies.push_back(std::move(next));
        return res;
      }
    }
    // The summand types of the next syzygy depend only on those of the current one.
    types.push_back(summand_types(next));
    for (std::size_t j = 0; j <= i; ++j) {
      if (same_types(types[j], types.back())) {
        res.pd = {DimKind::Infinite, 0, std::make_pair(j, i + 1), true};
        res.syzygies.push_back(std::move(next));
        return res;
      }
    }
    res.syzygies.push_back(std::move(next));
  }
  res.pd = {DimKind::Unknown, cap, std::nullopt, false};
  return res;
}

Dimension projective_dimension(const ProjectiveSystem& ps, const Module& m, std::size_t cap,
                               const ResolutionOptions& options) {
  return projective_resolution(ps, m, cap, options).pd;
}

Dimension projective_dimension(const Module& m, std::size_t cap) {
  return projective_dimension(projective_system(m.algebra()), m, cap);
}

Dimension combine_max(const Dimension& a, const Dimension& b) {
  if (a.kind == DimKind::Infinite) return a;
  if (b.kind == DimKind::Infinite) return b;
  if (a.kind == DimKind::Unknown) return a;
  if (b.kind == DimKind::Unknown) return b;
  return a.value >= b.value ? a : b;
}

Dimension global_dimension(const Algebra& a, std::size_t cap, const ResolutionOptions& options) {
  return global_dimension(projective_system(a), cap, options);
}

Dimension global_dimension(const ProjectiveSystem& ps, std::size_t cap, const ResolutionOptions& options) {
  Dimension out{DimKind::Exact, 0, std::nullopt, false};
  if (ps.radical.dim() == 0) return out;
  for (const auto& s : ps.simples) {
    out = combine_max(out, projective_dimension(ps, s, cap, options));
    if (out.kind == DimKind::Infinite || (!options.detect_repetition && out.kind != DimKind::Exact)) break;
  }
  return out;
}

}  // namespace repdim
