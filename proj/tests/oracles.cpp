#include "oracles.hpp"

namespace repdim::oracle {

namespace {

// Steps through all of GF(p)^n in lexicographic order.
bool next_vector(Vec& v, std::uint32_t p) {
  for (auto& x : v) {
    if (++x < p) return true;
    x = 0;
  }
  return false;
}

Vec flatten(const Matrix& m) { return Vec(m.entries().begin(), m.entries().end()); }

}  // namespace

std::vector<Vec> brute_force_radical(const Algebra& a) {
  const std::size_t n = a.dim();
  const std::uint32_t p = a.p();
  std::vector<Vec> out;
  Vec x(n, 0);
  while (next_vector(x, p)) {
    bool good = true;
    Vec y(n, 0);
    do {
      if (!a.is_nilpotent(a.multiply(y, x))) {
        good = false;
        break;
      }
    } while (next_vector(y, p));
    if (good) out.push_back(x);
  }
  return out;
}

MatrixAlgebra matrix_subalgebra(const std::vector<Matrix>& gens) {
  const std::size_t n = gens.at(0).rows();
  const std::uint32_t p = gens[0].p();
  EchelonSpace span(n * n, p);
  std::vector<Matrix> found{Matrix::identity(n, p)};
  span.insert(flatten(found[0]));
  for (std::size_t q = 0; q < found.size(); ++q)
    for (const auto& g : gens) {
      Matrix m = found[q] * g;
      if (span.insert(flatten(m))) found.push_back(m);
    }
  const auto& basis = span.basis();
  const std::size_t d = basis.size();
  std::vector<Matrix> bm;
  for (const auto& b : basis) {
    Matrix m(n, n, p);
    for (std::size_t i = 0; i < n * n; ++i) m(i / n, i % n) = b[i];
    bm.push_back(m);
  }
  std::vector<Elem> table(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vec c = span.coordinates(flatten(bm[i] * bm[j]));
      for (std::size_t k = 0; k < d; ++k) table[(i * d + j) * d + k] = c[k];
    }
  return {Algebra(p, d, std::move(table), span.coordinates(flatten(Matrix::identity(n, p)))), std::move(bm)};
}

MatrixAlgebra random_matrix_algebra(std::mt19937& rng, std::uint32_t p, std::size_t n, std::size_t max_dim) {
  for (;;) {
    const bool triangular = rng() % 2;
    const std::size_t k = 1 + rng() % 2;
    std::vector<Matrix> gens;
    for (std::size_t g = 0; g < k; ++g) {
      Matrix m(n, n, p);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = triangular ? i : 0; j < n; ++j) m(i, j) = rng() % p;
      gens.push_back(m);
    }
    MatrixAlgebra a = matrix_subalgebra(gens);
    if (a.algebra.dim() <= max_dim) return a;
  }
}

Algebra random_matrix_subalgebra(std::mt19937& rng, std::uint32_t p, std::size_t n, std::size_t max_dim) {
  return random_matrix_algebra(rng, p, n, max_dim).algebra;
}

bool is_local_by_enumeration(const Algebra& a) {
  const std::uint32_t p = a.p();
  Vec x(a.dim(), 0);
  do {
    if (a.is_nilpotent(x)) continue;
    if (!is_invertible(a.left_matrix(x))) return false;
  } while (next_vector(x, p));
  return true;
}

std::size_t hom_dimension_by_kernel(const Module& m, const Module& n) {
  // F rho_M(g) - rho_N(g) F = 0 for every generator, F stored row-major.
  const std::size_t dm = m.dim(), dn = n.dim(), u = dm * dn;
  const std::uint32_t p = m.p();
  const PrimeField F(p);
  std::vector<Vec> rows;
  for (std::size_t g = 0; g < m.generator_action().size(); ++g) {
    const Matrix& a = m.generator_action()[g];
    const Matrix& b = n.generator_action()[g];
    for (std::size_t i = 0; i < dn; ++i)
      for (std::size_t j = 0; j < dm; ++j) {
        Vec row(u, 0);
        for (std::size_t k = 0; k < dm; ++k) row[i * dm + k] = F.add(row[i * dm + k], a(k, j));
        for (std::size_t k = 0; k < dn; ++k) row[k * dm + j] = F.sub(row[k * dm + j], b(i, k));
        rows.push_back(std::move(row));
      }
  }
  if (rows.empty()) return u;
  return u - rank(Matrix::from_rows(rows, u, p));
}

namespace {

// Free module A^g with vectors stored blockwise.
struct FreeContext {
  const Algebra& a;
  std::vector<Matrix> left;  // left multiplication by basis elements

  Vec act(std::size_t s, const Vec& v) const {
    const std::size_t n = a.dim();
    Vec out(v.size());
    for (std::size_t c = 0; c * n < v.size(); ++c) {
      const Vec blk(v.begin() + static_cast<long>(c * n), v.begin() + static_cast<long>((c + 1) * n));
      const Vec r = left[s] * blk;
      std::copy(r.begin(), r.end(), out.begin() + static_cast<long>(c * n));
    }
    return out;
  }
};

// Generators of a submodule of A^g (given by a basis) modulo rad times it.
std::vector<Vec> free_generators(const FreeContext& fc, const std::vector<Vec>& sub, const std::vector<Vec>& rad,
                                 std::size_t ambient) {
  const std::uint32_t p = fc.a.p();
  EchelonSpace cur(ambient, p);
  for (const auto& r : rad) {
    const Matrix lr = fc.a.left_matrix(r);
    for (const auto& v : sub) {
      Vec out(v.size());
      for (std::size_t c = 0; c * fc.a.dim() < v.size(); ++c) {
        const Vec blk(v.begin() + static_cast<long>(c * fc.a.dim()),
                      v.begin() + static_cast<long>((c + 1) * fc.a.dim()));
        const Vec x = lr * blk;
        std::copy(x.begin(), x.end(), out.begin() + static_cast<long>(c * fc.a.dim()));
      }
      cur.insert(out);
    }
  }
  std::vector<Vec> gens;
  for (const auto& v : sub) {
    if (cur.contains(v)) continue;
    gens.push_back(v);
    for (std::size_t s = 0; s < fc.a.dim(); ++s) cur.insert(fc.act(s, v));
  }
  return gens;
}

}  // namespace

std::optional<std::size_t> pd_by_ext(const Module& m, std::size_t cap) {
  const Algebra& a = m.algebra();
  const std::size_t n = a.dim();
  const std::uint32_t p = a.p();
  const PrimeField F(p);
  const auto rad = brute_force_radical(a);
  const Ideal radi = make_ideal(a, rad);
  // T = A/rad with basis from the complement of rad.
  EchelonSpace rs(n, p);
  for (const auto& r : radi.basis) rs.insert(r);
  const auto comp = rs.complement_indices();
  const std::size_t dt = comp.size();
  auto to_t = [&](Vec v) {
    rs.reduce(v);
    Vec out(dt);
    for (std::size_t i = 0; i < dt; ++i) out[i] = v[comp[i]];
    return out;
  };
  // Action of basis element s on T.
  std::vector<Matrix> tact;
  for (std::size_t s = 0; s < n; ++s) {
    Matrix t(dt, dt, p);
    for (std::size_t j = 0; j < dt; ++j) {
      const Vec img = to_t(a.multiply(a.basis_element(s), a.basis_element(comp[j])));
      for (std::size_t i = 0; i < dt; ++i) t(i, j) = img[i];
    }
    tact.push_back(std::move(t));
  }
  FreeContext fc{a, {}};
  for (std::size_t s = 0; s < n; ++s) fc.left.push_back(a.left_basis_matrix(s));

  if (m.dim() == 0) return 0;
  // Step 0: generators of M itself, treating M as the target of F_0.
  std::vector<Vec> mbasis;
  for (std::size_t j = 0; j < m.dim(); ++j) mbasis.push_back(unit_vector(m.dim(), j));
  EchelonSpace radm(m.dim(), p);
  for (const auto& r : radi.basis) {
    const Matrix ar = m.act(r);
    for (std::size_t j = 0; j < m.dim(); ++j) radm.insert(ar.column(j));
  }
  std::vector<Vec> g0;
  for (const auto& v : mbasis) {
    if (radm.contains(v)) continue;
    g0.push_back(v);
    for (const auto& w : m.orbit(v)) radm.insert(w);
  }
  // d_0 : A^{g0} -> M.
  std::size_t prev_rank = g0.size();
  Matrix d(m.dim(), n * prev_rank, p);
  for (std::size_t c = 0; c < g0.size(); ++c) {
    const auto orb = m.orbit(g0[c]);
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t r = 0; r < m.dim(); ++r) d(r, c * n + s) = orb[s][r];
  }
  // Cochain differentials: delta^{i-1} rank and current cochain size.
  std::size_t rank_prev = 0;  // rank of delta^{i-1}
  std::size_t cochain = prev_rank * dt;
  for (std::size_t i = 0; i <= cap; ++i) {
    // Next generators: kernel of d inside A^{prev_rank}.
    const auto ker = kernel_basis(d);
    std::vector<Vec> g = ker.empty() ? std::vector<Vec>{} : free_generators(fc, ker, radi.basis, n * prev_rank);
    // delta^i : T^{prev_rank} -> T^{g.size()}, (t_c') -> (sum_c' a_{c,c'} t_c')_c.
    const std::size_t next_size = g.size() * dt;
    Matrix delta(next_size, cochain, p);
    for (std::size_t c = 0; c < g.size(); ++c)
      for (std::size_t c2 = 0; c2 < prev_rank; ++c2)
        for (std::size_t s = 0; s < n; ++s) {
          const Elem coef = g[c][c2 * n + s];
          if (!coef) continue;
          for (std::size_t r = 0; r < dt; ++r)
            for (std::size_t col = 0; col < dt; ++col)
              delta(c * dt + r, c2 * dt + col) = F.add(delta(c * dt + r, c2 * dt + col), F.mul(coef, tact[s](r, col)));
        }
    const std::size_t rk = next_size ? rank(delta) : 0;
    const std::size_t ext = cochain - rk - rank_prev;
    if (ext == 0) {
      if (i == 0) return 0;
      return i - 1;
    }
    if (g.empty()) return i;
    // d_{i+1} : A^{g} -> A^{prev_rank}, f_c -> g_c.
    Matrix nd(n * prev_rank, n * g.size(), p);
    for (std::size_t c = 0; c < g.size(); ++c)
      for (std::size_t s = 0; s < n; ++s) {
        const Vec col = fc.act(s, g[c]);
        for (std::size_t r = 0; r < col.size(); ++r) nd(r, c * n + s) = col[r];
      }
    d = std::move(nd);
    prev_rank = g.size();
    rank_prev = rk;
    cochain = next_size;
  }
  return std::nullopt;
}

std::optional<std::size_t> gldim_by_ext(const Algebra& a, std::size_t cap) {
  const auto rad = make_ideal(a, brute_force_radical(a));
  Module reg = regular_module(a, Side::Left);
  QuotientResult t = quotient_module(reg, rad.basis);
  return pd_by_ext(t.module, cap);
}

}  // namespace repdim::oracle
