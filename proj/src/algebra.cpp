#include "repdim/algebra.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>

namespace repdim {

Algebra::Algebra(std::uint32_t p, std::size_t dim, std::vector<Elem> table, Vec unit,
                 std::vector<std::string> labels)
    : d_(std::make_shared<Data>()) {
  d_->field = PrimeField(p);
  require(dim >= 1, ErrorKind::Invalid, "algebra dimension must be at least 1");
  require(dim <= kMaxAlgebraDim, ErrorKind::CapExceeded,
          "algebra dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(kMaxAlgebraDim));
  require(table.size() == dim * dim * dim, ErrorKind::Mismatch, "structure table has wrong size");
  require(unit.size() == dim, ErrorKind::Mismatch, "unit vector has wrong length");
  require(labels.empty() || labels.size() == dim, ErrorKind::Mismatch, "label count mismatch");
  for (auto& x : table) x %= p;
  for (auto& x : unit) x %= p;
  d_->dim = dim;
  d_->table = std::move(table);
  d_->unit = std::move(unit);
  d_->labels = std::move(labels);
}

Vec Algebra::multiply(std::span<const Elem> x, std::span<const Elem> y) const {
  const std::size_t n = dim();
  require(x.size() == n && y.size() == n, ErrorKind::Mismatch, "element length mismatch");
  std::vector<std::uint64_t> acc(n, 0);
  const PrimeField& F = field();
  for (std::size_t i = 0; i < n; ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!y[j]) continue;
      const std::uint64_t s = F.mul(x[i], y[j]);
      const Elem* row = d_->table.data() + (i * n + j) * n;
      for (std::size_t k = 0; k < n; ++k) acc[k] += s * row[k];
    }
  }
  Vec r(n);
  for (std::size_t k = 0; k < n; ++k) r[k] = static_cast<Elem>(acc[k] % p());
  return r;
}

Matrix Algebra::left_matrix(std::span<const Elem> x) const {
  const std::size_t n = dim();
  std::vector<std::uint64_t> acc(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const Elem* row = d_->table.data() + (i * n + j) * n;
      for (std::size_t k = 0; k < n; ++k) acc[k * n + j] += static_cast<std::uint64_t>(x[i]) * row[k];
    }
  }
  Matrix m(n, n, p());
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) m(k, j) = static_cast<Elem>(acc[k * n + j] % p());
  return m;
}

Matrix Algebra::right_matrix(std::span<const Elem> x) const {
  const std::size_t n = dim();
  std::vector<std::uint64_t> acc(n * n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (!x[j]) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Elem* row = d_->table.data() + (i * n + j) * n;
      for (std::size_t k = 0; k < n; ++k) acc[k * n + i] += static_cast<std::uint64_t>(x[j]) * row[k];
    }
  }
  Matrix m(n, n, p());
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) m(k, i) = static_cast<Elem>(acc[k * n + i] % p());
  return m;
}

Matrix Algebra::left_basis_matrix(std::size_t i) const {
  const std::size_t n = dim();
  Matrix m(n, n, p());
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m(k, j) = coeff(i, j, k);
  return m;
}

Matrix Algebra::right_basis_matrix(std::size_t i) const {
  const std::size_t n = dim();
  Matrix m(n, n, p());
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m(k, j) = coeff(j, i, k);
  return m;
}

bool Algebra::is_nilpotent(std::span<const Elem> x) const {
  Vec cur(x.begin(), x.end());
  for (std::size_t k = 0; k <= dim(); ++k) {
    if (repdim::is_zero(cur)) return true;
    cur = multiply(cur, x);
  }
  return repdim::is_zero(cur);
}

Vec Algebra::power(std::span<const Elem> x, std::uint64_t e) const {
  Vec r = unit();
  Vec b(x.begin(), x.end());
  while (e) {
    if (e & 1) r = multiply(r, b);
    e >>= 1;
    if (e) b = multiply(b, b);
  }
  return r;
}

bool Algebra::is_commutative() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (coeff(i, j, k) != coeff(j, i, k)) return false;
  return true;
}

std::vector<Vec> subalgebra_span(const Algebra& a, const std::vector<Vec>& elements) {
  // The subalgebra generated by S is the span of words in S applied to 1.
  EchelonSpace space(a.dim(), a.p());
  std::vector<Matrix> lefts;
  for (const auto& s : elements) lefts.push_back(a.left_matrix(s));
  std::deque<Vec> queue;
  if (space.insert(a.unit())) queue.push_back(a.unit());
  while (!queue.empty()) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    for (const auto& l : lefts) {
      Vec w = l * v;
      if (space.insert(w)) queue.push_back(std::move(w));
    }
  }
  return space.basis();
}

const std::vector<Vec>& Algebra::generators() const {
  std::call_once(d_->gens_once, [this] {
    // Greedy over the basis; the span of words is extended incrementally.
    std::vector<Vec> gens, members;
    std::vector<Matrix> lefts;
    EchelonSpace span(dim(), p());
    span.insert(unit());
    members.push_back(unit());
    for (std::size_t i = 0; i < dim() && span.dim() < dim(); ++i) {
      const Vec b = basis_element(i);
      if (span.contains(b)) continue;
      gens.push_back(b);
      lefts.push_back(left_basis_matrix(i));
      std::deque<Vec> queue;
      for (const auto& v : members) {
        Vec w = lefts.back() * v;
        if (span.insert(w)) queue.push_back(std::move(w));
      }
      while (!queue.empty()) {
        Vec v = std::move(queue.front());
        queue.pop_front();
        for (const auto& l : lefts) {
          Vec w = l * v;
          if (span.insert(w)) queue.push_back(std::move(w));
        }
        members.push_back(std::move(v));
      }
    }
    d_->gens = std::move(gens);
  });
  return d_->gens;
}

Algebra Algebra::with_generators(std::vector<Vec> gens) const {
  require(subalgebra_span(*this, gens).size() == dim(), ErrorKind::Invalid,
          "supplied elements do not generate the algebra");
  Algebra copy(p(), dim(), d_->table, d_->unit, d_->labels);
  std::call_once(copy.d_->gens_once, [&] { copy.d_->gens = std::move(gens); });
  return copy;
}

const WordExpansion& Algebra::word_expansion() const {
  std::call_once(d_->words_once, [this] {
    const auto& gens = generators();
    std::vector<Matrix> lefts;
    for (const auto& g : gens) lefts.push_back(left_matrix(g));
    WordExpansion w;
    EchelonSpace space(dim(), p());
    std::vector<Vec> elems{unit()};
    space.insert(unit());
    w.parent.push_back(WordExpansion::kNone);
    w.generator.push_back(0);
    for (std::size_t q = 0; q < elems.size() && elems.size() < dim(); ++q)
      for (std::size_t g = 0; g < gens.size() && elems.size() < dim(); ++g) {
        Vec v = lefts[g] * elems[q];
        if (!space.insert(v)) continue;
        elems.push_back(std::move(v));
        w.parent.push_back(q);
        w.generator.push_back(g);
      }
    require(elems.size() == dim(), ErrorKind::Verification, "generators do not span the algebra");
    // Columns of `words` are the word vectors; its inverse expresses basis elements in words.
    auto inv = inverse(Matrix::from_columns(elems, dim(), p()));
    require(inv.has_value(), ErrorKind::Verification, "word basis is singular");
    w.coeffs = inv->transpose();
    d_->words = std::move(w);
  });
  return d_->words;
}

bool Algebra::same_table(const Algebra& other) const {
  return p() == other.p() && dim() == other.dim() && table() == other.table() && unit() == other.unit();
}

ValidationReport validate(const Algebra& a) {
  const std::size_t n = a.dim();
  std::ostringstream msg;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec b = a.basis_element(i);
    if (a.multiply(a.unit(), b) != b) {
      msg << "unit law fails on the left for basis element " << i;
      return {false, msg.str()};
    }
    if (a.multiply(b, a.unit()) != b) {
      msg << "unit law fails on the right for basis element " << i;
      return {false, msg.str()};
    }
  }
  // (b_i b_j) b_k == b_i (b_j b_k): compare R_k applied to b_i b_j with L_i applied to b_j b_k.
  std::vector<Matrix> left(n), right(n);
  for (std::size_t i = 0; i < n; ++i) {
    left[i] = a.left_basis_matrix(i);
    right[i] = a.right_basis_matrix(i);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto ij = a.product_of_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        const Vec lhs = right[k] * ij;
        const Vec rhs = left[i] * a.product_of_basis(j, k);
        if (lhs != rhs) {
          msg << "associativity fails on basis triple (" << i << ", " << j << ", " << k << ")";
          return {false, msg.str()};
        }
      }
    }
  return {true, "ok"};
}

Algebra opposite(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Elem> t(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t[(i * n + j) * n + k] = a.coeff(j, i, k);
  return Algebra(a.p(), n, std::move(t), a.unit(), a.labels()).with_generators(a.generators());
}

Algebra tensor_product(const Algebra& a, const Algebra& b) {
  require(a.p() == b.p(), ErrorKind::Mismatch, "tensor product of algebras over different fields");
  const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  require(n <= kMaxAlgebraDim, ErrorKind::CapExceeded,
          "tensor product dimension " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxAlgebraDim));
  const PrimeField& F = a.field();
  std::vector<Elem> t(n * n * n, 0);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t i2 = 0; i2 < na; ++i2) {
      const auto pa = a.product_of_basis(i, i2);
      for (std::size_t j = 0; j < nb; ++j)
        for (std::size_t j2 = 0; j2 < nb; ++j2) {
          const auto pb = b.product_of_basis(j, j2);
          Elem* out = t.data() + ((i * nb + j) * n + (i2 * nb + j2)) * n;
          for (std::size_t k = 0; k < na; ++k) {
            if (!pa[k]) continue;
            for (std::size_t l = 0; l < nb; ++l)
              if (pb[l]) out[k * nb + l] = F.mul(pa[k], pb[l]);
          }
        }
    }
  Vec unit(n, 0);
  for (std::size_t k = 0; k < na; ++k)
    for (std::size_t l = 0; l < nb; ++l) unit[k * nb + l] = F.mul(a.unit()[k], b.unit()[l]);
  std::vector<std::string> labels;
  if (!a.labels().empty() && !b.labels().empty())
    for (std::size_t k = 0; k < na; ++k)
      for (std::size_t l = 0; l < nb; ++l) labels.push_back(a.labels()[k] + "*" + b.labels()[l]);
  Algebra out(a.p(), n, std::move(t), std::move(unit), std::move(labels));
  // x (x) 1 and 1 (x) y for generators x of A and y of B generate A (x) B.
  std::vector<Vec> gens;
  for (const auto& g : a.generators()) {
    Vec v(n, 0);
    for (std::size_t k = 0; k < na; ++k)
      for (std::size_t l = 0; l < nb; ++l) v[k * nb + l] = F.mul(g[k], b.unit()[l]);
    gens.push_back(std::move(v));
  }
  for (const auto& g : b.generators()) {
    Vec v(n, 0);
    for (std::size_t k = 0; k < na; ++k)
      for (std::size_t l = 0; l < nb; ++l) v[k * nb + l] = F.mul(a.unit()[k], g[l]);
    gens.push_back(std::move(v));
  }
  return out.with_generators(std::move(gens));
}

bool is_ideal(const Algebra& a, const std::vector<Vec>& basis) {
  EchelonSpace s(a.dim(), a.p());
  for (const auto& v : basis) s.insert(v);
  for (const auto& g : a.generators())
    for (const auto& v : s.basis()) {
      if (!s.contains(a.multiply(g, v))) return false;
      if (!s.contains(a.multiply(v, g))) return false;
    }
  return true;
}

Ideal make_ideal(const Algebra& a, const std::vector<Vec>& spanning) {
  require(is_ideal(a, spanning), ErrorKind::Invalid, "subspace is not a two-sided ideal");
  return Ideal{a.dim(), a.p(), span_basis(spanning, a.dim(), a.p())};
}

namespace {

// Tr(m^e) mod q for an integer matrix with entries in [0, q).
std::uint64_t trace_power_mod(const Matrix& m, std::uint64_t e, std::uint64_t q) {
  const std::size_t n = m.rows();
  std::vector<std::uint64_t> base(n * n), result(n * n, 0), tmp(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) base[i * n + j] = m(i, j) % q;
  for (std::size_t i = 0; i < n; ++i) result[i * n + i] = 1 % q;
  auto mul = [&](const std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& y) {
    std::fill(tmp.begin(), tmp.end(), 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < n; ++t) {
        const std::uint64_t v = x[i * n + t];
        if (!v) continue;
        for (std::size_t j = 0; j < n; ++j) tmp[i * n + j] = (tmp[i * n + j] + v * y[t * n + j]) % q;
      }
  };
  while (e) {
    if (e & 1) {
      mul(result, base);
      result.swap(tmp);
    }
    e >>= 1;
    if (e) {
      mul(base, base);
      base.swap(tmp);
    }
  }
  std::uint64_t tr = 0;
  for (std::size_t i = 0; i < n; ++i) tr = (tr + result[i * n + i]) % q;
  return tr;
}

}  // namespace

Ideal radical(const Algebra& a) {
  // Descending chain I_{-1} = A, I_i = {x in I_{i-1} : g_i(x b) = 0 for all b}, where
  // g_i(x) = (Tr(L_x^{p^i}) mod p^{i+1}) / p^i on an integer lift of the left regular
  // matrix. The chain reaches the radical at i = floor(log_p dim).
  const std::size_t n = a.dim();
  const std::uint64_t p = a.p();
  std::size_t levels = 0;
  for (std::uint64_t pw = p; pw <= n; pw *= p) ++levels;

  std::vector<Vec> current;
  for (std::size_t i = 0; i < n; ++i) current.push_back(a.basis_element(i));

  std::uint64_t p_i = 1;  // p^i
  for (std::size_t level = 0; level <= levels && !current.empty(); ++level, p_i *= p) {
    const std::uint64_t q = p_i * p;
    EchelonSpace space(n, a.p());
    for (const auto& v : current) space.insert(v);
    const auto& basis = space.basis();
    Vec g(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const std::uint64_t tr = trace_power_mod(a.left_matrix(basis[j]), p_i, q);
      require(tr % p_i == 0, ErrorKind::Verification, "trace tower divisibility failed in radical()");
      g[j] = static_cast<Elem>(tr / p_i);
    }
    // Conditions g_i(x b_k) = 0 for x = sum c_j basis_j, expressed through coordinates in I.
    Matrix cond(n, basis.size(), a.p());
    const PrimeField& F = a.field();
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Matrix r = a.left_matrix(basis[j]);  // columns: basis_j * b_k
      for (std::size_t k = 0; k < n; ++k) {
        const Vec prod = r.column(k);
        const Vec coords = space.coordinates(prod);
        std::uint64_t s = 0;
        for (std::size_t m = 0; m < coords.size(); ++m) s += static_cast<std::uint64_t>(coords[m]) * g[m];
        cond(k, j) = static_cast<Elem>(s % a.p());
      }
    }
    std::vector<Vec> next;
    for (const auto& c : kernel_basis(cond)) {
      Vec x(n, 0);
      for (std::size_t j = 0; j < basis.size(); ++j) vec_axpy(F, c[j], basis[j], x);
      next.push_back(std::move(x));
    }
    current = std::move(next);
  }
  return Ideal{n, a.p(), span_basis(current, n, a.p())};
}

Ideal ideal_product(const Algebra& a, const Ideal& i, const Ideal& j) {
  EchelonSpace s(a.dim(), a.p());
  for (const auto& x : i.basis)
    for (const auto& y : j.basis) s.insert(a.multiply(x, y));
  return Ideal{a.dim(), a.p(), s.basis()};
}

std::vector<Ideal> radical_powers(const Algebra& a) {
  std::vector<Ideal> out;
  std::vector<Vec> all;
  for (std::size_t i = 0; i < a.dim(); ++i) all.push_back(a.basis_element(i));
  out.push_back(Ideal{a.dim(), a.p(), span_basis(all, a.dim(), a.p())});
  const Ideal rad = radical(a);
  Ideal cur = rad;
  while (true) {
    out.push_back(cur);
    if (cur.basis.empty()) break;
    Ideal next = ideal_product(a, cur, rad);
    require(next.dim() < cur.dim(), ErrorKind::Verification, "radical is not nilpotent");
    cur = std::move(next);
  }
  return out;
}

AlgebraProfile profile(const Algebra& a) {
  AlgebraProfile prof;
  for (const auto& i : radical_powers(a)) prof.radical_dims.push_back(i.dim());
  prof.loewy_length = prof.radical_dims.size() - 1;
  prof.semisimple = prof.loewy_length <= 1;
  return prof;
}

Ideal ideal_closure(const Algebra& a, const std::vector<Vec>& elements) {
  EchelonSpace s(a.dim(), a.p());
  std::deque<Vec> queue;
  for (const auto& e : elements)
    if (s.insert(e)) queue.push_back(e);
  const auto& gens = a.generators();
  while (!queue.empty()) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Vec l = a.multiply(g, v);
      if (s.insert(l)) queue.push_back(std::move(l));
      Vec r = a.multiply(v, g);
      if (s.insert(r)) queue.push_back(std::move(r));
    }
  }
  return Ideal{a.dim(), a.p(), s.basis()};
}

Ideal one_sided_sum(const Algebra& a, const std::vector<Vec>& elements) {
  EchelonSpace s(a.dim(), a.p());
  for (const auto& e : elements)
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const Vec b = a.basis_element(i);
      s.insert(a.multiply(b, e));
      s.insert(a.multiply(e, b));
    }
  return Ideal{a.dim(), a.p(), s.basis()};
}

Quotient quotient_algebra(const Algebra& a, const Ideal& ideal) {
  require(ideal.ambient == a.dim() && ideal.p == a.p(), ErrorKind::Mismatch, "ideal belongs to another algebra");
  require(is_ideal(a, ideal.basis), ErrorKind::Invalid, "quotient by a subspace that is not an ideal");
  EchelonSpace s(a.dim(), a.p());
  for (const auto& v : ideal.basis) s.insert(v);
  const auto reps = s.complement_indices();
  const std::size_t m = reps.size();
  require(m >= 1, ErrorKind::Invalid, "quotient by the whole algebra is zero-dimensional");
  auto project = [&](Vec v) {
    s.reduce(v);
    Vec out(m);
    for (std::size_t c = 0; c < m; ++c) out[c] = v[reps[c]];
    return out;
  };
  Matrix proj(m, a.dim(), a.p());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    const Vec c = project(a.basis_element(j));
    for (std::size_t r = 0; r < m; ++r) proj(r, j) = c[r];
  }
  std::vector<Elem> t(m * m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto prod = a.product_of_basis(reps[i], reps[j]);
      const Vec c = project(Vec(prod.begin(), prod.end()));
      std::copy(c.begin(), c.end(), t.begin() + (i * m + j) * m);
    }
  std::vector<std::string> labels;
  if (!a.labels().empty())
    for (auto r : reps) labels.push_back(a.labels()[r]);
  Algebra q(a.p(), m, std::move(t), project(a.unit()), std::move(labels));
  return Quotient{std::move(q), std::move(proj), reps};
}

Algebra matrix_algebra(std::size_t n, std::uint32_t p) {
  require(n >= 1, ErrorKind::Invalid, "matrix algebra of size 0");
  const std::size_t d = n * n;
  require(d <= kMaxAlgebraDim, ErrorKind::CapExceeded, "matrix algebra exceeds dimension cap");
  std::vector<Elem> t(d * d * d, 0);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      for (std::size_t l = 0; l < n; ++l) t[((i * n + j) * d + (j * n + l)) * d + (i * n + l)] = 1;
    }
  Vec unit(d, 0);
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = 1;
  return Algebra(p, d, std::move(t), std::move(unit), std::move(labels));
}

Algebra centrosymmetric_algebra(std::size_t n, std::uint32_t p) {
  require(n >= 1, ErrorKind::Invalid, "centrosymmetric algebra of size 0");
  // Basis: orbit sums of matrix units under (i, j) -> (n-1-i, n-1-j); representative
  // is the lexicographically smaller position.
  std::vector<std::pair<std::size_t, std::size_t>> reps;
  std::vector<std::size_t> orbit_of(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t pos = i * n + j, rot = (n - 1 - i) * n + (n - 1 - j);
      if (rot < pos) {
        orbit_of[pos] = orbit_of[rot];
        continue;
      }
      orbit_of[pos] = reps.size();
      reps.emplace_back(i, j);
    }
  const std::size_t d = reps.size();
  require(d <= kMaxAlgebraDim, ErrorKind::CapExceeded, "centrosymmetric algebra exceeds dimension cap");
  PrimeField F(p);
  auto as_matrix = [&](std::size_t b) {
    Matrix m(n, n, p);
    const auto [i, j] = reps[b];
    m(i, j) = 1;
    m(n - 1 - i, n - 1 - j) = 1;
    return m;
  };
  std::vector<Elem> t(d * d * d, 0);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < d; ++a) {
    labels.push_back("C" + std::to_string(reps[a].first + 1) + std::to_string(reps[a].second + 1));
    const Matrix ma = as_matrix(a);
    for (std::size_t b = 0; b < d; ++b) {
      const Matrix prod = ma * as_matrix(b);
      for (std::size_t c = 0; c < d; ++c) {
        const auto [i, j] = reps[c];
        t[(a * d + b) * d + c] = prod(i, j);
      }
    }
  }
  Vec unit(d, 0);
  for (std::size_t i = 0; i < n; ++i) unit[orbit_of[i * n + i]] = 1;
  return Algebra(p, d, std::move(t), std::move(unit), std::move(labels));
}

Algebra ground_field(std::uint32_t p) { return Algebra(p, 1, {1}, {1}, {"1"}); }

}  // namespace repdim
