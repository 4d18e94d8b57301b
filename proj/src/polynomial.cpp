#include "repdim/polynomial.hpp"

#include <algorithm>
#include <map>

namespace repdim {

Polynomial::Polynomial(std::vector<Elem> coeffs, std::uint32_t p) : field_(p), c_(std::move(coeffs)) {
  for (auto& x : c_) x %= p;
  trim();
}

Polynomial Polynomial::monomial(std::size_t degree, std::uint32_t p, Elem c) {
  std::vector<Elem> v(degree + 1, 0);
  v[degree] = c;
  return Polynomial(std::move(v), p);
}

Polynomial Polynomial::constant(Elem c, std::uint32_t p) { return Polynomial({c}, p); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Elem Polynomial::eval(Elem x) const {
  Elem r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = field_.add(field_.mul(r, x), *it);
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const Elem s = field_.inv(lead());
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_.mul(c_[i], s);
  return Polynomial(std::move(v), p());
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial({}, p());
  std::vector<Elem> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = field_.mul(c_[i], static_cast<Elem>(i % p()));
  return Polynomial(std::move(v), p());
}

namespace {
void check_same(const Polynomial& a, const Polynomial& b) {
  require(a.p() == b.p(), ErrorKind::Mismatch, "polynomial modulus mismatch");
}
}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  check_same(a, b);
  std::vector<Elem> v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field().add(a[i], b[i]);
  return Polynomial(std::move(v), a.p());
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  check_same(a, b);
  std::vector<Elem> v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field().sub(a[i], b[i]);
  return Polynomial(std::move(v), a.p());
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial({}, a.p());
  std::vector<std::uint64_t> acc(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      acc[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
      if (acc[i + j] >= (1ull << 62)) acc[i + j] %= a.p();
    }
  std::vector<Elem> v(acc.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<Elem>(acc[i] % a.p());
  return Polynomial(std::move(v), a.p());
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  check_same(a, b);
  require(!b.is_zero(), ErrorKind::Invalid, "polynomial division by zero");
  const PrimeField& F = a.field();
  if (a.degree() < b.degree()) return {Polynomial({}, a.p()), a};
  std::vector<Elem> r = a.coeffs();
  std::vector<Elem> q(a.coeffs().size() - b.coeffs().size() + 1, 0);
  const Elem li = F.inv(b.lead());
  const std::size_t db = b.coeffs().size() - 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    const Elem c = F.mul(r[k + db], li);
    q[k] = c;
    if (!c) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] = F.sub(r[k + j], F.mul(c, b[j]));
  }
  r.resize(db);
  return {Polynomial(std::move(q), a.p()), Polynomial(std::move(r), a.p())};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }
Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& mod) {
  Polynomial r = Polynomial::constant(1, base.p()) % mod;
  Polynomial b = base % mod;
  while (e) {
    if (e & 1) r = (r * b) % mod;
    e >>= 1;
    if (e) b = (b * b) % mod;
  }
  return r;
}

Polynomial pow(const Polynomial& base, std::uint64_t e) {
  Polynomial r = Polynomial::constant(1, base.p());
  Polynomial b = base;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

namespace {

// f(x) = g(x)^p where f' = 0; returns g (coefficients are their own p-th roots in GF(p)).
Polynomial pth_root(const Polynomial& f) {
  const std::uint32_t p = f.p();
  std::vector<Elem> v(f.coeffs().size() / p + 1, 0);
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) v[i / p] = f[i];
  return Polynomial(std::move(v), p);
}

// Squarefree decomposition: returns (squarefree factor, multiplicity) pairs, monic input.
void squarefree(const Polynomial& f, unsigned mult, std::map<unsigned, Polynomial>& out) {
  if (f.degree() <= 0) return;
  const std::uint32_t p = f.p();
  Polynomial d = f.derivative();
  if (d.is_zero()) {
    squarefree(pth_root(f), mult * p, out);
    return;
  }
  Polynomial c = gcd(f, d);
  Polynomial w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    Polynomial y = gcd(w, c);
    Polynomial z = w / y;
    if (z.degree() > 0) {
      auto it = out.find(i * mult);
      if (it == out.end())
        out.emplace(i * mult, z.monic());
      else
        it->second = (it->second * z).monic();
    }
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) squarefree(pth_root(c.monic()), mult * p, out);
}

// Berlekamp splitting of a monic squarefree polynomial.
std::vector<Polynomial> berlekamp(const Polynomial& f) {
  const std::uint32_t p = f.p();
  const std::size_t n = static_cast<std::size_t>(f.degree());
  if (n <= 1) return {f};
  // Row i of Q: coefficients of x^{ip} mod f; kernel of (Q - I)^T gives g with g^p = g mod f.
  Matrix qt(n, n, p);
  const Polynomial xp = powmod(Polynomial::monomial(1, p), p, f);
  Polynomial cur = Polynomial::constant(1, p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) qt(j, i) = cur[j];
    cur = (cur * xp) % f;
  }
  for (std::size_t i = 0; i < n; ++i) qt(i, i) = qt.field().sub(qt(i, i), 1);
  const auto ker = kernel_basis(qt);
  const std::size_t k = ker.size();
  std::vector<Polynomial> factors{f};
  if (k == 1) return factors;
  for (const auto& kv : ker) {
    Polynomial g(kv, p);
    if (g.degree() <= 0) continue;
    std::vector<Polynomial> next;
    for (const auto& h : factors) {
      if (h.degree() <= 1) {
        next.push_back(h);
        continue;
      }
      Polynomial rest = h;
      for (Elem s = 0; s < p && rest.degree() > 0; ++s) {
        Polynomial d = gcd(rest, g - Polynomial::constant(s, p));
        if (d.degree() > 0 && d.degree() < rest.degree()) {
          next.push_back(d);
          rest = (rest / d).monic();
        }
      }
      if (rest.degree() > 0) next.push_back(rest);
    }
    factors = std::move(next);
    if (factors.size() == k) break;
  }
  return factors;
}

}  // namespace

std::vector<FactorPower> factor_poly(const Polynomial& f) {
  require(!f.is_zero(), ErrorKind::Invalid, "factor_poly of the zero polynomial");
  std::map<unsigned, Polynomial> sqf;
  squarefree(f.monic(), 1, sqf);
  std::vector<FactorPower> out;
  for (const auto& [mult, part] : sqf)
    for (auto& g : berlekamp(part)) out.push_back({g.monic(), mult});
  std::sort(out.begin(), out.end(), [](const FactorPower& a, const FactorPower& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    return a.factor.coeffs() < b.factor.coeffs();
  });
  return out;
}

bool is_irreducible(const Polynomial& f) {
  if (f.degree() <= 0) return false;
  const Polynomial x = Polynomial::monomial(1, f.p());
  Polynomial xq = x;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    xq = powmod(xq, f.p(), f);
    if (gcd(f, xq - x).degree() > 0) return false;
  }
  return true;
}

Polynomial characteristic_polynomial(const Matrix& m) {
  require(m.is_square(), ErrorKind::Mismatch, "characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  const std::uint32_t p = m.p();
  const PrimeField& F = m.field();
  Matrix h = m;
  // Reduce to upper Hessenberg form by similarity transformations.
  for (std::size_t j = 0; j + 2 <= n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h(piv, j) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
    }
    const Elem inv = F.inv(h(j + 1, j));
    for (std::size_t i = j + 2; i < n; ++i) {
      const Elem t = F.mul(h(i, j), inv);
      if (!t) continue;
      for (std::size_t c = 0; c < n; ++c) h(i, c) = F.sub(h(i, c), F.mul(t, h(j + 1, c)));
      for (std::size_t r = 0; r < n; ++r) h(r, j + 1) = F.add(h(r, j + 1), F.mul(t, h(r, i)));
    }
  }
  // Recurrence on leading principal minors of the Hessenberg matrix.
  std::vector<Polynomial> chi;
  chi.push_back(Polynomial::constant(1, p));
  const Polynomial x = Polynomial::monomial(1, p);
  for (std::size_t k = 0; k < n; ++k) {
    Polynomial next = (x - Polynomial::constant(h(k, k), p)) * chi[k];
    Elem prod = 1;
    for (std::size_t i = k; i-- > 0;) {
      prod = F.mul(prod, h(i + 1, i));
      const Elem coef = F.mul(prod, h(i, k));
      if (coef) next = next - Polynomial::constant(coef, p) * chi[i];
    }
    chi.push_back(next);
  }
  return chi.back();
}

Matrix evaluate(const Polynomial& f, const Matrix& m) {
  require(m.is_square(), ErrorKind::Mismatch, "evaluate at non-square matrix");
  Matrix r(m.rows(), m.cols(), m.p());
  const Matrix id = Matrix::identity(m.rows(), m.p());
  for (int i = f.degree(); i >= 0; --i) {
    r = r * m;
    add_scaled(r, f[static_cast<std::size_t>(i)], id);
  }
  return r;
}

}  // namespace repdim
