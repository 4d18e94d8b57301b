#include "repdim/linalg.hpp"

#include <algorithm>
#include <utility>

namespace repdim {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  require(p < kMaxModulus, ErrorKind::CapExceeded, "modulus " + std::to_string(p) + " exceeds 2^16");
  require(is_prime(p), ErrorKind::Invalid, "modulus " + std::to_string(p) + " is not prime");
}

Elem PrimeField::pow(Elem a, std::uint64_t e) const noexcept {
  Elem r = 1 % p_;
  Elem b = a % p_;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

Elem PrimeField::inv(Elem a) const {
  require(a % p_ != 0, ErrorKind::Invalid, "inverse of zero in GF(" + std::to_string(p_) + ")");
  return pow(a, p_ - 2);
}

namespace {

// dst[k] -= f * src[k] for k in [from, n)
inline void row_sub(const PrimeField& F, Elem* dst, const Elem* src, Elem f, std::size_t from,
                    std::size_t n) {
  if (f == 0) return;
  const std::uint32_t p = F.p();
  if (p == 2) {
    for (std::size_t k = from; k < n; ++k) dst[k] ^= src[k];
    return;
  }
  const std::uint64_t nf = p - f;
  for (std::size_t k = from; k < n; ++k)
    if (src[k]) dst[k] = static_cast<Elem>((dst[k] + nf * src[k]) % p);
}

inline void row_scale(const PrimeField& F, Elem* row, Elem s, std::size_t from, std::size_t n) {
  if (s == 1) return;
  for (std::size_t k = from; k < n; ++k) row[k] = F.mul(row[k], s);
}

void check_side(std::size_t rows, std::size_t cols) {
  require(rows <= kMaxMatrixSide && cols <= kMaxMatrixSide, ErrorKind::CapExceeded,
          "matrix side exceeds " + std::to_string(kMaxMatrixSide));
}

}  // namespace

bool is_zero(std::span<const Elem> v) {
  return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

Vec vec_add(const PrimeField& F, std::span<const Elem> a, std::span<const Elem> b) {
  require(a.size() == b.size(), ErrorKind::Mismatch, "vector length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
  return r;
}

Vec vec_sub(const PrimeField& F, std::span<const Elem> a, std::span<const Elem> b) {
  require(a.size() == b.size(), ErrorKind::Mismatch, "vector length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
  return r;
}

Vec vec_scale(const PrimeField& F, Elem s, std::span<const Elem> a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(s, a[i]);
  return r;
}

void vec_axpy(const PrimeField& F, Elem s, std::span<const Elem> b, std::span<Elem> a) {
  if (s == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i]) a[i] = F.add(a[i], F.mul(s, b[i]));
}

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), field_(p), data_(rows * cols, 0) {
  check_side(rows, cols);
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::uint32_t p, std::vector<Elem> entries)
    : rows_(rows), cols_(cols), field_(p), data_(std::move(entries)) {
  check_side(rows, cols);
  require(data_.size() == rows * cols, ErrorKind::Mismatch, "matrix entry count mismatch");
  for (auto& x : data_) x %= p;
}

Matrix Matrix::identity(std::size_t n, std::uint32_t p) {
  Matrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols, std::uint32_t p) {
  Matrix m(rows.size(), cols, p);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, ErrorKind::Mismatch, "row length mismatch");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows, std::uint32_t p) {
  Matrix m(rows, cols.size(), p);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    require(cols[j].size() == rows, ErrorKind::Mismatch, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::from_ints(const std::vector<std::vector<std::int64_t>>& rows, std::uint32_t p) {
  const std::size_t c = rows.empty() ? 0 : rows[0].size();
  Matrix m(rows.size(), c, p);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == c, ErrorKind::Mismatch, "ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = m.field().reduce(rows[i][j]);
  }
  return m;
}

Vec Matrix::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

bool Matrix::is_zero() const { return repdim::is_zero(data_); }

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, p());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::column_block(std::size_t c0, std::size_t n) const {
  Matrix m(rows_, n, p());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = (*this)(i, c0 + j);
  return m;
}

Matrix Matrix::row_block(std::size_t r0, std::size_t n) const {
  Matrix m(n, cols_, p());
  std::copy(data_.begin() + r0 * cols_, data_.begin() + (r0 + n) * cols_, m.data_.begin());
  return m;
}

Elem Matrix::trace() const {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
  return static_cast<Elem>(s % p());
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.p() == b.p(), ErrorKind::Mismatch, "modulus mismatch in product");
  require(a.cols() == b.rows(), ErrorKind::Mismatch, "dimension mismatch in product");
  const std::size_t n = a.rows(), m = a.cols(), k = b.cols();
  const std::uint32_t p = a.p();
  std::vector<std::uint64_t> acc(k);
  Matrix c(n, k, p);
  // Accumulated products stay below 2^64 for inner dimension <= 4096 and p < 2^16.
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t t = 0; t < m; ++t) {
      const std::uint64_t x = a(i, t);
      if (!x) continue;
      const Elem* br = b.row(t).data();
      for (std::size_t j = 0; j < k; ++j) acc[j] += x * br[j];
    }
    for (std::size_t j = 0; j < k; ++j) c(i, j) = static_cast<Elem>(acc[j] % p);
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require(a.p() == b.p() && a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::Mismatch,
          "shape mismatch in sum");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().add(a(i, j), b(i, j));
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require(a.p() == b.p() && a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::Mismatch,
          "shape mismatch in difference");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().sub(a(i, j), b(i, j));
  return c;
}

Matrix scaled(const Matrix& a, Elem s) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().mul(a(i, j), s);
  return c;
}

void add_scaled(Matrix& a, Elem s, const Matrix& b) {
  require(a.p() == b.p() && a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::Mismatch,
          "shape mismatch in axpy");
  if (s == 0) return;
  const PrimeField& F = a.field();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (b(i, j)) a(i, j) = F.add(a(i, j), F.mul(s, b(i, j)));
}

Vec operator*(const Matrix& a, std::span<const Elem> v) {
  require(a.cols() == v.size(), ErrorKind::Mismatch, "dimension mismatch in matrix-vector product");
  Vec r(a.rows());
  const std::uint32_t p = a.p();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint64_t s = 0;
    const Elem* ar = a.row(i).data();
    for (std::size_t j = 0; j < v.size(); ++j) s += static_cast<std::uint64_t>(ar[j]) * v[j];
    r[i] = static_cast<Elem>(s % p);
  }
  return r;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.p() == b.p(), ErrorKind::Mismatch, "hstack shape mismatch");
  Matrix c(a.rows(), a.cols() + b.cols(), a.p());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::copy(a.row(i).begin(), a.row(i).end(), c.row(i).begin());
    std::copy(b.row(i).begin(), b.row(i).end(), c.row(i).begin() + a.cols());
  }
  return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.cols() && a.p() == b.p(), ErrorKind::Mismatch, "vstack shape mismatch");
  Matrix c(a.rows() + b.rows(), a.cols(), a.p());
  for (std::size_t i = 0; i < a.rows(); ++i) std::copy(a.row(i).begin(), a.row(i).end(), c.row(i).begin());
  for (std::size_t i = 0; i < b.rows(); ++i)
    std::copy(b.row(i).begin(), b.row(i).end(), c.row(a.rows() + i).begin());
  return c;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks, std::uint32_t p) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix m(r, c, p);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  require(a.p() == b.p(), ErrorKind::Mismatch, "modulus mismatch in kronecker");
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols(), a.p());
  const PrimeField& F = a.field();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Elem x = a(i, j);
      if (!x) continue;
      for (std::size_t s = 0; s < b.rows(); ++s)
        for (std::size_t t = 0; t < b.cols(); ++t) k(i * b.rows() + s, j * b.cols() + t) = F.mul(x, b(s, t));
    }
  return k;
}

Matrix matrix_power(const Matrix& a, std::uint64_t e) {
  require(a.is_square(), ErrorKind::Mismatch, "power of non-square matrix");
  Matrix r = Matrix::identity(a.rows(), a.p());
  Matrix b = a;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

RrefResult rref(const Matrix& m) {
  RrefResult out{m, {}, 0};
  Matrix& a = out.reduced;
  const PrimeField& F = a.field();
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(r).begin());
    row_scale(F, a.row(r).data(), F.inv(a(r, c)), c, cols);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != r && a(i, c)) row_sub(F, a.row(i).data(), a.row(r).data(), a(i, c), c, cols);
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank(const Matrix& m) {
  // Row rank via the incremental space avoids copying the full elimination.
  EchelonSpace s(m.cols(), m.p());
  for (std::size_t i = 0; i < m.rows(); ++i) s.insert(m.row(i));
  return s.dim();
}

std::vector<Vec> kernel_basis(const Matrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  const PrimeField& F = m.field();
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = F.neg(r.reduced(i, f));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  require(m.is_square(), ErrorKind::Mismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  RrefResult r = rref(hstack(m, Matrix::identity(n, m.p())));
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
  return r.reduced.column_block(n, n);
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

std::optional<AffineSolution> solve_affine(const Matrix& m, std::span<const Elem> b) {
  require(m.rows() == b.size(), ErrorKind::Mismatch, "right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1, m.p());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::copy(m.row(i).begin(), m.row(i).end(), aug.row(i).begin());
    aug(i, m.cols()) = b[i] % m.p();
  }
  const RrefResult r = rref(aug);
  if (r.rank > 0 && r.pivots.back() == m.cols()) return std::nullopt;
  AffineSolution sol;
  sol.particular.assign(m.cols(), 0);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t i = 0; i < r.rank; ++i) {
    sol.particular[r.pivots[i]] = r.reduced(i, m.cols());
    is_pivot[r.pivots[i]] = true;
  }
  const PrimeField& F = m.field();
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = F.neg(r.reduced(i, f));
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

EchelonSpace::EchelonSpace(std::size_t ambient, std::uint32_t p) : n_(ambient), F_(p) {}

bool EchelonSpace::reduce(Vec& v) const {
  require(v.size() == n_, ErrorKind::Mismatch, "vector length mismatch in subspace");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Elem c = v[pivots_[i]];
    if (c) row_sub(F_, v.data(), rows_[i].data(), c, pivots_[i], n_);
  }
  return !is_zero(v);
}

bool EchelonSpace::contains(std::span<const Elem> v) const {
  Vec w(v.begin(), v.end());
  return !reduce(w);
}

bool EchelonSpace::insert(std::span<const Elem> v) {
  Vec w(v.begin(), v.end());
  if (!reduce(w)) return false;
  std::size_t piv = 0;
  while (w[piv] == 0) ++piv;
  row_scale(F_, w.data(), F_.inv(w[piv]), piv, n_);
  for (auto& row : rows_)
    if (row[piv]) row_sub(F_, row.data(), w.data(), row[piv], piv, n_);
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, piv);
  rows_.insert(rows_.begin() + pos, std::move(w));
  return true;
}

Vec EchelonSpace::coordinates(std::span<const Elem> v) const {
  require(contains(v), ErrorKind::Invalid, "vector is not in the subspace");
  Vec c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Matrix EchelonSpace::as_rows() const { return Matrix::from_rows(rows_, n_, F_.p()); }

std::vector<std::size_t> EchelonSpace::complement_indices() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t j = 0; j < n_; ++j) {
    if (k < pivots_.size() && pivots_[k] == j) {
      ++k;
      continue;
    }
    out.push_back(j);
  }
  return out;
}

std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t ambient, std::uint32_t p) {
  EchelonSpace s(ambient, p);
  for (const auto& v : vectors) s.insert(v);
  return s.basis();
}

std::vector<Vec> subspace_intersection(const std::vector<Vec>& a, const std::vector<Vec>& b,
                                       std::size_t ambient, std::uint32_t p) {
  const auto ba = span_basis(a, ambient, p);
  const auto bb = span_basis(b, ambient, p);
  if (ba.empty() || bb.empty()) return {};
  // x = sum alpha_i a_i = sum beta_j b_j  <=>  [A | -B] (alpha; beta) = 0
  PrimeField F(p);
  Matrix m(ambient, ba.size() + bb.size(), p);
  for (std::size_t j = 0; j < ba.size(); ++j)
    for (std::size_t i = 0; i < ambient; ++i) m(i, j) = ba[j][i];
  for (std::size_t j = 0; j < bb.size(); ++j)
    for (std::size_t i = 0; i < ambient; ++i) m(i, ba.size() + j) = F.neg(bb[j][i]);
  std::vector<Vec> out;
  for (const auto& k : kernel_basis(m)) {
    Vec x(ambient, 0);
    for (std::size_t j = 0; j < ba.size(); ++j) vec_axpy(F, k[j], ba[j], x);
    out.push_back(std::move(x));
  }
  return span_basis(out, ambient, p);
}

}  // namespace repdim
