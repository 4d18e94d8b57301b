#pragma once

// Dense exact linear algebra over prime fields GF(p), p < 2^16.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "repdim/error.hpp"

namespace repdim {

using Elem = std::uint32_t;
using Vec = std::vector<Elem>;

inline constexpr std::uint32_t kMaxModulus = 1u << 16;
inline constexpr std::size_t kMaxMatrixSide = 4096;

bool is_prime(std::uint32_t n);

/// Arithmetic in GF(p). Elements are residues in [0, p).
class PrimeField {
 public:
  PrimeField() = default;
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }

  Elem reduce(std::int64_t x) const noexcept {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem add(Elem a, Elem b) const noexcept {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_ = 2;
};

// Vector helpers; all vectors are interpreted over the given field.
bool is_zero(std::span<const Elem> v);
Vec vec_add(const PrimeField& F, std::span<const Elem> a, std::span<const Elem> b);
Vec vec_sub(const PrimeField& F, std::span<const Elem> a, std::span<const Elem> b);
Vec vec_scale(const PrimeField& F, Elem s, std::span<const Elem> a);
/// a += s * b
void vec_axpy(const PrimeField& F, Elem s, std::span<const Elem> b, std::span<Elem> a);
Vec unit_vector(std::size_t n, std::size_t i);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, std::uint32_t p);
  Matrix(std::size_t rows, std::size_t cols, std::uint32_t p, std::vector<Elem> entries);

  static Matrix identity(std::size_t n, std::uint32_t p);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols, std::uint32_t p);
  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows, std::uint32_t p);
  /// Entries given as arbitrary integers, reduced mod p.
  static Matrix from_ints(const std::vector<std::vector<std::int64_t>>& rows, std::uint32_t p);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t p() const noexcept { return field_.p(); }
  const PrimeField& field() const noexcept { return field_; }

  Elem operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<Elem> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  Vec column(std::size_t j) const;
  const std::vector<Elem>& entries() const noexcept { return data_; }

  bool is_zero() const;
  bool is_square() const noexcept { return rows_ == cols_; }
  Matrix transpose() const;
  /// Columns [c0, c0+n).
  Matrix column_block(std::size_t c0, std::size_t n) const;
  Matrix row_block(std::size_t r0, std::size_t n) const;
  Elem trace() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  PrimeField field_;
  std::vector<Elem> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix scaled(const Matrix& a, Elem s);
Vec operator*(const Matrix& a, std::span<const Elem> v);
/// a += s * b
void add_scaled(Matrix& a, Elem s, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const std::vector<Matrix>& blocks, std::uint32_t p);
Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix matrix_power(const Matrix& a, std::uint64_t e);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row, ascending
  std::size_t rank = 0;
};

/// Reduced row echelon form by leftmost-pivot Gauss-Jordan elimination.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of {v : m v = 0}; exactly cols - rank vectors.
std::vector<Vec> kernel_basis(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
bool is_invertible(const Matrix& m);

struct AffineSolution {
  Vec particular;
  std::vector<Vec> kernel;
};

/// Solutions of m x = b, or nullopt when inconsistent.
std::optional<AffineSolution> solve_affine(const Matrix& m, std::span<const Elem> b);

/// Incrementally maintained subspace of GF(p)^n in reduced echelon form.
/// Rows are kept fully reduced so equal subspaces have equal row sets.
class EchelonSpace {
 public:
  EchelonSpace() = default;
  EchelonSpace(std::size_t ambient, std::uint32_t p);

  std::size_t ambient() const noexcept { return n_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  const PrimeField& field() const noexcept { return F_; }

  /// Reduces v against the basis in place; returns true if the residue is nonzero.
  bool reduce(Vec& v) const;
  bool contains(std::span<const Elem> v) const;
  /// Inserts v; returns false when v was already in the span.
  bool insert(std::span<const Elem> v);
  const std::vector<Vec>& basis() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  /// Coordinates of v (which must lie in the span) in terms of basis().
  Vec coordinates(std::span<const Elem> v) const;
  Matrix as_rows() const;
  /// Pivot-free coordinate indices: a complement basis of standard vectors.
  std::vector<std::size_t> complement_indices() const;

 private:
  std::size_t n_ = 0;
  PrimeField F_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Canonical (rref) basis of the span of the given vectors.
std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t ambient, std::uint32_t p);
std::vector<Vec> subspace_intersection(const std::vector<Vec>& a, const std::vector<Vec>& b,
                                       std::size_t ambient, std::uint32_t p);

}  // namespace repdim
