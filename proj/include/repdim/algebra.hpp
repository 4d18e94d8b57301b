#pragma once

// Finite-dimensional associative unital algebras over GF(p), stored as dense
// structure-constant tables.

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "repdim/linalg.hpp"

namespace repdim {

/// Structure constants are stored densely (dim^3 entries); this bounds the
/// largest algebra, including enveloping algebras A (x) A^op.
inline constexpr std::size_t kMaxAlgebraDim = 256;

enum class Side { Left, Right };

/// Words w_0 = 1, w_t = g * w_parent spanning the algebra, with b_i = sum_t coeffs(i, t) w_t.
struct WordExpansion {
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent;     // kNone for w_0
  std::vector<std::size_t> generator;  // index into generators()
  Matrix coeffs;                       // dim x dim
};

class Algebra {
 public:
  Algebra() = default;
  /// table[(i*dim + j)*dim + k] = coefficient of b_k in b_i b_j.
  Algebra(std::uint32_t p, std::size_t dim, std::vector<Elem> table, Vec unit,
          std::vector<std::string> labels = {});

  std::uint32_t p() const noexcept { return d_->field.p(); }
  const PrimeField& field() const noexcept { return d_->field; }
  std::size_t dim() const noexcept { return d_->dim; }
  const Vec& unit() const noexcept { return d_->unit; }
  const std::vector<std::string>& labels() const noexcept { return d_->labels; }
  const std::vector<Elem>& table() const noexcept { return d_->table; }
  Elem coeff(std::size_t i, std::size_t j, std::size_t k) const noexcept {
    return d_->table[(i * d_->dim + j) * d_->dim + k];
  }
  std::span<const Elem> product_of_basis(std::size_t i, std::size_t j) const noexcept {
    return {d_->table.data() + (i * d_->dim + j) * d_->dim, d_->dim};
  }

  Vec multiply(std::span<const Elem> x, std::span<const Elem> y) const;
  Vec basis_element(std::size_t i) const { return unit_vector(dim(), i); }
  Vec zero() const { return Vec(dim(), 0); }
  /// Matrix of y -> x y in the basis.
  Matrix left_matrix(std::span<const Elem> x) const;
  /// Matrix of y -> y x in the basis.
  Matrix right_matrix(std::span<const Elem> x) const;
  Matrix left_basis_matrix(std::size_t i) const;
  Matrix right_basis_matrix(std::size_t i) const;
  bool is_nilpotent(std::span<const Elem> x) const;
  Vec power(std::span<const Elem> x, std::uint64_t e) const;
  bool is_commutative() const;

  /// Algebra generators (as elements); a subset of the basis unless supplied.
  const std::vector<Vec>& generators() const;
  /// Replace the generating set; verified to generate the whole algebra.
  Algebra with_generators(std::vector<Vec> gens) const;
  const WordExpansion& word_expansion() const;

  bool same_table(const Algebra& other) const;
  bool shares_data(const Algebra& other) const noexcept { return d_ == other.d_; }

 private:
  struct Data {
    PrimeField field;
    std::size_t dim = 0;
    std::vector<Elem> table;
    Vec unit;
    std::vector<std::string> labels;
    mutable std::once_flag gens_once;
    mutable std::vector<Vec> gens;
    mutable std::once_flag words_once;
    mutable WordExpansion words;
  };
  std::shared_ptr<Data> d_;
};

/// Subspace of the algebra spanned by `basis`, kept in rref form.
struct Ideal {
  std::size_t ambient = 0;
  std::uint32_t p = 2;
  std::vector<Vec> basis;

  std::size_t dim() const noexcept { return basis.size(); }
  bool operator==(const Ideal&) const = default;
};

struct AlgebraProfile {
  std::vector<std::size_t> radical_dims;  // dim rad^m for m = 0, 1, ... ending with 0
  std::size_t loewy_length = 0;
  bool semisimple = false;
};

struct ValidationReport {
  bool ok = true;
  std::string message;  // first failing identity
};

ValidationReport validate(const Algebra& a);
Algebra opposite(const Algebra& a);
/// Basis index of b_i (x) c_j is i * dim(C) + j.
Algebra tensor_product(const Algebra& a, const Algebra& b);
/// Subalgebra spanned by words in `elements` (including 1): canonical basis.
std::vector<Vec> subalgebra_span(const Algebra& a, const std::vector<Vec>& elements);

bool is_ideal(const Algebra& a, const std::vector<Vec>& basis);
Ideal make_ideal(const Algebra& a, const std::vector<Vec>& spanning);
/// Jacobson radical via the characteristic-p trace-form tower.
Ideal radical(const Algebra& a);
AlgebraProfile profile(const Algebra& a);
/// rad^m(A) for m = 0 .. LL.
std::vector<Ideal> radical_powers(const Algebra& a);
/// Product ideal span{xy : x in I, y in J}.
Ideal ideal_product(const Algebra& a, const Ideal& i, const Ideal& j);
Ideal ideal_closure(const Algebra& a, const std::vector<Vec>& elements);
/// Sum of one-sided ideals A S + S A.
Ideal one_sided_sum(const Algebra& a, const std::vector<Vec>& elements);

struct Quotient {
  Algebra algebra;
  Matrix projection;                      // dim(A/I) x dim(A)
  std::vector<std::size_t> representatives;  // basis indices of A lifting the quotient basis
};
Quotient quotient_algebra(const Algebra& a, const Ideal& i);

/// Full n x n matrix algebra, basis E_ij at index i*n + j.
Algebra matrix_algebra(std::size_t n, std::uint32_t p);
/// Matrices invariant under 180-degree rotation; dimension ceil(n^2 / 2).
Algebra centrosymmetric_algebra(std::size_t n, std::uint32_t p);
/// The 1-dimensional algebra GF(p).
Algebra ground_field(std::uint32_t p);

}  // namespace repdim
