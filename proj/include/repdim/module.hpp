#pragma once

// Finite-dimensional modules as matrix representations.

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "repdim/algebra.hpp"

namespace repdim {

inline constexpr std::size_t kMaxModuleDim = 512;

/// Matrices of a fixed generating set acting on GF(p)^dim. Hom spaces,
/// endomorphism rings and decompositions only need this data.
struct Representation {
  std::uint32_t p = 2;
  std::size_t dim = 0;
  std::vector<Matrix> gens;
};

struct Decomposition;

class Module {
 public:
  Module() = default;
  /// `generator_action[i]` is the matrix of a.generators()[i].
  Module(Algebra a, std::size_t dim, std::vector<Matrix> generator_action);
  static Module from_basis_action(Algebra a, std::vector<Matrix> basis_action);
  static Module zero(Algebra a);

  const Algebra& algebra() const noexcept { return d_->algebra; }
  std::size_t dim() const noexcept { return d_->rep.dim; }
  std::uint32_t p() const noexcept { return d_->rep.p; }
  const Representation& rep() const noexcept { return d_->rep; }
  const std::vector<Matrix>& generator_action() const noexcept { return d_->rep.gens; }
  /// Matrix of every basis element of the algebra, computed on first use.
  const std::vector<Matrix>& basis_action() const;
  Matrix act(std::span<const Elem> a) const;
  /// b_i v for every basis element b_i.
  std::vector<Vec> orbit(std::span<const Elem> v) const;
  /// Krull-Schmidt decomposition with the default seed, cached.
  const Decomposition& decomposition() const;

 private:
  struct Data {
    Algebra algebra;
    Representation rep;
    std::once_flag basis_once;
    std::vector<Matrix> basis;
    std::mutex dec_mutex;
    std::shared_ptr<const Decomposition> dec;
  };
  std::shared_ptr<Data> d_;
};

struct Summand {
  Module module;                    // representative of the isomorphism class
  std::size_t multiplicity = 0;
  std::vector<Matrix> inclusions;   // one per copy, dim(M) x dim(piece)
  std::vector<Matrix> projections;  // one per copy, dim(piece) x dim(M)
  std::vector<Matrix> to_representative;  // iso from each copy onto `module`
};

struct Decomposition {
  std::vector<Summand> summands;
  /// Witness idempotents in End(M), one per copy, in summand order.
  std::vector<Matrix> idempotents() const;
  std::size_t piece_count() const;
};

bool same_algebra(const Algebra& a, const Algebra& b);
ValidationReport validate(const Module& m);

Module regular_module(const Algebra& a, Side side);
/// Dual space with transposed action; a module over opposite(A).
Module dual_module(const Module& m);
Module direct_sum(const Module& a, const Module& b);
Module direct_sum(const std::vector<Module>& parts, const Algebra& a);
Module power(const Module& m, std::size_t n);

struct SubmoduleResult {
  Module module;
  Matrix inclusion;  // dim(M) x dim(U)
};
struct QuotientResult {
  Module module;
  Matrix projection;  // dim(M/U) x dim(M)
};
/// Submodule spanned by an invariant subspace (checked).
SubmoduleResult submodule(const Module& m, const std::vector<Vec>& basis);
/// Smallest submodule containing the given vectors.
SubmoduleResult submodule_generated(const Module& m, const std::vector<Vec>& vectors);
QuotientResult quotient_module(const Module& m, const std::vector<Vec>& invariant_subspace);
/// Kernel of a homomorphism f: M -> N given as a dim(N) x dim(M) matrix.
SubmoduleResult kernel_module(const Module& m, const Matrix& f);
/// rad(A) M.
std::vector<Vec> radical_subspace(const Module& m, const Ideal& rad);
QuotientResult top(const Module& m, const Ideal& rad);

bool is_homomorphism(const Representation& m, const Representation& n, const Matrix& f);
/// Basis of Hom(M, N), each a dim(N) x dim(M) matrix.
std::vector<Matrix> hom_basis(const Representation& m, const Representation& n);
std::vector<Matrix> hom_space(const Module& m, const Module& n);

struct EndAlgebra {
  Algebra algebra;           // product e_i e_j = maps[i] o maps[j]
  std::vector<Matrix> maps;  // intertwiner for each basis element
};
EndAlgebra end_algebra(const Representation& m);
EndAlgebra end_algebra(const Module& m);

struct RepPiece {
  Matrix inclusion;
  Matrix projection;
  std::size_t type = 0;
  Matrix to_representative;
};
struct RepDecomposition {
  std::vector<RepPiece> pieces;
  std::vector<std::size_t> representatives;  // piece index of each type
};
RepDecomposition decompose(const Representation& m, std::uint64_t seed = 0);
Representation restrict_rep(const Representation& m, const Matrix& inclusion, const Matrix& projection);
Decomposition decompose(const Module& m, std::uint64_t seed = 0);

/// Isomorphism of indecomposables by the non-nilpotent composition test.
std::optional<Matrix> indecomposable_iso(const Representation& x, const Representation& y);
std::optional<Matrix> is_isomorphic(const Module& m, const Module& n);
/// Same test on bare representations of one generating set.
std::optional<Matrix> is_isomorphic(const Representation& m, const Representation& n, std::uint64_t seed = 0);
bool is_indecomposable(const Module& m);

struct AddMembership {
  bool member = false;
  std::vector<std::optional<std::size_t>> match;  // summand of M -> summand of N
};
AddMembership is_in_add(const Module& m, const Module& n);
/// Independent check: id_M lies in the span of Hom(N, M) o Hom(M, N).
bool factors_through_add(const Representation& m, const Representation& n);

}  // namespace repdim
