#pragma once

// Bimodules: a left A-action and a commuting right B-action on one space.

#include <optional>
#include <vector>

#include "repdim/module.hpp"

namespace repdim {

/// _A M _B. `right_basis_action()[j]` is the matrix of v -> v b_j, so
/// R(bc) = R(c) R(b). The generator representation lists A's generators
/// acting on the left followed by B's generators acting on the right; it is a
/// representation of A (x) B^op.
class Bimodule {
 public:
  Bimodule() = default;
  /// Actions of the generators of A (on the left) and of B (on the right).
  Bimodule(Algebra left, Algebra right, std::size_t dim, std::vector<Matrix> left_gens,
           std::vector<Matrix> right_gens);
  static Bimodule from_basis_actions(Algebra left, Algebra right, std::vector<Matrix> left_basis,
                                     std::vector<Matrix> right_basis);

  const Algebra& left_algebra() const noexcept { return left_mod_.algebra(); }
  const Algebra& right_algebra() const noexcept { return right_; }
  std::size_t dim() const noexcept { return rep_.dim; }
  std::uint32_t p() const noexcept { return rep_.p; }
  const std::vector<Matrix>& left_basis_action() const { return left_mod_.basis_action(); }
  const std::vector<Matrix>& right_basis_action() const { return right_mod_.basis_action(); }
  Matrix left_act(std::span<const Elem> a) const { return left_mod_.act(a); }
  Matrix right_act(std::span<const Elem> b) const { return right_mod_.act(b); }
  const Representation& rep() const noexcept { return rep_; }

  /// Module over tensor_product(A, opposite(B)); subject to the algebra cap.
  Module as_module() const;
  const Module& left_module() const noexcept { return left_mod_; }
  /// The right action as a left module over opposite(B).
  const Module& right_module() const noexcept { return right_mod_; }

 private:
  Algebra right_;
  Module left_mod_, right_mod_;
  Representation rep_;
};

ValidationReport validate(const Bimodule& m);
bool is_bimodule_map(const Bimodule& m, const Bimodule& n, const Matrix& f);

/// _A A _A.
Bimodule regular_bimodule(const Algebra& a);
/// Pulls both actions back along algebra maps: `left_map` is dim(A) x dim(C),
/// `right_map` is dim(B) x dim(D); the result is a C-D-bimodule.
Bimodule restrict_scalars(const Bimodule& m, const Algebra& c, const Matrix& left_map, const Algebra& d,
                          const Matrix& right_map);
Bimodule direct_sum(const Bimodule& a, const Bimodule& b);

struct TensorResult {
  std::size_t dim = 0;
  Matrix projection;  // dim x (dim M * dim N), from M (x)_k N, basis index i * dim N + j
  Matrix section;     // (dim M * dim N) x dim, standard lifts of the quotient basis
};

/// M (x)_B N for _A M _B and a left B-module N: the quotient of M (x)_k N by
/// the span of m b (x) n - m (x) b n, with the induced left A-action.
Module tensor_over(const Bimodule& m, const Module& n, TensorResult* detail = nullptr);
/// M (x)_B N for _A M _B and _B N _C, an A-C-bimodule.
Bimodule tensor_over(const Bimodule& m, const Bimodule& n, TensorResult* detail = nullptr);

/// *M = Hom_S(M, S) for _S M _R, an R-S-bimodule via (r f s)(m) = f(m r) s.
/// `maps` receives the underlying dim(S) x dim(M) matrices of the basis.
Bimodule left_dual(const Bimodule& m, std::vector<Matrix>* maps = nullptr);

/// M is a direct summand of copies(N): retraction * injection = id_M.
struct SummandWitness {
  std::size_t copies = 0;
  Matrix injection;   // (copies * dim N) x dim M
  Matrix retraction;  // dim M x (copies * dim N)
};
/// Decides M in add(N) by solving id_M = sum c_ab g_b f_a over Hom bases and
/// returns the resulting split injection into a power of N.
std::optional<SummandWitness> summand_witness(const Representation& m, const Representation& n);
bool verify_summand_witness(const Representation& m, const Representation& n, const SummandWitness& w);
/// add membership by Krull-Schmidt matching of indecomposable summands.
bool in_add_by_decomposition(const Representation& m, const Representation& n, std::uint64_t seed = 0);

}  // namespace repdim
