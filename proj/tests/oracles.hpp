#pragma once

// Independent reference computations used only by the test suites.

#include <optional>
#include <random>
#include <vector>

#include "repdim/algebra.hpp"
#include "repdim/module.hpp"

namespace repdim::oracle {

/// Elements x with a x nilpotent for every a, by enumerating all of A twice.
std::vector<Vec> brute_force_radical(const Algebra& a);

/// Unital subalgebra of M_n(GF(p)) generated by one or two random matrices,
/// upper triangular half of the time. Dimension is at most n^2.
Algebra random_matrix_subalgebra(std::mt19937& rng, std::uint32_t p, std::size_t n, std::size_t max_dim);

struct MatrixAlgebra {
  Algebra algebra;
  std::vector<Matrix> basis;  // basis elements as n x n matrices
};
/// Structure constants of the unital subalgebra of M_n generated by `gens`.
MatrixAlgebra matrix_subalgebra(const std::vector<Matrix>& gens);
MatrixAlgebra random_matrix_algebra(std::mt19937& rng, std::uint32_t p, std::size_t n, std::size_t max_dim);

/// True when every element of A is a unit or nilpotent (A local), by enumeration.
bool is_local_by_enumeration(const Algebra& a);

/// Hom dimension from the full intertwiner system (unknowns are all matrix entries).
std::size_t hom_dimension_by_kernel(const Module& m, const Module& n);

/// pd(M) as the largest i with Ext^i(M, A/rad) != 0, read off a free
/// resolution built from greedy generators. nullopt when Ext^cap is nonzero.
std::optional<std::size_t> pd_by_ext(const Module& m, std::size_t cap);
/// gldim(A) = pd(A/rad) by the same route.
std::optional<std::size_t> gldim_by_ext(const Algebra& a, std::size_t cap);

}  // namespace repdim::oracle
