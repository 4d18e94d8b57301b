#pragma once

// Representation dimension: bounds, witnesses and instance checks.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "repdim/groups.hpp"
#include "repdim/projective.hpp"

namespace repdim {

inline constexpr std::size_t kMaxPoolModuleDim = 128;
inline constexpr std::size_t kMaxEndAlgebraDim = 512;
inline constexpr std::size_t kDefaultGldimCap = 12;
inline constexpr std::size_t kDefaultSearchSyzygyDim = 128;

/// A in add(M) and D(A_A) in add(M).
bool generator_cogenerator_check(const Module& m);
/// D(A_A) in add(_A A).
bool is_self_injective(const Algebra& a);
/// D(A_A) as a left A-module.
Module dual_regular(const Algebra& a);

struct PoolEntry {
  Module module;
  std::string label;
};
struct CandidatePool {
  std::vector<PoolEntry> entries;
};
/// Zero, simples, A/rad^m, rad^m A, syzygies of simples up to LL, the duals of
/// the same constructions over A^op, and `extra`; deduplicated up to isomorphism.
CandidatePool default_pool(const Algebra& a, const std::vector<PoolEntry>& extra = {});
/// X = A/rad + ... + A/rad^(LL-1).
Module loewy_generator_part(const Algebra& a);

enum class LowerProvenance { Semisimple, NoRepdimOne, HigmanRepInfinite, UserAssertion };
std::string to_string(LowerProvenance p);

struct LowerBound {
  std::size_t bound = 0;
  LowerProvenance provenance = LowerProvenance::Semisimple;
  std::string detail;
};
struct GroupContext {
  FiniteGroup group;
};
/// The group context is used only when k[G] has the same structure table as A.
LowerBound repdim_lower_bound(const Algebra& a, const std::optional<GroupContext>& group = std::nullopt,
                              bool assert_rep_infinite = false);

struct UpperBound {
  std::size_t bound = 0;
  Module witness;                      // basic generator-cogenerator
  std::vector<std::string> x_labels;  // pool entries adjoined to A + D(A)
  std::size_t candidates_evaluated = 0;
  std::size_t candidates_skipped = 0;  // unknown, infinite or over a cap
};
struct SearchOptions {
  std::size_t gldim_cap = kDefaultGldimCap;
  std::size_t max_subset = 3;
  std::optional<std::size_t> stop_at;  // stop once this value is reached
  std::size_t jobs = 1;
  /// Syzygies above this or above twice dim End(M) count as unknown.
  std::size_t max_syzygy_dim = kDefaultSearchSyzygyDim;
};
/// Minimum of gldim End(A + D(A) + X) over the Loewy generator and over subsets
/// of the pool, ties going to the smaller witness; nullopt when every candidate
/// is unknown, infinite or capped.
std::optional<UpperBound> repdim_upper_bound(const Algebra& a, const CandidatePool& pool,
                                             const SearchOptions& options = {});
/// Global dimension of End(M).
Dimension end_global_dimension(const Module& m, std::size_t cap, const ResolutionOptions& options = {});
/// End(M) for M the direct sum of pairwise non-isomorphic indecomposables:
/// block projections as primitive idempotents, and the radical as the maps
/// whose diagonal blocks lie in rad End(X_t).
struct BasicEnd {
  EndAlgebra end;
  std::vector<Vec> idempotents;
  Ideal radical;
};
BasicEnd basic_end(const std::vector<Module>& pieces, const Algebra& a);
/// One copy of each indecomposable summand of the given modules.
Module basic_module(const std::vector<Module>& parts, const Algebra& a);

struct RepdimOptions {
  SearchOptions search;
  std::optional<GroupContext> group;
  bool assert_rep_infinite = false;
  std::vector<PoolEntry> pool_extra;
};
struct RepdimReport {
  Algebra algebra;
  LowerBound lower;
  std::optional<UpperBound> upper;
  bool exact = false;
  std::size_t loewy_length = 0;
  bool self_injective = false;
  std::optional<bool> loewy_bound_holds;  // upper <= LL, checked when self-injective
  bool witness_verified = false;
  std::vector<std::string> transcript;
};
RepdimReport repdim_report(const Algebra& a, const RepdimOptions& options = {});

struct CrosscheckResult {
  bool ok = false;
  std::size_t steps = 0;  // approximations taken
  std::string detail;
};
/// Builds right add(M)-approximations of Y (evaluation of a Hom basis) for at
/// most m - 2 steps and checks that the last kernel lies in add(M) and that
/// every Hom(M, -) sequence is exact by dimension counts.
CrosscheckResult approximation_crosscheck(const Module& m, const Module& y, std::size_t gldim);
/// Seeded random module of dimension between 1 and max_dim, built from cyclic
/// submodules and quotients of the regular module and its dual.
Module random_module(const Algebra& a, std::mt19937_64& rng, std::size_t max_dim);

enum class CorollaryVerdict { Pass, Fail, NotApplicable, Inconclusive };
std::string to_string(CorollaryVerdict v);
struct CorollaryReport {
  CorollaryVerdict verdict = CorollaryVerdict::Inconclusive;
  RepdimReport group_report;
  RepdimReport subgroup_report;
  std::size_t subgroup_order = 0;
  ChainStatus chain_status = ChainStatus::ReachedNormal;
  std::string detail;
};
/// repdim k[G] = repdim k[H] <= |H| when [G:H] is invertible mod p.
CorollaryReport verify_group_corollary(const FiniteGroup& g, const Subgroup& h, std::uint32_t p,
                                       const RepdimOptions& options = {});

}  // namespace repdim
