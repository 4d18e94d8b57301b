#pragma once

// Projective covers, resolutions, projective and global dimension.

#include <optional>
#include <utility>
#include <vector>

#include "repdim/module.hpp"

namespace repdim {

inline constexpr std::size_t kMaxResolutionLength = 32;

/// Indecomposable projectives A e_j and simples top(A e_j), one per isomorphism class.
struct ProjectiveSystem {
  Algebra algebra;
  Ideal radical;
  std::vector<Vec> idempotents;
  std::vector<std::size_t> multiplicities;  // copies of A e_j in the regular module
  std::vector<Module> projectives;
  std::vector<Matrix> projective_inclusions;  // basis of A e_j as algebra elements (columns)
  std::vector<Module> simples;
};
ProjectiveSystem projective_system(const Algebra& a);
/// From a complete set of primitive orthogonal idempotents whose A e_j are
/// pairwise non-isomorphic (a basic algebra); orthogonality and the sum are
/// checked. The radical is computed unless supplied.
ProjectiveSystem projective_system(const Algebra& a, const std::vector<Vec>& idempotents,
                                   std::optional<Ideal> radical = std::nullopt);

struct ProjectiveCover {
  Module projective;
  std::vector<std::size_t> types;  // summands A e_j of `projective`, in block order
  Matrix map;                      // dim(M) x dim(P), onto M
  SubmoduleResult kernel;          // the syzygy, inside P
};
/// Minimal projective cover: top(P) maps isomorphically onto top(M).
ProjectiveCover projective_cover(const ProjectiveSystem& ps, const Module& m);

enum class DimKind { Exact, Infinite, Unknown };
struct Dimension {
  DimKind kind = DimKind::Exact;
  std::size_t value = 0;  // exact value, or the cap when unknown
  std::optional<std::pair<std::size_t, std::size_t>> repetition;  // i < j with syzygy i ~ syzygy j
  bool by_summand_types = false;  // repetition of summand classes rather than of the whole syzygy
  bool operator==(const Dimension&) const = default;
};
std::string to_string(const Dimension& d);

struct Resolution {
  std::vector<Module> syzygies;  // syzygies[0] = M
  std::vector<ProjectiveCover> covers;  // covers[i] maps onto syzygies[i]
  Dimension pd;
};
struct ResolutionOptions {
  /// Without repetition detection the result is exact or unknown, never infinite.
  bool detect_repetition = true;
  /// A syzygy above this dimension ends the resolution as unknown.
  std::size_t max_syzygy_dim = kMaxModuleDim;
};
Resolution projective_resolution(const ProjectiveSystem& ps, const Module& m, std::size_t cap,
                                 const ResolutionOptions& options = {});
Dimension projective_dimension(const ProjectiveSystem& ps, const Module& m, std::size_t cap,
                               const ResolutionOptions& options = {});
Dimension projective_dimension(const Module& m, std::size_t cap);
/// Maximum over the simple modules; infinite dominates unknown. Without
/// repetition detection it stops at the first simple that is not exact.
Dimension global_dimension(const Algebra& a, std::size_t cap, const ResolutionOptions& options = {});
Dimension global_dimension(const ProjectiveSystem& ps, std::size_t cap, const ResolutionOptions& options = {});
Dimension combine_max(const Dimension& a, const Dimension& b);

}  // namespace repdim
