#pragma once

// Finite groups as Cayley tables, subgroup machinery, and group algebras.

#include <cstdint>
#include <string>
#include <vector>

#include "repdim/extension.hpp"

namespace repdim {

inline constexpr std::size_t kMaxGroupOrder = 5040;

using Permutation = std::vector<std::uint32_t>;  // 0-based images

class FiniteGroup {
 public:
  FiniteGroup() = default;
  /// table[i][j] = index of g_i g_j; index 0 must be the identity.
  FiniteGroup(std::vector<std::vector<std::uint32_t>> table, std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return table_.size(); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept { return table_[a][b]; }
  std::uint32_t inv(std::uint32_t a) const noexcept { return inverse_[a]; }
  std::uint32_t identity() const noexcept { return 0; }
  const std::vector<std::vector<std::uint32_t>>& table() const noexcept { return table_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(std::uint32_t g) const;
  std::size_t element_order(std::uint32_t g) const;
  /// Small generating set (greedy over element indices).
  const std::vector<std::uint32_t>& generators() const noexcept { return gens_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  std::vector<std::vector<std::uint32_t>> table_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::string> labels_;
  std::vector<std::uint32_t> gens_;
};

struct Subgroup {
  std::vector<std::uint32_t> elements;  // sorted, contains 0
  std::size_t order() const noexcept { return elements.size(); }
  bool contains(std::uint32_t g) const;
  bool operator==(const Subgroup&) const = default;
};

/// Parses cycle notation such as "(1 2 3)(4 5)"; points are 1-based.
Permutation parse_cycles(const std::string& text, std::size_t degree);
std::string format_cycles(const Permutation& perm);
/// Group generated by permutations; identity first, then breadth-first order.
/// Products compose right-to-left: (g h)(x) = g(h(x)).
FiniteGroup group_from_generators(const std::vector<Permutation>& perms);

/// Index of a permutation inside a group produced by group_from_generators.
std::uint32_t find_permutation(const FiniteGroup& g, const Permutation& perm);

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<std::uint32_t>& elements);
Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup();
std::size_t index(const FiniteGroup& g, const Subgroup& h);
bool is_subgroup(const FiniteGroup& g, const Subgroup& h);
bool is_normal(const FiniteGroup& g, const Subgroup& h);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);

enum class ChainStatus { ReachedNormal, StabilizedNonNormal };
struct NormalizerChain {
  std::vector<Subgroup> chain;  // H = H_0 < H_1 < ...
  ChainStatus status = ChainStatus::ReachedNormal;
};
NormalizerChain normalizer_chain(const FiniteGroup& g, const Subgroup& h);

Subgroup sylow_subgroup(const FiniteGroup& g, std::uint32_t p);
bool is_cyclic(const FiniteGroup& g, const Subgroup& h);

/// One representative per coset, the minimal element index of the coset.
std::vector<std::uint32_t> coset_representatives(const FiniteGroup& g, const Subgroup& h, Side side);
std::vector<std::vector<std::uint32_t>> double_cosets(const FiniteGroup& g, const Subgroup& h);

/// Basis = group elements in index order.
Algebra group_algebra(const FiniteGroup& g, std::uint32_t p);
/// H as a group in its own right, elements in the order of h.elements.
FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h);
/// dim k[G] x dim k[H] matrix of the inclusion k[H] -> k[G] on element bases.
Matrix subgroup_embedding(const FiniteGroup& g, const Subgroup& h, std::uint32_t p);

/// k[H] in k[G] with the H-coordinate projection E, pairs (g_i, g_i^-1) over
/// left coset representatives, and the Casimir element [G:H]^-1 sum g_i (x) g_i^-1
/// when the index is invertible.
struct GroupExtension {
  FiniteGroup group;
  Subgroup subgroup;
  Extension ext;
  FrobeniusSystem system;
  std::optional<SeparabilityCert> casimir;
};
GroupExtension group_extension(const FiniteGroup& g, const Subgroup& h, std::uint32_t p);

enum class RepType { Finite, Infinite };
struct HigmanVerdict {
  RepType type = RepType::Finite;
  Subgroup sylow;
  bool sylow_cyclic = true;
};
HigmanVerdict higman_rep_type(const FiniteGroup& g, std::uint32_t p);

// Gallery.
FiniteGroup cyclic_group(std::size_t n);
FiniteGroup klein_four();
/// Dihedral group of order 2n.
FiniteGroup dihedral_group(std::size_t n);
FiniteGroup symmetric_group(std::size_t n);
FiniteGroup alternating_group(std::size_t n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
/// Names: cyclic<n>, klein4, dihedral<n>, sym<n>, alt<n>, and "A x B" products.
FiniteGroup gallery_group(const std::string& name);
/// "matrix(n)", "centrosymmetric(n)" or "group(<gallery group>)".
Algebra gallery_algebra(const std::string& name, std::uint32_t p);

}  // namespace repdim
