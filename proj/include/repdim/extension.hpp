#pragma once

// Algebra extensions B in A and certificates for their properties.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "repdim/bimodule.hpp"

namespace repdim {

/// B -> A, injective unital algebra map; `embed` is dim(A) x dim(B).
struct Extension {
  Algebra b;
  Algebra a;
  Matrix embed;
};

/// Checks unitality, multiplicativity on basis pairs and injectivity; throws
/// Invalid naming the first failing identity.
Extension make_extension(Algebra b, Algebra a, Matrix embed);
ValidationReport validate(const Extension& ext);

struct BimoduleViews {
  Bimodule bab;  // _B A _B
  Bimodule aab;  // _A A _B
  Bimodule baa;  // _B A _A
  Bimodule tensor;  // A (x)_B A as an A-bimodule
  TensorResult tensor_detail;
};
BimoduleViews bimodule_views(const Extension& ext);

struct SplitCert {
  Matrix retraction;  // dim B x dim A
};
std::optional<SplitCert> check_split(const Extension& ext);
ValidationReport verify_split(const Extension& ext, const SplitCert& cert);

using ElementPair = std::pair<Vec, Vec>;

struct SeparabilityCert {
  Vec element;                     // coordinates in the quotient basis of A (x)_B A
  std::vector<ElementPair> lift;   // sum x_i (x) y_i mapping to `element`
};
std::optional<SeparabilityCert> check_separable(const Extension& ext);
ValidationReport verify_separable(const Extension& ext, const SeparabilityCert& cert);

/// Exhaustive search for a separability element over all of A (x)_B A.
struct ExhaustiveResult {
  bool ran = false;     // false when the space has more than 2^16 elements
  bool found = false;
  std::size_t searched = 0;
  std::string method;
};
ExhaustiveResult exhaustive_separability(const Extension& ext);

struct SummandCert {
  std::string source;
  std::string target;
  SummandWitness witness;
};
/// _B A _B in add(_B B _B).
std::optional<SummandCert> check_centrally_projective(const Extension& ext);
/// A (x)_B A in add(_A A _A).
std::optional<SummandCert> check_h_separable(const Extension& ext);
ValidationReport verify_summand_cert(const Extension& ext, const SummandCert& cert);
/// Exhaustive confirmation of the centrally projective verdict: searches the
/// coefficient space of id = sum c g f when small; otherwise, for each
/// indecomposable summand X of _B A _B, enumerates End(X) to confirm it is
/// local and all pairs f: X -> B, g: B -> X for an invertible g f.
ExhaustiveResult exhaustive_centrally_projective(const Extension& ext);

struct FrobeniusSystem {
  Matrix e_map;  // dim B x dim A
  std::vector<ElementPair> pairs;
};
std::optional<FrobeniusSystem> check_frobenius(const Extension& ext);
ValidationReport verify_frobenius_system(const Extension& ext, const FrobeniusSystem& sys);

struct ProbeVerdict {
  bool split = false;
  std::optional<Matrix> section;  // X -> A (x)_B X
};
struct ProbeReport {
  std::vector<ProbeVerdict> probes;
  bool universal = false;  // set only from a separability certificate
};
ProbeReport check_semisimple_on_probes(const Extension& ext, const std::vector<Module>& probes);

/// S in add(M (x)_R *M) for _S M _R; throws Invalid when M_R is not projective.
std::optional<SummandCert> check_M_separable(const Bimodule& m);

/// End_B(Y) in End_A(A (x)_B Y) via f -> id (x) f.
Extension endo_extension(const Extension& ext, const Module& y);
/// B (x) C in A (x) C.
Extension tensor_extension(const Extension& ext, const Algebra& c);

struct QuotientExtension {
  std::optional<Extension> ext;
  Ideal i;              // ideal of A generated by embed(J)
  std::string failure;  // empty on success
};
QuotientExtension quotient_extension(const Extension& ext, const Ideal& j);

}  // namespace repdim
