#pragma once

// Restriction of bricks and semibricks to a normal subgroup, with
// certificates: semibrick-ness of the summands, transitivity of the
// conjugation action, equal dimensions and multiplicities.

#include "modbrick/config.hpp"
#include "modbrick/hom.hpp"

#include <optional>
#include <vector>

namespace modbrick {

struct CliffordSummand {
  Module module;
  int multiplicity = 0;
  Index dim = 0;
};

struct CliffordReport {
  Module brick;
  Group normal;
  std::vector<CliffordSummand> summands;
  /// witnesses[i] conjugates the first summand onto summand i.
  std::vector<std::optional<Perm>> transitivity_witnesses;
  Matrix decomposition_witness;  // direct sum of summands -> Res S
  bool semibrick_certificate = false;
  bool transitive = false;
  bool equal_dims = false;
  bool equal_mults = false;
  bool p_power_index = false;

  bool holds() const { return semibrick_certificate && transitive && equal_dims && equal_mults; }
};

/// Requires a brick S and either a p-power index or a semibrick whose Filt
/// is k[G/N]-tensor stable and contains S as a simple object.
CliffordReport clifford_decompose(const Module& s, const Group& normal,
                                  const std::optional<std::vector<Module>>& stable_semibrick = std::nullopt,
                                  const Config& cfg = default_config());

/// k[G/N] (x) S lies in Filt of the semibrick for every member S.
bool is_tensor_stable(const std::vector<Module>& semibrick, const Group& normal, const Config& cfg = default_config());

/// gS lies in Filt of the semibrick for every coset representative g and member S.
bool is_G_invariant(const std::vector<Module>& semibrick, const Group& ambient, const Config& cfg = default_config());

struct RestrictedSemibrick {
  std::vector<Module> members;
  bool certified = false;
};

/// Distinct indecomposable summands of the restrictions. Needs a p-power index.
RestrictedSemibrick restrict_semibrick(const std::vector<Module>& semibrick, const Group& normal,
                                       const Config& cfg = default_config());

/// (G:N)^-1 sum_g g pi g^-1 over coset representatives, for an injective kG-map
/// iota: V -> W and a kN-retraction pi: Res W -> Res V of it.
ModuleMap averaged_retraction(const ModuleMap& iota, const Matrix& pi, const Group& normal);

/// (k[G/N] (x) X)^m -> k[G/N] (x) X -> X -> 0 from the presentation of the
/// trivial k[G/N]-module by the generators of G that leave N.
struct IndResSequence {
  Index m = 0;
  Module left;    // (k[G/N] (x) X)^m
  Module middle;  // k[G/N] (x) X
  Module right;   // X
  Matrix first;   // left -> middle
  Matrix second;  // middle -> right
  bool exact = false;
};

IndResSequence lemma_indres_sequence(const Module& x, const Group& normal);

}  // namespace modbrick
