#pragma once

// Two-term simple-minded collections: modules placed in degree 0 or shifted
// by one, checked against the Hom/Ext vanishing conditions and the size of
// the Grothendieck group.

#include "modbrick/config.hpp"
#include "modbrick/hom.hpp"

#include <string>
#include <vector>

namespace modbrick {

struct ShiftedModule {
  Module module;
  int shift = 0;  // 0 or 1
};

/// The simple kG-modules up to isomorphism, ordered by dimension. Ties between
/// one-dimensional simples are broken by the generator scalars.
std::vector<Module> simples_of(const Group& g, const FieldSpec& f, const Config& cfg = default_config());

/// Classes of the items in K0 = Z^{simples}: row i holds the composition
/// multiplicities of item i, negated for shifted items.
std::vector<std::vector<long>> k0_matrix(const std::vector<ShiftedModule>& items, const std::vector<Module>& simples,
                                         const Config& cfg = default_config());

/// Exact integer determinant (fraction-free elimination).
long integer_determinant(std::vector<std::vector<long>> a);

struct SmcCertificate {
  bool bricks = false;             // every item has End = k
  bool hom_within_degree = false;  // Hom(X_i, X_j) = 0 for i != j of equal shift
  bool hom_across = false;         // Hom(X_i, Y_j) = 0, X unshifted, Y shifted
  bool ext_across = false;         // Ext^1(X_i, Y_j) = 0
  bool k0_unimodular = false;      // necessary only: classes form a Z-basis of K0
  long k0_determinant = 0;
  std::vector<std::vector<long>> k0;
  std::vector<std::string> failures;

  bool passes() const { return bricks && hom_within_degree && hom_across && ext_across && k0_unimodular; }
};

/// The simples are computed from the group when not supplied.
SmcCertificate check_two_term_smc(const std::vector<ShiftedModule>& items, const Config& cfg = default_config());
SmcCertificate check_two_term_smc(const std::vector<ShiftedModule>& items, const std::vector<Module>& simples,
                                  const Config& cfg = default_config());

struct RestrictedSmc {
  std::vector<ShiftedModule> items;  // distinct indecomposable summands, shifts kept
  SmcCertificate certificate;
};

RestrictedSmc restrict_smc(const std::vector<ShiftedModule>& items, const Group& normal,
                           const Config& cfg = default_config());

/// First collection of `size` items drawn from the candidates (each in both
/// degrees) that passes, has items in both degrees and is not the simples.
std::optional<std::vector<ShiftedModule>> find_nontrivial_smc(const std::vector<Module>& candidates,
                                                              const std::vector<Module>& simples,
                                                              const Config& cfg = default_config());

}  // namespace modbrick
