#pragma once

// Hom, End and Ext^1 between kG-modules, isomorphism testing, Krull-Schmidt
// decomposition, bricks, composition factors, Filt membership and submodule
// lattices.
//
// Every search is either exhaustive (candidate count <= enum_cap) or seeded
// random with at most iteration_cap draws. A search that runs out of budget
// raises Indeterminate / EnumCapExceeded instead of answering.

#include "modbrick/config.hpp"
#include "modbrick/module.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace modbrick {

struct HomSpace {
  Module source;
  Module target;
  std::vector<Matrix> basis;  // each target.dim x source.dim

  Index dim() const { return static_cast<Index>(basis.size()); }
  Matrix combine(const std::vector<FieldElem>& coeffs) const;
};

HomSpace hom_basis(const Module& m, const Module& n);
Index hom_dim(const Module& m, const Module& n);

struct EndAlgebra {
  Module module;
  std::vector<Matrix> basis;
  // mult_table[i][j] holds the coordinates of basis[i] * basis[j].
  std::vector<std::vector<std::vector<FieldElem>>> mult_table;
};

EndAlgebra end_algebra(const Module& m);

/// Ext^1(M, N) from the presentation 0 -> K -> (kG)^{dim M} -> M -> 0:
/// Hom(K, N) modulo maps that extend to the free module.
struct Ext1Space {
  Module source;
  Module target;
  Module syzygy;               // K
  Matrix syzygy_inclusion;     // K -> (kG)^{dim M}
  std::vector<Matrix> reps;    // elements of Hom(K, N) spanning a complement of the image
  Index dim() const { return static_cast<Index>(reps.size()); }
};

Ext1Space ext1_basis(const Module& m, const Module& n);

/// Ext^1(M, N) as 1-cocycles on the generators modulo coboundaries. A cocycle
/// is a list of dim N x dim M blocks c_s; the extension has action
/// [[rho_N(s), c_s], [0, rho_M(s)]], with N as submodule and M as quotient.
struct ExtensionSpace {
  Module quotient;  // M
  Module sub;       // N
  std::vector<std::vector<Matrix>> reps;  // cocycles spanning Z^1 / B^1
  Index dim() const { return static_cast<Index>(reps.size()); }
};

ExtensionSpace extension_space(const Module& m, const Module& n);
Index ext1_dim(const Module& m, const Module& n);
Module extension_module(const Module& m, const Module& n, const std::vector<Matrix>& cocycle,
                        std::string name = {});

/// Visits the points of P(F^h): coefficient vectors whose first nonzero entry
/// is one. Stops early when `visit` returns true; returns whether it stopped.
bool for_each_projective(const FieldSpec& f, Index h, const std::function<bool(const std::vector<FieldElem>&)>& visit);
/// Number of projective points (q^h - 1)/(q - 1), saturating at UINT64_MAX.
std::uint64_t projective_count(const FieldSpec& f, Index h);

std::optional<ModuleMap> is_isomorphic(const Module& m, const Module& n, const Config& cfg = default_config());

struct Decomposition {
  Module original;
  std::vector<std::pair<Module, int>> summands;  // pairwise non-isomorphic, with multiplicity
  Matrix witness;  // isomorphism from the direct sum of summands (in order, repeated) to original

  Index num_indecomposables() const;
  Module direct_sum_module() const;
};

Decomposition decompose(const Module& m, const Config& cfg = default_config());
bool is_indecomposable(const Module& m, const Config& cfg = default_config());

bool is_brick(const Module& m, const Config& cfg = default_config());
bool is_semibrick(const std::vector<Module>& mods, const Config& cfg = default_config());
/// A module is a semibrick when its distinct indecomposable summands are.
bool is_semibrick_module(const Module& m, const Config& cfg = default_config());

/// A simple submodule, as a basis inside m (m must be nonzero).
Matrix simple_submodule(const Module& m, const Config& cfg = default_config());
bool is_simple(const Module& m, const Config& cfg = default_config());

struct CompositionFactors {
  std::vector<std::pair<Module, int>> factors;  // pairwise non-isomorphic simples
  Index total_length() const;
};

CompositionFactors composition_factors(const Module& m, const Config& cfg = default_config());
/// Multiplicities of the given simples in m; raises if m has another factor.
std::vector<int> composition_multiplicities(const Module& m, const std::vector<Module>& simples,
                                            const Config& cfg = default_config());

struct Filtration {
  std::vector<Matrix> chain;  // bases of X_1 ⊂ ... ⊂ X_n = X (X_0 = 0 implicit)
  std::vector<std::size_t> quotient_tags;  // X_i / X_{i-1} is isomorphic to members[tag]
  std::size_t length() const { return quotient_tags.size(); }
};

std::optional<Filtration> filt_member(const Module& x, const std::vector<Module>& members,
                                      const Config& cfg = default_config());

/// All submodules (zero and m included), sorted by dimension then canonical basis.
std::vector<Matrix> submodules(const Module& m, const Config& cfg = default_config());

/// Sum of images of all maps c -> x over the given modules.
Matrix trace_in(const Module& x, const std::vector<Module>& gens);

}  // namespace modbrick
