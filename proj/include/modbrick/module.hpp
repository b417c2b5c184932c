#pragma once

// kG-modules given by matrices for the group generators, and the functors
// between group algebras: restriction, induction, conjugation, tensor.

#include "modbrick/field.hpp"
#include "modbrick/group.hpp"
#include "modbrick/linalg.hpp"

#include <memory>
#include <string>
#include <vector>

namespace modbrick {

class Module;

namespace detail {
struct ModuleData;
/// Skips validation; for modules produced by the functors in this library.
Module make_unchecked(Group g, FieldSpec f, Index dim, std::vector<Matrix> action, std::string name);
}  // namespace detail

class Module {
 public:
  /// Validates invertibility and rho(x) rho(s) = rho(xs) for every element x
  /// and generator s. NotAHomomorphism names the offending word.
  static Module make(Group group, FieldSpec field, Index dim, std::vector<Matrix> action,
                     std::string name = {});

  const Group& group() const;
  FieldSpec field() const;
  Index dim() const;
  const std::string& name() const;
  Module renamed(std::string name) const;

  const std::vector<Matrix>& action() const;
  const Matrix& generator_matrix(std::size_t s) const;
  /// Matrix of group element i; all elements are computed once, on first use.
  const Matrix& element_matrix(std::size_t i) const;
  const Matrix& element_matrix(const Perm& g) const;

  bool same_action(const Module& other) const;

 private:
  friend Module detail::make_unchecked(Group, FieldSpec, Index, std::vector<Matrix>, std::string);
  explicit Module(std::shared_ptr<const detail::ModuleData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::ModuleData> d_;
};

/// Raises GroupMismatch / FieldMismatch unless both live over the same algebra.
void require_same_algebra(const Module& a, const Module& b, const char* what);

Module module_make(Group group, FieldSpec field, Index dim, std::vector<Matrix> action, std::string name = {});

/// An intertwiner, matrix of shape target.dim x source.dim.
class ModuleMap {
 public:
  ModuleMap(Module source, Module target, Matrix matrix);  // validated

  const Module& source() const { return src_; }
  const Module& target() const { return dst_; }
  const Matrix& matrix() const { return m_; }

  ModuleMap compose(const ModuleMap& first) const;  // this after first
  bool is_injective() const;
  bool is_surjective() const;
  bool is_iso() const;

 private:
  Module src_;
  Module dst_;
  Matrix m_;
};

bool intertwines(const Module& source, const Module& target, const Matrix& m);

Module trivial_module(const Group& g, const FieldSpec& f);
Module zero_module(const Group& g, const FieldSpec& f);
/// A one-dimensional module given by a scalar per generator.
Module linear_character(const Group& g, const FieldSpec& f, const std::vector<FieldElem>& values,
                        std::string name = {});

Module restrict(const Module& m, const Group& sub);
Module induce(const Module& v, const Group& ambient);
Module tensor(const Module& a, const Module& b);
/// gU for a kN-module U and g in the ambient group.
Module conjugate(const Perm& g, const Module& u);
/// k[G/N] with G permuting left cosets.
Module perm_module(const Group& ambient, const Group& normal, const FieldSpec& f);
Module direct_sum(const std::vector<Module>& parts);
Module direct_sum(const Group& g, const FieldSpec& f, const std::vector<Module>& parts);
/// (kG)^rank with the left regular action; basis (copy, element) copy-major.
Module free_module(const Group& g, const FieldSpec& f, Index rank);

/// Change of coefficients along a field embedding.
Module extend_scalars(const Module& m, const FieldEmbedding& emb);

// Subspaces are column-basis matrices inside the module's space.

bool is_submodule(const Module& m, const Matrix& basis);
/// Smallest submodule containing the given columns.
Matrix spin(const Module& m, const Matrix& vectors);

struct SubQuotient {
  Module module;
  Matrix map;  // inclusion (M.dim x sub.dim) or projection (quot.dim x M.dim)
};

/// Submodule on an invariant subspace, with its inclusion into m.
SubQuotient submodule(const Module& m, const Matrix& basis);
/// Quotient by an invariant subspace, with the projection from m.
SubQuotient quotient(const Module& m, const Matrix& basis);

Matrix map_kernel(const Matrix& m);
Matrix map_image(const Matrix& m);

}  // namespace modbrick
