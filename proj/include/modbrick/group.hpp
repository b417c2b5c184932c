#pragma once

// Finite permutation groups with fully enumerated elements.
//
// Permutations are image lists: p[x] is the image of point x. Products are
// composed right to left, (a * b)[x] = a[b[x]], so that representations
// satisfy rho(ab) = rho(a) rho(b) as matrices acting on column vectors.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace modbrick {

using Perm = std::vector<int>;

Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);
Perm perm_identity(int degree);
/// Permutation from disjoint cycles, e.g. {{0, 1, 2}, {3, 4}}.
Perm perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles);
std::string perm_to_cycles(const Perm& p);

inline constexpr std::size_t kDefaultOrderCap = 10080;

namespace detail {
struct GroupData;
}

class Group {
 public:
  using Generators = std::vector<std::pair<std::string, Perm>>;

  /// Breadth-first closure under right multiplication by the generators.
  static Group from_generators(int degree, Generators gens, std::size_t order_cap = kDefaultOrderCap);

  int degree() const;
  std::size_t order() const;
  std::size_t num_generators() const;
  const Generators& generators() const;
  const std::string& generator_name(std::size_t i) const;
  const Perm& generator(std::size_t i) const;
  /// Element index of generator i.
  std::size_t generator_element(std::size_t i) const;

  const Perm& element(std::size_t i) const;
  const std::vector<Perm>& elements() const;
  std::optional<std::size_t> index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_of(p).has_value(); }

  static constexpr std::size_t identity() { return 0; }
  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const;

  /// Element i = element(parent(i)) * generator(parent_generator(i)) for i > 0.
  std::size_t parent(std::size_t i) const;
  std::size_t parent_generator(std::size_t i) const;
  /// Generator indices w with element(i) = g_{w[0]} g_{w[1]} ...
  std::vector<std::size_t> word(std::size_t i) const;
  std::string word_string(std::size_t i) const;

  /// True when every generator of `sub` lies in this group.
  bool has_subgroup(const Group& sub) const;

  /// Same degree and the same generating permutations in the same order.
  friend bool operator==(const Group& a, const Group& b);
  friend bool operator!=(const Group& a, const Group& b) { return !(a == b); }

 private:
  explicit Group(std::shared_ptr<const detail::GroupData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::GroupData> d_;
};

Group group_from_generators(int degree, Group::Generators gens, std::size_t order_cap = kDefaultOrderCap);

/// Subgroup of `ambient` generated by the given permutations (named h0, h1, ...
/// unless names are supplied). Raises NotASubgroup if a generator is missing.
Group subgroup(const Group& ambient, Group::Generators gens);

/// Conjugate-invariance of `sub` under every generator of `ambient`.
bool is_normal(const Group& ambient, const Group& sub);

bool is_p_group(const Group& g, int p);
bool is_p_power(std::size_t n, int p);

/// Left cosets rN of a subgroup, representatives chosen as the least unused
/// element in enumeration order (so the identity comes first).
class CosetSystem {
 public:
  CosetSystem(Group ambient, Group sub);

  const Group& ambient() const { return ambient_; }
  const Group& subgroup() const { return sub_; }
  std::size_t index() const { return reps_.size(); }
  const std::vector<std::size_t>& reps() const { return reps_; }
  std::size_t rep(std::size_t i) const { return reps_[i]; }
  std::size_t coset_of(std::size_t element) const { return coset_of_[element]; }

  /// For an ambient element g and rep r_i: g r_i = r_j n. Returns (j, n) with
  /// n an element index of the subgroup.
  std::pair<std::size_t, std::size_t> split(std::size_t g, std::size_t i) const;

 private:
  Group ambient_;
  Group sub_;
  std::vector<std::size_t> reps_;
  std::vector<std::size_t> coset_of_;
  std::vector<std::size_t> sub_to_ambient_;
};

/// Coset representatives of a normal subgroup. Raises NotNormal otherwise.
CosetSystem coset_reps(const Group& ambient, const Group& normal);

struct Quotient {
  Group group;                        // action of the ambient generators on cosets
  std::vector<std::size_t> projection;  // ambient element -> quotient element
};

Quotient quotient_group(const Group& ambient, const Group& normal);

namespace groups {

Group trivial();
Group symmetric(int n);
Group cyclic(int n);
/// Dihedral group of order 2n acting on an n-gon.
Group dihedral(int n);

// The subgroups below live inside the group named in their comment.
Group alternating4();  // in symmetric(4)
Group klein4();        // in symmetric(4), normal
Group cyclic2_in_cyclic4();
Group rotations_in_dihedral4();

}  // namespace groups

}  // namespace modbrick
