#pragma once

// Subcategories of mod kG given as membership predicates, and checks that
// restriction / induction transport them the way the theory predicts.
//
// Leaves are generated by a list of modules (Filt, Fac, torsion closure) or
// are the whole category. Inner nodes: perpendicular categories, the
// extension product C * D, preimages under Res and Ind, intersections.
//
// Perpendiculars of a generated leaf reduce to Hom vanishing against the
// generators. For other children the right perpendicular is decided as "no
// nonzero submodule in the child", which is exact when the child is closed
// under quotients; the left one as "no nonzero quotient in the child", exact
// when the child is closed under submodules.

#include "modbrick/config.hpp"
#include "modbrick/hom.hpp"
#include "modbrick/io.hpp"

#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace modbrick {

class SubcatPredicate {
 public:
  enum class Kind { All, Filt, Fac, TClose, PerpL, PerpR, Star, ResInv, IndInv, Intersect };

  static SubcatPredicate all(const Group& g, const FieldSpec& f);
  static SubcatPredicate filt(const Group& g, const FieldSpec& f, std::vector<Module> gens);
  static SubcatPredicate fac(const Group& g, const FieldSpec& f, std::vector<Module> gens);
  /// Smallest torsion class containing the generators: Filt(Fac gens).
  static SubcatPredicate tclose(const Group& g, const FieldSpec& f, std::vector<Module> gens);
  static SubcatPredicate perp_left(const SubcatPredicate& c);
  static SubcatPredicate perp_right(const SubcatPredicate& c);
  static SubcatPredicate star(const SubcatPredicate& c, const SubcatPredicate& d);
  /// {X over the ambient group : Res X in c}; c lives over a normal subgroup.
  static SubcatPredicate res_inverse(const Group& ambient, const SubcatPredicate& c);
  /// {X over the normal subgroup : Ind X in d}; d lives over the ambient group.
  static SubcatPredicate ind_inverse(const Group& normal, const SubcatPredicate& d);
  static SubcatPredicate intersect(std::vector<SubcatPredicate> parts);

  Kind kind() const;
  const Group& group() const;
  FieldSpec field() const;
  /// Generators of a Filt / Fac / TClose leaf.
  const std::vector<Module>& generators() const;
  const std::vector<SubcatPredicate>& children() const;
  bool is_generated() const;

  bool contains(const Module& x, const Config& cfg = default_config()) const;
  std::string describe() const;

 private:
  struct Node;
  explicit SubcatPredicate(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

bool subcat_member(const Module& x, const SubcatPredicate& c, const Config& cfg = default_config());

/// Resolves a module reference inside predicate JSON: an inline module
/// object, a golden name such as "T1", or a path to a module file.
using ModuleResolver = std::function<Module(const Json&)>;
ModuleResolver default_resolver(const std::filesystem::path& base_dir = {});

/// {"op": "filt" | "fac" | "tclose", "args": [modules], "group"?, "field"?}
/// {"op": "all", "group", "field"}
/// {"op": "perpL" | "perpR", "args": [modules] | [predicate]}
/// {"op": "star", "args": [predicate, predicate]}
/// {"op": "resinv", "group": <ambient>, "args": [predicate]}
/// {"op": "indinv", "group": <normal subgroup>, "args": [predicate]}
/// {"op": "intersect", "args": [predicate, ...]}
SubcatPredicate predicate_from_json(const Json& j, const ModuleResolver& resolve = default_resolver());

/// Generated predicates only: every conjugate of every generator is a member.
/// nullopt when the predicate is not generated.
std::optional<bool> predicate_is_G_invariant(const SubcatPredicate& c, const Group& ambient,
                                             const Config& cfg = default_config());

struct IdentityCheck {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> discrepancies;  // corpus modules on which the two sides disagree
  std::optional<bool> hypothesis;          // whether the check's hypothesis was verified
  bool holds() const { return discrepancies.empty(); }
};

/// C = Ind^-1 Res^-1 C on the kN corpus and D = Res^-1 Ind^-1 D on the kG corpus.
std::vector<IdentityCheck> check_roundtrips(const SubcatPredicate& c_n, const SubcatPredicate& d_g,
                                            const std::vector<Module>& corpus_n,
                                            const std::vector<Module>& corpus_g,
                                            const Config& cfg = default_config());

/// Res^-1 of the heart [U, T] is the heart of [Res^-1 U, Res^-1 T], and
/// Res^-1 (T^perp) = (Res^-1 T)^perp, on the kG corpus.
std::vector<IdentityCheck> check_heart_transport(const SubcatPredicate& u_n, const SubcatPredicate& t_n,
                                                 const Group& ambient, const std::vector<Module>& corpus_g,
                                                 const Config& cfg = default_config());

/// Fac(Ind X) = Res^-1 (Fac X) on the kG corpus; X must have G-invariant add X.
IdentityCheck check_fac_ind(const Module& x, const Group& ambient, const std::vector<Module>& corpus_g,
                            const Config& cfg = default_config());

/// Closure operations on G-invariant C, D stay G-invariant: intersection, Fac,
/// C * D, Filt, both perpendiculars and the torsion closure.
std::vector<IdentityCheck> check_ginv_closures(const SubcatPredicate& c_n, const SubcatPredicate& d_n,
                                               const Group& ambient, const std::vector<Module>& corpus_n,
                                               const Config& cfg = default_config());

/// Ind^-1 (Filt S) = Filt(Res S) on the kN corpus, for a kG semibrick S.
IdentityCheck check_sbrick_square(const std::vector<Module>& semibrick, const Group& normal,
                                  const std::vector<Module>& corpus_n, const Config& cfg = default_config());

}  // namespace modbrick
