#include "modbrick/clifford.hpp"

#include "modbrick/error.hpp"

namespace modbrick {

namespace {

Group ambient_of(const Module& m) { return m.group(); }

}  // namespace

CliffordReport clifford_decompose(const Module& s, const Group& normal,
                                  const std::optional<std::vector<Module>>& stable_semibrick, const Config& cfg) {
  const Group g = ambient_of(s);
  const int p = s.field().characteristic();
  if (!is_brick(s, cfg)) raise(ErrorKind::NotABrick, "clifford_decompose needs a brick");
  const CosetSystem cs = coset_reps(g, normal);
  const bool p_power = is_p_power(cs.index(), p);
  if (!p_power) {
    if (!stable_semibrick)
      raise(ErrorKind::HypothesisNotVerified,
            "index " + std::to_string(cs.index()) + " is not a power of " + std::to_string(p) +
                " and no tensor-stable semibrick was supplied");
    if (!is_semibrick(*stable_semibrick, cfg) || !is_tensor_stable(*stable_semibrick, normal, cfg))
      raise(ErrorKind::HypothesisNotVerified, "the supplied semibrick is not tensor stable");
    bool member = false;
    for (const auto& t : *stable_semibrick)
      if (is_isomorphic(s, t, cfg)) member = true;
    if (!member) raise(ErrorKind::HypothesisNotVerified, "the brick is not a member of the supplied semibrick");
  }

  const Module res = restrict(s, normal);
  const Decomposition dec = decompose(res, cfg);
  CliffordReport r{s, normal, {}, {}, dec.witness};
  r.p_power_index = p_power;
  std::vector<Module> distinct;
  for (const auto& [mod, mult] : dec.summands) {
    r.summands.push_back({mod, mult, mod.dim()});
    distinct.push_back(mod);
  }
  r.semibrick_certificate = is_semibrick(distinct, cfg);

  r.equal_dims = r.equal_mults = true;
  for (const auto& t : r.summands) {
    r.equal_dims = r.equal_dims && t.dim == r.summands.front().dim;
    r.equal_mults = r.equal_mults && t.multiplicity == r.summands.front().multiplicity;
  }

  r.transitive = true;
  const Module& first = r.summands.front().module;
  for (const auto& t : r.summands) {
    std::optional<Perm> witness;
    for (std::size_t i = 0; i < cs.index() && !witness; ++i) {
      const Perm& rep = g.element(cs.rep(i));
      if (is_isomorphic(conjugate(rep, first), t.module, cfg)) witness = rep;
    }
    r.transitive = r.transitive && witness.has_value();
    r.transitivity_witnesses.push_back(witness);
  }
  return r;
}

bool is_tensor_stable(const std::vector<Module>& semibrick, const Group& normal, const Config& cfg) {
  if (!is_semibrick(semibrick, cfg)) raise(ErrorKind::NotASemibrick, "is_tensor_stable needs a semibrick");
  if (semibrick.empty()) return true;
  const Module perm = perm_module(semibrick.front().group(), normal, semibrick.front().field());
  for (const auto& s : semibrick)
    if (!filt_member(tensor(perm, s), semibrick, cfg)) return false;
  return true;
}

bool is_G_invariant(const std::vector<Module>& semibrick, const Group& ambient, const Config& cfg) {
  if (!is_semibrick(semibrick, cfg)) raise(ErrorKind::NotASemibrick, "is_G_invariant needs a semibrick");
  if (semibrick.empty()) return true;
  const CosetSystem cs = coset_reps(ambient, semibrick.front().group());
  for (const auto& s : semibrick)
    for (std::size_t i = 1; i < cs.index(); ++i)
      if (!filt_member(conjugate(ambient.element(cs.rep(i)), s), semibrick, cfg)) return false;
  return true;
}

RestrictedSemibrick restrict_semibrick(const std::vector<Module>& semibrick, const Group& normal, const Config& cfg) {
  if (!is_semibrick(semibrick, cfg)) raise(ErrorKind::NotASemibrick, "restrict_semibrick needs a semibrick");
  RestrictedSemibrick out;
  if (semibrick.empty()) {
    out.certified = true;
    return out;
  }
  const Group& g = semibrick.front().group();
  const CosetSystem cs = coset_reps(g, normal);
  if (!is_p_power(cs.index(), semibrick.front().field().characteristic()))
    raise(ErrorKind::IndexNotPPower, "index " + std::to_string(cs.index()) + " is not a power of the characteristic");
  for (const auto& s : semibrick) {
    for (const auto& [t, mult] : decompose(restrict(s, normal), cfg).summands) {
      bool seen = false;
      for (const auto& u : out.members)
        if (u.dim() == t.dim() && is_isomorphic(u, t, cfg)) seen = true;
      if (!seen) out.members.push_back(t);
    }
  }
  out.certified = is_semibrick(out.members, cfg);
  return out;
}

ModuleMap averaged_retraction(const ModuleMap& iota, const Matrix& pi, const Group& normal) {
  const Module& v = iota.source();
  const Module& w = iota.target();
  const Group& g = v.group();
  const FieldSpec f = v.field();
  const CosetSystem cs = coset_reps(g, normal);
  const auto index = static_cast<long>(cs.index());
  if (index % f.characteristic() == 0)
    raise(ErrorKind::IndexDivisibleByP, "index " + std::to_string(index) + " is divisible by the characteristic");
  if (pi.rows() != v.dim() || pi.cols() != w.dim()) raise(ErrorKind::DimensionMismatch, "retraction has the wrong shape");
  if (!intertwines(restrict(w, normal), restrict(v, normal), pi))
    raise(ErrorKind::NotARetraction, "the retraction is not a kN-map");
  if (pi * iota.matrix() != identity(f, v.dim())) raise(ErrorKind::NotARetraction, "pi after iota is not the identity");

  Matrix sum = zeros(f, v.dim(), w.dim());
  for (std::size_t i = 0; i < cs.index(); ++i) {
    const std::size_t x = cs.rep(i);
    sum += v.element_matrix(x) * pi * w.element_matrix(g.inv(x));
  }
  Matrix avg = f.from_int(index).inverse() * sum;
  ModuleMap out(w, v, avg);  // validates the kG-linearity
  if (avg * iota.matrix() != identity(f, v.dim())) raise(ErrorKind::NotARetraction, "averaged map does not retract");
  return out;
}

IndResSequence lemma_indres_sequence(const Module& x, const Group& normal) {
  const Group& g = x.group();
  const FieldSpec f = x.field();
  const CosetSystem cs = coset_reps(g, normal);
  const Index idx = static_cast<Index>(cs.index());
  const Module perm = perm_module(g, normal, f);

  // generators outside N give the relations N -> sN - N
  std::vector<std::size_t> moving;
  for (std::size_t s = 0; s < g.num_generators(); ++s)
    if (cs.coset_of(g.generator_element(s)) != 0) moving.push_back(s);
  const Index m = static_cast<Index>(moving.size());

  Matrix alpha = zeros(f, idx, m * idx);
  for (Index j = 0; j < m; ++j) {
    for (Index i = 0; i < idx; ++i) {
      const std::size_t moved = g.mul(cs.rep(i), g.generator_element(moving[j]));
      alpha(static_cast<Index>(cs.coset_of(moved)), j * idx + i) += f.one();
      alpha(i, j * idx + i) -= f.one();
    }
  }
  Matrix augmentation = Matrix::Constant(1, idx, f.one());

  const Module middle = tensor(perm, x);
  Matrix first = kronecker(alpha, identity(f, x.dim()));
  Matrix second = kronecker(augmentation, identity(f, x.dim()));
  tag(first, f);
  tag(second, f);
  IndResSequence out{m, direct_sum(g, f, std::vector<Module>(m, middle)), middle, x, first, second};
  const bool maps = intertwines(out.left, out.middle, out.first) && intertwines(out.middle, out.right, out.second);
  const Index r1 = rank(out.first);
  const Index r2 = rank(out.second);
  out.exact = maps && r2 == x.dim() && is_zero_matrix(Matrix(out.second * out.first)) &&
              r1 == out.middle.dim() - r2;
  return out;
}

}  // namespace modbrick
