#include "helpers.hpp"

#include "modbrick/builtin.hpp"
#include "modbrick/clifford.hpp"
#include "modbrick/corpus.hpp"
#include "modbrick/error.hpp"
#include "modbrick/linalg.hpp"

#include <gtest/gtest.h>

using namespace modbrick;

namespace {

bool iso(const Module& a, const Module& b) { return is_isomorphic(a, b).has_value(); }

/// iota: V -> V + Y and pi = [I, phi] with phi a kN-map Y -> V.
std::pair<ModuleMap, Matrix> split_pair(const Module& v, const Module& y, const Group& normal, std::size_t pick) {
  const FieldSpec f = v.field();
  const Module w = direct_sum(v.group(), f, {v, y});
  Matrix inc = zeros(f, w.dim(), v.dim());
  inc.topRows(v.dim()) = identity(f, v.dim());
  Matrix pi = zeros(f, v.dim(), w.dim());
  pi.leftCols(v.dim()) = identity(f, v.dim());
  const HomSpace h = hom_basis(restrict(y, normal), restrict(v, normal));
  if (h.dim() > 0) pi.rightCols(y.dim()) = h.basis[pick % h.basis.size()];
  return {ModuleMap(v, w, inc), pi};
}

}  // namespace

TEST(Clifford, SimpleS2) {
  const auto& ex = s4a4::example();
  const CliffordReport r = clifford_decompose(ex.s2, ex.n);
  ASSERT_EQ(r.summands.size(), 2u);
  EXPECT_TRUE(r.holds());
  for (const auto& s : r.summands) {
    EXPECT_EQ(s.dim, 1);
    EXPECT_EQ(s.multiplicity, 1);
  }
  EXPECT_TRUE((iso(r.summands[0].module, ex.t1) && iso(r.summands[1].module, ex.t2)) ||
              (iso(r.summands[0].module, ex.t2) && iso(r.summands[1].module, ex.t1)));
  ASSERT_TRUE(r.transitivity_witnesses[1]);
  EXPECT_FALSE(ex.n.contains(*r.transitivity_witnesses[1]));  // an odd permutation
}

TEST(Clifford, TrivialAndUniserial) {
  const auto& ex = s4a4::example();
  const CliffordReport k = clifford_decompose(ex.k_g, ex.n);
  ASSERT_EQ(k.summands.size(), 1u);
  EXPECT_TRUE(k.holds());
  const CliffordReport u = clifford_decompose(ex.brick("kG_S2"), ex.n);
  ASSERT_EQ(u.summands.size(), 1u);
  EXPECT_EQ(u.summands[0].dim, 3);
  EXPECT_EQ(u.summands[0].multiplicity, 1);
}

TEST(Clifford, Preconditions) {
  const auto& ex = s4a4::example();
  try {
    clifford_decompose(ex.kg_kg, ex.n);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotABrick);
  }
  try {
    clifford_decompose(ex.brick("kG_S2"), ex.n1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::HypothesisNotVerified);
  }
  // with a certifying semibrick the index-6 case goes through
  const CliffordReport r = clifford_decompose(ex.s2, ex.n1, std::vector<Module>{ex.k_g, ex.s2});
  EXPECT_TRUE(r.holds());
  EXPECT_FALSE(r.p_power_index);
}

TEST(Clifford, PGroupCorpus) {
  for (const auto& gp : standard_pairs()) {
    if (!is_p_power(coset_reps(gp.ambient, gp.normal).index(), gp.field.characteristic())) continue;
    for (const auto& m : full_corpus(gp.ambient, gp.field, 3).modules)
      if (is_brick(m)) EXPECT_TRUE(clifford_decompose(m, gp.normal).holds()) << gp.name << " " << m.name();
  }
}

TEST(Stability, TensorStable) {
  const auto& ex = s4a4::example();
  EXPECT_TRUE(is_tensor_stable({ex.k_g, ex.s2}, ex.n));
  EXPECT_TRUE(is_tensor_stable({ex.brick("S2_kG_kG")}, ex.n));
  EXPECT_TRUE(is_tensor_stable({ex.k_g, ex.s2}, ex.n1));
  EXPECT_FALSE(is_tensor_stable({ex.brick("kG_S2")}, ex.n1));
  EXPECT_THROW(is_tensor_stable({ex.k_g, ex.kg_kg}, ex.n), Error);
}

TEST(Stability, GInvariant) {
  const auto& ex = s4a4::example();
  EXPECT_TRUE(is_G_invariant({ex.k_n}, ex.g));
  EXPECT_FALSE(is_G_invariant({ex.t1}, ex.g));
  EXPECT_TRUE(is_G_invariant({ex.t1, ex.t2}, ex.g));
}

TEST(RestrictSemibrick, Examples) {
  const auto& ex = s4a4::example();
  const auto all = restrict_semibrick({ex.k_g, ex.s2}, ex.n);
  EXPECT_TRUE(all.certified);
  ASSERT_EQ(all.members.size(), 3u);
  for (const auto& s : {ex.k_n, ex.t1, ex.t2}) {
    int hits = 0;
    for (const auto& m : all.members) hits += iso(m, s);
    EXPECT_EQ(hits, 1);
  }
  const auto k = restrict_semibrick({ex.k_g}, ex.n);
  ASSERT_EQ(k.members.size(), 1u);
  EXPECT_TRUE(iso(k.members[0], ex.k_n));
  const auto b = restrict_semibrick({ex.brick("S2_kG_kG")}, ex.n);
  ASSERT_EQ(b.members.size(), 2u);
  EXPECT_TRUE(iso(b.members[0], ex.t1_kn) || iso(b.members[1], ex.t1_kn));
  EXPECT_TRUE(iso(b.members[0], conjugate(ex.odd, ex.t1_kn)) || iso(b.members[1], conjugate(ex.odd, ex.t1_kn)));
  EXPECT_THROW(restrict_semibrick({ex.k_g}, ex.n1), Error);
}

TEST(AveragedRetraction, IdentityAndTrivialIndex) {
  const auto& ex = s4a4::example();
  const ModuleMap id(ex.s2, ex.s2, identity(ex.field, 2));
  EXPECT_TRUE(averaged_retraction(id, identity(ex.field, 2), ex.g).matrix() == identity(ex.field, 2));
  // index 2 in characteristic 2
  EXPECT_THROW(averaged_retraction(id, identity(ex.field, 2), ex.n), Error);
  // N = G: a single term
  const auto [iota, pi] = split_pair(ex.s2, ex.k_g, ex.g, 0);
  EXPECT_TRUE(averaged_retraction(iota, pi, ex.g).matrix() == pi);
}

TEST(AveragedRetraction, PropertyCorpus) {
  // index 2 in characteristic 3 and index 6 in characteristic 5
  const std::vector<std::pair<Group, FieldSpec>> cases{{groups::alternating4(), gf_make(3, 1)},
                                                       {groups::klein4(), gf_make(5, 1)}};
  const Group s4 = groups::symmetric(4);
  for (const auto& [normal, f] : cases) {
    const auto corpus = corpus_for(s4, f, 12, 3);
    std::size_t nontrivial = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i)
      for (std::size_t j = 0; j < corpus.size(); ++j) {
        if (corpus[i].dim() + corpus[j].dim() > 4) continue;
        const auto [iota, pi] = split_pair(corpus[i], corpus[j], normal, i + j);
        const ModuleMap avg = averaged_retraction(iota, pi, normal);
        EXPECT_TRUE(intertwines(avg.source(), avg.target(), avg.matrix()));
        EXPECT_TRUE(Matrix(avg.matrix() * iota.matrix()) == identity(f, corpus[i].dim()));
        nontrivial += !(avg.matrix() == pi);
      }
    EXPECT_GT(nontrivial, 0u);
  }
}

TEST(AveragedRetraction, Errors) {
  const Group s4 = groups::symmetric(4);
  const FieldSpec f3 = gf_make(3, 1);
  const Module k = trivial_module(s4, f3);
  const auto [iota, pi] = split_pair(k, k, groups::klein4(), 0);
  try {
    averaged_retraction(iota, pi, groups::klein4());  // 3 divides the index 6
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IndexDivisibleByP);
  }
  Matrix not_retraction = pi;
  not_retraction(0, 0) = f3.zero();
  try {
    averaged_retraction(iota, not_retraction, groups::alternating4());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotARetraction);
  }
}

TEST(IndResSequence, Examples) {
  const auto& ex = s4a4::example();
  const IndResSequence s = lemma_indres_sequence(ex.s2, ex.n);
  EXPECT_TRUE(s.exact);
  EXPECT_EQ(s.left.dim(), 4 * s.m);
  EXPECT_EQ(s.middle.dim(), 4);
  EXPECT_EQ(s.right.dim(), 2);
  const IndResSequence k = lemma_indres_sequence(ex.k_g, ex.n);
  EXPECT_TRUE(k.exact);
  // the second map on k[G/N] (x) k is the augmentation
  ASSERT_EQ(k.second.rows(), 1);
  for (Index c = 0; c < k.second.cols(); ++c) EXPECT_TRUE(k.second(0, c).is_one());
  const IndResSequence deg = lemma_indres_sequence(ex.s2, ex.g);
  EXPECT_EQ(deg.m, 0);
  EXPECT_TRUE(deg.exact);
}
