#include "helpers.hpp"

#include "modbrick/builtin.hpp"
#include "modbrick/error.hpp"
#include "modbrick/linalg.hpp"

#include <gtest/gtest.h>

using namespace modbrick;
using testing_util::mat;

namespace {

bool iso(const Module& a, const Module& b) { return is_isomorphic(a, b).has_value(); }

}  // namespace

TEST(Module, TrivialAndFree) {
  const auto& ex = s4a4::example();
  EXPECT_EQ(trivial_module(ex.g, ex.field).dim(), 1);
  EXPECT_EQ(trivial_module(groups::trivial(), gf_make(2, 1)).dim(), 1);
  EXPECT_EQ(free_module(groups::symmetric(4), gf_make(2, 1), 1).dim(), 24);
  EXPECT_EQ(direct_sum(ex.g, ex.field, {}).dim(), 0);
  EXPECT_TRUE(restrict(trivial_module(ex.g, ex.field), ex.n).same_action(trivial_module(ex.n, ex.field)));
}

TEST(Module, RejectsNonHomomorphisms) {
  const FieldSpec f = gf_make(2, 1);
  const Matrix a = mat(f, 2, 2, {1, 1, 0, 1});
  const Group s4 = group_from_generators(4, {{"r", {1, 2, 3, 0}}, {"t", {1, 0, 2, 3}}});
  try {
    module_make(s4, f, 2, {identity(f, 2), a});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAHomomorphism);
  }
  // <(0 1)(2 3), (0 1 2 3)> is D4 and this assignment factors through D4 / <r>
  const Group d4 = group_from_generators(4, {{"s", {1, 0, 3, 2}}, {"r", {1, 2, 3, 0}}});
  EXPECT_NO_THROW(module_make(d4, f, 2, {a, identity(f, 2)}));
  EXPECT_THROW(module_make(d4, f, 2, {zeros(f, 2, 2), identity(f, 2)}), Error);
}

TEST(Module, RestrictionsFromTheExample) {
  const auto& ex = s4a4::example();
  EXPECT_TRUE(iso(restrict(ex.k_g, ex.n), ex.k_n));
  EXPECT_TRUE(restrict(ex.s2, ex.g).same_action(ex.s2));
  EXPECT_TRUE(iso(restrict(ex.s2, ex.n), direct_sum(ex.n, ex.field, {ex.t1, ex.t2})));
}

TEST(Module, InductionDimensions) {
  const auto& ex = s4a4::example();
  EXPECT_EQ(induce(ex.k_n, ex.g).dim(), 2);
  EXPECT_TRUE(iso(induce(ex.k_n, ex.g), perm_module(ex.g, ex.n, ex.field)));
  EXPECT_TRUE(induce(ex.s2, ex.g).same_action(ex.s2));
  EXPECT_EQ(induce(trivial_module(ex.n1, ex.field), ex.g).dim(), 6);
}

TEST(Module, TensorAndPermutationModule) {
  const auto& ex = s4a4::example();
  EXPECT_TRUE(iso(tensor(ex.k_g, ex.s2), ex.s2));
  const Module perm = perm_module(ex.g, ex.n, ex.field);
  EXPECT_EQ(perm.dim(), 2);
  EXPECT_TRUE(iso(tensor(perm, ex.s2), induce(restrict(ex.s2, ex.n), ex.g)));
  EXPECT_TRUE(iso(restrict(perm, ex.n), direct_sum(ex.n, ex.field, {ex.k_n, ex.k_n})));
  EXPECT_TRUE(iso(perm_module(ex.g, ex.g, ex.field), ex.k_g));
  EXPECT_EQ(tensor(ex.brick("kG_S2"), ex.s2).dim(), 6);
}

TEST(Module, Conjugation) {
  const auto& ex = s4a4::example();
  EXPECT_TRUE(conjugate(perm_identity(4), ex.t1).same_action(ex.t1));
  EXPECT_TRUE(iso(conjugate(ex.odd, ex.t1), ex.t2));
  EXPECT_FALSE(iso(ex.t1, ex.t2));
  const Module u = ex.t1_kn;
  EXPECT_TRUE(iso(conjugate(ex.odd, conjugate(perm_inverse(ex.odd), u)), u));
}

TEST(Module, ScalarExtensionKeepsTheAction) {
  const auto& ex = s4a4::example();
  const FieldEmbedding emb(ex.field, gf_make(2, 4));
  const Module big = extend_scalars(ex.s2, emb);
  EXPECT_EQ(big.dim(), 2);
  EXPECT_EQ(big.field(), gf_make(2, 4));
  EXPECT_TRUE(is_simple(big));
}
