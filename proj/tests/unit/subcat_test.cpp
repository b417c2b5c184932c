#include "modbrick/builtin.hpp"
#include "modbrick/corpus.hpp"
#include "modbrick/error.hpp"
#include "modbrick/subcat.hpp"

#include <gtest/gtest.h>

using namespace modbrick;
using P = SubcatPredicate;

namespace {

const s4a4::Example& ex() { return s4a4::example(); }

std::vector<Module> corpus_n() { return corpus_for(ex().n, ex().field, 48, 3); }
std::vector<Module> corpus_g() { return corpus_for(ex().g, ex().field, 48, 4); }

}  // namespace

TEST(Subcat, LeafExamples) {
  const Module x = ex().kn_t2;
  EXPECT_TRUE(P::fac(ex().n, ex().field, {x}).contains(x));
  EXPECT_TRUE(P::ind_inverse(ex().n, P::filt(ex().g, ex().field, {ex().k_g})).contains(ex().k_n));
  EXPECT_TRUE(P::perp_right(P::filt(ex().g, ex().field, {ex().k_g})).contains(ex().s2));
  EXPECT_FALSE(P::perp_right(P::filt(ex().g, ex().field, {ex().k_g})).contains(ex().k_g));
  EXPECT_TRUE(P::all(ex().n, ex().field).contains(ex().t1));
  EXPECT_TRUE(P::filt(ex().n, ex().field, {ex().t1}).contains(zero_module(ex().n, ex().field)));
  // kN_T2 has top kN and socle T2
  EXPECT_TRUE(P::fac(ex().n, ex().field, {ex().kn_t2}).contains(ex().k_n));
  EXPECT_FALSE(P::fac(ex().n, ex().field, {ex().kn_t2}).contains(ex().t2));
}

TEST(Subcat, TorsionClosureAgreesWithDoublePerpendicular) {
  // T(C) = perp(C perp); the complete corpus up to dim 3 holds every torsion-free witness needed
  const auto& all = full_corpus(ex().n, ex().field, 3).modules;
  for (const auto& gens : std::vector<std::vector<Module>>{{ex().t1}, {ex().t1, ex().t2}, {ex().kn_t2}, {ex().k_n}}) {
    const P t = P::tclose(ex().n, ex().field, gens);
    std::vector<Module> torsion_free;
    for (const auto& y : all) {
      bool perp = true;
      for (const auto& g : gens) perp = perp && hom_dim(g, y) == 0;
      if (perp) torsion_free.push_back(y);
    }
    for (const auto& x : all) {
      bool oracle = true;
      for (const auto& y : torsion_free) oracle = oracle && hom_dim(x, y) == 0;
      EXPECT_EQ(t.contains(x), oracle) << t.describe() << " " << x.name();
    }
  }
}

TEST(Subcat, StarProduct) {
  // Filt{kN} * Filt{T1,T2}: submodule built from kN, quotient from T1 and T2
  const P star = P::star(P::filt(ex().n, ex().field, {ex().k_n}), P::filt(ex().n, ex().field, {ex().t1, ex().t2}));
  EXPECT_TRUE(star.contains(ex().t1_kn));
  EXPECT_FALSE(star.contains(ex().kn_t2));
  EXPECT_TRUE(star.contains(direct_sum(ex().n, ex().field, {ex().k_n, ex().t2})));
}

TEST(Subcat, PredicateJson) {
  const Json j = Json::parse(R"({"op": "resinv", "group": "S4", "args": [{"op": "filt", "args": ["T1", "T2"]}]})");
  const P p = predicate_from_json(j);
  EXPECT_EQ(p.kind(), P::Kind::ResInv);
  EXPECT_TRUE(p.contains(ex().s2));
  EXPECT_FALSE(p.contains(ex().k_g));
  const P perp = predicate_from_json(Json::parse(R"({"op": "perpR", "args": ["kN"]})"));
  EXPECT_TRUE(perp.contains(ex().t1));
  EXPECT_THROW(predicate_from_json(Json::parse(R"({"op": "nope", "args": []})")), Error);
  EXPECT_THROW(predicate_from_json(Json::parse(R"({"args": []})")), Error);
  EXPECT_THROW(predicate_from_json(Json::parse(R"({"op": "filt", "args": ["no_such_module"]})")), Error);
}

TEST(Subcat, GInvariance) {
  EXPECT_EQ(predicate_is_G_invariant(P::filt(ex().n, ex().field, {ex().k_n}), ex().g), true);
  EXPECT_EQ(predicate_is_G_invariant(P::filt(ex().n, ex().field, {ex().t1}), ex().g), false);
  EXPECT_EQ(predicate_is_G_invariant(P::filt(ex().n, ex().field, {ex().t1, ex().t2}), ex().g), true);
  EXPECT_FALSE(predicate_is_G_invariant(P::perp_right(P::filt(ex().n, ex().field, {ex().t1})), ex().g).has_value());
}

TEST(Identities, Roundtrips) {
  const auto all_n = check_roundtrips(P::filt(ex().n, ex().field, {ex().k_n, ex().t1, ex().t2}),
                                      P::filt(ex().g, ex().field, {ex().k_g, ex().s2}), corpus_n(), corpus_g());
  for (const auto& c : all_n) EXPECT_TRUE(c.holds()) << c.name;
  const auto broken = check_roundtrips(P::filt(ex().n, ex().field, {ex().t1}), P::filt(ex().g, ex().field, {ex().k_g}),
                                       corpus_n(), corpus_g());
  EXPECT_FALSE(broken[0].holds());
  EXPECT_EQ(broken[0].hypothesis, false);
}

TEST(Identities, HeartTransport) {
  const P all = P::all(ex().n, ex().field);
  const auto same = check_heart_transport(all, all, ex().g, corpus_g());
  for (const auto& c : same) EXPECT_TRUE(c.holds());
  const auto torsion = check_heart_transport(P::tclose(ex().n, ex().field, {ex().t1, ex().t2}), all, ex().g, corpus_g());
  for (const auto& c : torsion) EXPECT_TRUE(c.holds());
}

TEST(Identities, FacInd) {
  EXPECT_TRUE(check_fac_ind(zero_module(ex().n, ex().field), ex().g, corpus_g()).holds());
  EXPECT_TRUE(check_fac_ind(restrict(ex().s2, ex().n), ex().g, corpus_g()).holds());
  EXPECT_TRUE(
      check_fac_ind(direct_sum(ex().n, ex().field, {ex().k_n, free_module(ex().n, ex().field, 1)}), ex().g, corpus_g())
          .holds());
  try {
    check_fac_ind(ex().t1, ex().g, corpus_g());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotGInvariantModule);
  }
}

TEST(Identities, GInvariantClosuresAndSquare) {
  const auto closures = check_ginv_closures(P::filt(ex().n, ex().field, {ex().k_n}),
                                            P::filt(ex().n, ex().field, {ex().t1, ex().t2}), ex().g, corpus_n());
  EXPECT_EQ(closures.size(), 7u);
  for (const auto& c : closures) EXPECT_TRUE(c.holds()) << c.name;
  for (const auto& s : std::vector<std::vector<Module>>{{ex().k_g}, {ex().k_g, ex().s2}, {ex().brick("S2_kG_kG")}})
    EXPECT_TRUE(check_sbrick_square(s, ex().n, corpus_n()).holds());
}
