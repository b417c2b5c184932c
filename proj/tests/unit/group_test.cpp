#include "modbrick/error.hpp"
#include "modbrick/group.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace modbrick;

namespace {

/// Order by naive closure under composition.
std::size_t closure_order(const std::vector<Perm>& gens, int degree) {
  std::set<Perm> seen{perm_identity(degree)};
  std::vector<Perm> frontier{perm_identity(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Perm y = perm_compose(x, g);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace

TEST(Group, OrdersMatchClosure) {
  const Perm cyc{1, 2, 3, 0}, tr{1, 0, 2, 3};
  const Group s4 = group_from_generators(4, {{"a", cyc}, {"b", tr}});
  EXPECT_EQ(s4.order(), 24u);
  EXPECT_EQ(s4.order(), closure_order({cyc, tr}, 4));
  EXPECT_EQ(group_from_generators(1, {}).order(), 1u);
  const Group klein = group_from_generators(4, {{"a", {1, 0, 3, 2}}, {"b", {2, 3, 0, 1}}});
  EXPECT_EQ(klein.order(), 4u);
  EXPECT_EQ(groups::alternating4().order(), 12u);
  EXPECT_EQ(groups::dihedral(4).order(), 8u);
}

TEST(Group, ElementsClosedUnderProductAndInverse) {
  const Group g = groups::symmetric(4);
  for (std::size_t a = 0; a < g.order(); ++a) {
    EXPECT_TRUE(g.contains(perm_inverse(g.element(a))));
    for (std::size_t b = 0; b < g.order(); ++b)
      EXPECT_EQ(g.element(g.mul(a, b)), perm_compose(g.element(a), g.element(b)));
  }
  EXPECT_EQ(g.element(Group::identity()), perm_identity(4));
}

TEST(Group, Normality) {
  const Group s4 = groups::symmetric(4);
  EXPECT_TRUE(is_normal(s4, groups::alternating4()));
  EXPECT_TRUE(is_normal(s4, groups::klein4()));
  EXPECT_TRUE(is_normal(s4, s4));
  EXPECT_FALSE(is_normal(s4, subgroup(s4, {{"t", {1, 0, 2, 3}}})));
}

TEST(Group, Cosets) {
  const Group s4 = groups::symmetric(4);
  const CosetSystem a4 = coset_reps(s4, groups::alternating4());
  ASSERT_EQ(a4.index(), 2u);
  EXPECT_EQ(a4.rep(0), Group::identity());
  EXPECT_FALSE(groups::alternating4().contains(s4.element(a4.rep(1))));
  EXPECT_EQ(coset_reps(s4, s4).index(), 1u);
  const CosetSystem n1 = coset_reps(s4, groups::klein4());
  EXPECT_EQ(n1.index(), 6u);
  // representatives lie in distinct cosets
  std::set<std::size_t> cosets;
  for (auto r : n1.reps()) cosets.insert(n1.coset_of(r));
  EXPECT_EQ(cosets.size(), 6u);
}

TEST(Group, QuotientsAndPGroups) {
  const Group s4 = groups::symmetric(4);
  const Quotient qa = quotient_group(s4, groups::alternating4());
  EXPECT_EQ(qa.group.order(), 2u);
  EXPECT_TRUE(is_p_group(qa.group, 2));
  const Quotient qn = quotient_group(s4, groups::klein4());
  EXPECT_EQ(qn.group.order(), 6u);
  EXPECT_FALSE(is_p_group(qn.group, 2));
  EXPECT_EQ(quotient_group(s4, s4).group.order(), 1u);
  EXPECT_TRUE(is_p_power(8, 2));
  EXPECT_TRUE(is_p_power(1, 3));
  EXPECT_FALSE(is_p_power(6, 2));
}

TEST(Group, RejectsNonPermutations) {
  EXPECT_THROW(group_from_generators(3, {{"a", {0, 0, 1}}}), Error);
  EXPECT_THROW(subgroup(groups::alternating4(), {{"t", {1, 0, 2, 3}}}), Error);
}
