#include "helpers.hpp"

#include "modbrick/builtin.hpp"
#include "modbrick/smc.hpp"

#include <gtest/gtest.h>

using namespace modbrick;

TEST(K0, Matrices) {
  const auto& ex = s4a4::example();
  const auto simples = simples_of(ex.g, ex.field);
  EXPECT_EQ(k0_matrix({{ex.k_g, 0}, {ex.s2, 0}}, simples), (std::vector<std::vector<long>>{{1, 0}, {0, 1}}));
  EXPECT_EQ(k0_matrix({{ex.k_g, 0}, {ex.s2, 1}}, simples), (std::vector<std::vector<long>>{{1, 0}, {0, -1}}));
  EXPECT_EQ(k0_matrix({{ex.brick("kG_S2"), 0}}, simples), (std::vector<std::vector<long>>{{1, 1}}));
}

TEST(K0, DeterminantMatchesCofactorExpansion) {
  std::uint64_t state = 0xB41C;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    std::vector<std::vector<long>> a(n, std::vector<long>(n));
    for (auto& row : a)
      for (auto& x : row) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        x = static_cast<long>(state >> 60) - 8;
      }
    EXPECT_EQ(integer_determinant(a), testing_util::laplace_det(a));
  }
}

TEST(Smc, SimplesAndDegenerate) {
  const auto& ex = s4a4::example();
  const auto simples = check_two_term_smc({{ex.k_g, 0}, {ex.s2, 0}});
  EXPECT_TRUE(simples.passes());
  EXPECT_EQ(simples.k0_determinant, 1);
  const auto degenerate = check_two_term_smc({{ex.k_g, 0}, {ex.k_g, 1}});
  EXPECT_FALSE(degenerate.passes());
  EXPECT_FALSE(degenerate.hom_across);
}

TEST(Smc, RestrictSimples) {
  const auto& ex = s4a4::example();
  const RestrictedSmc r = restrict_smc({{ex.k_g, 0}, {ex.s2, 0}}, ex.n);
  EXPECT_EQ(r.items.size(), 3u);
  EXPECT_TRUE(r.certificate.passes());
  const RestrictedSmc same = restrict_smc({{ex.k_g, 0}, {ex.s2, 0}}, ex.g);
  EXPECT_EQ(same.items.size(), 2u);
  EXPECT_TRUE(same.certificate.passes());
}

TEST(Smc, NontrivialCollection) {
  const auto& ex = s4a4::example();
  const auto found = find_nontrivial_smc(ex.bricks, simples_of(ex.g, ex.field));
  ASSERT_TRUE(found);
  bool shifted = false, unshifted = false;
  for (const auto& it : *found) (it.shift ? shifted : unshifted) = true;
  EXPECT_TRUE(shifted && unshifted);
  EXPECT_TRUE(check_two_term_smc(*found).passes());
  const RestrictedSmc r = restrict_smc(*found, ex.n);
  EXPECT_TRUE(r.certificate.passes());
  EXPECT_EQ(r.certificate.k0.size(), 3u);
}
