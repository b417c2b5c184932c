#include "helpers.hpp"

#include "modbrick/builtin.hpp"
#include "modbrick/corpus.hpp"
#include "modbrick/error.hpp"
#include "modbrick/io.hpp"
#include "modbrick/smc.hpp"

#include <gtest/gtest.h>

using namespace modbrick;

TEST(Corpus, CyclicTwoGroupsMatchPartitionCounts) {
  // k C_{2^a} = k[x]/(x^{2^a}): modules of dim d are partitions of d into parts <= 2^a
  for (const auto& [group, order] : std::vector<std::pair<std::string, int>>{{"C2in4", 2}, {"C4", 4}}) {
    const auto& c = full_corpus(*builtin_group(group), gf_make(2, 1), 4).modules;
    int expected = 0;
    for (int d = 1; d <= 4; ++d) expected += testing_util::partitions(d, order);
    EXPECT_EQ(static_cast<int>(c.size()), expected) << "C" << order;
  }
}

TEST(Corpus, ClassesAreDistinct) {
  const auto& c = full_corpus(*builtin_group("C4"), gf_make(2, 1), 4).modules;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) EXPECT_FALSE(is_isomorphic(c[i], c[j]).has_value());
}

TEST(Corpus, SamplingIsSeededAndKeepsSimples) {
  const auto& ex = s4a4::example();
  Config a;
  const auto s1 = corpus_for(ex.n, ex.field, 20, 4, a);
  const auto s2 = corpus_for(ex.n, ex.field, 20, 4, a);
  ASSERT_EQ(s1.size(), 20u);
  for (std::size_t i = 0; i < s1.size(); ++i) EXPECT_EQ(s1[i].name(), s2[i].name());
  EXPECT_EQ(s1[0].dim(), 1);
  EXPECT_EQ(s1[1].dim(), 1);
  EXPECT_EQ(s1[2].dim(), 1);
}

TEST(Io, ModuleRoundTrip) {
  const auto& ex = s4a4::example();
  for (const auto& m : ex.bricks) {
    const Module back = module_from_json(Json::parse(module_to_json(m).dump()));
    EXPECT_TRUE(back.same_action(m));
    EXPECT_EQ(back.name(), m.name());
  }
  const Module short_form = module_from_json(module_to_json(ex.t1, false));
  EXPECT_TRUE(short_form.same_action(ex.t1));
}

TEST(Io, RejectsMalformedInput) {
  auto kind = [](const std::string& text) {
    try {
      module_from_json(Json::parse(text));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Indeterminate;
  };
  EXPECT_EQ(kind(R"({"field": {"p": 2, "n": 1}, "dim": 1, "action": {}})"), ErrorKind::ParseError);
  EXPECT_EQ(kind(R"({"field": {"p": 2, "n": 1}, "group": "Q8", "dim": 1, "action": {}})"), ErrorKind::ParseError);
  EXPECT_EQ(kind(R"({"field": {"p": 4, "n": 1}, "group": "C4", "dim": 1, "action": {}})"), ErrorKind::NotPrime);
  EXPECT_THROW(read_json_file("/nonexistent/module.json"), Error);
}

TEST(Io, GoldenFilesAreTheExample) {
  const auto& ex = s4a4::example();
  EXPECT_EQ(s4a4::golden_names().size(), 12u);
  EXPECT_EQ(ex.bricks.size(), 6u);
  for (const auto& [name, m] : s4a4::generate()) {
    const Module golden = module_from_json(Json::parse(s4a4::golden_texts().at(name + ".json")));
    EXPECT_TRUE(is_isomorphic(m, golden).has_value()) << name;
  }
}

TEST(Io, AbsoluteBricksOverGf16) {
  // End = GF(4) already; extending to GF(16) must not enlarge it
  const auto& ex = s4a4::example();
  const FieldEmbedding emb(ex.field, gf_make(2, 4));
  for (const auto& b : ex.bricks) {
    const Module big = extend_scalars(b, emb);
    EXPECT_EQ(hom_dim(big, big), 1) << b.name();
    EXPECT_TRUE(is_indecomposable(big)) << b.name();
  }
  EXPECT_EQ(simples_of(ex.n, gf_make(2, 4)).size(), 3u);
}

TEST(Io, PrettyJsonIsStable) {
  const Json j = Json::parse(R"({"b": [1, 2, 3], "a": {"x": [[1, 0], [0, 1]]}})");
  EXPECT_EQ(pretty_json(j), pretty_json(Json::parse(pretty_json(j))));
  EXPECT_NE(pretty_json(j).find("[1,2,3]"), std::string::npos);
}
