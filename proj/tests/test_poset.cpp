#include <gtest/gtest.h>

#include "oracles.hpp"
#include "twinned/errors.hpp"
#include "twinned/poset.hpp"

using namespace twinned;

namespace {

const char* kP = "5; 1<3 2<3 2<4 3<5 4<5";
const char* kQ = "5; 4<3 3<2 2<1 4<5";

}  // namespace

TEST(Poset, ParseSingleton) {
  const Poset p = parse_poset("1;");
  EXPECT_EQ(p.size(), 1);
  EXPECT_FALSE(p.less(0, 0));
}

TEST(Poset, ParseCycleNamesIt) {
  try {
    parse_poset("3; 1<2 2<3 3<1");
    FAIL() << "cycle accepted";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("cycle"), std::string::npos);
  }
}

TEST(Poset, ParseRejectsGarbage) {
  EXPECT_THROW(parse_poset("3 1<2"), InputError);
  EXPECT_THROW(parse_poset("3; 1<4"), InputError);
  EXPECT_THROW(parse_poset("3; 2<2"), InputError);
  EXPECT_THROW(parse_poset("0;"), InputError);
}

TEST(Poset, ClosureIsTransitive) {
  const Poset p = parse_poset("4; 1<2 2<3 3<4");
  EXPECT_TRUE(p.less(0, 3));
  EXPECT_FALSE(p.less(3, 0));
  EXPECT_EQ(serialize_poset(p), "4; 1<2 2<3 3<4");
}

TEST(Poset, SerializeListsCoversOnly) {
  EXPECT_EQ(serialize_poset(parse_poset("3; 1<2 2<3 1<3")), "3; 1<2 2<3");
  EXPECT_EQ(serialize_poset(parse_poset("2;")), "2;");
}

TEST(Ideals, AntichainHasAllSubsets) {
  EXPECT_EQ(enumerate_ideals(Poset::antichain(3)).size(), 8u);
}

TEST(Ideals, ChainPrefixes) {
  const auto fam = enumerate_ideals(Poset::chain(3));
  EXPECT_EQ(fam.ideals, (std::vector<Mask>{0b000, 0b001, 0b011, 0b111}));
}

TEST(Ideals, MatchSubsetFilterOnCounterexample) {
  const Poset p = parse_poset(kP);
  auto expected = oracle::ideals_by_filter(p);
  auto got = enumerate_ideals(p).ideals;
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, expected);
}

TEST(Ideals, CanonicalOrder) {
  const auto fam = enumerate_ideals(Poset::antichain(3));
  for (std::size_t k = 1; k < fam.size(); ++k) EXPECT_TRUE(canonical_less(fam.ideals[k - 1], fam.ideals[k]));
  EXPECT_EQ(fam.ideals[4], 0b011u);  // {1,2} before {1,3}
  EXPECT_EQ(fam.ideals[5], 0b101u);
}

TEST(LinearExtension, Chain) {
  const Poset c = Poset::chain(3);
  const std::vector<int> id{0, 1, 2}, swapped{1, 0, 2};
  EXPECT_TRUE(is_linear_extension(c, id));
  EXPECT_FALSE(is_linear_extension(c, swapped));
}

TEST(LinearExtension, CounterexamplePosetAgainstEnumeration) {
  const Poset p = parse_poset(kP);
  const std::vector<int> perm{1, 0, 2, 3, 4};
  const auto all = oracle::linear_extensions(p);
  EXPECT_NE(std::find(all.begin(), all.end(), perm), all.end());
  EXPECT_TRUE(is_linear_extension(p, perm));
  for (const auto& e : all) EXPECT_TRUE(is_linear_extension(p, e));
}

TEST(CommonExtension, SimpleCases) {
  EXPECT_EQ(common_linear_extension(Poset::chain(3), Poset::chain(3)), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(common_linear_extension(Poset::chain(4), Poset::antichain(4)), (std::vector<int>{0, 1, 2, 3}));
}

TEST(CommonExtension, CounterexampleHasCycle) {
  const Poset p = parse_poset(kP), q = parse_poset(kQ);
  EXPECT_FALSE(common_linear_extension(p, q));
  const auto cycle = union_cycle(p, q);
  ASSERT_GE(cycle.size(), 3u);
  EXPECT_EQ(cycle.front(), cycle.back());
  for (std::size_t k = 1; k < cycle.size(); ++k)
    EXPECT_TRUE(p.less(cycle[k - 1], cycle[k]) || q.less(cycle[k - 1], cycle[k]));
  EXPECT_FALSE(oracle::has_common_extension(p, q));
}

TEST(CommonExtension, SizeMismatchThrows) {
  EXPECT_THROW(common_linear_extension(Poset::chain(2), Poset::chain(3)), InputError);
}

TEST(CommonExtension, ExhaustiveD3AgainstPermutations) {
  const auto all = oracle::all_posets(3);
  EXPECT_EQ(all.size(), 19u);
  for (const auto& p : all)
    for (const auto& q : all) {
      const auto ext = common_linear_extension(p, q);
      EXPECT_EQ(ext.has_value(), oracle::has_common_extension(p, q));
      if (ext) {
        EXPECT_TRUE(is_linear_extension(p, *ext));
        EXPECT_TRUE(is_linear_extension(q, *ext));
      } else {
        EXPECT_FALSE(union_cycle(p, q).empty());
      }
    }
}

TEST(Relabel, ExtensionBecomesIdentity) {
  const Poset p = parse_poset("3; 3<1 3<2"), q = parse_poset("3; 2<1");
  const auto ext = common_linear_extension(p, q);
  ASSERT_TRUE(ext);
  const std::vector<int> id{0, 1, 2};
  EXPECT_TRUE(is_linear_extension(p.relabel(*ext), id));
  EXPECT_TRUE(is_linear_extension(q.relabel(*ext), id));
}

TEST(RandomPoset, ExtremeProbabilities) {
  EXPECT_EQ(random_poset(5, 0, 1, 3), Poset::antichain(5));
  EXPECT_EQ(random_poset(5, 1, 1, 3), Poset::chain(5));
  EXPECT_THROW(random_poset(3, 2, 1, 0), InputError);
}

TEST(RandomPoset, SeededIsValidAndDeterministic) {
  const Poset p = random_poset(5, 1, 2, 42);
  EXPECT_EQ(p, random_poset(5, 1, 2, 42));
  for (int i = 0; i < 5; ++i) {
    EXPECT_FALSE(p.less(i, i));
    for (int j = 0; j < 5; ++j) {
      if (p.less(i, j)) EXPECT_FALSE(p.less(j, i));
      for (int k = 0; k < 5; ++k)
        if (p.less(i, j) && p.less(j, k)) EXPECT_TRUE(p.less(i, k));
    }
  }
}

TEST(RandomPair, CompatiblePairsShareAnExtension) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto [p, q] = random_compatible_pair(5, 1, 2, seed);
    EXPECT_TRUE(common_linear_extension(p, q));
  }
}

TEST(RandomPair, SomePairsHaveNoExtension) {
  int without = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto [p, q] = random_pair(5, 1, 2, seed);
    if (!common_linear_extension(p, q)) ++without;
  }
  EXPECT_GT(without, 0);
  EXPECT_LT(without, 50);
}
