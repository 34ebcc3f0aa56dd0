#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <set>

#include "helpers.hpp"

using namespace mv;

TEST(Kostant, WeightOfSingleLoop) {
  EXPECT_EQ(picture_weight(KostantPicture(2, {{1, 2}})), RootCombination({1}));
}

TEST(Kostant, WeightOfSecondPicture) {
  KostantPicture p(6, {{2, 3}, {1, 3}, {3, 5}, {4, 6}});
  EXPECT_EQ(picture_weight(p), RootCombination({1, 2, 1, 2, 1}));
}

TEST(Kostant, PstarHeightIsLength) {
  auto p = mvtest::pstar();
  EXPECT_EQ(p.size(), 12u);
  EXPECT_EQ(p.length(), 27);
  EXPECT_EQ(picture_weight(p).height(), 27);
}

TEST(Kostant, SideCounts) {
  auto s = side_counts(mvtest::pstar());
  EXPECT_EQ(s.left, Coweight({4, 2, 3, 2, 1, 0}));
  EXPECT_EQ(s.right, Coweight({0, 1, 1, 3, 2, 5}));
  auto e = side_counts(KostantPicture(4));
  EXPECT_EQ(e.left, Coweight(std::size_t{4}));
  EXPECT_EQ(e.right, Coweight(std::size_t{4}));
  auto t = side_counts(KostantPicture(3, {{1, 3}}));
  EXPECT_EQ(t.left, Coweight({1, 0, 0}));
  EXPECT_EQ(t.right, Coweight({0, 0, 1}));
}

TEST(Kostant, LoopValidation) {
  EXPECT_THROW(KostantPicture(3, {{2, 2}}), std::invalid_argument);
  EXPECT_THROW(KostantPicture(3, {{1, 4}}), std::invalid_argument);
  EXPECT_THROW(KostantPicture::from_loops(3, {Loop{1, 2, 1}}), std::invalid_argument);
  EXPECT_NO_THROW(KostantPicture::from_loops(3, {Loop{1, 2, 1}, Loop{1, 2, 0}}));
}

TEST(Kostant, CopyOrderFromListOrder) {
  KostantPicture p(4, {{1, 3}, {2, 4}, {1, 3}});
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p.loops()[0], (Loop{1, 3, 0}));
  EXPECT_EQ(p.loops()[1], (Loop{1, 3, 1}));
  EXPECT_TRUE(encircles(p.loops()[1], p.loops()[0]));
  EXPECT_FALSE(encircles(p.loops()[0], p.loops()[1]));
}

TEST(Kostant, LevelsOfPstarAtColumnThree) {
  auto lv = levels_through_column(mvtest::pstar(), 3);
  // Frozen from tests/oracles/frozen.json, key pstar_levels_col3.
  std::vector<std::vector<std::pair<int, int>>> want{
      {{1, 3}, {3, 4}}, {{3, 4}}, {{1, 4}, {2, 5}, {3, 6}}, {{1, 5}, {2, 6}}};
  ASSERT_EQ(lv.size(), want.size());
  for (std::size_t k = 0; k < lv.size(); ++k) {
    ASSERT_EQ(lv[k].size(), want[k].size());
    for (std::size_t m = 0; m < lv[k].size(); ++m)
      EXPECT_EQ(std::make_pair(lv[k][m].left, lv[k][m].right), want[k][m]);
  }
  EXPECT_EQ(lv[0][1].copy, 0);
  EXPECT_EQ(lv[1][0].copy, 1);
}

TEST(Kostant, LevelsSimpleCases) {
  auto lv = levels_through_column(KostantPicture(3, {{1, 3}}), 2);
  ASSERT_EQ(lv.size(), 1u);
  EXPECT_EQ(lv[0].size(), 1u);
  EXPECT_TRUE(levels_through_column(KostantPicture(4, {{1, 2}}), 4).empty());
  EXPECT_THROW(levels_through_column(KostantPicture(4), 5), std::out_of_range);
}

TEST(Kostant, LevelsPartitionLoopsThroughColumn) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    int n = 2 + static_cast<int>(rng() % 5);
    auto p = verify::random_picture(n, 10, rng);
    for (int i = 1; i <= n; ++i) {
      std::size_t through = 0;
      for (const auto& L : p.loops()) through += L.passes_through(i);
      std::size_t seen = 0;
      for (const auto& level : levels_through_column(p, i)) {
        seen += level.size();
        for (std::size_t a = 0; a < level.size(); ++a) {
          EXPECT_TRUE(level[a].passes_through(i));
          for (std::size_t b = a + 1; b < level.size(); ++b) {
            EXPECT_LT(level[a].left, level[b].left);
            EXPECT_LT(level[a].right, level[b].right);
          }
        }
      }
      EXPECT_EQ(seen, through);
    }
  }
}

TEST(Kostant, EnumerateSmall) {
  auto a = enumerate_pictures(3, RootCombination({1, 1}));
  ASSERT_EQ(a.size(), 2u);
  std::set<KostantPicture> got(a.begin(), a.end());
  EXPECT_TRUE(got.count(KostantPicture(3, {{1, 2}, {2, 3}})));
  EXPECT_TRUE(got.count(KostantPicture(3, {{1, 3}})));
  EXPECT_EQ(enumerate_pictures(3, RootCombination({2, 2})).size(), 3u);
  auto z = enumerate_pictures(4, RootCombination({0, 0, 0}));
  ASSERT_EQ(z.size(), 1u);
  EXPECT_TRUE(z[0].empty());
  EXPECT_TRUE(enumerate_pictures(3, RootCombination({-1, 1})).empty());
}

TEST(Kostant, CountsFromRecursion) {
  EXPECT_EQ(kostant_count(3, RootCombination({1, 1})), 2u);
  EXPECT_EQ(kostant_count(4, RootCombination({1, 1, 1})), 4u);
  EXPECT_EQ(kostant_count(5, RootCombination({0, 0, 0, 0})), 1u);
}

TEST(Kostant, CountsMatchBruteForceOracle) {
  std::ifstream in(std::string(MV_ORACLE_DIR) + "/frozen.json");
  auto frozen = io::json::parse(in);
  std::size_t checked = 0;
  for (const auto& [key, value] : frozen.at("kostant_counts").items()) {
    auto slash = key.find('/');
    int n = std::stoi(key.substr(slash + 1));
    std::vector<int> w;
    std::string coeffs = key.substr(0, slash);
    for (std::size_t pos = 0; pos < coeffs.size();) {
      auto q = coeffs.find(',', pos);
      if (q == std::string::npos) q = coeffs.size();
      w.push_back(std::stoi(coeffs.substr(pos, q - pos)));
      pos = q + 1;
    }
    RootCombination weight(w);
    EXPECT_EQ(kostant_count(n, weight), value.get<std::uint64_t>()) << key;
    EXPECT_EQ(enumerate_pictures(n, weight).size(), value.get<std::uint64_t>()) << key;
    ++checked;
  }
  EXPECT_GT(checked, 100u);
}

TEST(Kostant, EnumerationIsCanonicalAndDistinct) {
  for (int n = 2; n <= 5; ++n) {
    std::vector<int> w(static_cast<std::size_t>(n - 1), 2);
    auto pics = enumerate_pictures(n, RootCombination(w));
    std::set<KostantPicture> distinct(pics.begin(), pics.end());
    EXPECT_EQ(distinct.size(), pics.size());
    for (const auto& p : pics) {
      EXPECT_EQ(picture_weight(p), RootCombination(w));
      EXPECT_EQ(KostantPicture(p.n(), p.intervals()), p);
    }
  }
}

TEST(Kostant, RootCombinationCoweightRoundTrip) {
  RootCombination r({2, 0, 3});
  EXPECT_EQ(r.as_coweight(), Coweight({2, -2, 3, -3}));
  EXPECT_EQ(RootCombination::from_coweight(r.as_coweight()), r);
  EXPECT_THROW(RootCombination::from_coweight(Coweight({1, 0})), std::invalid_argument);
}

TEST(Kostant, CoweightBasics) {
  Coweight a{1, -1, 0};
  EXPECT_TRUE(a.is_sl());
  EXPECT_FALSE(Coweight({1, 0}).is_sl());
  EXPECT_EQ(a + Coweight({1, 1, 1}), Coweight({2, 0, 1}));
  EXPECT_EQ(a.str(), "(1,-1,0)");
}
