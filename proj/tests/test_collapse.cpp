#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"

using namespace mv;

namespace {

std::vector<std::pair<int, int>> sorted_intervals(const KostantPicture& p) { return p.intervals(); }

}  // namespace

TEST(Collapse, PstarAtColumnThree) {
  auto r = collapse_column(mvtest::pstar(), 3);
  EXPECT_EQ(r.removed, 4);
  EXPECT_EQ(r.picture.n(), 5);
  std::vector<std::pair<int, int>> want{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 5}, {3, 5}, {4, 5}};
  EXPECT_EQ(sorted_intervals(r.picture), want);
  // Survivors [1,2] and [4,6],[4,6],[5,6] plus joins from three of the four levels.
  EXPECT_EQ(r.survivors.size() + r.joins.size(), r.picture.size());
}

TEST(Collapse, PstarAlongThreeThenFour) {
  auto tr = collapse_sequence(mvtest::pstar(), {3, 4});
  std::vector<std::pair<int, int>> want{{1, 2}, {1, 4}, {1, 4}, {3, 4}};
  EXPECT_EQ(tr.result().intervals(), want);
  EXPECT_EQ(tr.offsets, (std::vector<int>{0, 1}));
  EXPECT_EQ(tr.steps[1].column, 3);
}

TEST(Collapse, RemovedCountsAlongFullOrder) {
  auto tr = collapse_sequence(mvtest::pstar(), {3, 4, 6, 5, 1, 2});
  EXPECT_EQ(tr.removed_counts(), (std::vector<int>{4, 4, 3, 0, 1, 0}));
  EXPECT_EQ(tr.offsets, (std::vector<int>{0, 1, 2, 2, 0, 1}));
  EXPECT_TRUE(tr.result().empty());
}

TEST(Collapse, TwoCrossingLoops) {
  KostantPicture p(4, {{1, 3}, {2, 4}});
  auto r = collapse_column(p, 2);
  EXPECT_EQ(r.removed, 1);
  EXPECT_EQ(r.picture.intervals(), (std::vector<std::pair<int, int>>{{1, 3}}));
  ASSERT_EQ(r.joins.size(), 1u);
  EXPECT_EQ(r.joins[0].left_parent, (Loop{1, 3, 0}));
  EXPECT_EQ(r.joins[0].right_parent, (Loop{2, 4, 0}));
}

TEST(Collapse, ColumnWithNoLoops) {
  KostantPicture p(4, {{1, 2}, {3, 4}});
  auto r = collapse_column(p, 3);
  EXPECT_EQ(r.removed, 1);
  EXPECT_EQ(r.picture.intervals(), (std::vector<std::pair<int, int>>{{1, 2}}));
  auto e = collapse_column(KostantPicture(3), 2);
  EXPECT_EQ(e.removed, 0);
  EXPECT_EQ(e.picture, KostantPicture(2));
}

TEST(Collapse, OrderValidation) {
  EXPECT_THROW(collapse_sequence(mvtest::pstar(), {3, 3}), std::invalid_argument);
  EXPECT_THROW(collapse_sequence(mvtest::pstar(), {7}), std::out_of_range);
  EXPECT_THROW(collapse_column(KostantPicture(1), 1), std::invalid_argument);
}

TEST(Collapse, RemovedCountsSumToLoopCount) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + static_cast<int>(rng() % 5);
    auto p = verify::random_picture(n, 10, rng);
    auto w = Permutation::all(n)[rng() % Permutation::all(n).size()];
    auto counts = collapse_sequence(p, w.one_line()).removed_counts();
    int total = 0;
    for (int c : counts) total += c;
    EXPECT_EQ(total, static_cast<int>(p.size())) << p.str() << " w=" << w.str();
  }
}

TEST(Collapse, CommutesOnAllSmallPictures) {
  for (int n = 2; n <= 4; ++n)
    for (const auto& p : verify::all_pictures(n, 5)) {
      auto bad = verify_commutativity(p);
      EXPECT_TRUE(bad.empty()) << p.str() << ": " << (bad.empty() ? "" : bad[0].what);
    }
}

TEST(Collapse, CommutesForPstar) { EXPECT_TRUE(verify_commutativity(mvtest::pstar()).empty()); }

TEST(Ancestry, CrossingPairJoinsBothLoops) {
  KostantPicture p(4, {{1, 3}, {2, 4}});
  auto a = ancestry(p, {2});
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].ancestors, (std::vector<std::size_t>{0, 1}));
  ASSERT_EQ(a[0].components.size(), 2u);
  EXPECT_EQ(a[0].components[0], (Loop{1, 3, 0}));
  EXPECT_EQ(a[0].components[1], (Loop{2, 4, 0}));
  EXPECT_TRUE(verify_ancestry_claims(p, {2}).empty());
}

TEST(Ancestry, PstarColumnThree) {
  auto p = mvtest::pstar();
  auto a = ancestry(p, {3});
  ASSERT_EQ(a.size(), 8u);
  // [1,2] survives unchanged; [1,3] is the join of [1,3] with the inner [3,4].
  EXPECT_EQ(a[0].loop, (Loop{1, 2, 0}));
  EXPECT_EQ(a[0].ancestors, (std::vector<std::size_t>{p.index_of(Loop{1, 2, 0})}));
  EXPECT_EQ(a[1].loop, (Loop{1, 3, 0}));
  ASSERT_EQ(a[1].components.size(), 2u);
  EXPECT_EQ(a[1].components[0], (Loop{1, 3, 0}));
  EXPECT_EQ(a[1].components[1], (Loop{3, 4, 0}));
  EXPECT_TRUE(verify_ancestry_claims(p, {3}).empty());
}

TEST(Ancestry, JoinsHoldOnSmallPictures) {
  for (int n = 2; n <= 4; ++n)
    for (const auto& p : verify::all_pictures(n, 5))
      for (const auto& w : Permutation::all(n)) {
        auto order = w.one_line();
        for (std::size_t len = 1; len <= order.size(); ++len) {
          std::vector<int> prefix(order.begin(), order.begin() + static_cast<long>(len));
          auto bad = verify_ancestry_claims(p, prefix);
          EXPECT_TRUE(bad.empty()) << p.str() << ": " << (bad.empty() ? "" : bad[0].what);
        }
      }
}
