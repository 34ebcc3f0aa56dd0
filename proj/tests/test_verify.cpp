#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace mv;

TEST(Verify, AllPicturesCountsMatchEnumeration) {
  // Pictures on 3 columns with len ≤ 2: {}, {12}, {23}, {12,12}, {12,23}, {23,23}, {13}.
  EXPECT_EQ(verify::all_pictures(3, 2).size(), 7u);
  for (const auto& p : verify::all_pictures(4, 4)) EXPECT_LE(p.length(), 4);
}

TEST(Verify, SmallSweepsPass) {
  EXPECT_TRUE(verify::sweep_commutativity(3, 4, 20, 1, 4, 6).passed());
  EXPECT_TRUE(verify::sweep_ancestry(3, 4, 20, 1, 4, 6).passed());
  EXPECT_TRUE(verify::sweep_kostant(4, 6).passed());
  EXPECT_TRUE(verify::sweep_round_trip(30, 2, 4, 6).passed());
  EXPECT_TRUE(verify::sweep_degeneration(5, 2, 3).passed());
  EXPECT_TRUE(verify::sweep_purity_random(5, 4, 6, 2).passed());
  EXPECT_TRUE(verify::sweep_hrep(KostantPicture(3, {{1, 3}, {2, 3}}), Coweight{1, 0, -1}, 2, 2).passed());
}

TEST(Verify, StrongMomentWithWitness) {
  auto Y = mvtest::lattice("right_lattice.json");
  auto p = picture_of(Y);
  auto rep = verify::sweep_strong_moment(p, lambda_of(Y), 3, 5, {{Y, p, lambda_of(Y)}});
  EXPECT_TRUE(rep.passed()) << rep.to_json().dump();
  EXPECT_EQ(rep.instances, 4u);
}

TEST(Verify, StrongMomentFlagsStrongWitness) {
  auto Y = mvtest::perturbed_right(1);
  auto p = picture_of(Y);
  auto rep = verify::sweep_strong_moment(p, lambda_of(Y), 0, 5, {{Y, p, lambda_of(Y)}});
  EXPECT_FALSE(rep.passed());
}

TEST(Verify, ShrinkKeepsOnlyTheCulprit) {
  KostantPicture p(5, {{1, 2}, {2, 4}, {1, 5}, {3, 5}});
  auto culprit = [](const KostantPicture& q) {
    for (const auto& L : q.loops())
      if (L.left == 2 && L.right == 4) return true;
    return false;
  };
  auto small = verify::shrink_picture(p, culprit);
  EXPECT_EQ(small, KostantPicture(5, {{2, 4}}));
}

TEST(Verify, RecordedFailureIsShrunk) {
  verify::Report rep("demo");
  KostantPicture p(4, {{1, 2}, {1, 3}, {2, 4}});
  verify::record_picture_failure(rep, p, [](const KostantPicture& q) -> std::string {
    return q.size() >= 2 ? "too many loops" : "";
  });
  ASSERT_EQ(rep.failures.size(), 1u);
  EXPECT_EQ(rep.failures[0]["picture"]["loops"].size(), 2u);
  EXPECT_EQ(rep.failures[0]["what"], "too many loops");
  EXPECT_TRUE(rep.failures[0].contains("original"));
  EXPECT_FALSE(rep.passed());
}

TEST(Verify, SeedsAreReproducible) {
  auto a = verify::detail::instance_rng(7, 3)();
  auto b = verify::detail::instance_rng(7, 3)();
  auto c = verify::detail::instance_rng(7, 4)();
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}
