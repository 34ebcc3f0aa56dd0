#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"

using namespace mv;

namespace {

const KostantPicture kMiddle(6, {{1, 3}, {2, 3}, {3, 5}, {4, 6}});
const KostantPicture kRight(6, {{1, 4}, {2, 4}, {2, 5}, {2, 6}, {5, 6}});

}  // namespace

TEST(Lattice, FixedPointInvariants) {
  auto Y = QLattice::fixed_point(Coweight{2, 0, -1});
  EXPECT_EQ(Y.delta(), Coweight({2, 0, -1}));
  EXPECT_EQ(Y.dim0(), 0);
  EXPECT_EQ(Y.relative_dimension(), 1);
  EXPECT_TRUE(picture_of(Y).empty());
  EXPECT_TRUE(Y.member(TermVector::monomial(-2, 1)));
  EXPECT_FALSE(Y.member(TermVector::monomial(-3, 1)));
  EXPECT_TRUE(Y.member(TermVector::monomial(1, 3)));
  EXPECT_FALSE(Y.member(TermVector::monomial(0, 3)));
}

TEST(Lattice, LeftExampleLattice) {
  auto Y = mvtest::lattice("left_lattice.json");
  EXPECT_EQ(Y.relative_dimension(), -3);
  EXPECT_EQ(Y.delta(), Coweight({2, 0, -2, 0, -1, -2}));
  EXPECT_EQ(Y.dim0(), 0);
  EXPECT_TRUE(picture_of(Y).empty());
  EXPECT_EQ(lambda_of(Y), Coweight({2, 0, -2, 0, -1, -2}));
  EXPECT_EQ(Y, QLattice::fixed_point(Y.delta()));
}

TEST(Lattice, MiddleExampleLattice) {
  auto Y = mvtest::lattice("middle_lattice.json");
  EXPECT_EQ(Y.relative_dimension(), -6);
  EXPECT_EQ(Y.delta(), Coweight({1, -2, -2, -3, -2, -2}));
  EXPECT_EQ(Y.dim0(), 4);
  EXPECT_EQ(picture_of(Y), kMiddle);
  EXPECT_EQ(lambda_of(Y), Coweight({2, -1, -1, -2, -2, -2}));
  EXPECT_EQ(d_I(Y, {1, 2, 3}), 2);
  EXPECT_EQ(d_I(Y, {4}), 0);
}

TEST(Lattice, RightExampleLattice) {
  auto Y = mvtest::lattice("right_lattice.json");
  EXPECT_EQ(Y.relative_dimension(), -9);
  EXPECT_EQ(Y.delta(), Coweight({-3, -3, -3, -3, -2, 0}));
  EXPECT_EQ(Y.dim0(), 5);
  EXPECT_EQ(picture_of(Y), kRight);
  EXPECT_EQ(lambda_of(Y), Coweight({-2, 0, -3, -3, -1, 0}));
}

TEST(Lattice, DeltaIsSharp) {
  for (const char* f : {"left_lattice.json", "middle_lattice.json", "right_lattice.json"}) {
    auto Y = mvtest::lattice(f);
    for (int i = 1; i <= 6; ++i) {
      EXPECT_TRUE(Y.member(TermVector::monomial(-Y.delta().at_column(i), i))) << f << " column " << i;
      EXPECT_FALSE(Y.member(TermVector::monomial(-Y.delta().at_column(i) - 1, i))) << f << " column " << i;
    }
  }
}

TEST(Lattice, MuByBothRoutes) {
  auto Y = mvtest::lattice("right_lattice.json");
  auto p = picture_of(Y);
  auto lam = lambda_of(Y);
  EXPECT_EQ(mu(Y, Permutation::identity(6)), lam);
  EXPECT_EQ(mu(Y, Permutation::longest(6)), lowest_vertex(p, lam));
  SubsetTable<Rational> table(Y);
  for (const auto& w : Permutation::all(6)) EXPECT_NO_THROW(mu(Y, w, table)) << w.str();
}

TEST(Lattice, OrbitPolytopeOfFixedPointIsAPoint) {
  auto P = orbit_polytope(QLattice::fixed_point(Coweight{1, -1, 3}));
  ASSERT_EQ(P.vertices.size(), 1u);
  EXPECT_EQ(P.vertices[0], Coweight({1, -1, 3}));
}

TEST(Lattice, MiddleLatticePolytopeDiffersFromCycle) {
  auto Y = mvtest::lattice("middle_lattice.json");
  EXPECT_EQ(verify::first_difference(orbit_polytope(Y), mv_polytope(kMiddle, lambda_of(Y))), "124635");
}

TEST(Lattice, RightLatticePolytopeDiffersFromCycle) {
  auto Y = mvtest::lattice("right_lattice.json");
  auto P = orbit_polytope(Y);
  auto Q = mv_polytope(kRight, lambda_of(Y));
  auto w = Permutation::parse("341256");
  EXPECT_NE(P.vertex_by_perm.at(w), Q.vertex_by_perm.at(w));
  EXPECT_NE(verify::first_difference(P, Q), "");
}

TEST(Lattice, DegenerationIsUnderlineMu) {
  auto Y = mvtest::lattice("right_lattice.json");
  for (const char* s : {"123456", "654321", "341256", "215634"}) {
    auto w = Permutation::parse(s);
    auto D = degenerate(Y, w);
    EXPECT_EQ(D, QLattice::fixed_point(mu(Y, w)));
  }
}

TEST(Lattice, ShiftTranslatesPolytope) {
  auto Y = mvtest::lattice("middle_lattice.json");
  Coweight m{1, -2, 0, 3, 0, -1};
  auto Z = Y.shift(m);
  EXPECT_EQ(Z.delta(), Y.delta() + m);
  EXPECT_EQ(picture_of(Z), picture_of(Y));
  EXPECT_EQ(orbit_polytope(Z), translate(orbit_polytope(Y), m));
}

TEST(Lattice, MultiplyByT) {
  auto Y = mvtest::lattice("middle_lattice.json");
  auto Z = Y.mul_t(2);
  EXPECT_EQ(Z.relative_dimension(), Y.relative_dimension() - 12);
  EXPECT_TRUE(Y.contains_lattice(Z));
  EXPECT_FALSE(Z.contains_lattice(Y));
  EXPECT_EQ(Z.mul_t(-2), Y);
}

TEST(Lattice, IntersectColumns) {
  auto Y = mvtest::lattice("middle_lattice.json");
  auto Z = Y.intersect_columns({1, 2, 3});
  EXPECT_EQ(Z.labels(), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(Z.dim0(), 2);
  EXPECT_THROW(Y.intersect_columns({7}), ColumnError);
}

TEST(Lattice, CollapseAtColumnFour) {
  auto Y = mvtest::lattice("right_lattice.json");
  auto C = collapse_lattice(Y, {4});
  EXPECT_EQ(C.n(), 5);
  EXPECT_TRUE(C.member(TermVector::monomial(1, 4) + TermVector::monomial(-1, 5)));
  EXPECT_TRUE(C.member(TermVector::monomial(2, 1) + TermVector::monomial(2, 2) - TermVector::monomial(1, 4)));
}

TEST(Lattice, SumAndIntersection) {
  auto A = QLattice::fixed_point(Coweight{1, 0});
  auto B = QLattice::fixed_point(Coweight{0, 1});
  EXPECT_EQ(sum(A, B), QLattice::fixed_point(Coweight{1, 1}));
  EXPECT_EQ(intersect(A, B), QLattice::fixed_point(Coweight{0, 0}));
}

TEST(Lattice, AutoWindowAndErrors) {
  auto v = mvtest::tv({{1, -2, 1}, {1, -1, 2}});
  auto Y = QLattice::from_generators(2, {v, TermVector::monomial(0, 1), TermVector::monomial(0, 2)});
  EXPECT_TRUE(Y.member(TermVector::monomial(-1, 1) + TermVector::monomial(0, 2)));
  EXPECT_TRUE(Y.member(TermVector::monomial(-1, 1)));
  EXPECT_FALSE(Y.member(TermVector::monomial(-2, 1)));
  EXPECT_EQ(Y.delta(), Coweight({1, 0}));
  // One vector spans a rank-one t-module, never a lattice.
  EXPECT_THROW(QLattice::from_generators(2, {v}), std::invalid_argument);
  EXPECT_EQ(picture_of(Y).size(), static_cast<std::size_t>(Y.dim0()));
  EXPECT_THROW(QLattice::from_generators(2, {}), std::invalid_argument);
  EXPECT_THROW(QLattice::from_generators(2, {TermVector::monomial(0, 3)}), ColumnError);
}

TEST(Lattice, ModularAgreesWithExact) {
  for (const char* f : {"middle_lattice.json", "right_lattice.json"}) {
    auto gens = mvtest::generators(f);
    auto Q = QLattice::from_generators(6, gens);
    auto M = Lattice<ModP>::from_generators(6, gens);
    EXPECT_EQ(Q.delta(), M.delta()) << f;
    EXPECT_EQ(Q.relative_dimension(), M.relative_dimension()) << f;
    EXPECT_EQ(picture_of(Q), picture_of(M)) << f;
    EXPECT_EQ(orbit_polytope(Q), orbit_polytope(M)) << f;
  }
}

TEST(Lattice, PictureMultiplicitiesMatchDimensions) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 30; ++t) {
    int n = 2 + static_cast<int>(rng() % 3);
    auto p = verify::random_picture(n, 6, rng);
    auto lam = verify::random_coweight(n, -2, 2, rng);
    auto Y = construct(p, lam, random_flag_point(p, rng));
    auto q = picture_of(Y);
    EXPECT_EQ(static_cast<int>(q.size()), Y.dim0());
    for (int l = 1; l <= n; ++l)
      for (int r = l + 1; r <= n; ++r) {
        std::vector<int> I;
        for (int c = l; c <= r; ++c) I.push_back(c);
        int inside = 0;
        for (const auto& L : q.loops()) inside += l <= L.left && L.right <= r;
        EXPECT_EQ(d_I(Y, I), inside);
      }
  }
}
