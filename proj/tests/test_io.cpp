#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"

using namespace mv;
using io::json;

TEST(Io, RationalEncoding) {
  EXPECT_EQ(io::to_json(Rational(-3, 4)).dump(), "[-3,4]");
  EXPECT_EQ(io::rational_from_json(json::parse("[6,-4]")), Rational(-3, 2));
  EXPECT_EQ(io::rational_from_json(json::parse("5")), Rational(5));
  mpz_class big("123456789012345678901234567890");
  Rational q(big, 11);
  q.canonicalize();
  auto j = io::to_json(q);
  EXPECT_TRUE(j[0].is_string());
  EXPECT_EQ(io::rational_from_json(j), q);
  EXPECT_THROW(io::rational_from_json(json::parse("[1,0]")), io::FormatError);
  EXPECT_THROW(io::rational_from_json(json::parse("[1,2,3]")), io::FormatError);
  EXPECT_THROW(io::rational_from_json(json::parse("[\"x\",2]")), io::FormatError);
}

TEST(Io, PictureRoundTrip) {
  auto p = mvtest::pstar();
  auto text = io::dump(io::to_json(p));
  auto q = io::picture_from_json(json::parse(text));
  EXPECT_EQ(q, p);
  EXPECT_EQ(io::dump(io::to_json(q)), text);
}

TEST(Io, PictureErrors) {
  EXPECT_THROW(io::picture_from_json(json::parse(R"({"loops":[]})")), io::FormatError);
  EXPECT_THROW(io::picture_from_json(json::parse(R"({"n":3,"loops":[[1,4]]})")), io::FormatError);
  EXPECT_THROW(io::picture_from_json(json::parse(R"({"n":3,"loops":[[1]]})")), io::FormatError);
  EXPECT_THROW(io::picture_from_json(json::parse(R"({"n":"3","loops":[]})")), io::FormatError);
}

TEST(Io, LatticeRoundTripIsByteIdentical) {
  for (const char* f : {"left_lattice.json", "middle_lattice.json", "right_lattice.json"}) {
    auto Y = mvtest::lattice(f);
    auto text = io::dump(io::to_json(Y));
    auto Z = io::lattice_from_json(json::parse(text));
    EXPECT_EQ(Z, Y) << f;
    EXPECT_EQ(io::dump(io::to_json(Z)), text) << f;
  }
}

TEST(Io, LatticeWithoutGenerators) {
  auto Y = io::lattice_from_json(json::parse(R"({"n":3,"window":[0,2],"generators":[]})"));
  EXPECT_EQ(Y, QLattice::fixed_point(Coweight{-2, -2, -2}));
}

TEST(Io, LatticeErrors) {
  EXPECT_THROW(io::lattice_from_json(json::parse(R"({"n":2,"generators":[[[[1,1],0,3]]]})")), io::FormatError);
  EXPECT_THROW(io::lattice_from_json(json::parse(R"({"n":2,"generators":[[[[1,1],0,0]]]})")), io::FormatError);
  EXPECT_THROW(io::lattice_from_json(json::parse(R"({"n":2,"window":[2,1],"generators":[]})")), io::FormatError);
  EXPECT_THROW(io::lattice_from_json(json::parse(R"({"n":2,"window":[0,1],"generators":[[[[1,1],-1,1]]]})")),
               io::FormatError);
  EXPECT_THROW(io::lattice_from_json(json::parse(R"({"n":0,"generators":[]})")), io::FormatError);
  EXPECT_THROW(io::lattice_from_json(json::parse(R"({"n":2,"generators":[[[1,0]]]})")), io::FormatError);
}

TEST(Io, PolytopeRoundTrip) {
  auto P = mv_polytope(mvtest::pstar(), mvtest::pstar_lambda());
  auto text = io::dump(io::to_json(P));
  auto Q = io::polytope_from_json(json::parse(text));
  EXPECT_EQ(Q, P);
  EXPECT_EQ(io::dump(io::to_json(Q)), text);
}

TEST(Io, InconsistentPolytopeIsRejected) {
  auto j = io::to_json(mv_polytope(KostantPicture(3, {{1, 3}}), Coweight{1, 0, -1}));
  j["facets"][0]["c"] = 7;
  EXPECT_THROW(io::polytope_from_json(j), io::FormatError);
}

TEST(Io, FlagPointRoundTrip) {
  std::mt19937_64 rng(6);
  auto p = mvtest::pstar();
  auto pt = random_flag_point(p, rng);
  pt.coeffs.at(p.loops()[0])[1] = Rational(-5, 3);
  auto text = io::dump(io::to_json(pt));
  auto back = io::flag_point_from_json(json::parse(text));
  EXPECT_EQ(back, pt);
  EXPECT_EQ(io::dump(io::to_json(back)), text);
  EXPECT_THROW(io::flag_point_from_json(json::parse(R"({"coeffs":{"[1,2]":[[1,1]]}})")), io::FormatError);
  EXPECT_THROW(io::flag_point_from_json(json::parse(R"({"coeffs":{"[1,2]#0x":[[1,1]]}})")), io::FormatError);
}

TEST(Io, TraceListsEveryStep) {
  auto tr = collapse_sequence(mvtest::pstar(), {3, 4, 6, 5, 1, 2});
  auto j = io::to_json(tr);
  ASSERT_EQ(j["steps"].size(), 6u);
  EXPECT_EQ(j["steps"][0]["N"], 4);
  EXPECT_EQ(j["steps"][1]["renumbered_column"], 3);
  EXPECT_EQ(j["steps"][5]["picture"]["loops"].size(), 0u);
}
