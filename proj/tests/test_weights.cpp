#include <gtest/gtest.h>

#include "rankin/error.hpp"
#include "rankin/weights.hpp"
#include "support/gen.hpp"

using namespace rankin;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::Parse;
}

}  // namespace

TEST(HalfInt, FloorCeilAndFormatting) {
  EXPECT_EQ(HalfInt::from_twice(1).floor(), 0);
  EXPECT_EQ(HalfInt::from_twice(1).ceil(), 1);
  EXPECT_EQ(HalfInt::from_twice(-1).floor(), -1);
  EXPECT_EQ(HalfInt::from_twice(-1).ceil(), 0);
  EXPECT_EQ(HalfInt::from_twice(-3).floor(), -2);
  EXPECT_EQ(HalfInt(4).floor(), 4);
  EXPECT_EQ(HalfInt::from_twice(-7).to_string(), "-7/2");
  EXPECT_EQ(HalfInt(-3).to_string(), "-3");
  EXPECT_TRUE(HalfInt::from_twice(3).is_half_odd());
  EXPECT_LT(HalfInt::from_twice(1), HalfInt(1));
}

TEST(ValidatePure, WorkedPairHasPurityOne) {
  const auto mu = parse_pure("5,-5;6,-4");
  EXPECT_EQ(mu.w(), 1);
  EXPECT_EQ(mu.left(), (GLWeight{5, -5}));
  EXPECT_EQ(mu.right(), (GLWeight{6, -4}));
  EXPECT_EQ(parse_pure("0,0;0,0").w(), 0);
}

TEST(ValidatePure, Errors) {
  EXPECT_EQ(code_of([] { parse_pure("1,0;1,1"); }), Errc::NotPure);
  EXPECT_EQ(code_of([] { parse_pure("0,1;1,0"); }), Errc::NotDominant);
  EXPECT_EQ(code_of([] { parse_pure("1,0,0"); }), Errc::Parse);
  EXPECT_EQ(code_of([] { parse_pure("1,x;0,0"); }), Errc::Parse);
  EXPECT_EQ(code_of([] { parse_pure("1,0;0"); }), Errc::Parse);
}

TEST(Dual, Examples) {
  EXPECT_EQ(dual({5, -5}), (GLWeight{5, -5}));
  EXPECT_EQ(dual({2, 0, 0}), (GLWeight{0, 0, -2}));
  for (std::size_t n = 2; n <= 6; ++n) EXPECT_EQ(dual(testgen::hook_b(n)), testgen::hook_c(n));
}

TEST(DominantRep, Sorts) {
  EXPECT_EQ(dominant_rep({-1, 1}), (GLWeight{1, -1}));
  EXPECT_EQ(dominant_rep({1, 1}), (GLWeight{1, 1}));
  EXPECT_EQ(dominant_rep({0, 3, -3}), (GLWeight{3, 0, -3}));
}

TEST(Kappa, Examples) {
  EXPECT_EQ(kappa(1, 0), HalfInt::from_twice(1));
  EXPECT_EQ(kappa(0, 0), HalfInt(0));
  EXPECT_EQ(kappa(1, 1), HalfInt(1));
}

TEST(KEta, Examples) {
  EXPECT_EQ(k_eta(parse_pure("5,-5;6,-4"), parse_pure("5,-5;5,-5")), 0);
  EXPECT_EQ(k_eta(parse_pure("0,0;0,0"), parse_pure("0,0;0,0")), 0);
  EXPECT_EQ(k_eta(parse_pure("1,0;1,0"), parse_pure("0,0;0,0")), 1);
  EXPECT_EQ(code_of([] { k_eta(parse_pure("0,0;0,0"), parse_pure("0,0,0;0,0,0")); }), Errc::DimensionMismatch);
}

TEST(InfChar, Examples) {
  const auto p = inf_char(parse_pure("5,-5;6,-4"));
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0].a, HalfInt::from_twice(11));
  EXPECT_EQ(p[1].a, HalfInt::from_twice(-11));
  EXPECT_EQ(p[0].b, HalfInt::from_twice(-9));
  EXPECT_EQ(p[1].b, HalfInt::from_twice(13));
  const auto z = inf_char(parse_pure("0,0;0,0"));
  EXPECT_EQ(z[0].a, HalfInt::from_twice(1));
  EXPECT_EQ(z[1].b, HalfInt::from_twice(1));
}

TEST(WeightProperties, DualIsInvolution) {
  testgen::Gen g(11);
  for (int it = 0; it < 300; ++it) {
    const auto lam = g.dominant(1 + it % 6, 10);
    EXPECT_EQ(dual(dual(lam)), lam);
    EXPECT_TRUE(dual(lam).is_dominant());
  }
}

TEST(WeightProperties, FromLeftIsAlwaysPure) {
  testgen::Gen g(12);
  for (int it = 0; it < 300; ++it) {
    const auto lam = g.dominant(1 + it % 5, 8);
    const Entry w = g.between(-20, 20);
    std::vector<Entry> raw = lam.vec();
    for (std::size_t i = 0; i < lam.n(); ++i) raw.push_back(w - lam[lam.n() - 1 - i]);
    const auto pure = validate_pure(raw);
    EXPECT_EQ(pure.w(), w);
    EXPECT_EQ(pure.left(), lam);
  }
}

TEST(WeightProperties, KEtaMatchesInfCharSums) {
  testgen::Gen g(13);
  for (int it = 0; it < 300; ++it) {
    const std::size_t n = 1 + it % 5;
    const auto mu = g.pure(n), nu = g.pure(n);
    HalfInt total;
    for (const auto& p : inf_char(mu)) total += p.a;
    for (const auto& p : inf_char(nu)) total += p.a;
    EXPECT_EQ(total, HalfInt(k_eta(mu, nu)));
    HalfInt ab;
    for (const auto& p : inf_char(mu)) {
      EXPECT_EQ(p.a + p.b, HalfInt(mu.w()));
      ab += p.a + p.b;
    }
    EXPECT_EQ(ab, HalfInt(static_cast<Entry>(n) * mu.w()));
  }
}
