#include <gtest/gtest.h>

#include "dedekind/zpoly.hpp"
#include "oracles.hpp"

using namespace dedekind;

namespace {
ZPoly Z(const char* s) { return parse_zpoly(s); }
const PrimeModulus P2(2), P7(7);
}  // namespace

TEST(ZArith, Examples) {
  EXPECT_EQ(Z("t-2") * Z("t^2+t+4"), Z("t^3-t^2+2t-8"));
  auto [q, r] = divrem_exact(Z("t^3-9t^2+26t-24"), Z("t-2"));
  EXPECT_EQ(q, Z("t^2-7t+12"));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(Z("t^3-t^2-2t-8") + ZPoly(), Z("t^3-t^2-2t-8"));
}

TEST(ZArith, DivremIdentityAndErrors) {
  const ZPoly a = Z("5t^6 - 3t^2 + 11"), b = Z("t^3 + 2t - 1");
  auto [q, r] = divrem_exact(a, b);
  EXPECT_EQ(q * b + r, a);
  EXPECT_LT(r.degree(), b.degree());
  EXPECT_THROW(divrem_exact(a, Z("2t+1")), NotMonic);
}

TEST(ZPoly, ZeroSentinelAndText) {
  EXPECT_EQ(ZPoly().degree(), ZPoly::npos);
  EXPECT_EQ(to_string(Z("t^3 - t^2 - 2*t - 8")), "t^3 - t^2 - 2*t - 8");
  EXPECT_EQ(to_string(Z("-t^2+t")), "-t^2 + t");
  EXPECT_EQ(to_string(Z("2 t ^ 2 + 3 t + t")), "2*t^2 + 4*t");
  EXPECT_EQ(to_string(Z("0")), "0");
}

TEST(Discriminant, Examples) {
  EXPECT_EQ(discriminant(Z("t^3-t^2-2t-8")), -2012);
  EXPECT_EQ(discriminant(Z("t^2-50t-833")), 5832);
  EXPECT_EQ(discriminant(Z("t^2+1")), -4);
  EXPECT_EQ(discriminant(Z("t^4-t^3+t^2-2t+4")), 11492);
  EXPECT_THROW(discriminant(Z("2t^2+1")), NotMonic);
  EXPECT_THROW(discriminant(Z("5")), InvalidArgument);
}

TEST(Discriminant, AgreesWithLaplaceOracle) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 60; ++i) {
    const std::size_t d = 1 + i % 5;
    const ZPoly f = oracle::random_monic(rng, d, 9);
    EXPECT_EQ(discriminant(f), oracle::discriminant(f.coeffs())) << to_string(f);
  }
}

TEST(ReduceLift, Examples) {
  EXPECT_EQ(reduce_mod(Z("t^3-t^2-2t-8"), P2), parse_fppoly("t^3+t^2", P2));
  EXPECT_EQ(reduce_mod(Z("t^2-50t-833"), P7), parse_fppoly("t^2+6t", P7));
  const FpPoly g = reduce_mod(Z("t^4 - 9t + 3"), P7);
  EXPECT_EQ(reduce_mod(lift(g), P7), g);
  const ZPoly lifted = lift(g);
  for (const auto& c : lifted.coeffs()) {
    EXPECT_GE(c, 0);
    EXPECT_LT(c, 7);
  }
  EXPECT_EQ(root_form_lift(parse_fppoly("t+1", P2)), Z("t-1"));
  EXPECT_EQ(root_form_lift(parse_fppoly("t+4", P7)), Z("t-3"));
}

TEST(Cofactor, Examples) {
  EXPECT_EQ(cofactor_M(Z("t^3-t^2-2t-8"), P2, {{Z("t"), 2}, {Z("t-1"), 1}}), Z("t+4"));
  EXPECT_EQ(cofactor_M(Z("t^2-2"), P2, {{Z("t"), 2}}), Z("1"));
  EXPECT_TRUE(cofactor_M(Z("t^2-t"), P7, {{Z("t"), 1}, {Z("t-1"), 1}}).is_zero());
}

TEST(Cofactor, Errors) {
  EXPECT_THROW(cofactor_M(Z("t^2-2"), P7, {{Z("t"), 2}}), NotExact);
  EXPECT_THROW(cofactor_M(Z("t^2-2"), P2, {{Z("2t"), 1}}), NotMonic);
  EXPECT_THROW(cofactor_M(Z("2t^2"), P2, {{Z("t"), 2}}), NotMonic);
}

TEST(Resultant, Basics) {
  EXPECT_EQ(resultant(Z("t-3"), Z("t^2+1")), 10);
  EXPECT_EQ(resultant(Z("t^2-1"), Z("t-1")), 0);
}

TEST(SmallRoot, Screen) {
  EXPECT_EQ(small_integer_root(Z("t^3-t^2+2t-8")), Integer(2));
  EXPECT_FALSE(small_integer_root(Z("t^3-t^2-2t-8")).has_value());
  EXPECT_EQ(small_integer_root(Z("t^2+3t")), Integer(0));
}
