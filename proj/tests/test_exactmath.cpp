#include <gtest/gtest.h>

#include "blotto/exactmath.hpp"

using namespace blotto;

namespace {

std::string kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

}  // namespace

TEST(ExactMath, RatIsCanonical) {
  EXPECT_EQ(rat(2, 4), rat(1, 2));
  EXPECT_EQ(to_string(rat(6, -4)), "-3/2");
  EXPECT_EQ(to_string(rat(5)), "5/1");
}

TEST(ExactMath, ZeroDenominator) {
  EXPECT_EQ(kind_of([] { rat(1, 0); }), "ZeroDenominator");
  EXPECT_EQ(kind_of([] { parse_rat("3/0"); }), "ZeroDenominator");
}

TEST(ExactMath, ParseRoundTrip) {
  for (std::string s : {"1/3", "-7/2", "0/1", "12/1"}) EXPECT_EQ(to_string(parse_rat(s)), s);
  EXPECT_EQ(parse_rat("4"), Rat(4));
  EXPECT_EQ(parse_rat("-6/8"), rat(-3, 4));
  EXPECT_EQ(parse_rat("+2/6"), rat(1, 3));
  for (std::string s : {"", "/", "1/", "a/2", "1.5", "1/2/3"}) EXPECT_EQ(kind_of([&] { parse_rat(s); }), "BadRational") << s;
}

TEST(ExactMath, FloorDivMod) {
  EXPECT_EQ(floordiv_mod(7, 3), std::make_pair(2L, 1L));
  EXPECT_EQ(floordiv_mod(-7, 3), std::make_pair(-3L, 2L));
  EXPECT_EQ(floordiv_mod(-6, 3), std::make_pair(-2L, 0L));
  EXPECT_EQ(kind_of([] { floordiv_mod(1, 0); }), "BadArgument");
  for (long x = -20; x <= 20; ++x)
    for (long y = 1; y <= 6; ++y) {
      auto [q, r] = floordiv_mod(x, y);
      EXPECT_EQ(q * y + r, x);
      EXPECT_TRUE(0 <= r && r < y);
    }
}

TEST(ExactMath, GcdLcm) {
  EXPECT_EQ(gcd_l(12, 18), 6);
  EXPECT_EQ(lcm_l(4, 6), 12);
}

TEST(ExactMath, LargeValuesStayExact) {
  Rat s = 0;
  for (long k = 1; k <= 60; ++k) s += rat(1, k * (k + 1));
  EXPECT_EQ(s, rat(60, 61));
}
