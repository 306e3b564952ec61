#include <gtest/gtest.h>

#include <functional>

#include "blotto/blotto.hpp"
#include "blotto/verify.hpp"

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

CaseTag tag(long A, long B, long K) { return classify({A, B, K}).tag; }

}  // namespace

TEST(Classify, Tags) {
  EXPECT_EQ(tag(7, 1, 3), CaseTag::LOW_B_TRIVIAL);
  EXPECT_EQ(tag(7, 2, 3), CaseTag::LOW_B_EQUAL);
  EXPECT_EQ(tag(9, 3, 3), CaseTag::UNSOLVED_LOW_B);
  EXPECT_EQ(tag(13, 3, 4), CaseTag::UNSOLVED_LOW_B);
  EXPECT_EQ(tag(10, 3, 3), CaseTag::LOW_B_EQUAL);
  EXPECT_EQ(tag(7, 6, 2), CaseTag::HIGH_B_NDIV_EVEN);
  EXPECT_EQ(tag(6, 4, 2), CaseTag::HIGH_B_DIV);
  EXPECT_EQ(tag(9, 5, 2), CaseTag::UNSOLVED_INTERMEDIATE);
  EXPECT_EQ(tag(12, 5, 3), CaseTag::UNSOLVED_HART_REGIME);
  EXPECT_EQ(tag(7, 5, 3), CaseTag::UNSOLVED_EXCLUDED);
  EXPECT_EQ(tag(4, 3, 3), CaseTag::HIGH_B_NDIV_ODD);
  EXPECT_EQ(tag(9, 6, 2), CaseTag::UNSOLVED_INTERMEDIATE);
  EXPECT_EQ(tag(9, 5, 3), CaseTag::HIGH_B_DIV);
  EXPECT_EQ(tag(8, 2, 2), CaseTag::LOW_B_TRIVIAL);
  EXPECT_EQ(kind_of([] { classify({3, 3, 2}); }), "BadGame");
  EXPECT_EQ(kind_of([] { classify({3, 1, 1}); }), "BadGame");
}

TEST(Classify, TagNamesRoundTrip) {
  for (CaseTag t : {CaseTag::LOW_B_TRIVIAL, CaseTag::LOW_B_EQUAL, CaseTag::HIGH_B_NDIV_EVEN, CaseTag::HIGH_B_DIV,
                    CaseTag::HIGH_B_NDIV_ODD, CaseTag::UNSOLVED_INTERMEDIATE, CaseTag::UNSOLVED_EXCLUDED,
                    CaseTag::UNSOLVED_HART_REGIME, CaseTag::UNSOLVED_LOW_B})
    EXPECT_EQ(parse_tag(tag_name(t)), t);
  EXPECT_EQ(kind_of([] { parse_tag("NOPE"); }), "BadArgument");
  EXPECT_FALSE(is_solved(CaseTag::UNSOLVED_LOW_B));
  EXPECT_TRUE(is_solved(CaseTag::LOW_B_EQUAL));
}

TEST(BlottoValue, SpotValues) {
  EXPECT_EQ(blotto_value({7, 6, 2}), rat(1, 8));
  EXPECT_EQ(blotto_value({6, 4, 2}), rat(1, 3));
  EXPECT_EQ(blotto_value({4, 3, 3}), rat(2, 9));
  EXPECT_EQ(blotto_value({7, 2, 3}), rat(7, 9));
  EXPECT_EQ(blotto_value({7, 1, 3}), rat(1));
  EXPECT_EQ(kind_of([] { blotto_value({7, 5, 3}); }), "UnsolvedCase");
  EXPECT_EQ(kind_of([] { blotto_value({9, 3, 3}); }), "UnsolvedCase");
}

TEST(Solve, CertifiedReports) {
  for (long K = 2; K <= 4; ++K)
    for (long A = K + 1; A <= 14; ++A)
      for (long B = 1; B < A; ++B) {
        GameSpec s{A, B, K};
        if (!is_solved(classify(s).tag)) {
          EXPECT_EQ(kind_of([&] { solve(s); }), "UnsolvedCase");
          continue;
        }
        EquilibriumReport r = solve(s);
        EXPECT_TRUE(r.certificate.equilibrium);
        EXPECT_EQ(r.certificate.secured_by_A, r.value);
        EXPECT_EQ(r.certificate.secured_by_B, r.value);
        EXPECT_EQ(r.strategy_A.budget, A);
        EXPECT_EQ(r.strategy_B.budget, B);
        EXPECT_EQ(r.strategy_A.K, K);
        EXPECT_EQ(payoff_lotto(r.strategy_A, r.strategy_B), r.value);
      }
}

TEST(Solve, ValueNonincreasingInB) {
  for (long K = 2; K <= 5; ++K)
    for (long A = K + 1; A <= 18; ++A) {
      std::optional<Rat> prev;
      for (long B = 1; B < A; ++B) {
        if (!is_solved(classify({A, B, K}).tag)) {
          prev.reset();
          continue;
        }
        Rat v = blotto_value({A, B, K});
        if (prev) EXPECT_LE(v, *prev) << A << " " << B << " " << K;
        prev = v;
      }
    }
}

TEST(Solve, WeakDualityForArbitraryPairs) {
  PartitionMatrix X{9, 3, {{3, 3, 3}}}, Y{6, 3, {{6, 0, 0}}};
  Certificate c = certify(X, Y, 9, 6, 3);
  EXPECT_LE(c.secured_by_A, c.secured_by_B);
  EXPECT_FALSE(c.equilibrium);
}

TEST(Symmetrize, MatchesLottoPayoff) {
  Allocation x = symmetrize({3, 1, 0}, 3);
  EXPECT_EQ(x.size(), 6u);
  EXPECT_EQ(symmetrize({2, 2}, 2).size(), 1u);
  Allocation y = symmetrize({2, 2, 0}, 3);
  EXPECT_EQ(payoff_blotto_exhaustive(x, y), payoff_lotto({4, 3, {{3, 1, 0}}}, {4, 3, {{2, 2, 0}}}));
  EXPECT_EQ(kind_of([] { symmetrize({1, 1, 1, 1, 1, 1, 1}, 7); }), "TooLarge");
  EXPECT_EQ(kind_of([] { symmetrize({1, 1}, 3); }), "DimensionMismatch");
  EXPECT_EQ(kind_of([] { payoff_blotto_exhaustive({}, {}); }), "BadArgument");
}
