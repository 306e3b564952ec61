#include <gtest/gtest.h>

#include <functional>

#include "blotto/general_lotto.hpp"

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

TEST(LottoValue, ClosedForms) {
  EXPECT_EQ(lotto_value({rat(2), rat(1), {}}), rat(1, 2));
  EXPECT_EQ(lotto_value({rat(5, 2), rat(2), {}}), rat(1, 6));
  EXPECT_EQ(lotto_value({rat(5, 2), rat(2), rat(1, 3)}), rat(7, 36));
  EXPECT_EQ(lotto_value({rat(7, 3), rat(1), {}}), rat(1) - rat(2, 3) / 2 - rat(1, 3) / 3);
}

TEST(LottoValue, ScopeErrors) {
  EXPECT_EQ(kind_of([] { lotto_value({rat(1), rat(2), {}}); }), "OutOfTheoremScope");
  EXPECT_EQ(kind_of([] { lotto_value({rat(1, 2), rat(1, 3), {}}); }), "OutOfTheoremScope");
  EXPECT_EQ(kind_of([] { lotto_value({rat(7, 2), rat(13, 4), {}}); }), "OutOfTheoremScope");
  EXPECT_EQ(kind_of([] { lotto_value({rat(3), rat(1), rat(1, 4)}); }), "OutOfTheoremScope");
  EXPECT_EQ(kind_of([] { lotto_value({rat(5, 2), rat(2), rat(1)}); }), "OutOfTheoremScope");
  EXPECT_EQ(kind_of([] { lotto_value({rat(5, 2), rat(2), rat(0)}); }), "OutOfTheoremScope");
}

TEST(LottoOracle, EnvelopeMatchesValue) {
  for (long K = 2; K <= 5; ++K)
    for (long m = 1; m <= 4; ++m)
      for (long r = 0; r < K; ++r)
        for (long B = 1; B <= K * m; ++B) {
          Rat a = rat(m * K + r, K), b = rat(B, K);
          if (!(a > b)) continue;
          if (r == 0 && !(b < m)) continue;
          LottoSpec s{a, b, {}};
          Rat v = lotto_value(s);
          Dist X = lotto_optimal_A(s), Y = lotto_optimal_B(s);
          EXPECT_EQ(mean(X), a);
          EXPECT_EQ(mean(Y), b);
          EXPECT_EQ(-envelope_best_response(X, b), v) << K << " " << m << " " << r << " " << B;
          EXPECT_EQ(envelope_best_response(Y, a), v) << K << " " << m << " " << r << " " << B;
          EXPECT_EQ(payoff_H(X, Y), v);
        }
}

TEST(LottoOracle, ConstrainedGame) {
  for (long K = 2; K <= 5; ++K)
    for (long m = 1; m <= 4; ++m)
      for (long r = 1; r < K; ++r)
        for (long B = m + 1; B <= K * m; ++B) {
          Rat a = rat(m * K + r, K), b = rat(B, K), c = rat(1, K);
          LottoSpec s{a, b, c};
          Rat v = lotto_value(s);
          Dist X = lotto_optimal_A(s), Y = lotto_optimal_B(s);
          EXPECT_GE(Y.odd_mass(), c);
          EXPECT_EQ(mean(Y), b);
          EXPECT_EQ(-envelope_best_response(X, b, c), v) << K << " " << m << " " << r << " " << B;
          EXPECT_EQ(envelope_best_response(Y, a), v) << K << " " << m << " " << r << " " << B;
          EXPECT_GE(v, lotto_value({a, b, {}}));
        }
}

TEST(LottoOracle, ValueDecreasesInB) {
  Rat a = rat(17, 4);
  Rat prev = 2;
  for (long B = 1; B <= 16; ++B) {
    Rat v = lotto_value({a, rat(B, 4), {}});
    EXPECT_LT(v, prev);
    prev = v;
  }
}
