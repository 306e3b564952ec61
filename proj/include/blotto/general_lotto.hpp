#pragma once

#include <optional>

#include "blotto/distributions.hpp"

namespace blotto {

struct LottoSpec {
  Rat a;
  Rat b;
  std::optional<Rat> c;  // odd-mass floor for player B
};

Rat lotto_value(const LottoSpec& s);
Dist lotto_optimal_A(const LottoSpec& s);
Dist lotto_optimal_B(const LottoSpec& s);

// sup of payoff_H(X, opponent) over X with mean(X) = budget
// (and odd mass >= odd_floor when given).
Rat envelope_best_response(const Dist& opponent, const Rat& budget,
                           const std::optional<Rat>& odd_floor = std::nullopt);

}  // namespace blotto
