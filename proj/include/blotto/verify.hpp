#pragma once

#include <optional>
#include <vector>

#include "blotto/blotto.hpp"

namespace blotto {

// Best payoff of a pure K-partition of `budget` against the opponent's
// uniformly matched rows.
Rat best_response_value(const PartitionMatrix& opponent, long budget, long K);
Row best_response(const PartitionMatrix& opponent, long budget, long K);

// Exhaustive check used by tests: enumerate every K-partition of budget.
Rat best_response_brute(const PartitionMatrix& opponent, long budget, long K);

Certificate certify(const PartitionMatrix& strategy_A, const PartitionMatrix& strategy_B, long A, long B,
                    long K);

struct SweepRow {
  long K, A, B;
  CaseTag tag;
  std::optional<Rat> value;
  std::optional<Certificate> certificate;
};

std::vector<SweepRow> sweep_certify(long Kmax, long Amax, unsigned threads = 0);
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace blotto
