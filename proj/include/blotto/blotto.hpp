#pragma once

#include <string>
#include <utility>
#include <vector>

#include "blotto/constructions.hpp"

namespace blotto {

struct GameSpec {
  long A;
  long B;
  long K;
};

enum class CaseTag {
  LOW_B_TRIVIAL,
  LOW_B_EQUAL,
  HIGH_B_NDIV_EVEN,
  HIGH_B_DIV,
  HIGH_B_NDIV_ODD,
  UNSOLVED_INTERMEDIATE,
  UNSOLVED_EXCLUDED,
  UNSOLVED_HART_REGIME,
  UNSOLVED_LOW_B,  // B = floor(A/K) >= 3 and A mod K <= K - 3
};

struct GameCase {
  CaseTag tag;
  long m;
  long R;
  Rat alpha;
};

std::string tag_name(CaseTag t);
CaseTag parse_tag(const std::string& s);
bool is_solved(CaseTag t);

GameCase classify(const GameSpec& s);
Rat blotto_value(const GameSpec& s);

struct Certificate {
  Rat secured_by_A;
  Rat secured_by_B;
  bool equilibrium = false;
};

struct EquilibriumReport {
  GameSpec spec;
  GameCase game_case;
  PartitionMatrix strategy_A;
  PartitionMatrix strategy_B;
  Rat value;
  Certificate certificate;
};

// Strategies without certification.
std::pair<PartitionMatrix, PartitionMatrix> equilibrium_strategies(const GameSpec& s);
EquilibriumReport solve(const GameSpec& s);

Rat payoff_lotto(const PartitionMatrix& x, const PartitionMatrix& y);

using Allocation = std::vector<std::pair<Row, Rat>>;
Allocation symmetrize(const Row& x, long K);
Rat payoff_blotto_exhaustive(const Allocation& x, const Allocation& y);

}  // namespace blotto
