#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blotto/distributions.hpp"

namespace blotto {

using Row = std::vector<long>;

struct PartitionMatrix {
  long budget = 0;
  long K = 0;
  std::vector<Row> rows;

  long L() const { return static_cast<long>(rows.size()); }
  bool operator==(const PartitionMatrix&) const = default;
};

// Checks shape and row sums; throws DimensionMismatch / BadMatrix.
void validate(const PartitionMatrix& M);

IntVec cardinality(const PartitionMatrix& M);
Dist marginal(const PartitionMatrix& M);

PartitionMatrix hcat(const std::vector<PartitionMatrix>& parts);
PartitionMatrix vcat(const std::vector<PartitionMatrix>& parts);
PartitionMatrix repeat_h(const PartitionMatrix& M, long copies, long rows);
PartitionMatrix repeat_v(const PartitionMatrix& M, long copies);
PartitionMatrix zeros(long rows, long cols);
PartitionMatrix add_const(PartitionMatrix M, long c);

enum class EOKind { E, O, RE, RO };
PartitionMatrix build_EO(EOKind kind, long m);

PartitionMatrix implement_u(Base kind, long m, long C, long K);

// Player B, even B in [2m, Km].
Dist target_prop3_B(long m, long K, long B);
PartitionMatrix build_prop3_B(long m, long K, long B);

// Player A, K does not divide A and A = K (mod 2).
Dist target_prop4_A(long m, long K, long A);
PartitionMatrix build_prop4_A(long m, long K, long A);

enum class Point { P1, P2 };
Dist target_prop5_A(long m, long K, long A, Point p);
PartitionMatrix build_prop5_A(long m, long K, long A, Point p);

// Player B, B = 2m - 1.
Dist target_prop6_B(long m, long K);
PartitionMatrix build_prop6_B(long m, long K);

// Player B, odd B in (2m, Km].
Dist target_prop7_B(long m, long K, long B);
PartitionMatrix build_prop7_B(long m, long K, long B);

// Player B, odd B in [2m+1, Km].
Dist target_prop10_B(long m, long K, long B);
PartitionMatrix build_prop10_B(long m, long K, long B);

inline constexpr long kDefaultMaxRows = 5040;

// Backtracking search for an L x K matrix implementing target with budget C.
// Returns nullopt when no matrix exists within max_rows cells.
std::optional<PartitionMatrix> generic_implement(const Dist& target, long C, long K,
                                                 long max_rows = kDefaultMaxRows,
                                                 long node_limit = 5'000'000);

// Throws ConstructionMismatch naming the block when M does not implement target.
void self_check(const PartitionMatrix& M, const Dist& target, const std::string& name);
void self_check(const PartitionMatrix& M, long budget, const IntVec& target,
                const std::string& name);

struct FallbackRecord {
  std::string builder;
  std::string detail;
  bool recovered = false;
};
void record_fallback(FallbackRecord r);
std::vector<FallbackRecord> fallback_log();
void clear_fallback_log();

// Block families, each checked against its own cardinality target.
namespace blocks {
PartitionMatrix S_even(long m, long r);       // (3m+r, 4), r = m (mod 2)
PartitionMatrix T_even(long m, long r);       // (2m+r, 3), r even
PartitionMatrix S_dec(long m, long r);        // from S_even(m, r+1)
PartitionMatrix T_dec(long m, long r);        // from T_even(m, r+1)
PartitionMatrix S_inc(long m, long r);        // from S_even(m, r)
PartitionMatrix T_inc(long m, long r);        // from T_even(m, r)
PartitionMatrix R_odd_ii(long m);             // (3m+1, 3), m even
PartitionMatrix R_odd_iii(long m);            // (3m+2, 3), m odd
PartitionMatrix R_pair(long m);               // (2m+1, 2)
PartitionMatrix S_p1_ii(long m);              // (3m+1, 3), m odd
PartitionMatrix S_p1_iii(long m);             // (5m+1, 5), m even
PartitionMatrix T_p1_iv(long m);              // (5m+2, 5), m in {2,4,6,8}
PartitionMatrix S_p1_v(long m);               // (3m+1, 3), m even >= 8
PartitionMatrix S_p2_ii(long m);              // (3m+2, 3), m even
PartitionMatrix S_p2_iii(long m);             // (3m+2, 3), m odd
PartitionMatrix staircase(long m);            // (2m-1, 2)
}  // namespace blocks

}  // namespace blotto
