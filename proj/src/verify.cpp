#include "blotto/verify.hpp"

#include <atomic>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

namespace blotto {

namespace {

// Scaled kernel: G[t] = #cells below t - #cells above t, for t = 0..budget.
std::vector<long> kernel(const PartitionMatrix& opp, long budget, long& denom) {
  IntVec c = cardinality(opp);
  denom = opp.L() * opp.K;
  std::vector<long> G(budget + 1);
  long below = 0;  // cells with value < t
  auto it = c.begin();
  for (long t = 0; t <= budget; ++t) {
    while (it != c.end() && it->first < t) below += (it++)->second;
    long at = (it != c.end() && it->first == t) ? it->second : 0;
    G[t] = below - (denom - below - at);
  }
  return G;
}

constexpr long kNeg = std::numeric_limits<long>::min() / 4;

struct Table {
  std::vector<std::vector<long>> f, pick;
};

Table run_dp(const std::vector<long>& G, long budget, long K) {
  Table T;
  T.f.assign(K + 1, std::vector<long>(budget + 1, kNeg));
  T.pick.assign(K + 1, std::vector<long>(budget + 1, -1));
  T.f[0][0] = 0;
  for (long k = 1; k <= K; ++k)
    for (long s = 0; s <= budget; ++s)
      for (long t = 0; t <= s; ++t) {
        long prev = T.f[k - 1][s - t];
        if (prev == kNeg) continue;
        if (prev + G[t] > T.f[k][s]) {
          T.f[k][s] = prev + G[t];
          T.pick[k][s] = t;
        }
      }
  return T;
}

void check_args(const PartitionMatrix& opp, long budget, long K) {
  validate(opp);
  if (opp.K != K) throw Error("DimensionMismatch", "opponent has a different number of battlefields");
  if (budget < 0) throw Error("BadArgument", "budget must be non-negative");
}

void partitions(long left, long maxpart, long slots, Row& cur, const std::function<void(const Row&)>& f) {
  if (slots == 0) {
    if (left == 0) f(cur);
    return;
  }
  for (long v = std::min(left, maxpart); v >= 0; --v) {
    if (v * slots < left) break;
    cur.push_back(v);
    partitions(left - v, v, slots - 1, cur, f);
    cur.pop_back();
  }
}

}  // namespace

Rat best_response_value(const PartitionMatrix& opponent, long budget, long K) {
  check_args(opponent, budget, K);
  long D;
  auto G = kernel(opponent, budget, D);
  Table T = run_dp(G, budget, K);
  return rat(T.f[K][budget], D * K);
}

Row best_response(const PartitionMatrix& opponent, long budget, long K) {
  check_args(opponent, budget, K);
  long D;
  auto G = kernel(opponent, budget, D);
  Table T = run_dp(G, budget, K);
  Row x;
  for (long k = K, s = budget; k >= 1; --k) {
    long t = T.pick[k][s];
    x.push_back(t);
    s -= t;
  }
  return x;
}

Rat best_response_brute(const PartitionMatrix& opponent, long budget, long K) {
  check_args(opponent, budget, K);
  std::optional<Rat> best;
  Row cur;
  partitions(budget, budget, K, cur, [&](const Row& x) {
    Rat v = payoff_lotto(PartitionMatrix{budget, K, {x}}, opponent);
    if (!best || v > *best) best = v;
  });
  return *best;
}

Certificate certify(const PartitionMatrix& strategy_A, const PartitionMatrix& strategy_B, long A, long B,
                    long K) {
  if (strategy_A.budget != A || strategy_B.budget != B)
    throw Error("DimensionMismatch", "strategy budgets do not match A and B");
  Certificate c;
  c.secured_by_A = -best_response_value(strategy_A, B, K);
  c.secured_by_B = best_response_value(strategy_B, A, K);
  c.equilibrium = c.secured_by_A == c.secured_by_B;
  return c;
}

std::vector<SweepRow> sweep_certify(long Kmax, long Amax, unsigned threads) {
  if (Kmax < 2 || Amax < 3) throw Error("BadArgument", "need Kmax >= 2 and Amax >= 3");
  std::vector<SweepRow> rows;
  for (long K = 2; K <= Kmax; ++K)
    for (long A = K + 1; A <= Amax; ++A)
      for (long B = 1; B < A; ++B) rows.push_back({K, A, B, classify({A, B, K}).tag, {}, {}});

  std::vector<std::exception_ptr> errors(rows.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < rows.size();) {
      SweepRow& r = rows[i];
      if (!is_solved(r.tag)) continue;
      try {
        EquilibriumReport rep = solve({r.A, r.B, r.K});
        r.value = rep.value;
        r.certificate = rep.certificate;
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "K,A,B,case,value,secured_A,secured_B,certified\n";
  for (auto& r : rows) {
    os << r.K << ',' << r.A << ',' << r.B << ',' << tag_name(r.tag) << ',';
    if (r.value && r.certificate) {
      os << to_string(*r.value) << ',' << to_string(r.certificate->secured_by_A) << ','
         << to_string(r.certificate->secured_by_B) << ','
         << (r.certificate->equilibrium ? "true" : "false") << '\n';
    } else {
      os << ",,,skipped\n";
    }
  }
  return os.str();
}

}  // namespace blotto
