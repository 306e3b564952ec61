// Acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "blotto/general_lotto.hpp"
#include "blotto/verify.hpp"

using namespace blotto;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& what) {
    if (pass) detail << " first failure: " << what << ";";
    pass = false;
  }
};

Outcome value_certification() {
  Outcome o;
  auto rows = sweep_certify(5, 20);
  long solved = 0;
  for (auto& r : rows) {
    if (!is_solved(r.tag)) continue;
    ++solved;
    Rat v = blotto_value({r.A, r.B, r.K});
    if (!r.certificate || r.certificate->secured_by_A != v || r.certificate->secured_by_B != v)
      o.fail("(" + std::to_string(r.A) + "," + std::to_string(r.B) + "," + std::to_string(r.K) + ")");
  }
  o.detail << " " << solved << " solved instances certified of " << rows.size();
  return o;
}

Outcome spot_values() {
  Outcome o;
  struct Spot {
    long A, B, K;
    const char* expected;
  };
  for (Spot s : {Spot{7, 6, 2, "1/8"}, Spot{6, 4, 2, "1/3"}, Spot{4, 3, 3, "5/18"}, Spot{7, 2, 3, "1/9"}}) {
    EquilibriumReport rep = solve({s.A, s.B, s.K});
    Rat want = parse_rat(s.expected);
    std::string tag = "(" + std::to_string(s.A) + "," + std::to_string(s.B) + "," + std::to_string(s.K) + ")";
    o.detail << " " << tag << " expected " << s.expected << ", closed form " << to_string(rep.value)
             << ", secured by A " << to_string(rep.certificate.secured_by_A) << ", secured by B "
             << to_string(rep.certificate.secured_by_B) << ";";
    bool ok = rep.value == want && rep.certificate.secured_by_A == want && rep.certificate.secured_by_B == want;
    if (!ok) o.pass = false;
  }
  return o;
}

Outcome construction_sweep() {
  Outcome o;
  long built = 0, errors_seen = 0;
  clear_fallback_log();

  auto check = [&](const std::string& name, const std::function<PartitionMatrix()>& build,
                   const std::function<Dist()>& target, long budget, long K) {
    PartitionMatrix M;
    try {
      M = build();
    } catch (const Error& e) {
      if (e.kind() != "ConstructionMismatch") {
        o.fail(name + " threw " + e.what());
        return;
      }
      auto found = generic_implement(target(), budget, K);
      record_fallback({name, e.what(), found.has_value()});
      if (!found) return;
      M = *found;
    }
    try {
      validate(M);
    } catch (const Error& e) {
      o.fail(name + " " + e.what());
      return;
    }
    if (M.budget != budget || marginal(M) != target()) o.fail(name + " cardinality");
    ++built;
  };
  auto expect_error = [&](const std::string& name, const std::string& kind, const std::function<void()>& f) {
    try {
      f();
      o.fail(name + " should raise " + kind);
    } catch (const Error& e) {
      if (e.kind() != kind) o.fail(name + " raised " + e.kind() + " instead of " + kind);
      else ++errors_seen;
    }
  };
  auto nm = [](const char* f, long a, long b, long c) {
    return std::string(f) + "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  };

  for (long m = 1; m <= 8; ++m) {
    check(nm("E", m, 2, 2 * m), [&] { return build_EO(EOKind::E, m); }, [&] { return base_dist(U_EVEN(), m); },
          2 * m, 2);
    check(nm("O", m, 2, 2 * m), [&] { return build_EO(EOKind::O, m); }, [&] { return base_dist(U_ODD(), m); },
          2 * m, 2);
    if (m % 2 == 0) {
      check(nm("RE", m, 3, 3 * m), [&] { return build_EO(EOKind::RE, m); },
            [&] { return base_dist(U_EVEN(), m); }, 3 * m, 3);
      expect_error(nm("RO", m, 3, 3 * m), "BadM", [&] { build_EO(EOKind::RO, m); });
    } else {
      check(nm("RO", m, 3, 3 * m), [&] { return build_EO(EOKind::RO, m); },
            [&] { return base_dist(U_ODD(), m); }, 3 * m, 3);
      expect_error(nm("RE", m, 3, 3 * m), "BadM", [&] { build_EO(EOKind::RE, m); });
    }

    for (long K = 2; K <= 7; ++K) {
      const long C = m * K;
      for (Base u : {U_ODD(), U_EVEN()}) {
        bool odd = u.kind == BaseKind::U_ODD;
        bool feasible = odd ? (C - K) % 2 == 0 : C % 2 == 0;
        std::string name = nm(odd ? "implement_u_odd" : "implement_u_even", m, C, K);
        if (feasible)
          check(name, [&] { return implement_u(u, m, C, K); }, [&] { return base_dist(u, m); }, C, K);
        else
          expect_error(name, "InfeasibleParity", [&] { implement_u(u, m, C, K); });
      }

      for (long B = 1; B <= K * m + 1; ++B) {
        if (B % 2 == 0 && B >= 2 * m && B <= K * m)
          check(nm("prop3_B", m, K, B), [&] { return build_prop3_B(m, K, B); },
                [&] { return target_prop3_B(m, K, B); }, B, K);
        else
          expect_error(nm("prop3_B", m, K, B), B % 2 ? "InfeasibleParity" : "InfeasibleRange",
                       [&] { build_prop3_B(m, K, B); });

        if (B % 2 == 1 && B > 2 * m && B <= K * m) {
          check(nm("prop7_B", m, K, B), [&] { return build_prop7_B(m, K, B); },
                [&] { return target_prop7_B(m, K, B); }, B, K);
          check(nm("prop10_B", m, K, B), [&] { return build_prop10_B(m, K, B); },
                [&] { return target_prop10_B(m, K, B); }, B, K);
        } else {
          expect_error(nm("prop7_B", m, K, B), B % 2 ? "InfeasibleRange" : "InfeasibleParity",
                       [&] { build_prop7_B(m, K, B); });
          expect_error(nm("prop10_B", m, K, B), B % 2 ? "InfeasibleRange" : "InfeasibleParity",
                       [&] { build_prop10_B(m, K, B); });
        }
      }

      check(nm("prop6_B", m, K, 2 * m - 1), [&] { return build_prop6_B(m, K); },
            [&] { return target_prop6_B(m, K); }, 2 * m - 1, K);

      for (long R = 1; R < K; ++R) {
        const long A = m * K + R;
        if ((A - K) % 2 == 0)
          check(nm("prop4_A", m, K, A), [&] { return build_prop4_A(m, K, A); },
                [&] { return target_prop4_A(m, K, A); }, A, K);
        else
          expect_error(nm("prop4_A", m, K, A), "InfeasibleParity", [&] { build_prop4_A(m, K, A); });

        Point right = 2 * R <= K ? Point::P1 : Point::P2;
        Point wrong = right == Point::P1 ? Point::P2 : Point::P1;
        if (right == Point::P1 && K == 3 && (m == 2 || m == 4 || m == 6))
          expect_error(nm("prop5_A", m, K, A), "ExcludedCase", [&] { build_prop5_A(m, K, A, right); });
        else
          check(nm("prop5_A", m, K, A), [&] { return build_prop5_A(m, K, A, right); },
                [&] { return target_prop5_A(m, K, A, right); }, A, K);
        expect_error(nm("prop5_A/wrong point", m, K, A), "BadAlpha", [&] { build_prop5_A(m, K, A, wrong); });
      }
    }
  }
  auto log = fallback_log();
  long failed_fallbacks = 0;
  for (auto& f : log)
    if (!f.recovered) ++failed_fallbacks;
  if (failed_fallbacks) o.fail(std::to_string(failed_fallbacks) + " fallbacks failed");
  o.detail << " " << built << " matrices checked, " << errors_seen << " documented errors raised, " << log.size()
           << " fallbacks";
  return o;
}

Outcome lotto_oracle() {
  Outcome o;
  long checked = 0;
  for (long m = 1; m <= 8; ++m)
    for (long K = 2; K <= 6; ++K)
      for (long r = 1; r < K; ++r)
        for (long B = 1; B <= K * m; ++B) {
          Rat a = rat(m * K + r, K), b = rat(B, K);
          std::string tag = "(m=" + std::to_string(m) + ",K=" + std::to_string(K) + ",r=" + std::to_string(r) +
                            ",B=" + std::to_string(B) + ")";
          LottoSpec s{a, b, {}};
          Rat v = lotto_value(s);
          if (-envelope_best_response(lotto_optimal_A(s), b) != v) o.fail("A side " + tag);
          if (envelope_best_response(lotto_optimal_B(s), a) != v) o.fail("B side " + tag);
          ++checked;
          if (B < m + 1) continue;
          LottoSpec c{a, b, rat(1, K)};
          Rat vc = lotto_value(c);
          if (-envelope_best_response(lotto_optimal_A(c), b, c.c) != vc) o.fail("constrained A side " + tag);
          if (envelope_best_response(lotto_optimal_B(c), a) != vc) o.fail("constrained B side " + tag);
          if (lotto_optimal_B(c).odd_mass() < *c.c) o.fail("constrained B strategy odd mass " + tag);
          ++checked;
        }
  o.detail << " " << checked << " games";
  return o;
}

Outcome feasibility_law() {
  Outcome o;
  long checked = 0;
  for (long m = 1; m <= 4; ++m)
    for (long K = 2; K <= 4; ++K) {
      const long C = m * K;
      for (Base u : {U_ODD(), U_EVEN()}) {
        bool odd = u.kind == BaseKind::U_ODD;
        bool law = odd ? (C - K) % 2 == 0 : C % 2 == 0;
        auto found = generic_implement(base_dist(u, m), C, K);
        if (found.has_value() != law)
          o.fail(std::string(odd ? "U_ODD" : "U_EVEN") + " m=" + std::to_string(m) + " K=" + std::to_string(K));
        ++checked;
      }
    }
  o.detail << " " << checked << " (m,K,kind) combinations";
  return o;
}

PartitionMatrix random_matrix(std::mt19937& rng, long budget, long K, long rows) {
  PartitionMatrix M{budget, K, {}};
  for (long i = 0; i < rows; ++i) {
    Row r(K, 0);
    for (long u = 0; u < budget; ++u) ++r[std::uniform_int_distribution<long>(0, K - 1)(rng)];
    M.rows.push_back(r);
  }
  return M;
}

Allocation symmetrized(const PartitionMatrix& M) {
  Allocation out;
  for (auto& row : M.rows)
    for (auto& [x, p] : symmetrize(row, M.K)) out.emplace_back(x, p * rat(1, M.L()));
  return out;
}

Outcome lotto_reduction() {
  Outcome o;
  std::mt19937 rng(20240611);
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  for (int t = 0; t < 200; ++t) {
    long K = pick(2, 4), a = pick(0, 10), b = pick(0, 10);
    PartitionMatrix X = random_matrix(rng, a, K, pick(1, 4));
    PartitionMatrix Y = random_matrix(rng, b, K, pick(1, 4));
    if (payoff_blotto_exhaustive(symmetrized(X), symmetrized(Y)) != payoff_lotto(X, Y))
      o.fail("instance " + std::to_string(t));
  }
  o.detail << " 200 random instances";
  return o;
}

Outcome dp_vs_brute() {
  Outcome o;
  std::mt19937 rng(7);
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  long checked = 0;
  for (int t = 0; t < 50; ++t) {
    long K = pick(2, 4);
    PartitionMatrix Y = random_matrix(rng, pick(0, 12), K, pick(1, 5));
    for (long budget = 0; budget <= 12; ++budget) {
      if (best_response_value(Y, budget, K) != best_response_brute(Y, budget, K))
        o.fail("opponent " + std::to_string(t) + " budget " + std::to_string(budget));
      ++checked;
    }
  }
  o.detail << " " << checked << " (opponent, budget) pairs";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"1 value formula certification (K<=5, A<=20)", value_certification},
      {"2 spot values", spot_values},
      {"3 construction self-check sweep (m<=8, K<=7)", construction_sweep},
      {"4 General Lotto oracle equivalence", lotto_oracle},
      {"5 feasibility law (C=mK, m<=4, K<=4)", feasibility_law},
      {"6 Lotto reduction on symmetrized strategies", lotto_reduction},
      {"7 DP best response vs brute force", dp_vs_brute},
  };
  int failed = 0;
  for (auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << ":" << o.detail.str() << " [" << secs << "s]"
              << std::endl;
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
