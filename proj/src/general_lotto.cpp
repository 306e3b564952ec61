#include "blotto/general_lotto.hpp"

#include <algorithm>
#include <vector>

namespace blotto {

namespace {

struct Parsed {
  long m;
  Rat alpha;
  bool integer;
};

Parsed parse(const LottoSpec& s) {
  if (!(s.a > s.b && s.b > 0)) throw Error("OutOfTheoremScope", "need a > b > 0");
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), s.a.get_num_mpz_t(), s.a.get_den_mpz_t());
  Parsed p{fl.get_si(), s.a - Rat(fl), s.a.get_den() == 1};
  if (p.m < 1) throw Error("OutOfTheoremScope", "need a >= 1");
  if (p.integer) {
    if (s.c) throw Error("OutOfTheoremScope", "constrained game needs non-integer a");
    if (!(s.b < p.m)) throw Error("OutOfTheoremScope", "integer a needs b < a");
  } else {
    if (s.b > p.m) throw Error("OutOfTheoremScope", "need b <= floor(a)");
    if (s.c && !(*s.c > 0 && *s.c * (p.m + 1) <= s.b))
      throw Error("OutOfTheoremScope", "need 0 < c <= b/(m+1)");
  }
  return p;
}

Dist uo(long m) { return base_dist(U_ODD(), m); }
Dist ue(long m) { return base_dist(U_EVEN(), m); }

}  // namespace

Rat lotto_value(const LottoSpec& s) {
  Parsed p = parse(s);
  const long m = p.m;
  if (p.integer) return 1 - s.b / m;
  Rat v = 1 - (1 - p.alpha) * s.b / m - p.alpha * s.b / (m + 1);
  if (s.c) v += *s.c * std::min<Rat>(p.alpha, 1 - p.alpha) / (m * (m + 1));
  return v;
}

Dist lotto_optimal_A(const LottoSpec& s) {
  Parsed p = parse(s);
  const long m = p.m;
  const Rat& a = p.alpha;
  if (p.integer) return uo(m);
  if (!s.c) return mix({{1 - a, uo(m)}, {a, uo(m + 1)}});
  Rat d = rat(2 * m + 1, m + 1);
  if (a < Rat(1, 2)) return mix({{a * d, vbar(m)}, {1 - a * d, uo(m)}});
  Rat u = (1 - a) / a, t = (2 * a - 1) / a;
  // x mixes the point-1 strategy (possibly with a negative u_odd(m) weight) with the
  // unconstrained one; expand before mixing so every weight is non-negative.
  const Dist v = vbar(m), lo = uo(m), hi = uo(m + 1);
  std::map<long, Rat> w;
  for (auto& [k, q] : v.weights()) w[k] += u * a * d * q;
  for (auto& [k, q] : lo.weights()) w[k] += (u * (1 - a * d) + t * (1 - a)) * q;
  for (auto& [k, q] : hi.weights()) w[k] += t * a * q;
  std::erase_if(w, [](const auto& kv) { return kv.second == 0; });
  return Dist(std::move(w));
}

Dist lotto_optimal_B(const LottoSpec& s) {
  Parsed p = parse(s);
  const long m = p.m;
  const Rat& b = s.b;
  if (!s.c) return mix({{1 - b / m, Dist::delta(0)}, {b / m, ue(m)}});
  const Rat& c = *s.c;
  if (p.alpha < Rat(1, 2)) return mix({{1 - b / m, Dist::delta(0)}, {c, uo(m)}, {b / m - c, ue(m)}});
  return mix({{1 - (b - c) / m, Dist::delta(0)}, {c, uo(m + 1)}, {(b - c) / m - c, ue(m)}});
}

Rat envelope_best_response(const Dist& opponent, const Rat& budget, const std::optional<Rat>& odd_floor) {
  if (budget < 0) throw Error("BadArgument", "budget must be non-negative");
  Int cl;
  mpz_cdiv_q(cl.get_mpz_t(), budget.get_num_mpz_t(), budget.get_den_mpz_t());
  const long N = opponent.max_support() + 1;
  const long T = odd_floor ? std::max(N, cl.get_si()) + 2 : N;
  std::vector<Rat> g(T + 1);
  for (long t = 0; t <= T; ++t) {
    Rat below = 0, above = 0;
    for (auto& [k, q] : opponent.weights()) {
      if (k < t) below += q;
      else if (k > t) above += q;
    }
    g[t] = below - above;
  }
  if (!odd_floor) {
    if (budget >= N) return Rat(1);
    std::optional<Rat> best;
    auto consider = [&](const Rat& v) {
      if (!best || v > *best) best = v;
    };
    for (long i = 0; i <= N; ++i) {
      if (i > budget) break;
      if (budget == i) consider(g[i]);
      for (long j = i + 1; j <= N; ++j) {
        if (j < budget) continue;
        Rat pj = (budget - i) / (j - i);
        consider((1 - pj) * g[i] + pj * g[j]);
      }
    }
    return *best;
  }
  const Rat& c = *odd_floor;
  std::optional<Rat> best;
  auto consider = [&](const Rat& v) {
    if (!best || v > *best) best = v;
  };
  auto odd = [](long t) { return t % 2 != 0; };
  for (long i = 0; i <= T; ++i) {
    if (budget == i && (odd(i) || c <= 0)) consider(g[i]);
    for (long j = i + 1; j <= T; ++j) {
      if (!(i < budget && budget < j)) continue;
      Rat pj = (budget - i) / (j - i), pi = 1 - pj;
      Rat om = (odd(i) ? pi : Rat(0)) + (odd(j) ? pj : Rat(0));
      if (om >= c) consider(pi * g[i] + pj * g[j]);
    }
  }
  // three-point supports with the odd-mass constraint tight
  for (long i = 0; i <= T; ++i)
    for (long j = i + 1; j <= T; ++j)
      for (long k = j + 1; k <= T; ++k) {
        int oi = odd(i), oj = odd(j), ok = odd(k);
        if (oi + oj + ok == 0 || oi + oj + ok == 3) continue;
        // Cramer's rule on [1 1 1 | 1], [i j k | budget], [oi oj ok | c]
        Rat A[3][3] = {{1, 1, 1}, {Rat(i), Rat(j), Rat(k)}, {Rat(oi), Rat(oj), Rat(ok)}};
        Rat rhs[3] = {1, budget, c};
        auto det3 = [](Rat M[3][3]) -> Rat {
          return M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                 M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                 M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
        };
        Rat D = det3(A);
        if (D == 0) continue;
        Rat p[3];
        bool feasible = true;
        for (int col = 0; col < 3; ++col) {
          Rat Mc[3][3];
          for (int r = 0; r < 3; ++r)
            for (int cc = 0; cc < 3; ++cc) Mc[r][cc] = cc == col ? rhs[r] : A[r][cc];
          p[col] = det3(Mc) / D;
          if (p[col] < 0) feasible = false;
        }
        if (feasible) consider(p[0] * g[i] + p[1] * g[j] + p[2] * g[k]);
      }
  if (!best) throw Error("Infeasible", "no distribution meets the odd-mass floor");
  return *best;
}

}  // namespace blotto
