#include "blotto/blotto.hpp"

#include <algorithm>
#include <functional>

#include "blotto/verify.hpp"

namespace blotto {

namespace {

constexpr std::pair<CaseTag, const char*> kTags[] = {
    {CaseTag::LOW_B_TRIVIAL, "LOW_B_TRIVIAL"},
    {CaseTag::LOW_B_EQUAL, "LOW_B_EQUAL"},
    {CaseTag::HIGH_B_NDIV_EVEN, "HIGH_B_NDIV_EVEN"},
    {CaseTag::HIGH_B_DIV, "HIGH_B_DIV"},
    {CaseTag::HIGH_B_NDIV_ODD, "HIGH_B_NDIV_ODD"},
    {CaseTag::UNSOLVED_INTERMEDIATE, "UNSOLVED_INTERMEDIATE"},
    {CaseTag::UNSOLVED_EXCLUDED, "UNSOLVED_EXCLUDED"},
    {CaseTag::UNSOLVED_HART_REGIME, "UNSOLVED_HART_REGIME"},
    {CaseTag::UNSOLVED_LOW_B, "UNSOLVED_LOW_B"},
};

void check_spec(const GameSpec& s) {
  if (s.K < 2) throw Error("BadGame", "K must be >= 2");
  if (!(s.A > s.B && s.B >= 1)) throw Error("BadGame", "need A > B >= 1");
}

PartitionMatrix with_fallback(const std::string& name, const std::function<PartitionMatrix()>& build,
                              const std::function<Dist()>& target, long C, long K) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.kind() != "ConstructionMismatch") throw;
    auto found = generic_implement(target(), C, K);
    record_fallback({name, e.what(), found.has_value()});
    if (!found) throw Error("ConstructionMismatch", name + ": fallback search failed too");
    return *found;
  }
}

PartitionMatrix low_b_A(long m, long R, long K) {
  PartitionMatrix M{m * K + R, K, {}};
  std::vector<char> pick(K, 0);
  std::fill(pick.begin(), pick.begin() + R, 1);
  do {
    Row row(K);
    for (long i = 0; i < K; ++i) row[i] = m + pick[i];
    M.rows.push_back(row);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return M;
}

std::string args(long a, long b, long c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

std::string tag_name(CaseTag t) {
  for (auto& [k, n] : kTags)
    if (k == t) return n;
  return "?";
}

CaseTag parse_tag(const std::string& s) {
  for (auto& [k, n] : kTags)
    if (s == n) return k;
  throw Error("BadArgument", "unknown case tag " + s);
}

bool is_solved(CaseTag t) {
  return t != CaseTag::UNSOLVED_INTERMEDIATE && t != CaseTag::UNSOLVED_EXCLUDED &&
         t != CaseTag::UNSOLVED_HART_REGIME && t != CaseTag::UNSOLVED_LOW_B;
}

GameCase classify(const GameSpec& s) {
  check_spec(s);
  const long A = s.A, B = s.B, K = s.K;
  const long m = A / K, R = A % K;
  GameCase gc{CaseTag::UNSOLVED_INTERMEDIATE, m, R, rat(R, K)};
  if (B < m) {
    gc.tag = CaseTag::LOW_B_TRIVIAL;
  } else if (B == m) {
    // the uniform-concentration profile stops being an equilibrium here
    gc.tag = m >= 3 && R <= K - 3 ? CaseTag::UNSOLVED_LOW_B : CaseTag::LOW_B_EQUAL;
  } else if (R == 0) {
    if ((A - K) % 2) gc.tag = CaseTag::UNSOLVED_HART_REGIME;
    else if (B >= 2 * m - 2) gc.tag = CaseTag::HIGH_B_DIV;
  } else if (B > K * m) {
    gc.tag = CaseTag::UNSOLVED_HART_REGIME;
  } else if (B % 2 == 0 && B >= 2 * m) {
    gc.tag = CaseTag::HIGH_B_NDIV_EVEN;
  } else if (B % 2 == 1 && B > 2 * m) {
    bool excluded = K == 3 && (A == 7 || A == 13 || A == 19);
    gc.tag = excluded ? CaseTag::UNSOLVED_EXCLUDED : CaseTag::HIGH_B_NDIV_ODD;
  }
  return gc;
}

Rat blotto_value(const GameSpec& s) {
  GameCase gc = classify(s);
  const long A = s.A, B = s.B, K = s.K, R = gc.R;
  Rat base = rat(A - B, A) - rat(B, A) * rat(R * (K - R), (A - R) * (A + K - R));
  switch (gc.tag) {
    case CaseTag::LOW_B_TRIVIAL:
      return 1;
    case CaseTag::LOW_B_EQUAL:
      return 1 - rat(K - R, K * K);
    case CaseTag::HIGH_B_NDIV_EVEN:
      return base;
    case CaseTag::HIGH_B_DIV:
      return 1 - rat(B, A);
    case CaseTag::HIGH_B_NDIV_ODD:
      return base + rat(std::min(R, K - R), (A - R) * (A + K - R));
    default:
      throw Error("UnsolvedCase", tag_name(gc.tag));
  }
}

std::pair<PartitionMatrix, PartitionMatrix> equilibrium_strategies(const GameSpec& s) {
  GameCase gc = classify(s);
  if (!is_solved(gc.tag)) throw Error("UnsolvedCase", tag_name(gc.tag));
  const long A = s.A, B = s.B, K = s.K, m = gc.m, R = gc.R;

  PartitionMatrix X, Y;
  switch (gc.tag) {
    case CaseTag::LOW_B_TRIVIAL:
    case CaseTag::LOW_B_EQUAL:
      X = low_b_A(m, R, K);
      break;
    case CaseTag::HIGH_B_DIV:
      X = implement_u(U_ODD(), m, A, K);
      break;
    default: {
      bool prop4 = gc.tag == CaseTag::HIGH_B_NDIV_EVEN && (A - K) % 2 == 0;
      if (prop4) {
        X = with_fallback("prop4_A" + args(m, K, A), [&] { return build_prop4_A(m, K, A); },
                          [&] { return target_prop4_A(m, K, A); }, A, K);
      } else {
        Point p = 2 * R <= K ? Point::P1 : Point::P2;
        X = with_fallback("prop5_A" + args(m, K, A), [&] { return build_prop5_A(m, K, A, p); },
                          [&] { return target_prop5_A(m, K, A, p); }, A, K);
      }
    }
  }

  switch (gc.tag) {
    case CaseTag::LOW_B_TRIVIAL: {
      Row r(K, 0);
      r[0] = B;
      Y = PartitionMatrix{B, K, {r}};
      break;
    }
    case CaseTag::LOW_B_EQUAL:
      Y = PartitionMatrix{B, K, {}};
      for (long k = 0; k < K; ++k) {
        Row r(K, 0);
        r[k] = B;
        Y.rows.push_back(r);
      }
      break;
    case CaseTag::HIGH_B_NDIV_EVEN:
      Y = with_fallback("prop3_B" + args(m, K, B), [&] { return build_prop3_B(m, K, B); },
                        [&] { return target_prop3_B(m, K, B); }, B, K);
      break;
    case CaseTag::HIGH_B_DIV:
      if (B % 2 == 0) {
        long mb = B >= 2 * m ? m : m - 1;
        Y = with_fallback("prop3_B" + args(mb, K, B), [&] { return build_prop3_B(mb, K, B); },
                          [&] { return target_prop3_B(mb, K, B); }, B, K);
      } else if (B == 2 * m - 1) {
        Y = with_fallback("prop6_B" + args(m, K, B), [&] { return build_prop6_B(m, K); },
                          [&] { return target_prop6_B(m, K); }, B, K);
      } else {
        Y = with_fallback("prop7_B" + args(m, K, B), [&] { return build_prop7_B(m, K, B); },
                          [&] { return target_prop7_B(m, K, B); }, B, K);
      }
      break;
    default:
      if (2 * R < K) {
        Y = with_fallback("prop7_B" + args(m, K, B), [&] { return build_prop7_B(m, K, B); },
                          [&] { return target_prop7_B(m, K, B); }, B, K);
      } else {
        Y = with_fallback("prop10_B" + args(m, K, B), [&] { return build_prop10_B(m, K, B); },
                          [&] { return target_prop10_B(m, K, B); }, B, K);
      }
  }
  return {X, Y};
}

EquilibriumReport solve(const GameSpec& s) {
  auto [X, Y] = equilibrium_strategies(s);
  EquilibriumReport rep{s, classify(s), X, Y, blotto_value(s), {}};
  rep.certificate = certify(X, Y, s.A, s.B, s.K);
  const Certificate& c = rep.certificate;
  if (!c.equilibrium || c.secured_by_A != rep.value)
    throw Error("CertificationFailed", "(" + std::to_string(s.A) + "," + std::to_string(s.B) + "," +
                                          std::to_string(s.K) + "): secured " + to_string(c.secured_by_A) +
                                          " / " + to_string(c.secured_by_B) + ", claimed " +
                                          to_string(rep.value));
  return rep;
}

Rat payoff_lotto(const PartitionMatrix& x, const PartitionMatrix& y) {
  if (x.K != y.K) throw Error("DimensionMismatch", "matrices have different K");
  return payoff_H(marginal(x), marginal(y));
}

Allocation symmetrize(const Row& x, long K) {
  if (static_cast<long>(x.size()) != K) throw Error("DimensionMismatch", "partition length differs from K");
  if (K > 6) throw Error("TooLarge", "symmetrize materializes at most 6 battlefields");
  Row p = x;
  std::sort(p.begin(), p.end());
  std::vector<Row> perms;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  Rat q = rat(1, static_cast<long>(perms.size()));
  Allocation out;
  for (auto& r : perms) out.emplace_back(r, q);
  return out;
}

Rat payoff_blotto_exhaustive(const Allocation& x, const Allocation& y) {
  if (x.empty() || y.empty()) throw Error("BadArgument", "empty strategy");
  const std::size_t K = x.front().first.size();
  if (K > 6) throw Error("TooLarge", "exhaustive payoff limited to 6 battlefields");
  Rat s = 0;
  for (auto& [a, pa] : x)
    for (auto& [b, pb] : y) {
      if (a.size() != K || b.size() != K) throw Error("DimensionMismatch", "allocations differ in length");
      long w = 0;
      for (std::size_t i = 0; i < K; ++i) w += (a[i] > b[i]) - (a[i] < b[i]);
      s += pa * pb * rat(w, static_cast<long>(K));
    }
  return s;
}

}  // namespace blotto
