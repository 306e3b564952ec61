#include "blotto/constructions.hpp"

#include <mutex>
#include <string>

namespace blotto {

namespace {

std::mutex g_log_mu;
std::vector<FallbackRecord> g_log;

std::string args(std::initializer_list<long> xs) {
  std::string s = "(";
  bool first = true;
  for (long x : xs) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

// Signed combination; the result must still be a distribution.
Dist lincomb(const std::vector<std::pair<Rat, Dist>>& parts) {
  std::map<long, Rat> acc;
  for (auto& [w, d] : parts)
    for (auto& [k, p] : d.weights()) acc[k] += w * p;
  for (auto it = acc.begin(); it != acc.end();)
    it = it->second == 0 ? acc.erase(it) : std::next(it);
  return Dist(std::move(acc));
}

Dist uo_d(long m) { return base_dist(U_ODD(), m); }
Dist ue_d(long m) { return base_dist(U_EVEN(), m); }

PartitionMatrix E_raw(long m) {
  PartitionMatrix M{2 * m, 2, {}};
  for (long i = 0; i <= m; ++i) M.rows.push_back({2 * i, 2 * (m - i)});
  return M;
}

PartitionMatrix RE_raw(long m) {
  if (m < 0 || m % 2) throw Error("BadM", "RE(m) needs even m >= 0");
  PartitionMatrix M{3 * m, 3, {}};
  for (long i = 0; i <= m / 2; ++i) M.rows.push_back({2 * i, m + 2 * i, 2 * m - 4 * i});
  for (long i = 0; i < m / 2; ++i) M.rows.push_back({2 * i, m + 2 * i + 2, 2 * m - 4 * i - 2});
  return M;
}

void need_K(long K) {
  if (K < 2) throw Error("BadArgument", "K must be >= 2");
}

void need_m(long m) {
  if (m < 1) throw Error("BadM", "m must be >= 1");
}

// Columns of O(m) copies implementing count * u_odd(m) on `rows` rows.
PartitionMatrix odd_columns(long m, long cols, long rows) {
  if (cols == 0) return zeros(rows, 0);
  PartitionMatrix blk = cols % 2 ? build_EO(EOKind::RO, m) : PartitionMatrix{};
  long pairs = cols % 2 ? (cols - 3) / 2 : cols / 2;
  std::vector<PartitionMatrix> parts;
  if (cols % 2) parts.push_back(blk);
  for (long i = 0; i < pairs; ++i) parts.push_back(build_EO(EOKind::O, m));
  PartitionMatrix one = hcat(parts);
  return repeat_v(one, rows / one.L());
}

PartitionMatrix even_columns(long m, long cols, long rows) {
  if (cols == 0) return zeros(rows, 0);
  return repeat_v(repeat_h(build_EO(EOKind::E, m), cols / 2, m + 1), rows / (m + 1));
}

}  // namespace

void validate(const PartitionMatrix& M) {
  if (M.K < 1 || M.rows.empty()) throw Error("BadMatrix", "matrix needs K >= 1 and at least one row");
  for (auto& row : M.rows) {
    if (static_cast<long>(row.size()) != M.K) throw Error("DimensionMismatch", "row length differs from K");
    long s = 0;
    for (long x : row) {
      if (x < 0) throw Error("BadMatrix", "negative entry");
      s += x;
    }
    if (s != M.budget) throw Error("BadMatrix", "row sum " + std::to_string(s) + " != budget " + std::to_string(M.budget));
  }
}

IntVec cardinality(const PartitionMatrix& M) {
  IntVec c;
  for (auto& row : M.rows)
    for (long x : row) c[x] += 1;
  return c;
}

Dist marginal(const PartitionMatrix& M) { return Dist::normalized(cardinality(M)); }

PartitionMatrix hcat(const std::vector<PartitionMatrix>& parts) {
  PartitionMatrix R;
  bool first = true;
  for (auto& P : parts) {
    if (first) {
      R.rows.assign(P.rows.size(), {});
      first = false;
    } else if (P.rows.size() != R.rows.size()) {
      throw Error("DimensionMismatch", "hcat of matrices with different row counts");
    }
    R.budget += P.budget;
    R.K += P.K;
    for (std::size_t i = 0; i < P.rows.size(); ++i)
      R.rows[i].insert(R.rows[i].end(), P.rows[i].begin(), P.rows[i].end());
  }
  return R;
}

PartitionMatrix vcat(const std::vector<PartitionMatrix>& parts) {
  if (parts.empty()) return {};
  PartitionMatrix R{parts[0].budget, parts[0].K, {}};
  for (auto& P : parts) {
    if (P.K != R.K || P.budget != R.budget)
      throw Error("DimensionMismatch", "vcat needs equal K and budget");
    R.rows.insert(R.rows.end(), P.rows.begin(), P.rows.end());
  }
  return R;
}

PartitionMatrix repeat_h(const PartitionMatrix& M, long copies, long rows) {
  if (copies == 0) return zeros(rows, 0);
  return hcat(std::vector<PartitionMatrix>(copies, M));
}

PartitionMatrix repeat_v(const PartitionMatrix& M, long copies) {
  return vcat(std::vector<PartitionMatrix>(copies, M));
}

PartitionMatrix zeros(long rows, long cols) {
  return PartitionMatrix{0, cols, std::vector<Row>(rows, Row(cols, 0))};
}

PartitionMatrix add_const(PartitionMatrix M, long c) {
  for (auto& row : M.rows)
    for (auto& x : row) x += c;
  M.budget += c * M.K;
  return M;
}

PartitionMatrix build_EO(EOKind kind, long m) {
  switch (kind) {
    case EOKind::E:
      need_m(m);
      return E_raw(m);
    case EOKind::O:
      need_m(m);
      return add_const(E_raw(m - 1), 1);
    case EOKind::RE:
      if (m < 1 || m % 2) throw Error("BadM", "RE(m) needs even m >= 2");
      return RE_raw(m);
    case EOKind::RO:
      if (m < 1 || m % 2 == 0) throw Error("BadM", "RO(m) needs odd m >= 1");
      return add_const(RE_raw(m - 1), 1);
  }
  throw Error("BadArgument", "unknown matrix kind");
}

PartitionMatrix implement_u(Base kind, long m, long C, long K) {
  need_m(m);
  need_K(K);
  if (C != m * K) throw Error("InfeasibleRange", "budget must equal m*K");
  bool odd = kind.kind == BaseKind::U_ODD;
  if (!odd && kind.kind != BaseKind::U_EVEN) throw Error("BadArgument", "only U_ODD and U_EVEN");
  if (odd ? (C - K) % 2 != 0 : C % 2 != 0)
    throw Error("InfeasibleParity", std::string(odd ? "U_ODD" : "U_EVEN") + args({m, C, K}));
  EOKind pair = odd ? EOKind::O : EOKind::E;
  std::vector<PartitionMatrix> parts;
  long copies = K / 2;
  if (K % 2) {
    parts.push_back(build_EO(odd ? EOKind::RO : EOKind::RE, m));
    copies = (K - 3) / 2;
  }
  for (long i = 0; i < copies; ++i) parts.push_back(build_EO(pair, m));
  PartitionMatrix M = hcat(parts);
  self_check(M, base_dist(kind, m), std::string(odd ? "U_ODD" : "U_EVEN") + args({m, C, K}));
  return M;
}

// ---- Player B, even budget ----

Dist target_prop3_B(long m, long K, long B) {
  Rat q = rat(B, K * m);
  return mix({{1 - q, Dist::delta(0)}, {q, ue_d(m)}});
}

PartitionMatrix build_prop3_B(long m, long K, long B) {
  need_m(m);
  need_K(K);
  if (B % 2) throw Error("InfeasibleParity", "B must be even");
  if (B < 2 * m || B > K * m) throw Error("InfeasibleRange", "need 2m <= B <= Km");
  long L = B / m, r = B % m;
  PartitionMatrix M;
  if (L == K) {
    M = implement_u(U_EVEN(), m, B, K);
  } else if (L % 2) {
    M = hcat({blocks::S_even(m, r), even_columns(m, L - 3, m * (m + 1)), zeros(m * (m + 1), K - L - 1)});
  } else {
    M = hcat({blocks::T_even(m, r), even_columns(m, L - 2, m * (m + 1)), zeros(m * (m + 1), K - L - 1)});
  }
  self_check(M, target_prop3_B(m, K, B), "prop3_B" + args({m, K, B}));
  return M;
}

// ---- Player A, same parity ----

Dist target_prop4_A(long m, long K, long A) {
  if (m < 1 || A / K != m || A % K == 0) throw Error("BadCase", "need A = mK + R with 0 < R < K");
  Rat a = rat(A % K, K);
  return mix({{1 - a, uo_d(m)}, {a, uo_d(m + 1)}});
}

PartitionMatrix build_prop4_A(long m, long K, long A) {
  need_m(m);
  need_K(K);
  if (A % K == 0 || A / K != m || A <= K) throw Error("BadCase", "need K !| A, A > K, m = floor(A/K)");
  if ((A - K) % 2) throw Error("InfeasibleParity", "A and K differ in parity");
  long r = A % K;
  const long rows = m * (m + 1);
  PartitionMatrix M;
  if (K % 2 == 0) {
    M = hcat({odd_columns(m, K - r, rows), odd_columns(m + 1, r, rows)});
  } else if (r % 2) {
    M = hcat({blocks::R_odd_ii(m), odd_columns(m, K - r - 2, rows), odd_columns(m + 1, r - 1, rows)});
  } else {
    M = hcat({blocks::R_odd_iii(m), odd_columns(m, K - r - 1, rows), odd_columns(m + 1, r - 2, rows)});
  }
  self_check(M, target_prop4_A(m, K, A), "prop4_A" + args({m, K, A}));
  return M;
}

// ---- Player A, any parity ----

Dist target_prop5_A(long m, long K, long A, Point p) {
  if (m < 1 || A / K != m || A % K == 0) throw Error("BadCase", "need A = mK + R with 0 < R < K");
  Rat a = rat(A % K, K);
  Rat delta = rat(2 * m + 1, m + 1);
  Dist vb = vbar(m);
  if (p == Point::P1) return mix({{a * delta, vb}, {1 - a * delta, uo_d(m)}});
  Rat s = (1 - a) / a, t = (2 * a - 1) / a;
  return lincomb({{s * a * delta, vb},
                  {s * (1 - a * delta) + t * (1 - a), uo_d(m)},
                  {t * a, uo_d(m + 1)}});
}

PartitionMatrix build_prop5_A(long m, long K, long A, Point p) {
  need_m(m);
  need_K(K);
  if (A % K == 0 || A / K != m || A <= K) throw Error("BadCase", "need K !| A, A > K, m = floor(A/K)");
  const long r = A % K, rows = m * (m + 1);
  const std::string name = std::string("prop5_A/") + (p == Point::P1 ? "P1" : "P2") + args({m, K, A});
  PartitionMatrix M;
  if (p == Point::P1) {
    if (2 * r > K) throw Error("BadAlpha", "point 1 needs alpha <= 1/2");
    if (K == 3 && (m == 2 || m == 4 || m == 6)) throw Error("ExcludedCase", "K = 3 with m in {2,4,6}");
    PartitionMatrix R = blocks::R_pair(m);
    if (K % 2 == 0 || (m % 2 == 1 && K != 2 * r + 1)) {
      M = hcat({repeat_h(R, r, rows), odd_columns(m, K - 2 * r, rows)});
    } else if (m % 2 == 1) {
      M = hcat({blocks::S_p1_ii(m), repeat_h(R, r - 1, rows)});
    } else if (r == 1 && K >= 5) {
      M = hcat({blocks::S_p1_iii(m), odd_columns(m, K - 5, rows)});
    } else if (r >= 2 && m <= 8) {
      M = hcat({blocks::T_p1_iv(m), repeat_h(R, r - 2, rows), odd_columns(m, K - 2 * r - 1, rows)});
    } else {
      M = hcat({blocks::S_p1_v(m), repeat_h(R, r - 1, rows), odd_columns(m, K - 2 * r - 1, rows)});
    }
  } else {
    if (2 * r <= K) throw Error("BadAlpha", "point 2 needs alpha > 1/2");
    PartitionMatrix R = blocks::R_pair(m);
    if ((m * K) % 2 == 0 && 2 * r != K + 1) {
      M = hcat({repeat_h(R, K - r, rows), odd_columns(m + 1, 2 * r - K, rows)});
    } else if (m % 2 == 0) {
      M = hcat({blocks::S_p2_ii(m), repeat_h(R, K - r - 1, rows)});
    } else {
      M = hcat({blocks::S_p2_iii(m), repeat_h(R, K - r - 1, rows), odd_columns(m + 1, 2 * r - K - 1, rows)});
    }
  }
  self_check(M, target_prop5_A(m, K, A, p), name);
  return M;
}

// ---- Player B, odd budget ----

Dist target_prop6_B(long m, long K) {
  long B = 2 * m - 1;
  std::vector<std::pair<Rat, Dist>> parts{{1 - rat(B, K * m), Dist::delta(0)}, {rat(1, K), uo_d(m)}};
  if (m >= 2) parts.push_back({rat(m - 1, K * m), base_dist(U_ODD_UP(), m)});
  return mix(parts);
}

PartitionMatrix build_prop6_B(long m, long K) {
  need_m(m);
  need_K(K);
  PartitionMatrix M = hcat({blocks::staircase(m), zeros(m, K - 2)});
  self_check(M, target_prop6_B(m, K), "prop6_B" + args({m, K}));
  return M;
}

Dist target_prop7_B(long m, long K, long B) {
  return mix({{1 - rat(B, K * m), Dist::delta(0)}, {rat(1, K), uo_d(m)}, {rat(B - m, K * m), ue_d(m)}});
}

PartitionMatrix build_prop7_B(long m, long K, long B) {
  need_m(m);
  need_K(K);
  if (B % 2 == 0) throw Error("InfeasibleParity", "B must be odd");
  if (B <= 2 * m || B > K * m) throw Error("InfeasibleRange", "need 2m < B <= Km");
  const long L = B / m, r = B % m, rows = m * (m + 1);
  const std::string name = "prop7_B" + args({m, K, B});
  Dist target = target_prop7_B(m, K, B);
  if (L == K) {
    // search a 3-column core for (1/3)u_odd + (2/3)u_even, pad with E(m) pairs
    Dist core_target = mix({{rat(1, 3), uo_d(m)}, {rat(2, 3), ue_d(m)}});
    auto core = generic_implement(core_target, 3 * m, 3);
    if (!core) throw Error("NotFound", name + ": search found no matrix");
    PartitionMatrix M = *core;
    if (K > 3) {
      const long total = lcm_l(M.L(), m + 1);
      M = hcat({repeat_v(M, total / M.L()), even_columns(m, K - 3, total)});
    }
    self_check(M, target, name);
    return M;
  }
  PartitionMatrix M;
  if (L % 2) {
    M = hcat({blocks::S_dec(m, r), even_columns(m, L - 3, rows), zeros(rows, K - L - 1)});
  } else {
    M = hcat({blocks::T_dec(m, r), even_columns(m, L - 2, rows), zeros(rows, K - L - 1)});
  }
  self_check(M, target, name);
  return M;
}

Dist target_prop10_B(long m, long K, long B) {
  return mix({{1 - rat(B - 1, K * m), Dist::delta(0)},
              {rat(1, K), uo_d(m + 1)},
              {rat(B - 1 - m, K * m), ue_d(m)}});
}

PartitionMatrix build_prop10_B(long m, long K, long B) {
  need_m(m);
  need_K(K);
  if (B % 2 == 0) throw Error("InfeasibleParity", "B must be odd");
  if (B < 2 * m + 1 || B > K * m) throw Error("InfeasibleRange", "need 2m+1 <= B <= Km");
  const long L = (B - 1) / m, r = (B - 1) % m, rows = m * (m + 1);
  PartitionMatrix M;
  if (L % 2) {
    M = hcat({blocks::S_inc(m, r), even_columns(m, L - 3, rows), zeros(rows, K - L - 1)});
  } else {
    M = hcat({blocks::T_inc(m, r), even_columns(m, L - 2, rows), zeros(rows, K - L - 1)});
  }
  self_check(M, target_prop10_B(m, K, B), "prop10_B" + args({m, K, B}));
  return M;
}

// ---- checks and fallback log ----

void self_check(const PartitionMatrix& M, const Dist& target, const std::string& name) {
  try {
    validate(M);
  } catch (const Error& e) {
    throw Error("ConstructionMismatch", name + ": " + e.what());
  }
  if (marginal(M) != target) throw Error("ConstructionMismatch", name + ": cardinality differs from target");
}

void self_check(const PartitionMatrix& M, long budget, const IntVec& target, const std::string& name) {
  if (M.budget != budget) throw Error("ConstructionMismatch", name + ": wrong budget");
  try {
    validate(M);
  } catch (const Error& e) {
    throw Error("ConstructionMismatch", name + ": " + e.what());
  }
  if (cardinality(M) != target) throw Error("ConstructionMismatch", name + ": cardinality differs from target");
}

void record_fallback(FallbackRecord r) {
  std::lock_guard lk(g_log_mu);
  g_log.push_back(std::move(r));
}

std::vector<FallbackRecord> fallback_log() {
  std::lock_guard lk(g_log_mu);
  return g_log;
}

void clear_fallback_log() {
  std::lock_guard lk(g_log_mu);
  g_log.clear();
}

}  // namespace blotto
