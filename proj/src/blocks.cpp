// Block families. Each family is verified against its own
// cardinality vector before it is returned.
#include <string>

#include "blotto/constructions.hpp"

namespace blotto::blocks {
namespace {

using Rows = std::vector<Row>;

void push(Rows& M, const Row& r, long times = 1) {
  for (long t = 0; t < times; ++t) M.push_back(r);
}

long cdiv(long a, long b) { return (a + b - 1) / b; }

IntVec delta0(long n) { return n ? IntVec{{0, n}} : IntVec{}; }
IntVec uo(long m) { return base_vector(U_ODD(), m); }
IntVec ue(long m) { return base_vector(U_EVEN(), m); }

IntVec vsum(long m) {
  IntVec s;
  for (long j = 1; j <= m; ++j) s = add(s, base_vector(V(j), m));
  return s;
}

PartitionMatrix finish(Rows rows, long budget, long K, const IntVec& target,
                       const std::string& name) {
  PartitionMatrix M{budget, K, std::move(rows)};
  self_check(M, budget, target, name);
  return M;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error("BadCase", what);
}

// S(m,r) split into its parts so that the increment rules can address them.
struct Part {
  std::string block;
  Rows rows;
};

std::vector<Part> S_parts(long m, long r) {
  std::vector<Part> P;
  long h = m + r;
  for (long i = 1; i <= (h - 2) / 2; ++i) P.push_back({"I", Rows(2, {2 * i, h - 2 * i, 0, 2 * m})});
  for (long i = 1; i <= (h - 4) / 2; ++i)
    P.push_back({"II", Rows(h / 2 - i - 1, {2 * i, h - 2 * i, 2 * i, 2 * m - 2 * i})});
  for (long i = 1; i <= (h - 4) / 2; ++i)
    P.push_back({"III", Rows(h / 2 - i - 1, {h - 2 * i, 2 * i, 2 * i, 2 * m - 2 * i})});
  for (long i = 0; i <= (m - r) / 2; ++i)
    P.push_back({"IV", Rows((m - r) / 2 - i + 1, {h + 2 * i, 2 * m - 2 * i, 0, 0})});
  for (long i = 0; i <= (m - r) / 2; ++i)
    P.push_back({"V", Rows((m - r) / 2 - i + 1, {2 * m - 2 * i, h + 2 * i, 0, 0})});
  for (long j = 1; j <= (m - r + 2) / 2; ++j)
    for (long i = 1; i <= (h - 2) / 2; ++i)
      P.push_back({"VI", Rows(1, {2 * i, 2 * m - 2 * j - 2 * i + 2, 0, h + 2 * j - 2})});
  for (long j = 1; j <= (m - r + 2) / 2; ++j)
    for (long i = 1; i <= (h - 2) / 2; ++i)
      P.push_back({"VII", Rows(1, {h + 2 * j - 2, 0, 2 * m - 2 * j - 2 * i + 2, 2 * i})});
  return P;
}

long T_repeat(long i, long m, long r) {
  if (i <= r / 2 - 3 && i <= m - r + 2) return m - r + i + 4;
  if (m - r + 3 <= i && i <= r / 2 - 3) return 2 * m - 2 * r + 6;
  if (r / 2 - 2 <= i && i <= m - r + 2) return m - r / 2 + 2;
  return 2 * m - 3 * r / 2 - i + 4;
}

// T(m,r); T^I and T^II,j keep their parts (index i, and j for T^II).
struct TParts {
  std::vector<std::pair<long, Rows>> I;
  std::vector<std::tuple<long, long, Rows>> II;
  Rows rest;  // T^III .. T^VII
};

TParts T_parts(long m, long r) {
  TParts T;
  if (r == 0) {
    for (long i = 0; i <= m; ++i) T.I.push_back({i, Rows(m, {0, 2 * i, 2 * m - 2 * i})});
    return T;
  }
  for (long i = 0; i <= m - r / 2; ++i)
    T.I.push_back({i, Rows(T_repeat(i, m, r), {0, r + 2 * i, 2 * m - 2 * i})});
  for (long j = 1; j < r / 2; ++j)
    for (long i = 0; i <= m - r / 2; ++i)
      T.II.emplace_back(j, i, Rows(2, {2 * j, r + 2 * i, 2 * m - 2 * j - 2 * i}));
  Rows& R = T.rest;
  for (long j = 1; j < r / 2; ++j)
    for (long i = 0; i < cdiv(j, 2); ++i) push(R, {2 * j, r - 2 * j + 2 * i, 2 * m - 2 * i}, 2);
  for (long j = 1; j < r / 4; ++j)
    for (long i = 0; i <= r / 2 - 2 * j - 2; ++i)
      push(R, {r + 2 * i, 2 * m - 2 * j - 2 * i, 2 * j}, 2);
  for (long j = 1; j < cdiv(r, 4); ++j)
    for (long i = 0; i <= r / 2 - 2 * j - 1; ++i)
      push(R, {2 * j, r + 2 * i, 2 * m - 2 * j - 2 * i}, 2);
  for (long j = 1; j < cdiv(r, 4); ++j)
    for (long i = 0; i < j; ++i) push(R, {r - 2 * j + 2 * i, 2 * m - 2 * i, 2 * j}, 2);
  for (long j = cdiv(r, 4); j <= r / 2 - 2; ++j)
    for (long i = 0; i <= r / 2 - j - 2; ++i) push(R, {r - 2 * j + 2 * i, 2 * m - 2 * i, 2 * j}, 2);
  return T;
}

// Alternate the adjustment between two columns over consecutive rows.
void alternate(Rows& rows, long delta) {
  for (std::size_t k = 0; k < rows.size(); ++k) rows[k][k % 2 == 0 ? 0 : 1] += delta;
}

Rows P1_iii_block(long m, int q) {
  Rows M;
  switch (q) {
    case 1:
      for (long i = 0; i <= (m - 2) / 2; ++i) push(M, {1, 2 * m - 1, 1, 2 * m - 2 * i - 1, m + 2 * i + 1}, 2);
      break;
    case 2:
      for (long i = 0; i <= (m - 2) / 2; ++i) push(M, {2 * m, 1, 2 * i + 1, m - 2 * i - 1, 2 * m}, 2);
      break;
    case 3:
      for (long i = 0; i <= (m - 2) / 2; ++i)
        push(M, {2 * m - 4 * i - 1, 4 * i + 1, 2 * i + 1, 2 * m - 4 * i - 1, m + 2 * i + 1}, 2 * i + 1);
      break;
    case 4:
      for (long i = 0; i <= (m - 4) / 2 && m >= 4; ++i)
        push(M, {2 * m - 4 * i - 2, 4 * i + 3, 2 * i + 1, 2 * m - 4 * i - 2, m + 2 * i + 1}, m - 2 * i - 3);
      break;
    case 5:
      for (long i = 0; i <= (m - 4) / 2 && m >= 4; ++i)
        push(M, {2 * m - 4 * i - 3, 4 * i + 3, 2 * i + 3, 2 * m - 4 * i - 3, m + 2 * i + 1}, 2 * i + 2);
      break;
    case 6:
      for (long i = 0; i <= (m - 6) / 2 && m >= 6; ++i)
        push(M, {2 * m - 4 * i - 4, 4 * i + 5, 2 * i + 3, 2 * m - 4 * i - 4, m + 2 * i + 1}, m - 2 * i - 4);
      break;
    case 7:
      for (long i = 0; i <= (m - 2) / 2; ++i)
        push(M, {2 * i + 2, 2 * m - 2 * i - 1, m - 2 * i - 1, 2 * i + 2, 2 * m - 1}, i == 0 ? 1 : 2);
      break;
    case 8:
      for (long i = 0; i <= (m - 4) / 2 && m >= 4; ++i)
        push(M, {m + 2 * i + 2, m - 2 * i - 1, 1, m + 2 * i + 2, 2 * m - 2 * i - 3}, 2);
      break;
  }
  return M;
}

}  // namespace

PartitionMatrix S_even(long m, long r) {
  require(m >= 1 && r >= 0 && r <= m && (m - r) % 2 == 0, "S(m,r) needs 0 <= r <= m, r = m mod 2");
  Rows M;
  for (auto& p : S_parts(m, r)) M.insert(M.end(), p.rows.begin(), p.rows.end());
  return finish(std::move(M), 3 * m + r, 4, add(delta0((m - r) * (m + 1)), scale(ue(m), 3 * m + r)),
                "S(" + std::to_string(m) + "," + std::to_string(r) + ")");
}

PartitionMatrix T_even(long m, long r) {
  require(m >= 1 && r >= 0 && r <= m && r % 2 == 0, "T(m,r) needs even 0 <= r <= m");
  TParts T = T_parts(m, r);
  Rows M;
  for (auto& [i, rows] : T.I) M.insert(M.end(), rows.begin(), rows.end());
  for (auto& [j, i, rows] : T.II) M.insert(M.end(), rows.begin(), rows.end());
  M.insert(M.end(), T.rest.begin(), T.rest.end());
  return finish(std::move(M), 2 * m + r, 3, add(delta0((m - r) * (m + 1)), scale(ue(m), 2 * m + r)),
                "T(" + std::to_string(m) + "," + std::to_string(r) + ")");
}

PartitionMatrix S_dec(long m, long r) {
  PartitionMatrix S = S_even(m, r + 1);
  for (auto& row : S.rows) row[0] -= 1;
  IntVec z = add(add(delta0((m - r) * (m + 1)), scale(uo(m), m + 1)), scale(ue(m), 2 * m + r));
  return finish(std::move(S.rows), 3 * m + r, 4, z,
                "S~dec(" + std::to_string(m) + "," + std::to_string(r) + ")");
}

PartitionMatrix T_dec(long m, long r) {
  require(r % 2 == 1 && r + 1 <= m, "decremented T needs odd r < m");
  TParts T = T_parts(m, r + 1);
  Rows M;
  for (auto& [i, rows] : T.I)
    for (auto row : rows) {
      row[1] -= 1;
      M.push_back(row);
    }
  Rows rest;
  for (auto& [j, i, rows] : T.II) rest.insert(rest.end(), rows.begin(), rows.end());
  rest.insert(rest.end(), T.rest.begin(), T.rest.end());
  alternate(rest, -1);
  M.insert(M.end(), rest.begin(), rest.end());
  IntVec z = add(add(delta0((m - r) * (m + 1)), scale(uo(m), m + 1)), scale(ue(m), m + r));
  return finish(std::move(M), 2 * m + r, 3, z,
                "T~dec(" + std::to_string(m) + "," + std::to_string(r) + ")");
}

PartitionMatrix S_inc(long m, long r) {
  require(m >= 1 && r >= 0 && r < m && (m - r) % 2 == 0, "incremented S needs r < m, r = m mod 2");
  Rows M;
  for (auto& p : S_parts(m, r)) {
    Rows rows = p.rows;
    if (p.block == "I") {
      rows[0][0] += 1;
      rows[1][2] += 1;
    } else if (p.block == "IV") {
      rows[0][2] += 1;
      for (std::size_t k = 1; k < rows.size(); ++k) rows[k][0] += 1;
    } else {
      for (auto& row : rows) row[0] += 1;
    }
    M.insert(M.end(), rows.begin(), rows.end());
  }
  IntVec z = add(add(delta0((m - r) * (m + 1)), scale(uo(m + 1), m)), scale(ue(m), 2 * m + r));
  return finish(std::move(M), 3 * m + r + 1, 4, z,
                "S~inc(" + std::to_string(m) + "," + std::to_string(r) + ")");
}

PartitionMatrix T_inc(long m, long r) {
  require(m >= 1 && r >= 0 && r < m && r % 2 == 0, "incremented T needs even r < m");
  TParts T = T_parts(m, r);
  Rows M;
  if (r == 0) {
    for (auto& [i, rows] : T.I)
      for (auto row : rows) {
        row[1] += 1;
        M.push_back(row);
      }
  } else {
    for (auto& [i, rows] : T.I) {
      long head = (i >= 1 && i <= r / 2 - 1) ? 2 : 1;
      for (std::size_t k = 0; k < rows.size(); ++k) {
        Row row = rows[k];
        row[static_cast<long>(k) < head ? 0 : 1] += 1;
        M.push_back(row);
      }
    }
    for (auto& [j, i, rows] : T.II) {
      Rows part = rows;
      if (i == j) {
        for (auto& row : part) row[1] += 1;
      } else {
        part[0][0] += 1;
        part[1][1] += 1;
      }
      M.insert(M.end(), part.begin(), part.end());
    }
    Rows rest = T.rest;
    alternate(rest, +1);
    M.insert(M.end(), rest.begin(), rest.end());
  }
  IntVec z = add(add(delta0((m - r) * (m + 1)), scale(uo(m + 1), m)), scale(ue(m), m + r));
  return finish(std::move(M), 2 * m + r + 1, 3, z,
                "T~inc(" + std::to_string(m) + "," + std::to_string(r) + ")");
}

PartitionMatrix R_odd_ii(long m) {
  require(m >= 2 && m % 2 == 0, "R(m) case (ii) needs even m");
  Rows M;
  for (long i = 0; i < m / 2; ++i) push(M, {2 * i + 1, 2 * m - 4 * i - 1, m + 2 * i + 1}, m - 2);
  for (long i = 0; i < m / 2 - 1; ++i) push(M, {2 * i + 3, 2 * m - 4 * i - 3, m + 2 * i + 1}, m - 2);
  for (long i = 0; i < m / 2 - 1; ++i) push(M, {2 * i + 3, m - 2 * i - 1, 2 * m - 1}, 2);
  for (long i = 0; i < m / 2; ++i) push(M, {1, 2 * m - 2 * i - 1, m + 2 * i + 1}, 2);
  for (long i = 0; i < m / 2; ++i) push(M, {2 * i + 1, m - 2 * i - 1, 2 * m + 1}, 2);
  for (long i = 0; i < m / 2; ++i) push(M, {1, 2 * m - 2 * i - 1, m + 2 * i + 1}, 2);
  return finish(std::move(M), 3 * m + 1, 3, add(scale(uo(m), 2 * (m + 1)), scale(uo(m + 1), m)),
                "R_ii(" + std::to_string(m) + ")");
}

PartitionMatrix R_odd_iii(long m) {
  require(m >= 1 && m % 2 == 1, "R(m) case (iii) needs odd m");
  Rows M;
  for (long i = 0; i <= (m - 1) / 2; ++i) push(M, {2 * i + 1, 2 * m - 4 * i - 1, m + 2 * i + 2}, m - 1);
  for (long i = 0; i <= (m - 3) / 2 && m >= 3; ++i)
    push(M, {2 * i + 3, 2 * m - 4 * i - 3, m + 2 * i + 2}, m - 1);
  for (long i = 0; i <= (m - 3) / 2 && m >= 3; ++i) push(M, {2 * i + 3, m - 2 * i - 2, 2 * m + 1}, 2);
  for (long i = 0; i <= (m - 1) / 2; ++i) push(M, {1, 2 * m - 2 * i - 1, m + 2 * i + 2}, 2);
  return finish(std::move(M), 3 * m + 2, 3, add(scale(uo(m), m + 1), scale(uo(m + 1), 2 * m)),
                "R_iii(" + std::to_string(m) + ")");
}

PartitionMatrix R_pair(long m) {
  require(m >= 1, "R(m) needs m >= 1");
  Rows M;
  for (long i = 1; i <= m; ++i) push(M, {2 * i, 2 * m - 2 * i + 1}, 2 * i);
  return finish(std::move(M), 2 * m + 1, 2, add(vsum(m), uo(m)), "R(" + std::to_string(m) + ")");
}

PartitionMatrix S_p1_ii(long m) {
  require(m >= 1 && m % 2 == 1, "point 1 case (ii) needs odd m");
  Rows M;
  for (long i = 1; i <= (m - 1) / 2; ++i) push(M, {2 * m - 2 * i - 1, m - 2 * i, 4 * i + 2}, 2 * i);
  for (long i = 1; i <= (m - 1) / 2; ++i) push(M, {2 * m - 2 * i + 1, m - 2 * i, 4 * i}, 2 * i);
  for (long j = 0; j <= (m - 1) / 2; ++j)
    for (long i = 0; i <= (m - 1) / 2 - j; ++i)
      push(M, {2 * m - 2 * j - 1, m - 2 * j - 2 * i, 4 * j + 2 * i + 2}, 2);
  for (long j = 0; j <= (m - 3) / 2 && m >= 3; ++j)
    for (long i = 1; i <= (m - 1) / 2 - j; ++i) push(M, {m - 2 * i + 2, 2 * j + 2 * i - 1, 2 * m - 2 * j}, 2);
  return finish(std::move(M), 3 * m + 1, 3, add(vsum(m), scale(uo(m), m + 2)),
                "S_p1_ii(" + std::to_string(m) + ")");
}

PartitionMatrix S_p1_iii(long m) {
  require(m >= 2 && m % 2 == 0, "point 1 case (iii) needs even m");
  Rows M;
  for (int q = 1; q <= 8; ++q) {
    Rows b = P1_iii_block(m, q);
    M.insert(M.end(), b.begin(), b.end());
  }
  return finish(std::move(M), 5 * m + 1, 5, add(vsum(m), scale(uo(m), 3 * m + 4)),
                "S_p1_iii(" + std::to_string(m) + ")");
}

PartitionMatrix T_p1_iv(long m) {
  require(m == 2 || m == 4 || m == 6 || m == 8, "point 1 case (iv) needs m in {2,4,6,8}");
  // column (0-based) raised by one in each block of the case (iii) matrix
  const int col[9] = {0, 1, 2, 4, 4, 4, 1, 1, 1};
  Rows M;
  for (int q = 1; q <= 8; ++q) {
    Rows b;
    if (m == 8 && q == 5) {
      push(b, {13, 3, 3, 13, 10}, 2);
      push(b, {9, 8, 5, 9, 11}, 4);
      push(b, {5, 11, 7, 5, 14}, 6);
    } else if (m == 8 && q == 6) {
      push(b, {12, 6, 3, 12, 9}, 4);
      push(b, {8, 9, 5, 8, 12}, 2);
    } else if (m == 8 && q == 8) {
      push(b, {14, 4, 1, 14, 9}, 2);
      push(b, {12, 5, 1, 12, 12}, 2);
      push(b, {10, 8, 1, 10, 13}, 2);
    } else {
      b = P1_iii_block(m, q);
      for (auto& row : b) row[col[q]] += 1;
    }
    M.insert(M.end(), b.begin(), b.end());
  }
  return finish(std::move(M), 5 * m + 2, 5, add(scale(vsum(m), 2), scale(uo(m), m + 3)),
                "T_p1_iv(" + std::to_string(m) + ")");
}

PartitionMatrix S_p1_v(long m) {
  require(m >= 8 && m % 2 == 0, "point 1 case (v) needs even m >= 8");
  const long c = cdiv(m, 4), f = m / 4;
  const long tail = 2 - (m % 4) / 2;
  Rows M;
  // rows with two even entries
  for (long j = 1; j < m / 2; ++j)
    for (long i = 0; i < j; ++i) push(M, {2 * j + 2 * i + 2, 2 * m - 2 * i, m - 2 * j - 1}, 4);
  for (long i = 0; i < c; ++i) push(M, {6 + 4 * i, 2 * m - 2 * i, m - 2 * i - 5}, i < c - 1 ? 2 : tail);
  for (long i = 0; i < c; ++i) push(M, {m + 2 * i + 2, 2 * m - 2 * i - 2, 1}, i < c - 1 ? 2 : tail);
  {
    long left = (m - 4) / 2;
    for (long i = 0; i < f && left > 0; ++i) {
      long k = std::min<long>(2, left);
      push(M, {m + 2 * i + 2, 2 * m - 4 * i - 2, 2 * i + 1}, k);
      left -= k;
    }
  }
  push(M, {2, 2 * m, m - 1}, 2);
  // rows with three odd entries
  for (long j = 3; j <= m / 2; ++j)
    for (long i = 0; i < j; ++i) push(M, {m - 2 * j + 1, m + 2 * i + 1, m + 2 * j - 2 * i - 1});
  for (long j = 3; j <= m / 2; ++j)
    for (long i = 0; i <= j; ++i) push(M, {m - 2 * j + 3, m + 2 * i - 1, m + 2 * j - 2 * i - 1});
  for (long j = 3; j <= m / 2; ++j)
    for (long i = 0; i <= j - 2; ++i) push(M, {m + 2 * j - 1, m - 2 * j + 2 * i + 3, m - 2 * i - 1});
  for (long j = 3; j <= m / 2; ++j)
    for (long i = 1; i <= j - 3; ++i) push(M, {m + 2 * j - 1, m - 2 * j + 2 * i + 3, m - 2 * i - 1});
  for (long i = 0; i <= c - 3; ++i) push(M, {2 * i + 1, m + 2 * i + 1, 2 * m - 4 * i - 1});
  for (long i = 0; i <= f - 3; ++i) push(M, {2 * i + 1, m + 2 * i + 3, 2 * m - 4 * i - 3});
  for (long i = 0; i <= c; ++i) push(M, {m - 2 * i - 1, 2 * m - 2 * i - 1, 4 * i + 3});
  for (long i = 0; i <= f + 1; ++i) push(M, {m - 2 * i + 1, 2 * m - 2 * i - 1, 4 * i + 1});
  push(M, {m - 1, m - 1, m + 3}, 2);
  push(M, {m - 1, m + 1, m + 1}, 2);
  push(M, {m - 3, m + 1, m + 3}, 2);
  push(M, {m - 3, m - 3, m + 7});
  return finish(std::move(M), 3 * m + 1, 3, add(vsum(m), scale(uo(m), m + 2)),
                "S_p1_v(" + std::to_string(m) + ")");
}

PartitionMatrix S_p2_ii(long m) {
  require(m >= 2 && m % 2 == 0, "point 2 case (ii) needs even m");
  Rows M;
  for (long i = 1; i <= m / 2; ++i) push(M, {2 * m - 2 * i + 3, m - 2 * i + 1, 4 * i - 2}, 2 * i);
  for (long i = 1; i <= m / 2; ++i) push(M, {2 * m - 2 * i + 1, m - 2 * i + 1, 4 * i}, 2 * i);
  for (long j = 0; j <= m / 2 - 2; ++j)
    for (long i = 1; i <= m / 2 - j - 1; ++i)
      push(M, {2 * m - 2 * j + 1, m - 2 * j - 2 * i - 1, 4 * j + 2 * i + 2}, 2);
  for (long j = 0; j <= m / 2 - 1; ++j)
    for (long i = 0; i <= m / 2 - j - 1; ++i) push(M, {m - 2 * i + 1, 2 * j + 2 * i + 1, 2 * m - 2 * j}, 2);
  return finish(std::move(M), 3 * m + 2, 3, add(add(vsum(m), uo(m)), scale(uo(m + 1), m)),
                "S_p2_ii(" + std::to_string(m) + ")");
}

PartitionMatrix S_p2_iii(long m) {
  require(m >= 1 && m % 2 == 1, "point 2 case (iii) needs odd m");
  Rows M;
  for (long i = 0; i <= (m - 1) / 2; ++i) push(M, {2 * m - 4 * i, 4 * i + 2, m});
  for (long j = 1; j <= (m - 1) / 2; ++j)
    for (long i = 0; i <= (m - 1) / 2 - j; ++i) push(M, {2 * m - 2 * j + 2, 4 * j + 2 * i, m - 2 * j - 2 * i}, 4);
  for (long i = 0; i <= (m - 1) / 2; ++i) push(M, {2 * m - 2 * i + 1, 2 * i + 1, m});
  for (long j = 0; j <= (m - 3) / 2 && m >= 3; ++j)
    for (long i = 0; i <= (m - 3) / 2 - j; ++i) push(M, {2 * m - 2 * j + 1, m - 2 * i, 2 * j + 2 * i + 1}, 2);
  for (long j = 0; j <= (m - 3) / 2 && m >= 3; ++j)
    for (long i = 0; i <= (m - 3) / 2 - j; ++i) push(M, {2 * m - 2 * j - 2 * i - 1, 2 * j + 1, m + 2 * i + 2}, 2);
  return finish(std::move(M), 3 * m + 2, 3, add(add(vsum(m), uo(m)), scale(uo(m + 1), m)),
                "S_p2_iii(" + std::to_string(m) + ")");
}

PartitionMatrix staircase(long m) {
  require(m >= 1, "staircase needs m >= 1");
  Rows M;
  for (long i = 1; i <= m; ++i) M.push_back({i - 1, 2 * m - i});
  IntVec z = add(uo(m), m == 1 ? IntVec{{0, 1}} : ue(m - 1));
  return finish(std::move(M), 2 * m - 1, 2, z, "staircase(" + std::to_string(m) + ")");
}

}  // namespace blotto::blocks
