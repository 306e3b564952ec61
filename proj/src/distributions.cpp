#include "blotto/distributions.hpp"

#include <string>

namespace blotto {

Dist::Dist(std::map<long, Rat> weights) {
  Rat sum = 0;
  for (auto& [k, p] : weights) {
    if (k < 0) throw Error("BadWeights", "negative support point " + std::to_string(k));
    if (p < 0) throw Error("BadWeights", "negative probability at " + std::to_string(k));
    if (p == 0) continue;
    sum += p;
    w_.emplace(k, p);
  }
  if (sum != 1) throw Error("BadWeights", "probabilities sum to " + to_string(sum));
}

Dist Dist::delta(long point) { return Dist({{point, Rat(1)}}); }

Dist Dist::normalized(const IntVec& counts) {
  long n = total(counts);
  if (n <= 0) throw Error("BadWeights", "empty frequency vector");
  std::map<long, Rat> w;
  for (auto [k, c] : counts)
    if (c) w[k] = rat(c, n);
  return Dist(std::move(w));
}

Rat Dist::at(long point) const {
  auto it = w_.find(point);
  return it == w_.end() ? Rat(0) : it->second;
}

long Dist::max_support() const { return w_.empty() ? 0 : w_.rbegin()->first; }

Rat Dist::odd_mass() const {
  Rat s = 0;
  for (auto& [k, p] : w_)
    if (k % 2) s += p;
  return s;
}

IntVec base_vector(Base b, long m) {
  if (m < 1) throw Error("BadM", "m must be >= 1");
  IntVec v;
  switch (b.kind) {
    case BaseKind::U_ODD:
      for (long i = 0; i < m; ++i) v[2 * i + 1] = 1;
      break;
    case BaseKind::U_EVEN:
      for (long i = 0; i <= m; ++i) v[2 * i] = 1;
      break;
    case BaseKind::U_ODD_UP:
      if (m < 2) throw Error("BadM", "U_ODD_UP needs m >= 2");
      for (long i = 1; i < m; ++i) v[2 * i] = 1;
      break;
    case BaseKind::W:
      if (m < 2 || b.j < 1 || b.j > m - 1)
        throw Error("BadIndex", "W(j) needs 1 <= j <= m-1");
      v[0] = 1;
      for (long i = 1; i < b.j; ++i) v[2 * i] = 2;
      v[2 * b.j] = 1;
      for (long i = b.j; i < m; ++i) v[2 * i + 1] = 2;
      break;
    case BaseKind::V:
      if (b.j < 1 || b.j > m) throw Error("BadIndex", "V(j) needs 1 <= j <= m");
      for (long i = 1; i < b.j; ++i) v[2 * i - 1] = 2;
      v[2 * b.j - 1] = 1;
      for (long i = b.j; i <= m; ++i) v[2 * i] = 2;
      break;
  }
  return v;
}

Dist base_dist(Base b, long m) { return Dist::normalized(base_vector(b, m)); }

Dist vbar(long m) {
  if (m < 1) throw Error("BadM", "m must be >= 1");
  std::vector<std::pair<Rat, Dist>> parts;
  for (long j = 1; j <= m; ++j) parts.emplace_back(rat(1, m), base_dist(V(j), m));
  return mix(parts);
}

Dist mix(const std::vector<std::pair<Rat, Dist>>& parts) {
  Rat wsum = 0;
  std::map<long, Rat> acc;
  for (auto& [w, d] : parts) {
    if (w < 0) throw Error("BadWeights", "negative mixture weight");
    wsum += w;
    if (w == 0) continue;
    for (auto& [k, p] : d.weights()) acc[k] += w * p;
  }
  if (wsum != 1) throw Error("BadWeights", "mixture weights sum to " + to_string(wsum));
  return Dist(std::move(acc));
}

Rat mean(const Dist& d) {
  Rat s = 0;
  for (auto& [k, p] : d.weights()) s += p * k;
  return s;
}

Rat payoff_H(const Dist& x, const Dist& y) {
  // sweep y in increasing order keeping P(Y < t) and P(Y > t)
  Rat s = 0;
  for (auto& [i, px] : x.weights()) {
    Rat below = 0, above = 0;
    for (auto& [j, py] : y.weights()) {
      if (j < i) below += py;
      else if (j > i) above += py;
    }
    s += px * (below - above);
  }
  return s;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r = a;
  for (auto [k, c] : b) r[k] += c;
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

IntVec scale(const IntVec& a, long k) {
  IntVec r;
  if (k == 0) return r;
  for (auto [x, c] : a) r[x] = c * k;
  return r;
}

long total(const IntVec& a) {
  long n = 0;
  for (auto [k, c] : a) n += c;
  return n;
}

}  // namespace blotto
