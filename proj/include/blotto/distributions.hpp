#pragma once

#include <map>
#include <utility>
#include <vector>

#include "blotto/exactmath.hpp"

namespace blotto {

// Unnormalized frequency vector over non-negative integers; zero counts are not stored.
using IntVec = std::map<long, long>;

class Dist {
 public:
  Dist() = default;
  // Weights must be non-negative and sum to one.
  explicit Dist(std::map<long, Rat> weights);

  static Dist delta(long point);
  static Dist normalized(const IntVec& counts);

  const std::map<long, Rat>& weights() const { return w_; }
  Rat at(long point) const;
  long max_support() const;
  Rat odd_mass() const;

  bool operator==(const Dist& o) const { return w_ == o.w_; }
  bool operator!=(const Dist& o) const { return !(*this == o); }

 private:
  std::map<long, Rat> w_;
};

enum class BaseKind { U_ODD, U_EVEN, U_ODD_UP, W, V };

struct Base {
  BaseKind kind;
  long j = 0;  // only for W and V
};

inline Base U_ODD() { return {BaseKind::U_ODD, 0}; }
inline Base U_EVEN() { return {BaseKind::U_EVEN, 0}; }
inline Base U_ODD_UP() { return {BaseKind::U_ODD_UP, 0}; }
inline Base W(long j) { return {BaseKind::W, j}; }
inline Base V(long j) { return {BaseKind::V, j}; }

IntVec base_vector(Base kind, long m);
Dist base_dist(Base kind, long m);
Dist vbar(long m);

Dist mix(const std::vector<std::pair<Rat, Dist>>& parts);
Rat mean(const Dist& d);
Rat payoff_H(const Dist& x, const Dist& y);

// Helpers on integer frequency vectors.
IntVec add(const IntVec& a, const IntVec& b);
IntVec scale(const IntVec& a, long k);
long total(const IntVec& a);

}  // namespace blotto
