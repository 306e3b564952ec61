#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace blotto {

using Int = mpz_class;
using Rat = mpq_class;

// Domain error carrying a short machine-readable kind (e.g. "InfeasibleParity").
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

Rat rat(const Int& n, const Int& d);
Rat rat(long n, long d = 1);

// Floor division with remainder in [0, y).
std::pair<long, long> floordiv_mod(long x, long y);

std::string to_string(const Rat& q);  // always "p/q"
Rat parse_rat(const std::string& s);  // "p/q", "p" or "-p/q"

long gcd_l(long a, long b);
long lcm_l(long a, long b);

}  // namespace blotto
