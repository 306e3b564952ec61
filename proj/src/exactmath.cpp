#include "blotto/exactmath.hpp"

#include <cctype>
#include <numeric>

namespace blotto {

Rat rat(const Int& n, const Int& d) {
  if (d == 0) throw Error("ZeroDenominator", "denominator is zero");
  Rat q(n, d);
  q.canonicalize();
  return q;
}

Rat rat(long n, long d) { return rat(Int(n), Int(d)); }

std::pair<long, long> floordiv_mod(long x, long y) {
  if (y < 1) throw Error("BadArgument", "divisor must be positive");
  long q = x / y;
  long r = x % y;
  if (r < 0) {
    r += y;
    --q;
  }
  return {q, r};
}

std::string to_string(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

static bool is_int_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_int_token(num) || !is_int_token(den))
    throw Error("BadRational", "cannot parse '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  return rat(Int(num), Int(den));
}

long gcd_l(long a, long b) { return std::gcd(a, b); }
long lcm_l(long a, long b) { return std::lcm(a, b); }

}  // namespace blotto
