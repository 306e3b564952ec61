#include <algorithm>
#include <set>

#include "blotto/constructions.hpp"

namespace blotto {

namespace {

class Search {
 public:
  Search(std::vector<long> vals, std::vector<long> counts, long C, long K, long node_limit)
      : vals_(std::move(vals)), cnt_(std::move(counts)), C_(C), K_(K), limit_(node_limit) {}

  bool run(long rows_left) { return solve(rows_left); }
  const std::vector<Row>& rows() const { return out_; }

 private:
  // vals_ is sorted in decreasing order; cnt_[i] counts remaining copies of vals_[i].
  bool solve(long rows_left) {
    if (rows_left == 0) return true;
    if (++nodes_ > limit_) throw Error("SearchExceeded", "node limit reached");
    if (failed_.count(cnt_)) return false;
    std::size_t top = 0;
    while (cnt_[top] == 0) ++top;
    row_.assign(1, vals_[top]);
    --cnt_[top];
    bool ok = extend(top, C_ - vals_[top], K_ - 1, rows_left);
    ++cnt_[top];
    if (!ok) failed_.insert(cnt_);
    return ok;
  }

  long smallest_left() const {
    for (std::size_t i = vals_.size(); i-- > 0;)
      if (cnt_[i]) return vals_[i];
    return 0;
  }

  bool extend(std::size_t from, long need, long slots, long rows_left) {
    if (slots == 0) {
      if (need != 0) return false;
      out_.push_back(row_);
      Row saved = row_;
      if (solve(rows_left - 1)) return true;
      row_ = saved;
      out_.pop_back();
      return false;
    }
    long lo = smallest_left();
    if (need < lo * slots) return false;
    for (std::size_t i = from; i < vals_.size(); ++i) {
      if (cnt_[i] == 0) continue;
      long v = vals_[i];
      if (v * slots < need) break;  // values only shrink from here on
      if (v > need) continue;
      --cnt_[i];
      row_.push_back(v);
      bool ok = extend(i, need - v, slots - 1, rows_left);
      row_.pop_back();
      ++cnt_[i];
      if (ok) return true;
    }
    return false;
  }

  std::vector<long> vals_, cnt_;
  long C_, K_, limit_;
  long nodes_ = 0;
  Row row_;
  std::vector<Row> out_;
  std::set<std::vector<long>> failed_;
};

}  // namespace

std::optional<PartitionMatrix> generic_implement(const Dist& target, long C, long K, long max_rows,
                                                 long node_limit) {
  if (K < 1) throw Error("BadArgument", "K must be >= 1");
  if (mean(target) * K != C) throw Error("MeanMismatch", "mean(target) * K != C");
  Int D = 1;
  for (auto& [k, p] : target.weights()) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), p.get_den_mpz_t());
  Int g;
  mpz_gcd_ui(g.get_mpz_t(), D.get_mpz_t(), static_cast<unsigned long>(K));
  Int L0 = D / g;
  if (L0 * K > max_rows) throw Error("SearchExceeded", "minimal matrix exceeds max_rows cells");
  const long l0 = L0.get_si();
  for (long L = l0; L * K <= max_rows; L += l0) {
    std::vector<long> vals, counts;
    for (auto it = target.weights().rbegin(); it != target.weights().rend(); ++it) {
      Rat c = it->second * (L * K);
      vals.push_back(it->first);
      counts.push_back(c.get_num().get_si());
    }
    Search s(vals, counts, C, K, node_limit);
    if (s.run(L)) {
      PartitionMatrix M{C, K, s.rows()};
      self_check(M, target, "generic");
      return M;
    }
  }
  return std::nullopt;
}

}  // namespace blotto
