#include "census/binomial_tables.hpp"

#include <functional>
#include <mutex>
#include <vector>

#include "census/config.hpp"

namespace census {

namespace {

using Row = std::vector<MultiPoly>;
// next(n, previous_row) -> row n
using RowRecurrence = std::function<Row(unsigned, const Row&)>;

// Pascal-style triangle whose first `bound + 1` rows are memoized.
class TriangleCache {
 public:
  explicit TriangleCache(RowRecurrence next) : next_(std::move(next)) {}

  MultiPoly at(unsigned n, unsigned i) {
    if (i > n) return {};
    const unsigned bound = binomial_memo_bound();
    {
      std::lock_guard lock(mutex_);
      extend_locked(std::min(n, bound));
      if (n <= bound) return rows_[n][i];
    }
    Row row;
    {
      std::lock_guard lock(mutex_);
      row = rows_[bound];
    }
    for (unsigned m = bound + 1; m <= n; ++m) row = next_(m, row);
    return row[i];
  }

 private:
  void extend_locked(unsigned n) {
    if (rows_.empty()) rows_.push_back(Row{MultiPoly(1L)});
    while (rows_.size() <= n) {
      auto m = static_cast<unsigned>(rows_.size());
      rows_.push_back(next_(m, rows_.back()));
    }
  }

  RowRecurrence next_;
  std::mutex mutex_;
  std::vector<Row> rows_;
};

Row gaussian_row(unsigned n, const Row& prev) {
  const MultiPoly u = MultiPoly::variable(Var::u);
  Row row(n + 1);
  MultiPoly u_pow(1L);
  for (unsigned i = 0; i <= n; ++i) {
    MultiPoly v;
    if (i < n) v += u_pow * prev[i];
    if (i > 0) v += prev[i - 1];
    row[i] = std::move(v);
    u_pow *= u;
  }
  return row;
}

// B(n,i) = (1+uy)^i B(n-1,i) + (1+y)^{n-i} B(n-1,i-1)
Row weighted_row(unsigned n, const Row& prev) {
  const MultiPoly d = descent_edge_weight();
  const MultiPoly a = ascent_edge_weight();
  Row row(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    MultiPoly v;
    if (i < n) v += pow(d, i) * prev[i];
    if (i > 0) v += pow(a, n - i) * prev[i - 1];
    row[i] = std::move(v);
  }
  return row;
}

TriangleCache& gaussian_cache() {
  static TriangleCache cache(gaussian_row);
  return cache;
}

TriangleCache& weighted_cache() {
  static TriangleCache cache(weighted_row);
  return cache;
}

MultiPoly rename_u(const MultiPoly& p, Var var) {
  if (var == Var::u) return p;
  return laurent_substitute(p, Var::u, 1, var, 0);
}

}  // namespace

MultiPoly descent_edge_weight() {
  return MultiPoly(1L) + MultiPoly::variable(Var::u) * MultiPoly::variable(Var::y);
}

MultiPoly ascent_edge_weight() { return MultiPoly(1L) + MultiPoly::variable(Var::y); }

MultiPoly gaussian_binomial(unsigned n, unsigned i, Var var) {
  return rename_u(gaussian_cache().at(n, i), var);
}

MultiPoly q_factorial(unsigned n, Var var) {
  MultiPoly r(1L);
  for (unsigned k = 1; k <= n; ++k) r *= geometric_sum(var, k);
  return r;
}

MultiPoly weighted_binomial(unsigned n, unsigned i) { return weighted_cache().at(n, i); }

MultiPoly normalization_factor(unsigned i) {
  if (i == 0) return MultiPoly(1L);
  const MultiPoly d = descent_edge_weight();
  const MultiPoly a = ascent_edge_weight();
  MultiPoly sum;
  for (unsigned j = 0; j < i; ++j) sum += pow(d, j) * pow(a, i - 1 - j);
  return sum;
}

MultiPoly normalization_F(unsigned n) {
  static std::mutex mutex;
  static std::vector<MultiPoly> memo{MultiPoly(1L)};
  const unsigned bound = binomial_memo_bound();
  std::lock_guard lock(mutex);
  while (memo.size() <= std::min(n, bound)) {
    auto i = static_cast<unsigned>(memo.size());
    memo.push_back(memo.back() * normalization_factor(i));
  }
  if (n < memo.size()) return memo[n];
  MultiPoly f = memo.back();
  for (auto i = static_cast<unsigned>(memo.size()); i <= n; ++i) f *= normalization_factor(i);
  return f;
}

}  // namespace census
