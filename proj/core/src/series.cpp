#include "census/series.hpp"

#include <algorithm>

#include "census/binomial_tables.hpp"

namespace census {

namespace {

void require_same_family(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.family() != b.family()) {
    throw SeriesError("series family mismatch: " + std::string(family_name(a.family())) +
                      " vs " + std::string(family_name(b.family())));
  }
}

void require_egf(const TruncatedSeries& a, std::string_view op) {
  if (a.family() != Family::egf) {
    throw SeriesError(std::string(op) + " is defined only for egf series");
  }
}

// Ordinary coefficients a_n / n! of an egf series.
std::vector<MultiPoly> to_ordinary(const TruncatedSeries& a) {
  std::vector<MultiPoly> c(a.numerators());
  for (std::size_t n = 0; n < c.size(); ++n) {
    c[n] *= BigRat(1, factorial(static_cast<unsigned>(n)));
  }
  return c;
}

TruncatedSeries from_ordinary(std::vector<MultiPoly> c) {
  for (std::size_t n = 0; n < c.size(); ++n) {
    c[n] *= BigRat(factorial(static_cast<unsigned>(n)));
  }
  return {Family::egf, std::move(c)};
}

std::vector<MultiPoly> ordinary_product(const std::vector<MultiPoly>& a,
                                        const std::vector<MultiPoly>& b, std::size_t order) {
  std::vector<MultiPoly> c(order + 1);
  for (std::size_t i = 0; i <= order && i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order && j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::egf:
      return "egf";
    case Family::eulerian_u:
      return "eulerian_u";
    case Family::eulerian_graphic:
      return "eulerian_graphic";
  }
  return "?";
}

Family family_from_name(std::string_view name) {
  for (auto f : {Family::egf, Family::eulerian_u, Family::eulerian_graphic}) {
    if (family_name(f) == name) return f;
  }
  throw std::invalid_argument("unknown series family: " + std::string(name));
}

MultiPoly kernel(Family f, unsigned n, unsigned i) {
  switch (f) {
    case Family::egf:
      return MultiPoly(binomial(n, i));
    case Family::eulerian_u:
      return gaussian_binomial(n, i, Var::u);
    case Family::eulerian_graphic:
      return weighted_binomial(n, i);
  }
  return {};
}

TruncatedSeries::TruncatedSeries(Family family, std::vector<MultiPoly> numerators)
    : family_(family), numerators_(std::move(numerators)) {
  if (numerators_.empty()) throw SeriesError("a series needs at least the x^0 coefficient");
}

TruncatedSeries TruncatedSeries::zero(Family family, std::size_t order) {
  return {family, std::vector<MultiPoly>(order + 1)};
}

TruncatedSeries TruncatedSeries::one(Family family, std::size_t order) {
  std::vector<MultiPoly> c(order + 1);
  c[0] = MultiPoly(1L);
  return {family, std::move(c)};
}

TruncatedSeries TruncatedSeries::identity(Family family, std::size_t order) {
  std::vector<MultiPoly> c(order + 1);
  if (order >= 1) c[1] = MultiPoly(1L);
  return {family, std::move(c)};
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  std::vector<MultiPoly> c(numerators_.begin(),
                           numerators_.begin() + static_cast<std::ptrdiff_t>(
                                                     std::min(order, this->order()) + 1));
  return {family_, std::move(c)};
}

TruncatedSeries TruncatedSeries::retagged(Family family) const { return {family, numerators_}; }

TruncatedSeries TruncatedSeries::substituted(const Bindings& bindings) const {
  std::vector<MultiPoly> c;
  c.reserve(numerators_.size());
  for (const auto& p : numerators_) c.push_back(substitute(p, bindings));
  return {family_, std::move(c)};
}

TruncatedSeries TruncatedSeries::operator-() const {
  std::vector<MultiPoly> c;
  c.reserve(numerators_.size());
  for (const auto& p : numerators_) c.push_back(-p);
  return {family_, std::move(c)};
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_family(a, b);
  std::size_t order = std::min(a.order(), b.order());
  std::vector<MultiPoly> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) c[n] = a[n] + b[n];
  return {a.family(), std::move(c)};
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const MultiPoly& c, const TruncatedSeries& a) {
  std::vector<MultiPoly> out;
  out.reserve(a.order() + 1);
  for (const auto& p : a.numerators()) out.push_back(c * p);
  return {a.family(), std::move(out)};
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_family(a, b);
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<MultiPoly> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    MultiPoly sum;
    for (std::size_t i = 0; i <= n; ++i) {
      if (a[i].is_zero() || b[n - i].is_zero()) continue;
      sum += kernel(a.family(), static_cast<unsigned>(n), static_cast<unsigned>(i)) *
             (a[i] * b[n - i]);
    }
    c[n] = std::move(sum);
  }
  return {a.family(), std::move(c)};
}

TruncatedSeries invert(const TruncatedSeries& a) {
  if (a[0] != MultiPoly(1L)) throw SeriesError("invert requires constant term 1");
  const std::size_t order = a.order();
  std::vector<MultiPoly> b(order + 1);
  b[0] = MultiPoly(1L);
  for (std::size_t n = 1; n <= order; ++n) {
    MultiPoly sum;
    for (std::size_t i = 1; i <= n; ++i) {
      if (a[i].is_zero() || b[n - i].is_zero()) continue;
      sum += kernel(a.family(), static_cast<unsigned>(n), static_cast<unsigned>(i)) *
             (a[i] * b[n - i]);
    }
    b[n] = -sum;
  }
  return {a.family(), std::move(b)};
}

TruncatedSeries exp(const TruncatedSeries& a) {
  require_egf(a, "exp");
  if (!a[0].is_zero()) throw SeriesError("exp requires constant term 0");
  // In egf numerators, b' = a' b reads b_n = sum_{k=1}^{n} C(n-1,k-1) a_k b_{n-k}.
  const std::size_t order = a.order();
  std::vector<MultiPoly> b(order + 1);
  b[0] = MultiPoly(1L);
  for (std::size_t n = 1; n <= order; ++n) {
    MultiPoly sum;
    for (std::size_t k = 1; k <= n; ++k) {
      if (a[k].is_zero() || b[n - k].is_zero()) continue;
      sum += BigRat(binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(k - 1))) *
             (a[k] * b[n - k]);
    }
    b[n] = std::move(sum);
  }
  return {Family::egf, std::move(b)};
}

TruncatedSeries log(const TruncatedSeries& a) {
  require_egf(a, "log");
  if (a[0] != MultiPoly(1L)) throw SeriesError("log requires constant term 1");
  // a' = b' a with b = log a:  b_n = a_n - sum_{k=1}^{n-1} C(n-1,k-1) b_k a_{n-k}.
  const std::size_t order = a.order();
  std::vector<MultiPoly> b(order + 1);
  for (std::size_t n = 1; n <= order; ++n) {
    MultiPoly sum = a[n];
    for (std::size_t k = 1; k < n; ++k) {
      if (b[k].is_zero() || a[n - k].is_zero()) continue;
      sum -= BigRat(binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(k - 1))) *
             (b[k] * a[n - k]);
    }
    b[n] = std::move(sum);
  }
  return {Family::egf, std::move(b)};
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  require_egf(outer, "compose");
  require_egf(inner, "compose");
  if (!inner[0].is_zero()) throw SeriesError("compose requires inner constant term 0");
  const std::size_t order = std::min(outer.order(), inner.order());
  const auto f = to_ordinary(outer);
  const auto g = to_ordinary(inner);
  std::vector<MultiPoly> result(order + 1);
  std::vector<MultiPoly> g_pow(order + 1);
  g_pow[0] = MultiPoly(1L);
  for (std::size_t k = 0; k <= order; ++k) {
    if (k > 0) g_pow = ordinary_product(g_pow, g, order);
    if (f[k].is_zero()) continue;
    for (std::size_t n = k; n <= order; ++n) result[n] += f[k] * g_pow[n];
  }
  return from_ordinary(std::move(result));
}

TruncatedSeries revert(const TruncatedSeries& f) {
  require_egf(f, "revert");
  if (!f[0].is_zero()) throw SeriesError("revert requires constant term 0");
  if (f.order() < 1 || !f[1].is_constant() || f[1].is_zero()) {
    throw SeriesError("revert requires a nonzero constant linear coefficient");
  }
  const std::size_t order = f.order();
  const BigRat f1 = f[1].constant_term();
  // Solve f(g(x)) = x one coefficient at a time; the x^n coefficient of
  // f(g) depends on g_n only through f_1 g_n.
  std::vector<MultiPoly> g(order + 1);
  g[1] = MultiPoly(BigRat(1) / f1);
  for (std::size_t n = 2; n <= order; ++n) {
    auto partial = compose(f.truncated(n), TruncatedSeries(Family::egf, g).truncated(n));
    g[n] = -(partial[n] * (BigRat(1) / f1));
  }
  return {Family::egf, std::move(g)};
}

TruncatedSeries delta(const TruncatedSeries& a) {
  if (a.family() != Family::egf) throw SeriesError("delta expects an egf series");
  return a.retagged(Family::eulerian_graphic);
}

TruncatedSeries delta_inverse(const TruncatedSeries& a) {
  if (a.family() != Family::eulerian_graphic) {
    throw SeriesError("inverse delta expects an eulerian_graphic series");
  }
  return a.retagged(Family::egf);
}

TruncatedSeries power(const TruncatedSeries& a, unsigned k) {
  TruncatedSeries r = TruncatedSeries::one(a.family(), a.order());
  for (unsigned i = 0; i < k; ++i) r = multiply(r, a);
  return r;
}

}  // namespace census
