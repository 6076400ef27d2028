#include "census/families.hpp"

#include <functional>
#include <mutex>
#include <string>

#include "census/binomial_tables.hpp"
#include "census/config.hpp"
#include "census/enumerate.hpp"

namespace census {

namespace {

unsigned choose2(unsigned n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

MultiPoly var(Var v) { return MultiPoly::variable(v); }

MultiPoly digraph_pair_weight() { return descent_edge_weight() * ascent_edge_weight(); }

// Sequence a_0, a_1, ... where a_n = next(n, a_0..a_{n-1}); values up to the
// family memo bound are cached.
class SequenceCache {
 public:
  using Next = std::function<MultiPoly(unsigned, const std::vector<MultiPoly>&)>;

  explicit SequenceCache(Next next) : next_(std::move(next)) {}

  MultiPoly at(unsigned n) {
    const unsigned bound = family_memo_bound();
    std::vector<MultiPoly> prefix;
    {
      std::lock_guard lock(mutex_);
      while (values_.size() <= std::min(n, bound)) {
        values_.push_back(next_(static_cast<unsigned>(values_.size()), values_));
      }
      if (n < values_.size()) return values_[n];
      prefix = values_;
    }
    while (prefix.size() <= n) {
      prefix.push_back(next_(static_cast<unsigned>(prefix.size()), prefix));
    }
    return prefix[n];
  }

 private:
  Next next_;
  std::mutex mutex_;
  std::vector<MultiPoly> values_;
};

MultiPoly require_integral(MultiPoly p, const std::string& what) {
  if (!p.has_integer_coefficients()) {
    throw std::logic_error(what + " has a non-integer coefficient");
  }
  return p;
}

// Caches the numerators of a series that is recomputed at larger orders on demand.
class SeriesCache {
 public:
  using Build = std::function<TruncatedSeries(std::size_t)>;

  explicit SeriesCache(Build build) : build_(std::move(build)) {}

  MultiPoly at(unsigned n) {
    std::lock_guard lock(mutex_);
    if (!cached_ || cached_->order() < n) cached_ = build_(n);
    return (*cached_)[n];
  }

 private:
  Build build_;
  std::mutex mutex_;
  std::optional<TruncatedSeries> cached_;
};

SequenceCache& tournament_cache() {
  static SequenceCache cache([](unsigned n, const std::vector<MultiPoly>& t) {
    if (n == 0) return MultiPoly();  // t_0 is not a family member
    const MultiPoly one_u = MultiPoly(1L) + var(Var::u);
    MultiPoly value = pow(one_u, choose2(n));
    for (unsigned k = 1; k < n; ++k) {
      if (t[k].is_zero()) continue;
      value -= gaussian_binomial(n, k, Var::u) * pow(one_u, choose2(n - k)) * t[k];
    }
    return value;
  });
  return cache;
}

SequenceCache& eta_cache() {
  static SequenceCache cache([](unsigned n, const std::vector<MultiPoly>& eta) {
    if (n == 0) return MultiPoly();
    const MultiPoly w = digraph_pair_weight();
    MultiPoly value = pow(w, choose2(n));
    for (unsigned k = 1; k < n; ++k) {
      if (eta[k].is_zero()) continue;
      value -= weighted_binomial(n, k) * pow(w, choose2(n - k)) * eta[k];
    }
    return value;
  });
  return cache;
}

SequenceCache& strong_cache() {
  static SequenceCache cache([](unsigned n, const std::vector<MultiPoly>& s) {
    if (n == 0) return MultiPoly();
    MultiPoly value = eta_poly(n);
    for (unsigned k = 1; k < n; ++k) {
      MultiPoly e = eta_poly(n - k);
      if (s[k].is_zero() || e.is_zero()) continue;
      value += BigRat(binomial(n - 1, k - 1)) * (s[k] * e);
    }
    return value;
  });
  return cache;
}

SequenceCache& acyclic_cache() {
  static SequenceCache cache([](unsigned n, const std::vector<MultiPoly>& a) {
    if (n == 0) return MultiPoly(1L);
    MultiPoly value;
    for (unsigned i = 0; i < n; ++i) {
      MultiPoly term = weighted_binomial(n, i) * a[i];
      if ((n - i - 1) % 2 == 0) {
        value += term;
      } else {
        value -= term;
      }
    }
    return value;
  });
  return cache;
}

SeriesCache& strong_series_cache() {
  static SeriesCache cache([](std::size_t order) { return strong_digraphs_series(order); });
  return cache;
}

SeriesCache& acyclic_series_cache() {
  static SeriesCache cache([](std::size_t order) { return acyclic_series(order); });
  return cache;
}

SeriesCache& tournament_series_cache() {
  static SeriesCache cache([](std::size_t order) {
    return TruncatedSeries::one(Family::eulerian_u, order) - invert(all_tournaments_series(order));
  });
  return cache;
}

void require_positive(unsigned n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + " is defined for n >= 1");
}

}  // namespace

std::string_view family_tag_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::strong_tournament:
      return "strong_tournament";
    case FamilyTag::all_tournament:
      return "all_tournament";
    case FamilyTag::eta:
      return "eta";
    case FamilyTag::strong_digraph:
      return "strong_digraph";
    case FamilyTag::acyclic:
      return "acyclic";
    case FamilyTag::acyclic_with_sources:
      return "acyclic_with_sources";
    case FamilyTag::tree:
      return "tree";
    case FamilyTag::forest:
      return "forest";
  }
  return "?";
}

FamilyTag family_tag_from_name(std::string_view name) {
  std::string normalized(name);
  for (auto& c : normalized) {
    if (c == '-') c = '_';
  }
  for (auto tag : {FamilyTag::strong_tournament, FamilyTag::all_tournament, FamilyTag::eta,
                   FamilyTag::strong_digraph, FamilyTag::acyclic,
                   FamilyTag::acyclic_with_sources, FamilyTag::tree, FamilyTag::forest}) {
    if (family_tag_name(tag) == normalized) return tag;
  }
  if (normalized.size() > 1 && normalized.back() == 's') {
    normalized.pop_back();
    for (auto tag : {FamilyTag::strong_tournament, FamilyTag::all_tournament,
                     FamilyTag::strong_digraph, FamilyTag::tree, FamilyTag::forest}) {
      if (family_tag_name(tag) == normalized) return tag;
    }
  }
  throw std::invalid_argument("unknown family: " + std::string(name));
}

std::string_view method_name(Method m) {
  return m == Method::recurrence ? "recurrence" : "series";
}

MultiPoly all_tournament_poly(unsigned n) {
  return pow(MultiPoly(1L) + var(Var::u), choose2(n));
}

MultiPoly all_digraph_poly(unsigned n) { return pow(digraph_pair_weight(), choose2(n)); }

MultiPoly strong_tournament_poly(unsigned n) {
  require_positive(n, "t_n");
  return tournament_cache().at(n);
}

MultiPoly strong_tournament_poly_series(unsigned n) {
  require_positive(n, "t_n");
  return require_integral(tournament_series_cache().at(n), "t_n from T = 1 - 1/U");
}

MultiPoly eta_poly(unsigned n) {
  require_positive(n, "eta_n");
  return eta_cache().at(n);
}

MultiPoly strong_digraph_poly(unsigned n, Method method) {
  require_positive(n, "s_n");
  if (method == Method::recurrence) return strong_cache().at(n);
  return require_integral(strong_series_cache().at(n), "s_n from -log(Delta^{-1}(1/D))");
}

MultiPoly acyclic_poly(unsigned n, Method method) {
  if (method == Method::recurrence) return acyclic_cache().at(n);
  return require_integral(acyclic_series_cache().at(n), "a_n from 1/sum (-1)^n x^n/F(n)");
}

MultiPoly acyclic_source_poly(unsigned n) {
  const MultiPoly alpha_minus_one = var(Var::alpha) - MultiPoly(1L);
  MultiPoly value;
  for (unsigned i = 0; i <= n; ++i) {
    value += weighted_binomial(n, i) * pow(alpha_minus_one, i) * acyclic_poly(n - i);
  }
  return value;
}

MultiPoly tree_poly(unsigned n) {
  require_positive(n, "tree_poly");
  MultiPoly value(1L);
  for (unsigned i = 1; i < n; ++i) {
    value *= BigRat(i) * var(Var::u) + MultiPoly(static_cast<long>(n - i));
  }
  return value;
}

MultiPoly forest_poly(unsigned n) {
  require_positive(n, "forest_poly");
  MultiPoly value = var(Var::z);
  for (unsigned i = 1; i < n; ++i) {
    value *= BigRat(i) * var(Var::u) + MultiPoly(static_cast<long>(n - i)) + var(Var::z);
  }
  return value;
}

FamilyPolynomial family_polynomial(FamilyTag tag, unsigned n, Method method) {
  auto only_recurrence = [&](MultiPoly p) {
    return FamilyPolynomial{tag, n, std::move(p), Method::recurrence};
  };
  switch (tag) {
    case FamilyTag::strong_tournament:
      return {tag, n,
              method == Method::series ? strong_tournament_poly_series(n)
                                       : strong_tournament_poly(n),
              method};
    case FamilyTag::all_tournament:
      return only_recurrence(all_tournament_poly(n));
    case FamilyTag::eta:
      return only_recurrence(eta_poly(n));
    case FamilyTag::strong_digraph:
      return {tag, n, strong_digraph_poly(n, method), method};
    case FamilyTag::acyclic:
      return {tag, n, acyclic_poly(n, method), method};
    case FamilyTag::acyclic_with_sources:
      return only_recurrence(acyclic_source_poly(n));
    case FamilyTag::tree:
      return only_recurrence(tree_poly(n));
    case FamilyTag::forest:
      return only_recurrence(forest_poly(n));
  }
  throw std::invalid_argument("unknown family tag");
}

TruncatedSeries all_tournaments_series(std::size_t order) {
  std::vector<MultiPoly> c;
  for (std::size_t n = 0; n <= order; ++n) {
    c.push_back(all_tournament_poly(static_cast<unsigned>(n)));
  }
  return {Family::eulerian_u, std::move(c)};
}

TruncatedSeries strong_tournaments_series(std::size_t order) {
  std::vector<MultiPoly> c(order + 1);
  for (std::size_t n = 1; n <= order; ++n) {
    c[n] = strong_tournament_poly(static_cast<unsigned>(n));
  }
  return {Family::eulerian_u, std::move(c)};
}

TruncatedSeries all_digraphs_series(std::size_t order) {
  std::vector<MultiPoly> c;
  for (std::size_t n = 0; n <= order; ++n) {
    c.push_back(all_digraph_poly(static_cast<unsigned>(n)));
  }
  return {Family::eulerian_graphic, std::move(c)};
}

TruncatedSeries graphic_power_series(const MultiPoly& base, std::size_t order) {
  std::vector<MultiPoly> c;
  MultiPoly p(1L);
  for (std::size_t n = 0; n <= order; ++n) {
    c.push_back(p);
    p *= base;
  }
  return {Family::eulerian_graphic, std::move(c)};
}

TruncatedSeries strong_digraphs_series(std::size_t order) {
  return -log(delta_inverse(invert(all_digraphs_series(order))));
}

TruncatedSeries acyclic_series(std::size_t order) {
  return invert(graphic_power_series(MultiPoly(-1L), order));
}

TruncatedSeries strong_digraphs_series_from_recurrence(std::size_t order) {
  std::vector<MultiPoly> c(order + 1);
  for (std::size_t n = 1; n <= order; ++n) c[n] = strong_digraph_poly(static_cast<unsigned>(n));
  return {Family::egf, std::move(c)};
}

TruncatedSeries tree_series(std::size_t order) {
  std::vector<MultiPoly> c(order + 1);
  for (std::size_t n = 1; n <= order; ++n) c[n] = tree_poly(static_cast<unsigned>(n));
  return {Family::egf, std::move(c)};
}

TruncatedSeries tree_inverse_series(std::size_t order) {
  std::vector<MultiPoly> c(order + 1);
  for (std::size_t n = 1; n <= order; ++n) {
    MultiPoly g = geometric_sum(Var::u, static_cast<unsigned>(n));
    c[n] = n % 2 == 1 ? g : -g;
  }
  return {Family::egf, std::move(c)};
}

TruncatedSeries short_tree_series(std::size_t order, const BigInt& alpha) {
  std::vector<MultiPoly> c(order + 1);
  BigInt alpha_pow = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    c[n] = BigRat(alpha_pow) * geometric_sum(Var::u, static_cast<unsigned>(n));
    alpha_pow *= alpha;
  }
  return {Family::egf, std::move(c)};
}

CheckReport tree_leaf_identity_check(std::size_t order, const std::vector<long>& alphas) {
  CheckReport report{"tree-leaf identity", {}, 0};
  std::vector<CensusTable> censuses;
  for (std::size_t n = 1; n <= order; ++n) {
    censuses.push_back(enumerate_trees(static_cast<int>(n)));
  }
  const TruncatedSeries trees = tree_series(order);
  for (long alpha : alphas) {
    const TruncatedSeries composed = compose(trees, short_tree_series(order, BigInt(alpha)));
    for (std::size_t n = 1; n <= order; ++n) {
      MultiPoly oracle;
      for (const auto& [key, count] : censuses[n - 1].counts()) {
        BigInt weight;
        mpz_pow_ui(weight.get_mpz_t(), BigInt(alpha + 1).get_mpz_t(),
                   static_cast<unsigned long>(key[1]));
        Exponents e{};
        e[static_cast<std::size_t>(Var::u)] = static_cast<std::uint16_t>(key[0]);
        oracle += MultiPoly::monomial(e, BigRat(count * weight));
      }
      report.expect(composed[n] == oracle,
                    "n=" + std::to_string(n) + " alpha=" + std::to_string(alpha) +
                        ": composition " + to_pretty(composed[n]) + " vs trees " +
                        to_pretty(oracle));
    }
  }
  return report;
}

CheckReport eta_tournament_identity_check(unsigned n_max) {
  CheckReport report{"eta/tournament identity", {}, 0};
  const MultiPoly one_y = ascent_edge_weight();
  for (unsigned n = 1; n <= n_max; ++n) {
    const unsigned clear = 2 * choose2(n);
    MultiPoly lhs = laurent_substitute(eta_poly(n), Var::u, -2, Var::y, clear);
    MultiPoly t_in_y = laurent_substitute(strong_tournament_poly(n), Var::u, -1, Var::y, clear);
    MultiPoly rhs = pow(one_y, choose2(n)) * t_in_y;
    report.expect(lhs == rhs, "n=" + std::to_string(n) + ": " + to_pretty(lhs) +
                                  " != " + to_pretty(rhs));
  }
  return report;
}

}  // namespace census
