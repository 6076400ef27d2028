#include "census/checks.hpp"

#include <algorithm>
#include <string>

#include "census/binomial_tables.hpp"
#include "census/chromatic.hpp"
#include "census/enumerate.hpp"
#include "census/families.hpp"
#include "census/series.hpp"

namespace census {

namespace {

unsigned choose2(unsigned n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

MultiPoly at_ones(const MultiPoly& p) {
  return substitute(p, Bindings{{Var::u, MultiPoly(1L)}, {Var::y, MultiPoly(1L)}});
}

void compare_series(CheckReport& report, const TruncatedSeries& lhs, const TruncatedSeries& rhs,
                    std::size_t from = 0) {
  const std::size_t order = std::min(lhs.order(), rhs.order());
  for (std::size_t n = from; n <= order; ++n) {
    if (lhs[n] == rhs[n]) {
      report.expect(true, {});
    } else {
      report.expect(false, "x^" + std::to_string(n) + ": " + to_pretty(lhs[n]) + " != " +
                               to_pretty(rhs[n]));
    }
  }
}

CheckReport tournament_oracle(int n_max, const VerifyOptions& opt) {
  CheckReport r{"strong tournaments = enumeration", {}, 0};
  EnumerationOptions eo{opt.threads, opt.long_run};
  for (int n = 1; n <= n_max; ++n) {
    auto table = enumerate_tournaments(n, TournamentFilter::strong, eo);
    MultiPoly oracle = table.to_poly({Var::u});
    MultiPoly value = strong_tournament_poly(static_cast<unsigned>(n));
    r.expect(oracle == value, "n=" + std::to_string(n) + ": census " + to_pretty(oracle) +
                                  " vs t_n " + to_pretty(value));
    auto all = enumerate_tournaments(n, TournamentFilter::all, eo).to_poly({Var::u});
    r.expect(all == all_tournament_poly(static_cast<unsigned>(n)),
             "n=" + std::to_string(n) + ": all tournaments differ from (1+u)^C(n,2)");
  }
  return r;
}

CheckReport digraph_oracle(int n_max, const VerifyOptions& opt) {
  CheckReport r{"strong/acyclic digraphs = enumeration", {}, 0};
  EnumerationOptions eo{opt.threads, opt.long_run};
  for (int n = 1; n <= n_max; ++n) {
    const auto un = static_cast<unsigned>(n);
    auto strong = enumerate_digraphs(n, DigraphFilter::strong, ExtraStat::none, eo);
    r.expect(strong.to_poly({Var::u, Var::y}) == strong_digraph_poly(un),
             "n=" + std::to_string(n) + ": strong census differs from s_n");
    auto acyclic = enumerate_digraphs(n, DigraphFilter::acyclic, ExtraStat::sources, eo);
    r.expect(acyclic.to_poly({Var::u, Var::y, Var::alpha}) == acyclic_source_poly(un),
             "n=" + std::to_string(n) + ": acyclic census by sources differs from a_n(u,y;alpha)");
    r.expect(substitute(acyclic.to_poly({Var::u, Var::y, Var::alpha}),
                        Bindings{{Var::alpha, MultiPoly(1L)}}) == acyclic_poly(un),
             "n=" + std::to_string(n) + ": acyclic census differs from a_n");
    if (n <= 4) {
      auto all = enumerate_digraphs(n, DigraphFilter::all, ExtraStat::none, eo);
      r.expect(all.to_poly({Var::u, Var::y}) == all_digraph_poly(un),
               "n=" + std::to_string(n) + ": all digraphs differ from d_n(u,y;1)");
    }
  }
  return r;
}

CheckReport tree_oracle() {
  CheckReport r{"trees = enumeration", {}, 0};
  for (int n = 1; n <= kTreeLimit; ++n) {
    auto census = enumerate_trees(n);
    MultiPoly marginal = substitute(census.to_poly({Var::u, Var::alpha}),
                                    Bindings{{Var::alpha, MultiPoly(1L)}});
    r.expect(marginal == tree_poly(static_cast<unsigned>(n)),
             "n=" + std::to_string(n) + ": tree census " + to_pretty(marginal));
  }
  return r;
}

CheckReport reciprocity_all_graphs(int n) {
  CheckReport r{"refined chromatic reciprocity on all graphs with n=" + std::to_string(n), {}, 0};
  const int pairs = n * (n - 1) / 2;
  for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
    auto single = reciprocity_check(UndirectedGraph::from_mask(n, mask));
    r.expect(single.passed(), "graph mask " + std::to_string(mask) + ": " +
                                  (single.passed() ? "" : single.failures.front()));
  }
  return r;
}

CheckReport colored_graphs() {
  CheckReport r{"colored graphs = (sum x^n/F(n))^lambda", {}, 0};
  for (int n = 0; n <= 4; ++n) {
    for (unsigned lambda = 0; lambda <= 3; ++lambda) {
      auto single = colored_graph_identity_check(n, lambda);
      r.expect(single.passed(), single.name + (single.passed() ? "" : ": " + single.failures[0]));
    }
  }
  return r;
}

}  // namespace

std::vector<CheckReport> oracle_suite(const VerifyOptions& options) {
  std::vector<CheckReport> out;
  int tournaments = std::min(options.n_limit + 1, 6);
  int digraphs = std::min(options.n_limit, kDigraphLimit);
  if (options.long_run) {
    tournaments = kTournamentLimit;
    digraphs = kDigraphLargeLimit;
  }
  out.push_back(tournament_oracle(tournaments, options));
  out.push_back(digraph_oracle(digraphs, options));
  out.push_back(tree_oracle());
  out.push_back(tree_leaf_identity_check(6, {-1, 0, 1, 2}));
  out.push_back(reciprocity_all_graphs(4));
  out.push_back(colored_graphs());
  out.push_back(source_component_convolution_check(std::min(options.n_limit, 4), {1, 2, 3},
                                                   options.threads));

  CheckReport kernels{"B(n,i) and [n,i]_u = subset enumeration", {}, 0};
  for (unsigned n = 0; n <= 6; ++n) {
    for (unsigned i = 0; i <= n; ++i) {
      kernels.expect(weighted_binomial(n, i) == subset_pair_poly(n, i),
                     "B(" + std::to_string(n) + "," + std::to_string(i) + ")");
    }
  }
  for (unsigned n = 0; n <= 7; ++n) {
    for (unsigned i = 0; i <= n; ++i) {
      kernels.expect(gaussian_binomial(n, i) == ordered_partition_poly(n, i),
                     "[" + std::to_string(n) + "," + std::to_string(i) + "]_u");
    }
  }
  out.push_back(std::move(kernels));
  return out;
}

std::vector<CheckReport> identity_suite(const VerifyOptions&) {
  std::vector<CheckReport> out;
  const MultiPoly one_u = MultiPoly(1L) + MultiPoly::variable(Var::u);

  CheckReport symmetry{"t_n symmetric with degree C(n,2)-1 (3 <= n <= 8)", {}, 0};
  for (unsigned n = 3; n <= 8; ++n) {
    auto c = univariate_coefficients(strong_tournament_poly(n), Var::u);
    auto reversed = c;
    reversed.resize(choose2(n) + 1, 0);
    std::reverse(reversed.begin(), reversed.end());
    auto padded = c;
    padded.resize(choose2(n) + 1, 0);
    symmetry.expect(padded == reversed, "n=" + std::to_string(n) + " not symmetric");
    symmetry.expect(c.size() == choose2(n), "n=" + std::to_string(n) + " has degree " +
                                                std::to_string(c.size() - 1));
  }
  out.push_back(std::move(symmetry));

  CheckReport divisible{"(1+u)^floor(n/2) divides t_n (n <= 10)", {}, 0};
  for (unsigned n = 1; n <= 10; ++n) {
    divisible.expect(try_exact_divide(strong_tournament_poly(n), pow(one_u, n / 2)).has_value(),
                     "n=" + std::to_string(n));
  }
  out.push_back(std::move(divisible));

  CheckReport moon{"t_n(1) satisfies the integer tournament recurrence (n <= 10)", {}, 0};
  std::vector<BigInt> t(11, 0);
  for (unsigned n = 1; n <= 10; ++n) {
    BigInt v = BigInt(1) << choose2(n);
    for (unsigned k = 1; k < n; ++k) v -= binomial(n, k) * (BigInt(1) << choose2(n - k)) * t[k];
    t[n] = v;
    MultiPoly at_one = substitute(strong_tournament_poly(n), Bindings{{Var::u, MultiPoly(1L)}});
    moon.expect(at_one == MultiPoly(v), "n=" + std::to_string(n));
  }
  out.push_back(std::move(moon));

  CheckReport eta_ones{"eta_n(1,1) = 2^C(n,2) t_n(1) (n <= 6)", {}, 0};
  for (unsigned n = 1; n <= 6; ++n) {
    eta_ones.expect(at_ones(eta_poly(n)) == MultiPoly(BigInt(BigInt(1) << choose2(n))) *
                                                at_ones(strong_tournament_poly(n)),
                    "n=" + std::to_string(n));
  }
  out.push_back(std::move(eta_ones));

  out.push_back(eta_tournament_identity_check(6));

  CheckReport cross{"recurrence = series for t_n (n <= 8), s_n and a_n (n <= 6)", {}, 0};
  for (unsigned n = 1; n <= 8; ++n) {
    cross.expect(strong_tournament_poly(n) == strong_tournament_poly_series(n),
                 "t_" + std::to_string(n));
  }
  for (unsigned n = 1; n <= 6; ++n) {
    cross.expect(strong_digraph_poly(n, Method::recurrence) ==
                     strong_digraph_poly(n, Method::series),
                 "s_" + std::to_string(n));
    cross.expect(acyclic_poly(n, Method::recurrence) == acyclic_poly(n, Method::series),
                 "a_" + std::to_string(n));
  }
  out.push_back(std::move(cross));

  CheckReport no_descents{"a_n(0,y;alpha) = prod (alpha + (1+y)^i - 1) (n <= 7)", {}, 0};
  const MultiPoly alpha = MultiPoly::variable(Var::alpha);
  for (unsigned n = 0; n <= 7; ++n) {
    MultiPoly product(1L);
    for (unsigned i = 0; i < n; ++i) {
      product *= alpha + pow(ascent_edge_weight(), i) - MultiPoly(1L);
    }
    no_descents.expect(substitute(acyclic_source_poly(n), Bindings{{Var::u, MultiPoly(0L)}}) ==
                           product,
                       "n=" + std::to_string(n));
  }
  out.push_back(std::move(no_descents));

  CheckReport sources{"a_n(u,y;1) = a_n and a_n(u,y;0) = 0 (1 <= n <= 6)", {}, 0};
  for (unsigned n = 1; n <= 6; ++n) {
    MultiPoly p = acyclic_source_poly(n);
    sources.expect(substitute(p, Bindings{{Var::alpha, MultiPoly(1L)}}) == acyclic_poly(n),
                   "alpha=1, n=" + std::to_string(n));
    sources.expect(substitute(p, Bindings{{Var::alpha, MultiPoly(0L)}}).is_zero(),
                   "alpha=0, n=" + std::to_string(n));
  }
  out.push_back(std::move(sources));

  CheckReport normalization{"F(n) = B(n,i) F(i) F(n-i) (n <= 8)", {}, 0};
  for (unsigned n = 0; n <= 8; ++n) {
    for (unsigned i = 0; i <= n; ++i) {
      normalization.expect(
          weighted_binomial(n, i) * normalization_F(i) * normalization_F(n - i) ==
              normalization_F(n),
          "n=" + std::to_string(n) + " i=" + std::to_string(i));
    }
  }
  out.push_back(std::move(normalization));

  CheckReport wright{"-log(1 - sum 2^C(n,2) t_n x^n/n!) = S at u=y=1 (order 6)", {}, 0};
  {
    std::vector<MultiPoly> g(7);
    g[0] = MultiPoly(1L);
    for (unsigned n = 1; n <= 6; ++n) {
      g[n] = -(MultiPoly(BigInt(BigInt(1) << choose2(n))) * at_ones(strong_tournament_poly(n)));
    }
    auto lhs = -log(TruncatedSeries(Family::egf, g));
    for (unsigned n = 1; n <= 6; ++n) {
      wright.expect(lhs[n] == at_ones(strong_digraph_poly(n)), "n=" + std::to_string(n));
    }
  }
  out.push_back(std::move(wright));

  for (auto id : {SeriesIdentity::tournament_u, SeriesIdentity::acyclic_inverse,
                  SeriesIdentity::strong_log, SeriesIdentity::tree_revert,
                  SeriesIdentity::forest_exp}) {
    std::size_t order = id == SeriesIdentity::tree_revert    ? 8
                        : id == SeriesIdentity::tournament_u ? 7
                                                             : 6;
    out.push_back(series_identity_check(id, order));
  }

  CheckReport delta_check{"Delta(e^{-S}) D = 1 (order 6)", {}, 0};
  {
    auto s = strong_digraphs_series_from_recurrence(6);
    auto product = multiply(delta(exp(-s)), all_digraphs_series(6));
    compare_series(delta_check, product, TruncatedSeries::one(Family::eulerian_graphic, 6));
  }
  out.push_back(std::move(delta_check));
  return out;
}

std::string_view series_identity_name(SeriesIdentity id) {
  switch (id) {
    case SeriesIdentity::strong_log:
      return "strong-log";
    case SeriesIdentity::acyclic_inverse:
      return "acyclic-inverse";
    case SeriesIdentity::tournament_u:
      return "tournament-U";
    case SeriesIdentity::tree_revert:
      return "tree-revert";
    case SeriesIdentity::forest_exp:
      return "forest-exp";
  }
  return "?";
}

SeriesIdentity series_identity_from_name(std::string_view name) {
  for (auto id : {SeriesIdentity::strong_log, SeriesIdentity::acyclic_inverse,
                  SeriesIdentity::tournament_u, SeriesIdentity::tree_revert,
                  SeriesIdentity::forest_exp}) {
    if (series_identity_name(id) == name) return id;
  }
  throw std::invalid_argument("unknown series identity: " + std::string(name));
}

CheckReport series_identity_check(SeriesIdentity id, std::size_t order) {
  if (order > kMaxSeriesIdentityOrder) {
    throw std::invalid_argument("series identities are checked up to order 8");
  }
  CheckReport r{std::string(series_identity_name(id)) + " (order " + std::to_string(order) + ")",
                {},
                0};
  switch (id) {
    case SeriesIdentity::strong_log: {
      // S = -log(Delta^{-1}(1/D)) against the recurrence.
      auto series = strong_digraphs_series(order);
      compare_series(r, series, strong_digraphs_series_from_recurrence(order), 1);
      for (std::size_t n = 1; n <= order; ++n) {
        r.expect(series[n].has_integer_coefficients(),
                 "x^" + std::to_string(n) + " has a non-integer coefficient");
      }
      break;
    }
    case SeriesIdentity::acyclic_inverse: {
      auto kernel_series = graphic_power_series(MultiPoly(-1L), order);
      std::vector<MultiPoly> rec;
      for (std::size_t n = 0; n <= order; ++n) rec.push_back(acyclic_poly(static_cast<unsigned>(n)));
      TruncatedSeries a(Family::eulerian_graphic, rec);
      compare_series(r, multiply(a, kernel_series),
                     TruncatedSeries::one(Family::eulerian_graphic, order));
      compare_series(r, acyclic_series(order), a);
      break;
    }
    case SeriesIdentity::tournament_u: {
      auto one = TruncatedSeries::one(Family::eulerian_u, order);
      compare_series(r, multiply(all_tournaments_series(order), one - strong_tournaments_series(order)),
                     one);
      break;
    }
    case SeriesIdentity::tree_revert: {
      auto trees = tree_series(order);
      auto inverse = tree_inverse_series(order);
      auto x = TruncatedSeries::identity(Family::egf, order);
      compare_series(r, compose(trees, inverse), x);
      compare_series(r, compose(inverse, trees), x);
      compare_series(r, revert(inverse), trees);
      break;
    }
    case SeriesIdentity::forest_exp: {
      auto forests = exp(MultiPoly::variable(Var::z) * tree_series(order));
      std::vector<MultiPoly> expected(order + 1);
      expected[0] = MultiPoly(1L);
      for (std::size_t n = 1; n <= order; ++n) expected[n] = forest_poly(static_cast<unsigned>(n));
      compare_series(r, forests, TruncatedSeries(Family::egf, expected));
      break;
    }
  }
  return r;
}

CheckReport source_component_convolution_check(int n_max, const std::vector<long>& alphas,
                                               unsigned threads) {
  CheckReport r{"source strong component convolution", {}, 0};
  if (n_max < 1) return r;
  const auto order = static_cast<std::size_t>(n_max);
  const auto s = strong_digraphs_series_from_recurrence(order);
  std::vector<CensusTable> censuses;
  for (int n = 1; n <= n_max; ++n) {
    censuses.push_back(enumerate_digraphs(n, DigraphFilter::all, ExtraStat::ssc,
                                          EnumerationOptions{threads, false}));
  }
  for (long alpha : alphas) {
    auto v = exp(MultiPoly(alpha) * s);
    for (int n = 1; n <= n_max; ++n) {
      const auto un = static_cast<unsigned>(n);
      MultiPoly lhs;
      for (unsigned i = 0; i <= un; ++i) {
        lhs += weighted_binomial(un, i) * v[i] * all_digraph_poly(un - i);
      }
      MultiPoly rhs = substitute(censuses[static_cast<std::size_t>(n - 1)].to_poly(
                                     {Var::u, Var::y, Var::alpha}),
                                 Bindings{{Var::alpha, MultiPoly(alpha + 1)}});
      r.expect(lhs == rhs, "n=" + std::to_string(n) + " alpha=" + std::to_string(alpha));
    }
  }
  return r;
}

}  // namespace census
