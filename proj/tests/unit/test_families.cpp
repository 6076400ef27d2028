#include <gtest/gtest.h>

#include <functional>

#include <census/families.hpp>

#include "test_support.hpp"

using namespace census;
using census::test_support::alpha;
using census::test_support::u;
using census::test_support::upoly;
using census::test_support::y;
using census::test_support::z;

namespace {

std::vector<BigInt> big(const std::vector<long long>& v) {
  std::vector<BigInt> out;
  for (auto x : v) out.emplace_back(std::to_string(x));
  return out;
}

std::vector<BigInt> coefficients_at(const MultiPoly& p, Var keep, Var drop) {
  return univariate_coefficients(substitute(p, Bindings{{drop, 1}}), keep);
}

std::vector<BigInt> trimmed_from(const std::vector<BigInt>& c, std::size_t from) {
  for (std::size_t k = 0; k < from; ++k) EXPECT_EQ(c.at(k), 0) << "coefficient " << k;
  return {c.begin() + static_cast<long>(from), c.end()};
}

BigInt sum(const std::vector<BigInt>& c) {
  BigInt s = 0;
  for (const auto& x : c) s += x;
  return s;
}

// All forests of rooted trees on [n] as parent arrays (-1 marks a root),
// weighted by u^{descents} z^{trees} alpha^{leaves of single trees}.
MultiPoly forest_oracle(int n, bool trees_only) {
  MultiPoly out;
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      int roots = 0, des = 0;
      std::vector<bool> has_child(static_cast<std::size_t>(n), false);
      for (int w = 0; w < n; ++w) {
        int steps = 0;
        for (int x = w; x != -1 && steps <= n; x = parent[static_cast<std::size_t>(x)]) ++steps;
        if (steps > n) return;
        if (parent[static_cast<std::size_t>(w)] == -1) {
          ++roots;
        } else {
          if (w > parent[static_cast<std::size_t>(w)]) ++des;
          has_child[static_cast<std::size_t>(parent[static_cast<std::size_t>(w)])] = true;
        }
      }
      if (trees_only && roots != 1) return;
      int leaves = 0;
      for (int w = 0; w < n; ++w) leaves += has_child[static_cast<std::size_t>(w)] ? 0 : 1;
      if (n == 1) leaves = 0;
      out += pow(u(), static_cast<unsigned>(des)) *
             (trees_only ? pow(alpha(), static_cast<unsigned>(leaves))
                         : pow(z(), static_cast<unsigned>(roots)));
      return;
    }
    for (int p = -1; p < n; ++p) {
      if (p == v) continue;
      parent[static_cast<std::size_t>(v)] = p;
      rec(v + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST(StrongTournaments, SmallValues) {
  EXPECT_EQ(strong_tournament_poly(1), MultiPoly(1));
  EXPECT_TRUE(strong_tournament_poly(2).is_zero());
  EXPECT_EQ(strong_tournament_poly(3), u() + u() * u());
  EXPECT_EQ(strong_tournament_poly(4), upoly({0, 1, 6, 10, 6, 1}));
  EXPECT_THROW(strong_tournament_poly(0), std::invalid_argument);
}

TEST(StrongTournaments, TableOne) {
  const std::vector<std::vector<long long>> table{
      {1, 6, 10, 6, 1},
      {1, 13, 56, 123, 158, 123, 56, 13, 1},
      {1, 22, 172, 717, 1910, 3547, 4791, 4791, 3547, 1910, 717, 172, 22, 1},
      {1, 33, 402, 2674, 11614, 36293, 86305, 161529, 242890, 297003, 297003, 242890, 161529,
       86305, 36293, 11614, 2674, 402, 33, 1}};
  const std::vector<long long> totals{24, 544, 22320, 1677488};
  for (unsigned n = 4; n <= 7; ++n) {
    auto c = trimmed_from(univariate_coefficients(strong_tournament_poly(n), Var::u), 1);
    EXPECT_EQ(c, big(table[n - 4])) << "n=" << n;
    EXPECT_EQ(sum(c), BigInt(std::to_string(totals[n - 4])));
  }
}

TEST(StrongTournaments, SeriesPathAgrees) {
  for (unsigned n = 1; n <= 8; ++n) {
    EXPECT_EQ(strong_tournament_poly_series(n), strong_tournament_poly(n)) << n;
  }
}

TEST(StrongTournaments, SymmetryDegreeDivisibility) {
  for (unsigned n = 3; n <= 8; ++n) {
    auto c = univariate_coefficients(strong_tournament_poly(n), Var::u);
    EXPECT_EQ(c.size() - 1, n * (n - 1) / 2 - 1);
    c.push_back(0);
    EXPECT_TRUE(std::equal(c.begin(), c.end(), c.rbegin()));
  }
  for (unsigned n = 1; n <= 10; ++n) {
    EXPECT_TRUE(try_exact_divide(strong_tournament_poly(n), pow(1 + u(), n / 2)).has_value());
  }
}

TEST(StrongTournaments, MoonMoserTotals) {
  // t(n) = 2^C(n,2) - sum_{k<n} C(n,k) 2^C(n-k,2) t(k)
  std::vector<BigInt> t(11);
  for (unsigned n = 1; n <= 10; ++n) {
    BigInt v = BigInt(1) << (n * (n - 1) / 2);
    for (unsigned k = 1; k < n; ++k) v -= binomial(n, k) * (BigInt(1) << ((n - k) * (n - k - 1) / 2)) * t[k];
    t[n] = v;
    EXPECT_EQ(substitute(strong_tournament_poly(n), Bindings{{Var::u, 1}}), MultiPoly(v));
  }
  EXPECT_EQ(t[7], 1677488);
  EXPECT_EQ(t[10], BigInt("33832910196480"));
}

TEST(Eta, SmallValues) {
  EXPECT_EQ(eta_poly(1), MultiPoly(1));
  EXPECT_EQ(eta_poly(2), -1 + u() * y() * y());
  EXPECT_TRUE(substitute(eta_poly(2), Bindings{{Var::u, 1}, {Var::y, 1}}).is_zero());
}

TEST(Eta, WrightTotals) {
  for (unsigned n = 1; n <= 6; ++n) {
    EXPECT_EQ(substitute(eta_poly(n), Bindings{{Var::u, 1}, {Var::y, 1}}),
              MultiPoly(BigInt(BigInt(1) << (n * (n - 1) / 2))) *
                  substitute(strong_tournament_poly(n), Bindings{{Var::u, 1}}));
  }
}

TEST(Eta, LaurentIdentity) {
  auto report = eta_tournament_identity_check(6);
  EXPECT_TRUE(report.passed()) << (report.failures.empty() ? "" : report.failures[0]);
  EXPECT_EQ(report.cases, 6U);
  // n = 3 by hand: y^6 eta_3(y^-2, y) equals y^6 (1+y)^3 t_3(1/y).
  MultiPoly lhs = laurent_substitute(eta_poly(3), Var::u, -2, Var::y, 6);
  MultiPoly rhs = pow(1 + y(), 3) * laurent_substitute(strong_tournament_poly(3), Var::u, -1, Var::y, 6);
  EXPECT_EQ(lhs, rhs);
}

TEST(StrongDigraphs, SmallValues) {
  EXPECT_EQ(strong_digraph_poly(1), MultiPoly(1));
  EXPECT_EQ(strong_digraph_poly(2), u() * y() * y());
  MultiPoly s3 = u() * pow(y(), 3) + u() * u() * pow(y(), 3) + u() * pow(y(), 4) +
                 7 * (u() * u() * pow(y(), 4)) + pow(u(), 3) * pow(y(), 4) +
                 3 * (u() * u() * pow(y(), 5)) + 3 * (pow(u(), 3) * pow(y(), 5)) +
                 pow(u(), 3) * pow(y(), 6);
  EXPECT_EQ(strong_digraph_poly(3), s3);
  EXPECT_EQ(strong_digraph_poly(3, Method::series), s3);
}

TEST(StrongDigraphs, TableTwoA) {
  const std::vector<std::vector<long long>> table{
      {2, 11, 5},
      {10, 154, 540, 581, 272, 49},
      {122, 3418, 27304, 90277, 150948, 150519, 95088, 37797, 8714, 893},
      {3346, 142760, 1938178, 12186976, 42696630, 94605036, 145009210, 161845163, 134933733,
       84656743, 39632149, 13481441, 3156845, 455917, 30649}};
  const std::vector<long long> totals{18, 1606, 565080, 734774776};
  for (unsigned n = 3; n <= 6; ++n) {
    auto c = trimmed_from(coefficients_at(strong_digraph_poly(n), Var::u, Var::y), 1);
    EXPECT_EQ(c, big(table[n - 3])) << "n=" << n;
    EXPECT_EQ(sum(c), BigInt(std::to_string(totals[n - 3])));
  }
}

TEST(StrongDigraphs, TableTwoB) {
  const std::vector<std::vector<long long>> table{
      {2, 9, 6, 1},
      {6, 84, 316, 492, 417, 212, 66, 12, 1},
      {24, 720, 6440, 26875, 65280, 105566, 122580, 106825, 71700, 37540, 15344, 4835, 1140, 190,
       20, 1}};
  for (unsigned n = 3; n <= 5; ++n) {
    auto c = trimmed_from(coefficients_at(strong_digraph_poly(n), Var::y, Var::u), n);
    EXPECT_EQ(c, big(table[n - 3])) << "n=" << n;
  }
}

TEST(StrongDigraphs, MethodsAgree) {
  for (unsigned n = 1; n <= 6; ++n) {
    EXPECT_EQ(strong_digraph_poly(n, Method::series), strong_digraph_poly(n)) << n;
  }
}

TEST(Acyclic, SmallValues) {
  EXPECT_EQ(acyclic_poly(0), MultiPoly(1));
  EXPECT_EQ(acyclic_poly(1), MultiPoly(1));
  EXPECT_EQ(acyclic_poly(2), 1 + y() + u() * y());
  MultiPoly a3 = 1 + (3 + 3 * u()) * y() + (3 + 6 * u() + 3 * u() * u()) * y() * y() +
                 upoly({1, 2, 2, 1}) * pow(y(), 3);
  EXPECT_EQ(acyclic_poly(3), a3);
  EXPECT_EQ(acyclic_poly(3, Method::series), a3);
}

TEST(Acyclic, TableThree) {
  const std::vector<std::vector<long long>> table{
      {1},
      {2, 1},
      {8, 11, 5, 1},
      {64, 161, 167, 102, 39, 9, 1},
      {1024, 3927, 6698, 7185, 5477, 3107, 1329, 423, 96, 14, 1},
      {32768, 172665, 419364, 656733, 757939, 686425, 504084, 305207, 153333, 63789, 21752, 5959,
       1267, 197, 20, 1},
      {2097152, 14208231, 45263175, 94040848, 145990526, 181444276, 187742937, 165596535,
       126344492, 84115442, 49085984, 25134230, 11270307, 4403313, 1486423, 428139, 103345,
       20369, 3153, 360, 27, 1}};
  const std::vector<long long> totals{1, 3, 25, 543, 29281, 3781503, 1138779265};
  for (unsigned n = 1; n <= 7; ++n) {
    auto c = coefficients_at(acyclic_poly(n), Var::u, Var::y);
    EXPECT_EQ(c, big(table[n - 1])) << "n=" << n;
    EXPECT_EQ(sum(c), BigInt(std::to_string(totals[n - 1])));
  }
}

TEST(Acyclic, MethodsAgree) {
  for (unsigned n = 0; n <= 6; ++n) {
    EXPECT_EQ(acyclic_poly(n, Method::series), acyclic_poly(n)) << n;
  }
}

TEST(Acyclic, SourceWeight) {
  for (unsigned n = 1; n <= 6; ++n) {
    MultiPoly p = acyclic_source_poly(n);
    EXPECT_EQ(substitute(p, Bindings{{Var::alpha, 1}}), acyclic_poly(n));
    EXPECT_TRUE(substitute(p, Bindings{{Var::alpha, 0}}).is_zero());
    EXPECT_EQ(p.degree(Var::alpha), n);
  }
  EXPECT_EQ(acyclic_source_poly(0), MultiPoly(1));
  EXPECT_EQ(acyclic_source_poly(2), alpha() * (y() + u() * y()) + alpha() * alpha());
  for (unsigned n = 0; n <= 7; ++n) {
    MultiPoly product(1);
    for (unsigned i = 0; i < n; ++i) product *= alpha() + pow(1 + y(), i) - 1;
    EXPECT_EQ(substitute(acyclic_source_poly(n), Bindings{{Var::u, 0}}), product) << n;
  }
}

TEST(Trees, ProductFormula) {
  EXPECT_EQ(tree_poly(1), MultiPoly(1));
  EXPECT_EQ(tree_poly(2), 1 + u());
  EXPECT_EQ(tree_poly(3), upoly({2, 5, 2}));
  EXPECT_EQ(tree_poly(4), (u() + 3) * (2 * u() + 2) * (3 * u() + 1));
  for (unsigned n = 1; n <= 9; ++n) {
    BigInt nn = 1;
    for (unsigned k = 1; k < n; ++k) nn *= n;
    EXPECT_EQ(substitute(tree_poly(n), Bindings{{Var::u, 1}}), MultiPoly(nn));
  }
  EXPECT_THROW(tree_poly(0), std::invalid_argument);
}

TEST(Trees, MatchIndependentOracle) {
  for (int n = 1; n <= 5; ++n) {
    MultiPoly census = forest_oracle(n, true);
    EXPECT_EQ(substitute(census, Bindings{{Var::alpha, 1}}), tree_poly(static_cast<unsigned>(n)));
  }
}

TEST(Trees, SeriesRevert) {
  auto t = revert(tree_inverse_series(8));
  for (unsigned n = 1; n <= 8; ++n) EXPECT_EQ(t[n], tree_poly(n));
  EXPECT_EQ(tree_series(8), t);
}

TEST(Trees, LeafIdentity) {
  auto report = tree_leaf_identity_check(6, {-1, 0, 1, 2});
  EXPECT_TRUE(report.passed()) << (report.failures.empty() ? "" : report.failures[0]);
  // alpha = 1, n = 3: the composed series counts trees with weight 2^leaves.
  MultiPoly by_leaves = forest_oracle(3, true);
  auto composed = compose(tree_series(3), short_tree_series(3, 1));
  EXPECT_EQ(composed[3], substitute(by_leaves, Bindings{{Var::alpha, 2}}));
  // alpha = -1 gives x.
  EXPECT_EQ(compose(tree_series(6), short_tree_series(6, -1)),
            TruncatedSeries::identity(Family::egf, 6));
}

TEST(Forests, ProductFormula) {
  EXPECT_EQ(forest_poly(1), z());
  EXPECT_EQ(forest_poly(2), z() * (u() + 1 + z()));
  for (unsigned n = 1; n <= 6; ++n) {
    EXPECT_EQ(substitute(forest_poly(n), Bindings{{Var::u, 1}}), z() * pow(z() + MultiPoly(static_cast<long>(n)), n - 1));
  }
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(forest_poly(static_cast<unsigned>(n)), forest_oracle(n, false)) << n;
  }
  auto f = exp(z() * tree_series(6));
  for (unsigned n = 1; n <= 6; ++n) EXPECT_EQ(f[n], forest_poly(n));
}

TEST(Families, PolynomialDispatch) {
  auto fp = family_polynomial(FamilyTag::strong_digraph, 4, Method::series);
  EXPECT_EQ(fp.provenance, Method::series);
  EXPECT_EQ(fp.value, strong_digraph_poly(4));
  EXPECT_EQ(family_polynomial(FamilyTag::tree, 4, Method::series).provenance, Method::recurrence);
  EXPECT_EQ(family_polynomial(FamilyTag::all_tournament, 3).value, pow(1 + u(), 3));
  EXPECT_EQ(all_digraph_poly(2), (1 + u() * y()) * (1 + y()));
}

TEST(Families, CoefficientSigns) {
  for (unsigned n = 1; n <= 6; ++n) {
    for (auto tag : {FamilyTag::strong_tournament, FamilyTag::strong_digraph, FamilyTag::acyclic,
                     FamilyTag::acyclic_with_sources, FamilyTag::tree, FamilyTag::forest}) {
      MultiPoly p = family_polynomial(tag, n).value;
      EXPECT_TRUE(p.has_integer_coefficients());
      EXPECT_TRUE(p.has_nonnegative_coefficients()) << family_tag_name(tag) << " " << n;
    }
    EXPECT_TRUE(eta_poly(n).has_integer_coefficients());
  }
}

TEST(Families, Names) {
  EXPECT_EQ(family_tag_from_name("strong-tournaments"), FamilyTag::strong_tournament);
  EXPECT_EQ(family_tag_from_name("strong_digraph"), FamilyTag::strong_digraph);
  EXPECT_EQ(family_tag_from_name("acyclic-with-sources"), FamilyTag::acyclic_with_sources);
  EXPECT_EQ(family_tag_from_name("trees"), FamilyTag::tree);
  EXPECT_EQ(family_tag_from_name("forests"), FamilyTag::forest);
  EXPECT_EQ(family_tag_from_name("eta"), FamilyTag::eta);
  EXPECT_THROW(family_tag_from_name("cycles"), std::invalid_argument);
  EXPECT_THROW(family_tag_from_name("etas"), std::invalid_argument);
  EXPECT_EQ(method_name(Method::series), "series");
}
