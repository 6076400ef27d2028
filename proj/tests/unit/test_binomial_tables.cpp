#include <gtest/gtest.h>

#include <algorithm>
#include <thread>

#include <census/binomial_tables.hpp>
#include <census/series.hpp>

#include "test_support.hpp"

using namespace census;
using census::test_support::u;
using census::test_support::upoly;
using census::test_support::y;

namespace {

// Sum over i-subsets S of [n] of var^{#{(s,t): s in S, t not in S, s > t}}.
std::vector<long> subset_descent_counts(unsigned n, unsigned i) {
  std::vector<bool> in_s(n, false);
  std::fill(in_s.end() - i, in_s.end(), true);
  std::vector<long> counts(i * (n - i) + 1, 0);
  do {
    unsigned des = 0;
    for (unsigned s = 0; s < n; ++s)
      for (unsigned t = 0; t < s; ++t)
        if (in_s[s] && !in_s[t]) ++des;
    ++counts[des];
  } while (std::next_permutation(in_s.begin(), in_s.end()));
  return counts;
}

// B(n,i) = sum_k c_k (1+uy)^k (1+y)^{i(n-i)-k} where [n,i]_q = sum_k c_k q^k.
MultiPoly weighted_from_q_binomial(unsigned n, unsigned i) {
  auto c = subset_descent_counts(n, i);
  MultiPoly out;
  for (unsigned k = 0; k < c.size(); ++k) {
    out += c[k] * (pow(1 + u() * y(), k) * pow(1 + y(), i * (n - i) - k));
  }
  return out;
}

}  // namespace

TEST(GaussianBinomial, Examples) {
  EXPECT_EQ(gaussian_binomial(2, 1), 1 + u());
  EXPECT_EQ(gaussian_binomial(4, 2), upoly({1, 1, 2, 1, 1}));
  for (unsigned n = 0; n < 6; ++n) EXPECT_EQ(gaussian_binomial(n, 0), MultiPoly(1));
  EXPECT_TRUE(gaussian_binomial(3, 4).is_zero());
}

TEST(GaussianBinomial, OtherVariables) {
  MultiPoly q = MultiPoly::variable(Var::q);
  EXPECT_EQ(gaussian_binomial(4, 2, Var::q), 1 + q + 2 * pow(q, 2) + pow(q, 3) + pow(q, 4));
  EXPECT_EQ(q_factorial(3), (1 + u()) * upoly({1, 1, 1}));
  EXPECT_EQ(q_factorial(0), MultiPoly(1));
}

TEST(GaussianBinomial, MatchesSubsetEnumeration) {
  for (unsigned n = 0; n <= 7; ++n) {
    for (unsigned i = 0; i <= n; ++i) {
      EXPECT_EQ(gaussian_binomial(n, i), upoly(subset_descent_counts(n, i)))
          << "n=" << n << " i=" << i;
    }
  }
}

TEST(GaussianBinomial, SymmetricUnimodalWithBinomialTotal) {
  for (unsigned n = 0; n <= 12; ++n) {
    for (unsigned i = 0; i <= n; ++i) {
      MultiPoly g = gaussian_binomial(n, i);
      EXPECT_EQ(g, gaussian_binomial(n, n - i));
      auto c = univariate_coefficients(g, Var::u);
      EXPECT_EQ(c.size(), i * (n - i) + 1U);
      EXPECT_TRUE(std::equal(c.begin(), c.end(), c.rbegin()));
      auto peak = std::max_element(c.begin(), c.end());
      EXPECT_TRUE(std::is_sorted(c.begin(), peak + 1));
      EXPECT_TRUE(std::is_sorted(peak, c.end(), std::greater<>()));
      EXPECT_EQ(substitute(g, Bindings{{Var::u, 1}}), MultiPoly(binomial(n, i)));
    }
  }
}

TEST(WeightedBinomial, Examples) {
  EXPECT_EQ(weighted_binomial(2, 1), 2 + y() + u() * y());
  for (unsigned n = 0; n < 6; ++n) EXPECT_EQ(weighted_binomial(n, n), MultiPoly(1));
  EXPECT_EQ(substitute(weighted_binomial(4, 2), Bindings{{Var::u, 1}, {Var::y, 1}}),
            MultiPoly(96));
  EXPECT_TRUE(weighted_binomial(2, 3).is_zero());
}

TEST(WeightedBinomial, MatchesQBinomialExpansion) {
  for (unsigned n = 0; n <= 9; ++n) {
    for (unsigned i = 0; i <= n; ++i) {
      EXPECT_EQ(weighted_binomial(n, i), weighted_from_q_binomial(n, i)) << n << "," << i;
    }
  }
}

TEST(WeightedBinomial, TotalCountsPairs) {
  for (unsigned n = 0; n <= 8; ++n) {
    for (unsigned i = 0; i <= n; ++i) {
      BigInt expected = binomial(n, i) * (BigInt(1) << (i * (n - i)));
      EXPECT_EQ(substitute(weighted_binomial(n, i), Bindings{{Var::u, 1}, {Var::y, 1}}),
                MultiPoly(expected));
    }
  }
}

TEST(Normalization, SmallValues) {
  EXPECT_EQ(normalization_F(0), MultiPoly(1));
  EXPECT_EQ(normalization_F(1), MultiPoly(1));
  EXPECT_EQ(normalization_factor(2), 2 + y() + u() * y());
  EXPECT_EQ(descent_edge_weight(), 1 + u() * y());
  EXPECT_EQ(ascent_edge_weight(), 1 + y());
}

TEST(Normalization, FactorTimesDifferenceIsDifferenceOfPowers) {
  for (unsigned i = 1; i <= 10; ++i) {
    EXPECT_EQ(normalization_factor(i) * (y() - u() * y()),
              pow(1 + y(), i) - pow(1 + u() * y(), i));
  }
}

TEST(Normalization, QuotientIsWeightedBinomial) {
  for (unsigned n = 0; n <= 6; ++n) {
    for (unsigned i = 0; i <= n; ++i) {
      EXPECT_EQ(exact_divide(normalization_F(n), normalization_F(i) * normalization_F(n - i)),
                weighted_binomial(n, i));
    }
  }
}

TEST(Kernels, PerFamily) {
  EXPECT_EQ(kernel(Family::egf, 5, 2), MultiPoly(10));
  EXPECT_EQ(kernel(Family::eulerian_u, 4, 2), gaussian_binomial(4, 2));
  EXPECT_EQ(kernel(Family::eulerian_graphic, 4, 1), weighted_binomial(4, 1));
  for (auto f : {Family::egf, Family::eulerian_u, Family::eulerian_graphic}) {
    EXPECT_EQ(kernel(f, 6, 0), MultiPoly(1));
    EXPECT_EQ(kernel(f, 6, 6), MultiPoly(1));
  }
}

TEST(Tables, ConcurrentCallsAgree) {
  std::vector<MultiPoly> expected;
  for (unsigned n = 0; n <= 14; ++n) expected.push_back(weighted_binomial(n, n / 2));
  std::vector<std::thread> workers;
  std::vector<int> mismatches(4, 0);
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&, w] {
      for (unsigned n = 14; n-- > 0;) {
        if (weighted_binomial(n, n / 2) != expected[n]) ++mismatches[static_cast<std::size_t>(w)];
        if (normalization_F(n) * 1L != normalization_F(n)) ++mismatches[static_cast<std::size_t>(w)];
      }
    });
  }
  for (auto& t : workers) t.join();
  for (int m : mismatches) EXPECT_EQ(m, 0);
}
