#pragma once

// Truncated formal power series in x with polynomial numerators.
//
// A series of family F and order N stores a_0..a_N, where the coefficient of
// x^n is a_n / den_F(n):
//
//   egf               den(n) = n!
//   eulerian_u        den(n) = n!_u
//   eulerian_graphic  den(n) = F(n) = n!_q (1+y)^{C(n,2)}, q = (1+uy)/(1+y)
//
// Products convolve with the kernel den(n) / (den(i) den(n-i)): an ordinary
// binomial, a Gaussian binomial in u, or B(n,i). Exp, log, composition and
// reversion exist only for egf series.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "census/multipoly.hpp"

namespace census {

enum class Family { egf, eulerian_u, eulerian_graphic };

std::string_view family_name(Family f);
/// Accepts "egf", "eulerian_u", "eulerian_graphic"; throws std::invalid_argument.
Family family_from_name(std::string_view name);

/// kappa(n, i) for the given family.
MultiPoly kernel(Family f, unsigned n, unsigned i);

class SeriesError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class TruncatedSeries {
 public:
  /// numerators[n] is a_n; the order is numerators.size() - 1.
  TruncatedSeries(Family family, std::vector<MultiPoly> numerators);

  static TruncatedSeries zero(Family family, std::size_t order);
  static TruncatedSeries one(Family family, std::size_t order);
  /// The series x (a_1 = 1).
  static TruncatedSeries identity(Family family, std::size_t order);

  Family family() const { return family_; }
  std::size_t order() const { return numerators_.size() - 1; }
  const MultiPoly& operator[](std::size_t n) const { return numerators_.at(n); }
  const std::vector<MultiPoly>& numerators() const { return numerators_; }

  TruncatedSeries truncated(std::size_t order) const;
  /// Same numerators under another family tag.
  TruncatedSeries retagged(Family family) const;
  /// Applies p -> substitute(p, bindings) to every numerator.
  TruncatedSeries substituted(const Bindings& bindings) const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const MultiPoly& c, const TruncatedSeries& a);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  Family family_;
  std::vector<MultiPoly> numerators_;
};

/// c_n = sum_i kappa(n,i) a_i b_{n-i}; throws SeriesError on family mismatch.
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse; requires a_0 == 1.
TruncatedSeries invert(const TruncatedSeries& a);

/// exp(a) for an egf series with a_0 == 0.
TruncatedSeries exp(const TruncatedSeries& a);

/// log(a) for an egf series with a_0 == 1, via (log a)' = a'/a.
TruncatedSeries log(const TruncatedSeries& a);

/// outer(inner(x)) for egf series; inner must have zero constant term.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// Compositional inverse of an egf series with f_0 == 0 and f_1 a nonzero
/// rational constant.
TruncatedSeries revert(const TruncatedSeries& f);

/// egf -> eulerian_graphic with numerators unchanged.
TruncatedSeries delta(const TruncatedSeries& a);
/// eulerian_graphic -> egf with numerators unchanged.
TruncatedSeries delta_inverse(const TruncatedSeries& a);

/// a^k by repeated multiplication (k >= 0).
TruncatedSeries power(const TruncatedSeries& a, unsigned k);

}  // namespace census
