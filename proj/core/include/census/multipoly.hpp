#pragma once

// Sparse multivariate polynomials with rational coefficients over the fixed
// variable universe (u, y, alpha, z, lambda, q).
//
// Terms are kept in a vector sorted ascending in graded-lex order (total
// degree first, then lexicographic on the exponent vector with u most
// significant). No stored coefficient is ever zero, so two polynomials are
// equal iff their term vectors are equal.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "census/bigint.hpp"

namespace census {

enum class Var : std::uint8_t { u = 0, y, alpha, z, lambda, q };

inline constexpr std::size_t kNumVars = 6;
inline constexpr std::array<std::string_view, kNumVars> kVarNames = {
    "u", "y", "alpha", "z", "lambda", "q"};

std::string_view var_name(Var v);
/// Throws std::invalid_argument for names outside the universe.
Var var_from_name(std::string_view name);

using Exponents = std::array<std::uint16_t, kNumVars>;

/// Strict graded-lex "less than" on exponent vectors.
bool graded_lex_less(const Exponents& a, const Exponents& b);

struct Term {
  Exponents exps{};
  BigRat coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Raised when a quotient is requested but the division is not exact.
class NotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(long c);  // NOLINT(google-explicit-constructor)
  MultiPoly(const BigInt& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(const BigRat& c);  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(Var v);
  static MultiPoly monomial(const Exponents& exps, const BigRat& coeff);
  /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  static MultiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero if absent).
  BigRat constant_term() const;
  BigRat coefficient(const Exponents& exps) const;

  unsigned degree(Var v) const;
  unsigned total_degree() const;
  bool depends_on(Var v) const;
  bool has_integer_coefficients() const;
  bool has_nonnegative_coefficients() const;
  /// Largest term in graded-lex order; requires a nonzero polynomial.
  const Term& leading_term() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const BigRat& scalar);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const BigRat& s) { return a *= s; }
  friend MultiPoly operator*(const BigRat& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator*(MultiPoly a, long s) { return a *= BigRat(s); }
  friend MultiPoly operator*(long s, MultiPoly a) { return a *= BigRat(s); }

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  std::vector<Term> terms_;
};

MultiPoly pow(const MultiPoly& base, unsigned k);

/// Substitution target for one variable.
using Bindings = std::map<Var, MultiPoly>;

/// Simultaneous substitution; unbound variables are left in place.
MultiPoly substitute(const MultiPoly& p, const Bindings& bindings);
/// Name-keyed variant; throws std::invalid_argument on an unknown name.
MultiPoly substitute(const MultiPoly& p,
                     const std::map<std::string, MultiPoly, std::less<>>& bindings);

/// Exact quotient a / b, or nullopt if b does not divide a.
/// Throws std::domain_error when b is zero.
std::optional<MultiPoly> try_exact_divide(const MultiPoly& a, const MultiPoly& b);
/// Exact quotient; throws NotDivisible when the division leaves a remainder.
MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);

/// Replaces var by clear_var^power (power may be negative) and multiplies the
/// result by clear_var^clear_exp. Throws std::domain_error if any exponent
/// of clear_var would end up negative.
MultiPoly laurent_substitute(const MultiPoly& p, Var var, int power, Var clear_var,
                             unsigned clear_exp);

/// Coefficient list c[0..deg] of a polynomial in a single variable.
/// Throws std::invalid_argument if p involves any other variable or has a
/// non-integer coefficient.
std::vector<BigInt> univariate_coefficients(const MultiPoly& p, Var v);

/// Collects p as sum_k c_k(rest) * v^k.
std::vector<MultiPoly> coefficients_in(const MultiPoly& p, Var v);

/// Rebuilds sum_k c[k] * v^k.
MultiPoly from_coefficients(const std::vector<BigInt>& c, Var v);

/// 1 + v + ... + v^{n-1}
MultiPoly geometric_sum(Var v, unsigned n);

/// Human-readable form such as "1 + 3*u + 3*u^2 + u^3", terms ascending.
std::string to_pretty(const MultiPoly& p);

}  // namespace census
