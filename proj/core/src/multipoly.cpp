#include "census/multipoly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace census {

namespace {

unsigned total(const Exponents& e) {
  unsigned s = 0;
  for (auto x : e) s += x;
  return s;
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t i = 0; i < kNumVars; ++i) {
    unsigned s = unsigned{a[i]} + b[i];
    if (s > std::numeric_limits<std::uint16_t>::max()) {
      throw std::overflow_error("polynomial exponent overflow");
    }
    r[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto x : e) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

bool term_less(const Term& a, const Term& b) { return graded_lex_less(a.exps, b.exps); }

// Merges two canonical term vectors; sign = +1 for addition, -1 for subtraction.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && graded_lex_less(a[i].exps, b[j].exps))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || graded_lex_less(b[j].exps, a[i].exps)) {
      Term t = b[j++];
      if (sign < 0) t.coeff = -t.coeff;
      out.push_back(std::move(t));
    } else {
      BigRat c = sign < 0 ? BigRat(a[i].coeff - b[j].coeff) : BigRat(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].exps, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::string_view var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

Var var_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (kVarNames[i] == name) return static_cast<Var>(i);
  }
  throw std::invalid_argument("unknown variable: " + std::string(name));
}

bool graded_lex_less(const Exponents& a, const Exponents& b) {
  unsigned ta = total(a), tb = total(b);
  if (ta != tb) return ta < tb;
  return a < b;
}

MultiPoly::MultiPoly(long c) : MultiPoly(BigRat(c)) {}

MultiPoly::MultiPoly(const BigInt& c) : MultiPoly(BigRat(c)) {}

MultiPoly::MultiPoly(const BigRat& c) {
  if (c != 0) terms_.push_back({Exponents{}, c});
}

MultiPoly MultiPoly::variable(Var v) {
  Exponents e{};
  e[static_cast<std::size_t>(v)] = 1;
  return monomial(e, 1);
}

MultiPoly MultiPoly::monomial(const Exponents& exps, const BigRat& coeff) {
  MultiPoly p;
  if (coeff != 0) p.terms_.push_back({exps, coeff});
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  MultiPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exps == t.exps) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total(terms_[0].exps) == 0);
}

BigRat MultiPoly::constant_term() const {
  if (!terms_.empty() && total(terms_[0].exps) == 0) return terms_[0].coeff;
  return 0;
}

BigRat MultiPoly::coefficient(const Exponents& exps) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{exps, 0}, term_less);
  if (it != terms_.end() && it->exps == exps) return it->coeff;
  return 0;
}

unsigned MultiPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.exps[static_cast<std::size_t>(v)]);
  return d;
}

unsigned MultiPoly::total_degree() const { return terms_.empty() ? 0 : total(terms_.back().exps); }

bool MultiPoly::depends_on(Var v) const { return degree(v) > 0; }

bool MultiPoly::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return is_integer(t.coeff); });
}

bool MultiPoly::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff > 0; });
}

const Term& MultiPoly::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.back();
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  terms_ = merge(terms_, other.terms_, +1);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const BigRat& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= scalar;
  }
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1 || b.size() == 1) {
    // Monomial times polynomial preserves term order.
    const MultiPoly& mono = a.size() == 1 ? a : b;
    const MultiPoly& poly = a.size() == 1 ? b : a;
    const Term& m = mono.terms_[0];
    MultiPoly r;
    r.terms_.reserve(poly.size());
    for (const auto& t : poly.terms_) {
      r.terms_.push_back({add_exponents(m.exps, t.exps), m.coeff * t.coeff});
    }
    return r;
  }
  std::unordered_map<Exponents, BigRat, ExponentsHash> acc;
  acc.reserve(a.size() * b.size());
  BigRat prod;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      mpq_mul(prod.get_mpq_t(), ta.coeff.get_mpq_t(), tb.coeff.get_mpq_t());
      auto [it, inserted] = acc.try_emplace(add_exponents(ta.exps, tb.exps));
      if (inserted) {
        it->second = prod;
      } else {
        mpq_add(it->second.get_mpq_t(), it->second.get_mpq_t(), prod.get_mpq_t());
      }
    }
  }
  MultiPoly r;
  r.terms_.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (c != 0) r.terms_.push_back({e, std::move(c)});
  }
  std::sort(r.terms_.begin(), r.terms_.end(), term_less);
  return r;
}

MultiPoly pow(const MultiPoly& base, unsigned k) {
  MultiPoly result(1L);
  MultiPoly sq = base;
  while (k > 0) {
    if (k & 1U) result *= sq;
    k >>= 1U;
    if (k > 0) sq = sq * sq;
  }
  return result;
}

MultiPoly substitute(const MultiPoly& p, const Bindings& bindings) {
  if (bindings.empty()) return p;
  std::map<std::pair<Var, unsigned>, MultiPoly> power_cache;
  auto power_of = [&](Var v, unsigned e) -> const MultiPoly& {
    auto key = std::make_pair(v, e);
    auto it = power_cache.find(key);
    if (it == power_cache.end()) {
      it = power_cache.emplace(key, pow(bindings.at(v), e)).first;
    }
    return it->second;
  };

  MultiPoly result;
  std::vector<Term> untouched;
  for (const auto& t : p.terms()) {
    Exponents rest = t.exps;
    MultiPoly factor(t.coeff);
    bool bound_any = false;
    for (const auto& [v, value] : bindings) {
      auto idx = static_cast<std::size_t>(v);
      if (rest[idx] == 0) continue;
      bound_any = true;
      factor *= power_of(v, rest[idx]);
      rest[idx] = 0;
    }
    if (!bound_any) {
      untouched.push_back(t);
      continue;
    }
    result += MultiPoly::monomial(rest, 1) * factor;
  }
  return result + MultiPoly::from_terms(std::move(untouched));
}

MultiPoly substitute(const MultiPoly& p,
                     const std::map<std::string, MultiPoly, std::less<>>& bindings) {
  Bindings by_var;
  for (const auto& [name, value] : bindings) by_var.emplace(var_from_name(name), value);
  return substitute(p, by_var);
}

std::optional<MultiPoly> try_exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  const Term& lead_b = b.leading_term();
  MultiPoly quotient;
  MultiPoly rem = a;
  while (!rem.is_zero()) {
    const Term& lead_r = rem.leading_term();
    Exponents e{};
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (lead_r.exps[i] < lead_b.exps[i]) return std::nullopt;
      e[i] = static_cast<std::uint16_t>(lead_r.exps[i] - lead_b.exps[i]);
    }
    MultiPoly step = MultiPoly::monomial(e, lead_r.coeff / lead_b.coeff);
    rem -= step * b;
    quotient += step;
  }
  return quotient;
}

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
  auto q = try_exact_divide(a, b);
  if (!q) throw NotDivisible("polynomial division is not exact");
  return *std::move(q);
}

MultiPoly laurent_substitute(const MultiPoly& p, Var var, int power, Var clear_var,
                             unsigned clear_exp) {
  const auto vi = static_cast<std::size_t>(var);
  const auto ci = static_cast<std::size_t>(clear_var);
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    long long e = static_cast<long long>(t.exps[vi]) * power + clear_exp;
    if (vi != ci) e += t.exps[ci];
    if (e < 0) {
      throw std::domain_error("clearing exponent too small for Laurent substitution");
    }
    if (e > std::numeric_limits<std::uint16_t>::max()) {
      throw std::overflow_error("polynomial exponent overflow");
    }
    Term r = t;
    r.exps[vi] = 0;
    r.exps[ci] = static_cast<std::uint16_t>(e);
    out.push_back(std::move(r));
  }
  return MultiPoly::from_terms(std::move(out));
}

std::vector<BigInt> univariate_coefficients(const MultiPoly& p, Var v) {
  const auto vi = static_cast<std::size_t>(v);
  std::vector<BigInt> c(p.degree(v) + 1, 0);
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (i != vi && t.exps[i] != 0) {
        throw std::invalid_argument("polynomial is not univariate in " +
                                    std::string(var_name(v)));
      }
    }
    if (!is_integer(t.coeff)) throw std::invalid_argument("non-integer coefficient");
    c[t.exps[vi]] = t.coeff.get_num();
  }
  if (p.is_zero()) c.clear();
  return c;
}

std::vector<MultiPoly> coefficients_in(const MultiPoly& p, Var v) {
  const auto vi = static_cast<std::size_t>(v);
  std::vector<std::vector<Term>> buckets(p.degree(v) + 1);
  for (const auto& t : p.terms()) {
    Term r = t;
    r.exps[vi] = 0;
    buckets[t.exps[vi]].push_back(std::move(r));
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(MultiPoly::from_terms(std::move(b)));
  return out;
}

MultiPoly from_coefficients(const std::vector<BigInt>& c, Var v) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    Exponents e{};
    e[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(k);
    terms.push_back({e, BigRat(c[k])});
  }
  return MultiPoly::from_terms(std::move(terms));
}

MultiPoly geometric_sum(Var v, unsigned n) {
  return from_coefficients(std::vector<BigInt>(n, 1), v);
}

std::string to_pretty(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms()) {
    BigRat mag = abs(t.coeff);
    bool negative = t.coeff < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (t.exps[i] == 0) continue;
      if (any) mono << '*';
      mono << kVarNames[i];
      if (t.exps[i] > 1) mono << '^' << t.exps[i];
      any = true;
    }
    if (!any) {
      out << to_string(mag);
    } else if (mag == 1) {
      out << mono.str();
    } else {
      out << to_string(mag) << '*' << mono.str();
    }
  }
  return out.str();
}

}  // namespace census
