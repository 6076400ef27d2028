#include "census/bigint.hpp"

#include <stdexcept>

namespace census {

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("empty integer literal");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw std::invalid_argument("malformed integer literal: " + s);
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

std::string to_string(const BigRat& value) { return value.get_str(10); }

bool is_integer(const BigRat& value) { return value.get_den() == 1; }

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::string with_commas(const BigInt& value) {
  std::string digits = BigInt(abs(value)).get_str(10);
  std::string out;
  int count = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (count > 0 && count % 3 == 0) out.push_back(',');
    out.push_back(*it);
    ++count;
  }
  if (value < 0) out.push_back('-');
  return {out.rbegin(), out.rend()};
}

}  // namespace census
