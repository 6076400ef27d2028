#pragma once

namespace census {

inline constexpr unsigned kDefaultBinomialMemoBound = 12;
inline constexpr unsigned kDefaultFamilyMemoBound = 10;

/// Largest n whose binomial-table rows are cached. The environment variable
/// CENSUS_NMAX, when it holds a positive integer, replaces the default.
unsigned binomial_memo_bound();

/// Largest n whose family polynomials are cached (CENSUS_NMAX also applies).
unsigned family_memo_bound();

}  // namespace census
