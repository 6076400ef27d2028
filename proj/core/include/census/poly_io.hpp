#pragma once

// Polynomial JSON:
//   {"vars":["u","y","alpha","z","lambda","q"],
//    "terms":[{"e":[e_u,e_y,...],"n":"<decimal>","d":"<decimal>"}, ...]}
// Terms appear in canonical graded-lex order; "d" is omitted when it is 1.

#include <string>
#include <string_view>

#include "census/multipoly.hpp"
#include "census/series.hpp"

namespace census {

std::string to_json(const MultiPoly& p);

/// Accepts terms in any order and a "vars" list that is a permutation or
/// prefix-subset of the universe. Throws std::invalid_argument.
MultiPoly poly_from_json(std::string_view text);

/// One "e_u,e_y,e_alpha,e_z,e_lambda,e_q,coefficient" line per term, with a
/// header line.
std::string to_csv(const MultiPoly& p);

// Series JSON:
//   {"family":"egf|eulerian_u|eulerian_graphic","order":N,
//    "numerators":[<polynomial JSON>, ...]}
std::string to_json(const TruncatedSeries& s);
/// Throws std::invalid_argument.
TruncatedSeries series_from_json(std::string_view text);

}  // namespace census
