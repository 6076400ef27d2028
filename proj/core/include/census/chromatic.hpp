#pragma once

// Refined chromatic polynomials and acyclic orientations of small labeled
// graphs. A descent of a proper colouring c is an edge {i < j} with
// c(i) > c(j); a descent of an orientation is an edge directed from the
// larger label to the smaller one.

#include <istream>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "census/multipoly.hpp"
#include "census/report.hpp"

namespace census {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on [n]; edges are 1-based with first < second,
/// sorted and free of duplicates.
struct UndirectedGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  /// Normalizes and validates; throws std::invalid_argument.
  static UndirectedGraph make(int n, std::vector<std::pair<int, int>> edges);
  /// Graph whose edge set is the subset `mask` of the C(n,2) pairs in lex order.
  static UndirectedGraph from_mask(int n, std::uint32_t mask);
};

/// Edge-list text: first line n, then one "u v" pair per line (1-based).
/// Blank lines and lines starting with '#' are ignored.
UndirectedGraph parse_edge_list(std::istream& in);
UndirectedGraph parse_edge_list(std::string_view text);

inline constexpr int kOrientationLimit = 6;
inline constexpr int kInterpolationLimit = 5;
inline constexpr unsigned long kColoringBudget = 10'000'000;

/// Sum of u^{des(O)} over the acyclic orientations O of g (n <= 6).
MultiPoly acyclic_orientation_poly(const UndirectedGraph& g);

/// X_G(lambda0) as a polynomial in u, by direct enumeration of colourings.
/// Requires lambda0^n <= 10^7.
MultiPoly refined_chromatic_value(const UndirectedGraph& g, unsigned lambda0);

/// X_G(lambda) as a polynomial in lambda and u (n <= 5), interpolated from
/// the samples lambda = 0..n.
MultiPoly refined_chromatic_interpolate(const UndirectedGraph& g);

/// Exact Lagrange interpolation of the unique polynomial in `var` of degree
/// <= `degree` through the samples. Throws std::invalid_argument when there
/// are fewer than degree + 1 samples or repeated abscissae.
MultiPoly lagrange_interpolate(const std::vector<std::pair<BigRat, MultiPoly>>& samples, Var var,
                               unsigned degree);

/// sum over all graphs G on [n] of y^{e(G)} X_G(lambda).
MultiPoly colored_graph_sum(int n, unsigned lambda);

/// Compares colored_graph_sum(n, lambda) with the x^n numerator of
/// (sum_n x^n / F(n))^lambda in the Eulerian-graphic family.
CheckReport colored_graph_identity_check(int n, unsigned lambda);

/// X_G(-1) == (-1)^n acyclic_orientation_poly(g) for one graph.
CheckReport reciprocity_check(const UndirectedGraph& g);

}  // namespace census
