#pragma once

// Descent and descent-edge polynomials of labeled digraph families.
//
//   t_n(u)          strong tournaments
//   eta_n(u,y)      auxiliary polynomials of the strong-digraph recurrence
//   s_n(u,y)        strong digraphs
//   a_n(u,y)        acyclic digraphs; a_n(u,y;alpha) also weights sources
//   tree / forest   rooted trees by descents; forests also weight trees by z
//
// Strong digraphs and acyclic digraphs are available both from their
// recurrences and from their generating-function identities. Recurrence
// values up to family_memo_bound() are cached.

#include <string_view>
#include <vector>

#include "census/multipoly.hpp"
#include "census/report.hpp"
#include "census/series.hpp"

namespace census {

enum class FamilyTag {
  strong_tournament,
  all_tournament,
  eta,
  strong_digraph,
  acyclic,
  acyclic_with_sources,
  tree,
  forest,
};

enum class Method { recurrence, series };

std::string_view family_tag_name(FamilyTag tag);
/// Accepts the names above with '_' or '-' and plural forms such as
/// "strong-tournaments"; throws std::invalid_argument.
FamilyTag family_tag_from_name(std::string_view name);
std::string_view method_name(Method m);

struct FamilyPolynomial {
  FamilyTag family;
  unsigned n;
  MultiPoly value;
  Method provenance;
};

/// (1+u)^{C(n,2)}
MultiPoly all_tournament_poly(unsigned n);
/// ((1+uy)(1+y))^{C(n,2)}
MultiPoly all_digraph_poly(unsigned n);

/// t_n(u) from its recurrence; n >= 1.
MultiPoly strong_tournament_poly(unsigned n);
/// t_n(u) read off T(x) = 1 - U(x)^{-1} in the Eulerian family.
MultiPoly strong_tournament_poly_series(unsigned n);

/// eta_n(u,y); n >= 1. Coefficients may be negative.
MultiPoly eta_poly(unsigned n);

/// s_n(u,y); n >= 1.
MultiPoly strong_digraph_poly(unsigned n, Method method = Method::recurrence);

/// a_n(u,y); n >= 0.
MultiPoly acyclic_poly(unsigned n, Method method = Method::recurrence);

/// a_n(u,y;alpha) with alpha weighting sources.
MultiPoly acyclic_source_poly(unsigned n);

/// prod_{i=1}^{n-1} (i u + n - i); n >= 1.
MultiPoly tree_poly(unsigned n);

/// z prod_{i=1}^{n-1} (i u + n - i + z); n >= 1.
MultiPoly forest_poly(unsigned n);

FamilyPolynomial family_polynomial(FamilyTag tag, unsigned n,
                                   Method method = Method::recurrence);

// Generating functions, all truncated at order N.

/// U(x) = sum (1+u)^{C(n,2)} x^n / n!_u
TruncatedSeries all_tournaments_series(std::size_t order);
/// T(x) = sum_{n>=1} t_n(u) x^n / n!_u, from the recurrence values.
TruncatedSeries strong_tournaments_series(std::size_t order);
/// D(x) = sum ((1+uy)(1+y))^{C(n,2)} x^n / F(n)
TruncatedSeries all_digraphs_series(std::size_t order);
/// sum c^n x^n / F(n) for a polynomial c (c = -1 gives the acyclic kernel).
TruncatedSeries graphic_power_series(const MultiPoly& c, std::size_t order);
/// S(x) = -log(Delta^{-1}(D(x)^{-1})), an egf.
TruncatedSeries strong_digraphs_series(std::size_t order);
/// A(x) = (sum (-1)^n x^n / F(n))^{-1}
TruncatedSeries acyclic_series(std::size_t order);
/// S(x) built from recurrence values s_n.
TruncatedSeries strong_digraphs_series_from_recurrence(std::size_t order);
/// T(x,u) = sum tree_poly(n) x^n / n!
TruncatedSeries tree_series(std::size_t order);
/// sum_{n>=1} (-1)^{n-1} (1 + u + ... + u^{n-1}) x^n / n!
TruncatedSeries tree_inverse_series(std::size_t order);
/// sum_{n>=1} alpha^{n-1} (1 + u + ... + u^{n-1}) x^n / n!
TruncatedSeries short_tree_series(std::size_t order, const BigInt& alpha);

/// For every alpha, compares compose(T(x,u), short_tree_series(alpha)) with
/// the brute-force tree census weighted by u^{des} (alpha+1)^{leaves}, for
/// 1 <= n <= order (order <= 7).
CheckReport tree_leaf_identity_check(std::size_t order, const std::vector<long>& alphas);

/// eta_n(y^{-2}, y) == (1+y)^{C(n,2)} t_n(y^{-1}) for 1 <= n <= n_max, with both
/// sides multiplied by y^{2 C(n,2)}.
CheckReport eta_tournament_identity_check(unsigned n_max);

}  // namespace census
