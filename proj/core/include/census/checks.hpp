#pragma once

// Named verification suites shared by the command-line tool: oracle
// equalities, algebraic identities, and generating-function identities.

#include <string_view>
#include <vector>

#include "census/report.hpp"

namespace census {

struct VerifyOptions {
  /// Largest n for digraph and tournament enumerations (capped at 5 and 6).
  int n_limit = 5;
  /// Adds tournaments on 7 vertices and digraphs on 6 vertices.
  bool long_run = false;
  unsigned threads = 1;
};

std::vector<CheckReport> oracle_suite(const VerifyOptions& options);
std::vector<CheckReport> identity_suite(const VerifyOptions& options);

enum class SeriesIdentity { strong_log, acyclic_inverse, tournament_u, tree_revert, forest_exp };

inline constexpr std::size_t kMaxSeriesIdentityOrder = 8;

std::string_view series_identity_name(SeriesIdentity id);
/// Accepts "strong-log", "acyclic-inverse", "tournament-U", "tree-revert",
/// "forest-exp"; throws std::invalid_argument.
SeriesIdentity series_identity_from_name(std::string_view name);

/// Computes both sides of the identity to the given order and compares them
/// coefficient by coefficient. Throws std::invalid_argument if order > 8.
CheckReport series_identity_check(SeriesIdentity id, std::size_t order);

/// sum_i B(n,i) v_i d_{n-i}(u,y;1) == d_n(u,y;alpha+1), with v_i the numerators
/// of exp(alpha S(x)) and the right side taken from the source-strong-component
/// census of all digraphs on [n].
CheckReport source_component_convolution_check(int n_max, const std::vector<long>& alphas,
                                               unsigned threads = 1);

}  // namespace census
