#pragma once

// Exhaustive enumeration of small labeled tournaments, digraphs and rooted
// trees. Every enumerator splits its search space into contiguous ranges,
// one per worker, and merges the per-range histograms; the result does not
// depend on the number of threads.

#include <stdexcept>

#include "census/census_table.hpp"

namespace census {

/// Raised when a request exceeds the enumeration limits.
class RefusalError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct EnumerationOptions {
  unsigned threads = 1;
  /// Unlocks tournaments on 8 vertices and digraphs on 6 vertices.
  bool allow_large = false;
};

enum class TournamentFilter { all, strong };
enum class DigraphFilter { all, strong, acyclic };
/// Optional third statistic for digraph censuses.
enum class ExtraStat { none, sources, ssc };

inline constexpr int kTournamentLimit = 7;
inline constexpr int kTournamentLargeLimit = 8;
inline constexpr int kDigraphLimit = 5;
inline constexpr int kDigraphLargeLimit = 6;
inline constexpr int kTreeLimit = 7;

/// Keyed by (des).
CensusTable enumerate_tournaments(int n, TournamentFilter filter,
                                  const EnumerationOptions& options = {});

/// Keyed by (des, e), or (des, e, sources|ssc) with an extra statistic.
CensusTable enumerate_digraphs(int n, DigraphFilter filter, ExtraStat extra = ExtraStat::none,
                               const EnumerationOptions& options = {});

/// Keyed by (des, leaves). The one-vertex tree has no leaves.
CensusTable enumerate_trees(int n, const EnumerationOptions& options = {});

/// sum over ordered partitions (S, T) of [n] with |S| = i of u^{des(S,T)},
/// where a descent is a pair (s, t) in S x T with s > t.
MultiPoly ordered_partition_poly(unsigned n, unsigned i);

/// sum over pairs (S, A), S an i-subset of [n] and A a subset of
/// S x ([n] - S), of u^{des(A)} y^{|A|}.
MultiPoly subset_pair_poly(unsigned n, unsigned i);

/// Runs fn(begin, end, table) on `threads` contiguous sub-ranges of
/// [0, count) and merges the partial tables in range order.
template <typename Fn>
CensusTable parallel_census(const CensusTable& empty, std::uint64_t count, unsigned threads,
                            Fn fn);

}  // namespace census

#include "census/detail/parallel_census.hpp"
