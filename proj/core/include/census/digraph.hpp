#pragma once

// Labeled digraphs on [n] (n <= 7) stored as a bitmask over the n(n-1)
// ordered pairs. Pairs are numbered in lex order of (i, j), i != j, so the
// out-edges of vertex i occupy the contiguous bit range [i(n-1), (i+1)(n-1)).
// Vertices are 0-based internally; vertex k carries the label k+1, and an
// edge (s, t) is a descent when s > t.

#include <cstdint>
#include <utility>
#include <vector>

namespace census {

inline constexpr int kMaxDigraphVertices = 7;

using VertexSet = std::uint32_t;

class Digraph {
 public:
  /// Throws std::invalid_argument for n outside 0..7 or stray mask bits.
  Digraph(int n, std::uint64_t edges);

  /// Edges given as 1-based (source, target) pairs.
  static Digraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  std::uint64_t edges() const { return edges_; }
  bool has_edge(int from, int to) const;  // 0-based
  VertexSet out_neighbors(int v) const;

  static int pair_index(int n, int from, int to);  // 0-based endpoints
  static int pair_count(int n) { return n * (n - 1); }
  /// Bits of every pair (i, j) with i > j.
  static std::uint64_t descent_mask(int n);

 private:
  int n_;
  std::uint64_t edges_;
};

struct DigraphStats {
  int edges = 0;
  int descents = 0;
  bool strong = false;
  bool acyclic = false;
  int sources = 0;  // vertices of in-degree 0
  int ssc = 0;      // strong components with no edge entering from outside

  friend bool operator==(const DigraphStats&, const DigraphStats&) = default;
};

DigraphStats digraph_stats(const Digraph& d);

/// Strong components as vertex bitsets, each listed once, ordered by their
/// smallest vertex.
std::vector<VertexSet> strong_components(int n, const std::vector<VertexSet>& out);

/// Out-neighbour sets for the mask, one per vertex.
std::vector<VertexSet> adjacency(int n, std::uint64_t edges);

}  // namespace census
