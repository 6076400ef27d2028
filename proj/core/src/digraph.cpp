#include "census/digraph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace census {

namespace {

std::uint64_t low_bits(int k) { return k >= 64 ? ~0ULL : ((1ULL << k) - 1); }

// Transitive closure of the out-neighbour relation (paths of length >= 1).
std::vector<VertexSet> closure(int n, std::vector<VertexSet> reach) {
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if ((reach[i] >> k) & 1U) reach[i] |= reach[k];
    }
  }
  return reach;
}

}  // namespace

Digraph::Digraph(int n, std::uint64_t edges) : n_(n), edges_(edges) {
  if (n < 0 || n > kMaxDigraphVertices) {
    throw std::invalid_argument("digraph size out of range: " + std::to_string(n));
  }
  if ((edges & ~low_bits(pair_count(n))) != 0) {
    throw std::invalid_argument("edge mask has bits beyond n(n-1)");
  }
}

Digraph Digraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  std::uint64_t mask = 0;
  for (auto [s, t] : edges) {
    if (s < 1 || s > n || t < 1 || t > n || s == t) {
      throw std::invalid_argument("bad edge (" + std::to_string(s) + "," + std::to_string(t) +
                                  ")");
    }
    mask |= 1ULL << pair_index(n, s - 1, t - 1);
  }
  return {n, mask};
}

int Digraph::pair_index(int n, int from, int to) {
  return from * (n - 1) + (to < from ? to : to - 1);
}

std::uint64_t Digraph::descent_mask(int n) {
  std::uint64_t mask = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) mask |= 1ULL << pair_index(n, i, j);
  }
  return mask;
}

bool Digraph::has_edge(int from, int to) const {
  if (from == to) return false;
  return (edges_ >> pair_index(n_, from, to)) & 1ULL;
}

VertexSet Digraph::out_neighbors(int v) const {
  const int width = n_ - 1;
  auto chunk = static_cast<VertexSet>((edges_ >> (v * width)) & low_bits(width));
  VertexSet below = chunk & ((1U << v) - 1U);
  VertexSet above = chunk >> v;
  return below | (above << (v + 1));
}

std::vector<VertexSet> adjacency(int n, std::uint64_t edges) {
  Digraph d(n, edges);
  std::vector<VertexSet> out(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) out[v] = d.out_neighbors(v);
  return out;
}

std::vector<VertexSet> strong_components(int n, const std::vector<VertexSet>& out) {
  auto reach = closure(n, out);
  std::vector<VertexSet> comps;
  VertexSet assigned = 0;
  for (int v = 0; v < n; ++v) {
    if ((assigned >> v) & 1U) continue;
    VertexSet comp = 1U << v;
    for (int w = 0; w < n; ++w) {
      if (w != v && ((reach[v] >> w) & 1U) && ((reach[w] >> v) & 1U)) comp |= 1U << w;
    }
    assigned |= comp;
    comps.push_back(comp);
  }
  return comps;
}

DigraphStats digraph_stats(const Digraph& d) {
  const int n = d.n();
  DigraphStats s;
  s.edges = std::popcount(d.edges());
  s.descents = std::popcount(d.edges() & Digraph::descent_mask(n));
  if (n == 0) {
    s.acyclic = true;
    return s;
  }

  auto out = adjacency(n, d.edges());
  std::vector<VertexSet> in(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w) {
      if ((out[v] >> w) & 1U) in[w] |= 1U << v;
    }
  }
  for (int v = 0; v < n; ++v) s.sources += in[v] == 0 ? 1 : 0;

  auto reach = closure(n, out);
  const VertexSet all = (1U << n) - 1U;
  s.acyclic = true;
  s.strong = true;
  for (int v = 0; v < n; ++v) {
    if ((reach[v] >> v) & 1U) s.acyclic = false;
    if ((reach[v] | (1U << v)) != all) s.strong = false;
  }

  for (VertexSet comp : strong_components(n, out)) {
    VertexSet entering = 0;
    for (int w = 0; w < n; ++w) {
      if ((comp >> w) & 1U) entering |= in[w];
    }
    if ((entering & ~comp) == 0) ++s.ssc;
  }
  return s;
}

}  // namespace census
