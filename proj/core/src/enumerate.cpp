#include "census/enumerate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <bit>
#include <string>

#include "census/digraph.hpp"

namespace census {

namespace {

using Adjacency = std::array<VertexSet, 8>;

VertexSet reach_from(int n, const Adjacency& adj, int start) {
  VertexSet seen = 1U << start;
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  (void)n;
  return seen;
}

bool is_strong(int n, const Adjacency& out, const Adjacency& in) {
  const VertexSet all = (1U << n) - 1U;
  return reach_from(n, out, 0) == all && reach_from(n, in, 0) == all;
}

bool is_acyclic(int n, const Adjacency& in) {
  VertexSet remaining = (1U << n) - 1U;
  while (remaining != 0) {
    VertexSet removable = 0;
    for (VertexSet r = remaining; r != 0; r &= r - 1) {
      int v = std::countr_zero(r);
      if ((in[v] & remaining) == 0) removable |= 1U << v;
    }
    if (removable == 0) return false;
    remaining &= ~removable;
  }
  return true;
}

Adjacency transpose(int n, const Adjacency& out) {
  Adjacency in{};
  for (int v = 0; v < n; ++v) {
    for (VertexSet o = out[v]; o != 0; o &= o - 1) in[std::countr_zero(o)] |= 1U << v;
  }
  return in;
}

std::string tournament_filter_name(TournamentFilter f) {
  return f == TournamentFilter::all ? "all" : "strong";
}

std::string digraph_filter_name(DigraphFilter f) {
  switch (f) {
    case DigraphFilter::all:
      return "all";
    case DigraphFilter::strong:
      return "strong";
    case DigraphFilter::acyclic:
      return "acyclic";
  }
  return "?";
}

// Flattens a dense count vector into the table.
void flush(const std::vector<std::uint64_t>& dense, const std::vector<int>& dims,
           CensusTable& table) {
  std::vector<int> key(dims.size());
  for (std::size_t idx = 0; idx < dense.size(); ++idx) {
    if (dense[idx] == 0) continue;
    std::size_t rest = idx;
    for (std::size_t k = dims.size(); k-- > 0;) {
      key[k] = static_cast<int>(rest % static_cast<std::size_t>(dims[k]));
      rest /= static_cast<std::size_t>(dims[k]);
    }
    table.add(key, BigInt(static_cast<unsigned long>(dense[idx])));
  }
}

}  // namespace

CensusTable enumerate_tournaments(int n, TournamentFilter filter,
                                  const EnumerationOptions& options) {
  const int limit = options.allow_large ? kTournamentLargeLimit : kTournamentLimit;
  if (n < 1 || n > limit) {
    throw RefusalError("tournament enumeration supports 1 <= n <= " + std::to_string(limit));
  }
  // Bit k of the mask orients the k-th pair (i < j) in lex order: set means
  // the descent j -> i, clear means the ascent i -> j.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  const int bits = static_cast<int>(pairs.size());
  const int max_des = bits;

  CensusTable empty("tournaments", n, {"des"}, tournament_filter_name(filter));
  return parallel_census(
      empty, 1ULL << bits, options.threads,
      [&](std::uint64_t begin, std::uint64_t end, CensusTable& table) {
        std::vector<std::uint64_t> dense(static_cast<std::size_t>(max_des + 1), 0);
        for (std::uint64_t mask = begin; mask < end; ++mask) {
          if (filter == TournamentFilter::strong) {
            Adjacency out{}, in{};
            for (int k = 0; k < bits; ++k) {
              auto [i, j] = pairs[static_cast<std::size_t>(k)];
              if ((mask >> k) & 1ULL) {
                out[j] |= 1U << i;
                in[i] |= 1U << j;
              } else {
                out[i] |= 1U << j;
                in[j] |= 1U << i;
              }
            }
            if (!is_strong(n, out, in)) continue;
          }
          ++dense[static_cast<std::size_t>(std::popcount(mask))];
        }
        flush(dense, {max_des + 1}, table);
      });
}

CensusTable enumerate_digraphs(int n, DigraphFilter filter, ExtraStat extra,
                               const EnumerationOptions& options) {
  const int limit = options.allow_large ? kDigraphLargeLimit : kDigraphLimit;
  if (n < 1 || n > limit) {
    throw RefusalError("digraph enumeration supports 1 <= n <= " + std::to_string(limit) +
                       (options.allow_large ? "" : " (6 with the long-run flag)"));
  }
  const int bits = Digraph::pair_count(n);
  const std::uint64_t des_mask = Digraph::descent_mask(n);
  std::vector<std::string> stats{"des", "e"};
  std::vector<int> dims{bits + 1, bits + 1};
  if (extra == ExtraStat::sources) stats.emplace_back("sources");
  if (extra == ExtraStat::ssc) stats.emplace_back("ssc");
  if (extra != ExtraStat::none) dims.push_back(n + 1);
  std::size_t cells = 1;
  for (int d : dims) cells *= static_cast<std::size_t>(d);

  CensusTable empty("digraphs", n, stats, digraph_filter_name(filter));
  const int width = n - 1;
  const std::uint64_t chunk_mask = (1ULL << width) - 1;
  return parallel_census(
      empty, 1ULL << bits, options.threads,
      [&](std::uint64_t begin, std::uint64_t end, CensusTable& table) {
        std::vector<std::uint64_t> dense(cells, 0);
        for (std::uint64_t mask = begin; mask < end; ++mask) {
          Adjacency out{};
          for (int v = 0; v < n; ++v) {
            auto chunk = static_cast<VertexSet>((mask >> (v * width)) & chunk_mask);
            out[v] = (chunk & ((1U << v) - 1U)) | ((chunk >> v) << (v + 1));
          }
          Adjacency in = transpose(n, out);
          if (filter == DigraphFilter::strong && !is_strong(n, out, in)) continue;
          if (filter == DigraphFilter::acyclic && !is_acyclic(n, in)) continue;

          const auto des = static_cast<std::size_t>(std::popcount(mask & des_mask));
          const auto e = static_cast<std::size_t>(std::popcount(mask));
          std::size_t idx = des * static_cast<std::size_t>(bits + 1) + e;
          if (extra == ExtraStat::sources) {
            int sources = 0;
            for (int v = 0; v < n; ++v) sources += in[v] == 0 ? 1 : 0;
            idx = idx * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(sources);
          } else if (extra == ExtraStat::ssc) {
            int ssc = digraph_stats(Digraph(n, mask)).ssc;
            idx = idx * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(ssc);
          }
          ++dense[idx];
        }
        flush(dense, dims, table);
      });
}

CensusTable enumerate_trees(int n, const EnumerationOptions& options) {
  if (n < 1 || n > kTreeLimit) {
    throw RefusalError("tree enumeration supports 1 <= n <= " + std::to_string(kTreeLimit));
  }
  CensusTable empty("trees", n, {"des", "leaves"}, "all");
  // Candidates: a root r plus, for every other vertex, a parent among the
  // remaining n-1 vertices, encoded in base n-1.
  std::uint64_t per_root = 1;
  for (int k = 0; k < n - 1; ++k) per_root *= static_cast<std::uint64_t>(n - 1);
  const std::uint64_t count = per_root * static_cast<std::uint64_t>(n);

  return parallel_census(
      empty, count, options.threads,
      [&](std::uint64_t begin, std::uint64_t end, CensusTable& table) {
        std::vector<std::uint64_t> dense(static_cast<std::size_t>(n * (n + 1)), 0);
        std::array<int, 8> parent{};
        for (std::uint64_t code = begin; code < end; ++code) {
          const int root = static_cast<int>(code / per_root);
          std::uint64_t rest = code % per_root;
          parent[root] = -1;
          for (int v = 0; v < n; ++v) {
            if (v == root) continue;
            int choice = static_cast<int>(rest % static_cast<std::uint64_t>(n - 1));
            rest /= static_cast<std::uint64_t>(n - 1);
            parent[v] = choice < v ? choice : choice + 1;
          }
          bool acyclic = true;
          for (int v = 0; v < n && acyclic; ++v) {
            int w = v;
            int steps = 0;
            while (w != root && steps <= n) {
              w = parent[w];
              ++steps;
            }
            acyclic = w == root;
          }
          if (!acyclic) continue;

          int des = 0;
          VertexSet has_child = 0;
          for (int v = 0; v < n; ++v) {
            if (v == root) continue;
            if (v > parent[v]) ++des;
            has_child |= 1U << parent[v];
          }
          int leaves = n == 1 ? 0 : n - std::popcount(has_child);
          ++dense[static_cast<std::size_t>(des * (n + 1) + leaves)];
        }
        flush(dense, {n, n + 1}, table);
      });
}

MultiPoly ordered_partition_poly(unsigned n, unsigned i) {
  if (n > 20) throw RefusalError("ordered partitions supported for n <= 20");
  std::vector<std::uint64_t> hist(i * (n - std::min(i, n)) + 1, 0);
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    if (static_cast<unsigned>(std::popcount(s)) != i) continue;
    unsigned des = 0;
    for (unsigned a = 0; a < n; ++a) {
      if (!((s >> a) & 1U)) continue;
      for (unsigned b = 0; b < a; ++b) des += ((s >> b) & 1U) ? 0 : 1;
    }
    ++hist[des];
  }
  std::vector<BigInt> coeffs;
  for (auto h : hist) coeffs.emplace_back(static_cast<unsigned long>(h));
  return from_coefficients(coeffs, Var::u);
}

MultiPoly subset_pair_poly(unsigned n, unsigned i) {
  if (n > 8) throw RefusalError("subset pairs supported for n <= 8");
  std::map<std::pair<int, int>, std::uint64_t> hist;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    if (static_cast<unsigned>(std::popcount(s)) != i) continue;
    std::vector<bool> is_descent;
    for (unsigned a = 0; a < n; ++a) {
      if (!((s >> a) & 1U)) continue;
      for (unsigned b = 0; b < n; ++b) {
        if ((s >> b) & 1U) continue;
        is_descent.push_back(a > b);
      }
    }
    const std::size_t m = is_descent.size();
    for (std::uint64_t sub = 0; sub < (1ULL << m); ++sub) {
      int des = 0;
      for (std::size_t k = 0; k < m; ++k) des += ((sub >> k) & 1ULL) && is_descent[k] ? 1 : 0;
      ++hist[{des, std::popcount(sub)}];
    }
  }
  std::vector<Term> terms;
  for (const auto& [key, count] : hist) {
    Term t;
    t.exps[static_cast<std::size_t>(Var::u)] = static_cast<std::uint16_t>(key.first);
    t.exps[static_cast<std::size_t>(Var::y)] = static_cast<std::uint16_t>(key.second);
    t.coeff = BigRat(BigInt(static_cast<unsigned long>(count)));
    terms.push_back(std::move(t));
  }
  return MultiPoly::from_terms(std::move(terms));
}

}  // namespace census
