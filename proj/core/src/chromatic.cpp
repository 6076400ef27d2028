#include "census/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <string>

#include "census/series.hpp"

namespace census {

namespace {

MultiPoly u_power(unsigned k) {
  Exponents e{};
  e[static_cast<std::size_t>(Var::u)] = static_cast<std::uint16_t>(k);
  return MultiPoly::monomial(e, 1);
}

// Counts of proper colourings by descents, indexed by descent count.
std::vector<std::uint64_t> coloring_histogram(const UndirectedGraph& g, unsigned lambda) {
  std::vector<std::uint64_t> hist(g.edges.size() + 1, 0);
  if (g.n == 0) {
    hist[0] = 1;
    return hist;
  }
  if (lambda == 0) return hist;
  std::vector<unsigned> color(static_cast<std::size_t>(g.n), 0);
  while (true) {
    bool proper = true;
    unsigned des = 0;
    for (auto [a, b] : g.edges) {
      unsigned ca = color[static_cast<std::size_t>(a - 1)];
      unsigned cb = color[static_cast<std::size_t>(b - 1)];
      if (ca == cb) {
        proper = false;
        break;
      }
      if (ca > cb) ++des;
    }
    if (proper) ++hist[des];
    std::size_t pos = 0;
    while (pos < color.size() && ++color[pos] == lambda) color[pos++] = 0;
    if (pos == color.size()) break;
  }
  return hist;
}

MultiPoly from_histogram(const std::vector<std::uint64_t>& hist) {
  MultiPoly p;
  for (std::size_t k = 0; k < hist.size(); ++k) {
    if (hist[k] != 0) p += BigRat(BigInt(static_cast<unsigned long>(hist[k]))) * u_power(k);
  }
  return p;
}

}  // namespace

UndirectedGraph UndirectedGraph::make(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto& [a, b] : edges) {
    if (a < 1 || b < 1 || a > n || b > n) {
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(a) + " " +
                                  std::to_string(b));
    }
    if (a == b) throw std::invalid_argument("loops are not allowed");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return {n, std::move(edges)};
}

UndirectedGraph UndirectedGraph::from_mask(int n, std::uint32_t mask) {
  std::vector<std::pair<int, int>> edges;
  int k = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j, ++k) {
      if ((mask >> k) & 1U) edges.emplace_back(i, j);
    }
  }
  return {n, std::move(edges)};
}

UndirectedGraph parse_edge_list(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n) || n < 0) {
        throw ParseError("line " + std::to_string(line_no) + ": expected vertex count");
      }
    } else {
      int a = 0, b = 0;
      if (!(fields >> a >> b)) {
        throw ParseError("line " + std::to_string(line_no) + ": expected \"u v\"");
      }
      edges.emplace_back(a, b);
    }
    std::string extra;
    if (fields >> extra) {
      throw ParseError("line " + std::to_string(line_no) + ": trailing input");
    }
  }
  if (n < 0) throw ParseError("empty edge list");
  try {
    return UndirectedGraph::make(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

UndirectedGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

MultiPoly acyclic_orientation_poly(const UndirectedGraph& g) {
  if (g.n > kOrientationLimit) {
    throw std::invalid_argument("acyclic orientations supported for n <= 6");
  }
  const std::size_t m = g.edges.size();
  std::vector<std::uint64_t> hist(m + 1, 0);
  for (std::uint64_t orient = 0; orient < (1ULL << m); ++orient) {
    // Bit set: edge {a < b} is directed b -> a (a descent).
    std::vector<std::uint32_t> in(static_cast<std::size_t>(g.n), 0);
    for (std::size_t k = 0; k < m; ++k) {
      auto [a, b] = g.edges[k];
      if ((orient >> k) & 1ULL) {
        in[static_cast<std::size_t>(a - 1)] |= 1U << (b - 1);
      } else {
        in[static_cast<std::size_t>(b - 1)] |= 1U << (a - 1);
      }
    }
    std::uint32_t remaining = g.n == 0 ? 0 : (1U << g.n) - 1U;
    bool acyclic = true;
    while (remaining != 0) {
      std::uint32_t removable = 0;
      for (int v = 0; v < g.n; ++v) {
        if (((remaining >> v) & 1U) && (in[static_cast<std::size_t>(v)] & remaining) == 0) {
          removable |= 1U << v;
        }
      }
      if (removable == 0) {
        acyclic = false;
        break;
      }
      remaining &= ~removable;
    }
    if (acyclic) ++hist[static_cast<std::size_t>(std::popcount(orient))];
  }
  return from_histogram(hist);
}

MultiPoly refined_chromatic_value(const UndirectedGraph& g, unsigned lambda0) {
  double work = 1.0;
  for (int i = 0; i < g.n; ++i) work *= lambda0;
  if (work > static_cast<double>(kColoringBudget)) {
    throw std::invalid_argument("lambda^n exceeds the colouring enumeration budget");
  }
  return from_histogram(coloring_histogram(g, lambda0));
}

MultiPoly lagrange_interpolate(const std::vector<std::pair<BigRat, MultiPoly>>& samples, Var var,
                               unsigned degree) {
  if (samples.size() < degree + 1U) {
    throw std::invalid_argument("need " + std::to_string(degree + 1) +
                                " samples to interpolate degree " + std::to_string(degree) +
                                ", got " + std::to_string(samples.size()));
  }
  std::set<BigRat> xs;
  for (const auto& s : samples) {
    if (!xs.insert(s.first).second) throw std::invalid_argument("repeated sample point");
  }
  const MultiPoly x = MultiPoly::variable(var);
  MultiPoly result;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    MultiPoly basis(1L);
    BigRat denom = 1;
    for (std::size_t j = 0; j < samples.size(); ++j) {
      if (j == k) continue;
      basis *= x - MultiPoly(samples[j].first);
      denom *= samples[k].first - samples[j].first;
    }
    result += samples[k].second * (basis * (BigRat(1) / denom));
  }
  if (result.degree(var) > degree) {
    throw std::invalid_argument("samples are inconsistent with the degree bound");
  }
  return result;
}

MultiPoly refined_chromatic_interpolate(const UndirectedGraph& g) {
  if (g.n > kInterpolationLimit) {
    throw std::invalid_argument("chromatic interpolation supported for n <= 5");
  }
  std::vector<std::pair<BigRat, MultiPoly>> samples;
  for (int lambda = 0; lambda <= g.n; ++lambda) {
    samples.emplace_back(BigRat(lambda),
                         refined_chromatic_value(g, static_cast<unsigned>(lambda)));
  }
  MultiPoly x = lagrange_interpolate(samples, Var::lambda, static_cast<unsigned>(g.n));
  for (int at = -g.n - 1; at <= g.n + 1; ++at) {
    if (!substitute(x, Bindings{{Var::lambda, MultiPoly(static_cast<long>(at))}})
             .has_integer_coefficients()) {
      throw std::logic_error("interpolated chromatic polynomial is not integral at lambda = " +
                             std::to_string(at));
    }
  }
  return x;
}

MultiPoly colored_graph_sum(int n, unsigned lambda) {
  const int pairs = n * (n - 1) / 2;
  MultiPoly total;
  for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
    auto g = UndirectedGraph::from_mask(n, mask);
    Exponents e{};
    e[static_cast<std::size_t>(Var::y)] = static_cast<std::uint16_t>(g.edges.size());
    total += MultiPoly::monomial(e, 1) * from_histogram(coloring_histogram(g, lambda));
  }
  return total;
}

CheckReport colored_graph_identity_check(int n, unsigned lambda) {
  if (n < 0 || n > 4 || lambda > 3) {
    throw std::invalid_argument("colored-graph identity check needs n <= 4 and lambda <= 3");
  }
  CheckReport report{"colored-graph n=" + std::to_string(n) + " lambda=" +
                         std::to_string(lambda),
                     {},
                     0};
  std::vector<MultiPoly> ones(static_cast<std::size_t>(n + 1), MultiPoly(1L));
  TruncatedSeries base(Family::eulerian_graphic, ones);
  MultiPoly series_side = power(base, lambda)[static_cast<std::size_t>(n)];
  MultiPoly brute_side = colored_graph_sum(n, lambda);
  report.expect(series_side == brute_side, "series gives " + to_pretty(series_side) +
                                               ", brute force gives " + to_pretty(brute_side));
  return report;
}

CheckReport reciprocity_check(const UndirectedGraph& g) {
  CheckReport report{"reciprocity", {}, 0};
  MultiPoly x = refined_chromatic_interpolate(g);
  MultiPoly at_minus_one = substitute(x, Bindings{{Var::lambda, MultiPoly(-1L)}});
  MultiPoly orientations = acyclic_orientation_poly(g);
  if (g.n % 2 == 1) orientations = -orientations;
  report.expect(at_minus_one == orientations,
                "X_G(-1) = " + to_pretty(at_minus_one) + " but (-1)^n AO = " +
                    to_pretty(orientations));
  return report;
}

}  // namespace census
