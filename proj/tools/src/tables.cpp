#include <map>
#include <set>

#include <census/config.hpp>

#include "census_cli.hpp"

namespace census::cli {

std::pair<unsigned, unsigned> parse_range(const std::string& text) {
  auto to_unsigned = [&](const std::string& s) {
    if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("invalid n range: " + text);
    }
    return static_cast<unsigned>(std::stoul(s));
  };
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    unsigned n = to_unsigned(text);
    return {n, n};
  }
  unsigned lo = to_unsigned(text.substr(0, dots));
  unsigned hi = to_unsigned(text.substr(dots + 2));
  if (lo > hi) throw UsageError("empty n range: " + text);
  return {lo, hi};
}

CoefficientTable build_table(FamilyTag family, unsigned n_lo, unsigned n_hi,
                             Specialization spec) {
  if (family == FamilyTag::acyclic_with_sources) {
    throw UsageError("tables are not available for acyclic_with_sources");
  }
  const unsigned limit = family_memo_bound();
  if (n_lo < 1 || n_hi > limit) {
    throw UsageError("n must lie in 1.." + std::to_string(limit) +
                     " (set CENSUS_NMAX to raise the bound)");
  }
  const Var second = family == FamilyTag::forest ? Var::z : Var::y;
  const std::string second_name = family == FamilyTag::forest ? "k" : "e";

  CoefficientTable table;
  table.family = std::string(family_tag_name(family));
  table.specialization = spec;
  switch (spec) {
    case Specialization::y1:
      table.key_names = {"d"};
      break;
    case Specialization::u1:
      table.key_names = {second_name};
      break;
    case Specialization::uy:
      table.key_names = {"d", second_name};
      break;
  }

  std::vector<std::map<std::vector<int>, BigInt>> per_column;
  std::set<std::vector<int>> all_keys;
  for (unsigned n = n_lo; n <= n_hi; ++n) {
    MultiPoly p = family_polynomial(family, n).value;
    if (spec == Specialization::y1) p = substitute(p, Bindings{{second, MultiPoly(1L)}});
    if (spec == Specialization::u1) p = substitute(p, Bindings{{Var::u, MultiPoly(1L)}});

    std::map<std::vector<int>, BigInt> column;
    BigInt total = 0;
    for (const auto& term : p.terms()) {
      const int du = term.exps[static_cast<std::size_t>(Var::u)];
      const int ds = term.exps[static_cast<std::size_t>(second)];
      std::vector<int> key;
      if (spec == Specialization::y1) key = {du};
      if (spec == Specialization::u1) key = {ds};
      if (spec == Specialization::uy) key = {du, ds};
      BigInt c = term.coeff.get_num();
      column[key] += c;
      total += c;
    }
    for (const auto& [key, _] : column) all_keys.insert(key);
    table.columns.push_back(n);
    table.totals.push_back(total);
    per_column.push_back(std::move(column));
  }

  if (spec != Specialization::uy && !all_keys.empty()) {
    // Univariate rows are contiguous, as in the printed tables.
    const int lo = all_keys.begin()->front();
    const int hi = all_keys.rbegin()->front();
    for (int k = lo; k <= hi; ++k) all_keys.insert({k});
  }
  table.keys.assign(all_keys.begin(), all_keys.end());
  for (const auto& key : table.keys) {
    std::vector<BigInt> row;
    for (const auto& column : per_column) {
      auto it = column.find(key);
      row.push_back(it == column.end() ? BigInt(0) : it->second);
    }
    table.cells.push_back(std::move(row));
  }
  return table;
}

}  // namespace census::cli
