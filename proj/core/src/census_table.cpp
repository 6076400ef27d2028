#include "census/census_table.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace census {

CensusTable::CensusTable(std::string family, int n, std::vector<std::string> stat_names,
                         std::string filter)
    : family_(std::move(family)),
      n_(n),
      stat_names_(std::move(stat_names)),
      filter_(std::move(filter)) {}

void CensusTable::add(const Key& key, const BigInt& count) {
  if (key.size() != stat_names_.size()) {
    throw std::invalid_argument("census key arity does not match the statistic list");
  }
  if (count < 0) throw std::invalid_argument("census counts are non-negative");
  if (count == 0) return;
  counts_[key] += count;
}

void CensusTable::merge(const CensusTable& other) {
  if (other.family_ != family_ || other.n_ != n_ || other.stat_names_ != stat_names_ ||
      other.filter_ != filter_) {
    throw std::invalid_argument("cannot merge census tables with different metadata");
  }
  for (const auto& [key, c] : other.counts_) counts_[key] += c;
}

BigInt CensusTable::count(const Key& key) const {
  auto it = counts_.find(key);
  return it == counts_.end() ? BigInt(0) : it->second;
}

BigInt CensusTable::total() const {
  BigInt t = 0;
  for (const auto& [key, c] : counts_) t += c;
  return t;
}

MultiPoly CensusTable::to_poly(const std::vector<Var>& vars) const {
  if (vars.size() != stat_names_.size()) {
    throw std::invalid_argument("one variable per statistic is required");
  }
  std::vector<Term> terms;
  terms.reserve(counts_.size());
  for (const auto& [key, c] : counts_) {
    Term t;
    for (std::size_t k = 0; k < key.size(); ++k) {
      t.exps[static_cast<std::size_t>(vars[k])] += static_cast<std::uint16_t>(key[k]);
    }
    t.coeff = BigRat(c);
    terms.push_back(std::move(t));
  }
  return MultiPoly::from_terms(std::move(terms));
}

std::string CensusTable::to_csv() const {
  std::ostringstream out;
  for (const auto& name : stat_names_) out << name << ',';
  out << "count\n";
  for (const auto& [key, c] : counts_) {
    for (int k : key) out << k << ',';
    out << to_string(c) << '\n';
  }
  return out.str();
}

std::string CensusTable::to_json() const {
  nlohmann::json doc;
  doc["family"] = family_;
  doc["n"] = n_;
  doc["filter"] = filter_;
  doc["stats"] = stat_names_;
  doc["rows"] = nlohmann::json::array();
  for (const auto& [key, c] : counts_) {
    doc["rows"].push_back({{"key", key}, {"count", to_string(c)}});
  }
  doc["total"] = to_string(total());
  return doc.dump();
}

}  // namespace census
