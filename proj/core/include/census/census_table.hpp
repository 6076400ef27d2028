#pragma once

// Histogram from a statistic tuple (e.g. (des, e)) to an exact count.

#include <map>
#include <string>
#include <vector>

#include "census/bigint.hpp"
#include "census/multipoly.hpp"

namespace census {

class CensusTable {
 public:
  using Key = std::vector<int>;

  CensusTable(std::string family, int n, std::vector<std::string> stat_names,
              std::string filter = "all");

  const std::string& family() const { return family_; }
  int n() const { return n_; }
  const std::string& filter() const { return filter_; }
  const std::vector<std::string>& stat_names() const { return stat_names_; }
  const std::map<Key, BigInt>& counts() const { return counts_; }

  /// Throws std::invalid_argument if the key arity or count sign is wrong.
  void add(const Key& key, const BigInt& count = 1);
  /// Adds every count of `other`; metadata must agree.
  void merge(const CensusTable& other);

  BigInt count(const Key& key) const;
  BigInt total() const;

  /// Sum over keys of count * prod_k vars[k]^{key[k]}.
  MultiPoly to_poly(const std::vector<Var>& vars) const;

  /// "stat1,stat2,count" header, then rows in lexicographic key order.
  std::string to_csv() const;
  std::string to_json() const;

  friend bool operator==(const CensusTable&, const CensusTable&) = default;

 private:
  std::string family_;
  int n_;
  std::vector<std::string> stat_names_;
  std::string filter_;
  std::map<Key, BigInt> counts_;
};

}  // namespace census
