#include "census/config.hpp"

#include <cstdlib>
#include <optional>
#include <string>

namespace census {

namespace {

std::optional<unsigned> env_nmax() {
  const char* raw = std::getenv("CENSUS_NMAX");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    long v = std::stol(raw, &used);
    if (used != std::string(raw).size() || v <= 0 || v > 64) return std::nullopt;
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

unsigned binomial_memo_bound() {
  static const unsigned bound = env_nmax().value_or(kDefaultBinomialMemoBound);
  return bound;
}

unsigned family_memo_bound() {
  static const unsigned bound = env_nmax().value_or(kDefaultFamilyMemoBound);
  return bound;
}

}  // namespace census
