#pragma once

#include <string>
#include <vector>

namespace census {

/// Outcome of a named verification; failures carry one message each.
struct CheckReport {
  std::string name;
  std::vector<std::string> failures;
  std::size_t cases = 0;

  bool passed() const { return failures.empty(); }
  void fail(std::string message) { failures.push_back(std::move(message)); }
  /// Records one compared case and, if !ok, the message.
  void expect(bool ok, const std::string& message) {
    ++cases;
    if (!ok) fail(message);
  }
};

}  // namespace census
