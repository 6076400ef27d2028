#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <census/bigint.hpp>
#include <census/families.hpp>
#include <census/report.hpp>

namespace census::cli {

enum class Format { pretty, csv, json };

/// Command-line misuse detected after parsing; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Specialization { y1, u1, uy };

/// Coefficients of one family for a range of n, laid out with statistic rows
/// and one column per n.
struct CoefficientTable {
  std::string family;
  Specialization specialization = Specialization::y1;
  std::vector<std::string> key_names;
  std::vector<unsigned> columns;
  std::vector<std::vector<int>> keys;
  /// cells[row][column]
  std::vector<std::vector<BigInt>> cells;
  std::vector<BigInt> totals;
};

/// Parses "4..7" or "5".
std::pair<unsigned, unsigned> parse_range(const std::string& text);

CoefficientTable build_table(FamilyTag family, unsigned n_lo, unsigned n_hi,
                             Specialization spec);

std::string render_table(const CoefficientTable& table, Format format);
std::string render_reports(const std::string& title, const std::vector<CheckReport>& reports,
                           Format format);
std::string render_poly(const MultiPoly& p, Format format);

/// Runs the tool on argv-style arguments (args[0] is the program name) and
/// returns the process exit code: 0 ok, 1 verification failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace census::cli
