#include <algorithm>
#include <sstream>

#include <census/poly_io.hpp>
#include <json.hpp>

#include "census_cli.hpp"

namespace census::cli {

namespace {

using nlohmann::ordered_json;

std::string specialization_label(Specialization s) {
  switch (s) {
    case Specialization::y1:
      return "y=1";
    case Specialization::u1:
      return "u=1";
    case Specialization::uy:
      return "none";
  }
  return "?";
}

std::string key_text(const std::vector<int>& key, char sep) {
  std::string out;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i > 0) out.push_back(sep);
    out += std::to_string(key[i]);
  }
  return out;
}

}  // namespace

std::string render_table(const CoefficientTable& t, Format format) {
  std::ostringstream out;
  if (format == Format::json) {
    ordered_json j;
    j["family"] = t.family;
    j["specialization"] = specialization_label(t.specialization);
    j["keys"] = t.key_names;
    j["n"] = t.columns;
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < t.keys.size(); ++r) {
      ordered_json row;
      row["key"] = t.keys[r];
      ordered_json counts = ordered_json::array();
      for (const auto& c : t.cells[r]) counts.push_back(to_string(c));
      row["counts"] = counts;
      rows.push_back(row);
    }
    j["rows"] = rows;
    ordered_json totals = ordered_json::array();
    for (const auto& v : t.totals) totals.push_back(to_string(v));
    j["total"] = totals;
    out << j.dump(2) << '\n';
    return out.str();
  }

  std::vector<std::vector<std::string>> grid;
  std::string key_header;
  for (std::size_t i = 0; i < t.key_names.size(); ++i) {
    if (i > 0) key_header += format == Format::csv ? "," : " ";
    key_header += t.key_names[i];
  }
  std::vector<std::string> header{key_header};
  for (unsigned n : t.columns) header.push_back("n=" + std::to_string(n));
  grid.push_back(header);
  for (std::size_t r = 0; r < t.keys.size(); ++r) {
    std::vector<std::string> row{key_text(t.keys[r], format == Format::csv ? ',' : ' ')};
    for (const auto& c : t.cells[r]) row.push_back(to_string(c));
    grid.push_back(std::move(row));
  }
  std::vector<std::string> total_row{"TOTAL"};
  for (std::size_t i = 1; i < t.key_names.size() && format == Format::csv; ++i) {
    total_row[0] += ",";
  }
  for (const auto& v : t.totals) total_row.push_back(to_string(v));
  grid.push_back(std::move(total_row));

  if (format == Format::csv) {
    for (const auto& row : grid) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i > 0 ? "," : "") << row[i];
      out << '\n';
    }
    return out.str();
  }

  std::vector<std::size_t> width(grid.front().size(), 0);
  for (const auto& row : grid) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : grid) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i == 0) {
        line += row[i] + std::string(width[i] - row[i].size(), ' ');
      } else {
        line += "  " + std::string(width[i] - row[i].size(), ' ') + row[i];
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

std::string render_reports(const std::string& title, const std::vector<CheckReport>& reports,
                           Format format) {
  std::ostringstream out;
  const auto failed = std::count_if(reports.begin(), reports.end(),
                                    [](const CheckReport& r) { return !r.passed(); });
  if (format == Format::json) {
    ordered_json j;
    j["suite"] = title;
    j["passed"] = failed == 0;
    ordered_json checks = ordered_json::array();
    for (const auto& r : reports) {
      ordered_json c;
      c["name"] = r.name;
      c["passed"] = r.passed();
      c["cases"] = r.cases;
      c["failures"] = r.failures;
      checks.push_back(c);
    }
    j["checks"] = checks;
    out << j.dump(2) << '\n';
    return out.str();
  }
  if (format == Format::csv) {
    out << "check,status,cases,failures\n";
    for (const auto& r : reports) {
      out << '"' << r.name << "\"," << (r.passed() ? "PASS" : "FAIL") << ',' << r.cases << ','
          << r.failures.size() << '\n';
    }
    return out.str();
  }
  for (const auto& r : reports) {
    out << (r.passed() ? "PASS  " : "FAIL  ") << r.name << "  [" << r.cases << " cases]\n";
    const std::size_t shown = std::min<std::size_t>(r.failures.size(), 5);
    for (std::size_t i = 0; i < shown; ++i) out << "      " << r.failures[i] << '\n';
    if (r.failures.size() > shown) {
      out << "      ... " << r.failures.size() - shown << " more\n";
    }
  }
  out << title << ": " << reports.size() << " checks, " << failed << " failed\n";
  return out.str();
}

std::string render_poly(const MultiPoly& p, Format format) {
  switch (format) {
    case Format::json:
      return to_json(p) + "\n";
    case Format::csv:
      return to_csv(p);
    case Format::pretty:
      break;
  }
  return to_pretty(p) + "\n";
}

}  // namespace census::cli
