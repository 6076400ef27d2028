#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <census/census_table.hpp>
#include <census/checks.hpp>
#include <census/chromatic.hpp>
#include <census/config.hpp>
#include <census/enumerate.hpp>

#include "census_cli.hpp"

namespace census::cli {

namespace {

struct GlobalOptions {
  std::string format = "pretty";
  unsigned threads = 1;
  bool long_run = false;

  Format parsed_format() const {
    if (format == "json") return Format::json;
    if (format == "csv") return Format::csv;
    return Format::pretty;
  }
};

struct TableArgs {
  std::string family;
  std::string range;
  bool u1 = false;
  bool y1 = false;
  bool uy = false;
};

struct VerifyArgs {
  std::string suite;
  int n = 5;
};

struct SeriesArgs {
  std::string identity;
  int order = 6;
};

struct ChromaticArgs {
  std::string file;
  std::optional<unsigned> lambda;
  bool interpolate = false;
  bool reciprocity = false;
};

struct PolyArgs {
  std::string family;
  unsigned n = 0;
  std::string method = "recurrence";
};

struct EnumerateArgs {
  std::string kind;
  int n = 0;
  std::string filter = "all";
  std::string stat = "none";
};

int cmd_table(const GlobalOptions& g, const TableArgs& a, std::ostream& out) {
  FamilyTag family = family_tag_from_name(a.family);
  Specialization spec = Specialization::y1;
  if (a.u1) spec = Specialization::u1;
  if (a.uy) spec = Specialization::uy;
  auto [lo, hi] = parse_range(a.range);
  out << render_table(build_table(family, lo, hi, spec), g.parsed_format());
  return 0;
}

int emit_reports(const GlobalOptions& g, const std::string& title,
                 const std::vector<CheckReport>& reports, std::ostream& out) {
  out << render_reports(title, reports, g.parsed_format());
  for (const auto& r : reports) {
    if (!r.passed()) return 1;
  }
  return 0;
}

int cmd_verify(const GlobalOptions& g, const VerifyArgs& a, std::ostream& out) {
  if (a.n < 1 || a.n > kDigraphLimit) {
    throw UsageError("verify -n must lie in 1.." + std::to_string(kDigraphLimit));
  }
  VerifyOptions options{a.n, g.long_run, g.threads};
  std::vector<CheckReport> reports;
  if (a.suite == "oracle" || a.suite == "all") {
    auto part = oracle_suite(options);
    reports.insert(reports.end(), part.begin(), part.end());
  }
  if (a.suite == "identities" || a.suite == "all") {
    auto part = identity_suite(options);
    reports.insert(reports.end(), part.begin(), part.end());
  }
  return emit_reports(g, a.suite, reports, out);
}

int cmd_series(const GlobalOptions& g, const SeriesArgs& a, std::ostream& out) {
  if (a.order < 1 || a.order > static_cast<int>(kMaxSeriesIdentityOrder)) {
    throw UsageError("series order must lie in 1.." + std::to_string(kMaxSeriesIdentityOrder));
  }
  SeriesIdentity id = series_identity_from_name(a.identity);
  return emit_reports(g, a.identity,
                      {series_identity_check(id, static_cast<std::size_t>(a.order))}, out);
}

UndirectedGraph read_graph(const std::string& path) {
  if (path == "-") return parse_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open graph file: " + path);
  return parse_edge_list(in);
}

int cmd_chromatic(const GlobalOptions& g, const ChromaticArgs& a, std::ostream& out) {
  const int modes = (a.lambda ? 1 : 0) + (a.interpolate ? 1 : 0) + (a.reciprocity ? 1 : 0);
  if (modes != 1) {
    throw UsageError("chromatic needs exactly one of --lambda, --interpolate, --reciprocity");
  }
  UndirectedGraph graph = read_graph(a.file);
  if (graph.n > kOrientationLimit) {
    throw UsageError("chromatic supports graphs with at most " +
                     std::to_string(kOrientationLimit) + " vertices");
  }
  if (a.lambda) {
    out << render_poly(refined_chromatic_value(graph, *a.lambda), g.parsed_format());
    return 0;
  }
  if (graph.n > kInterpolationLimit) {
    throw UsageError("interpolation supports graphs with at most " +
                     std::to_string(kInterpolationLimit) + " vertices");
  }
  if (a.interpolate) {
    out << render_poly(refined_chromatic_interpolate(graph), g.parsed_format());
    return 0;
  }
  return emit_reports(g, "reciprocity", {reciprocity_check(graph)}, out);
}

int cmd_poly(const GlobalOptions& g, const PolyArgs& a, std::ostream& out) {
  FamilyTag family = family_tag_from_name(a.family);
  const unsigned limit = family_memo_bound();
  const unsigned lowest = family == FamilyTag::acyclic ? 0 : 1;
  if (a.n < lowest || a.n > limit) {
    throw UsageError("n must lie in " + std::to_string(lowest) + ".." + std::to_string(limit) +
                     " (set CENSUS_NMAX to raise the bound)");
  }
  Method method = a.method == "series" ? Method::series : Method::recurrence;
  out << render_poly(family_polynomial(family, a.n, method).value, g.parsed_format());
  return 0;
}

int cmd_enumerate(const GlobalOptions& g, const EnumerateArgs& a, std::ostream& out) {
  EnumerationOptions options{g.threads, g.long_run};
  CensusTable table = [&] {
    if (a.kind == "tournaments") {
      if (a.filter == "acyclic") throw UsageError("tournament filters are all and strong");
      return enumerate_tournaments(
          a.n, a.filter == "strong" ? TournamentFilter::strong : TournamentFilter::all, options);
    }
    if (a.kind == "digraphs") {
      DigraphFilter filter = DigraphFilter::all;
      if (a.filter == "strong") filter = DigraphFilter::strong;
      if (a.filter == "acyclic") filter = DigraphFilter::acyclic;
      ExtraStat extra = ExtraStat::none;
      if (a.stat == "sources") extra = ExtraStat::sources;
      if (a.stat == "ssc") extra = ExtraStat::ssc;
      return enumerate_digraphs(a.n, filter, extra, options);
    }
    if (a.filter != "all") throw UsageError("trees take no filter");
    return enumerate_trees(a.n, options);
  }();
  out << (g.parsed_format() == Format::json ? table.to_json() + "\n" : table.to_csv());
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Descent and descent-edge polynomials of labeled digraph families"};
  app.name("census");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"pretty", "csv", "json"}));
  app.add_option("--threads", g.threads, "Worker threads for enumerations")
      ->check(CLI::Range(1U, 256U));
  app.add_flag("--long", g.long_run, "Allow long-running enumerations");

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Coefficient table of a family over a range of n");
  table->add_option("family", table_args.family,
                    "strong-tournaments, strong-digraphs, acyclic, trees, forests or eta")
      ->required();
  table->add_option("-n", table_args.range, "n or n1..n2")->required();
  auto* u1 = table->add_flag("--u1", table_args.u1, "Set u = 1 (rows by edges)");
  auto* y1 = table->add_flag("--y1", table_args.y1, "Set y = 1 (rows by descents, default)");
  auto* uy = table->add_flag("--uy", table_args.uy, "Keep both variables");
  u1->excludes(y1)->excludes(uy);
  y1->excludes(uy);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suite", verify_args.suite, "oracle, identities or all")
      ->required()
      ->check(CLI::IsMember({"oracle", "identities", "all"}));
  verify->add_option("-n", verify_args.n, "Largest enumerated digraph order (1..5)");

  SeriesArgs series_args;
  auto* series = app.add_subcommand("series", "Check a generating-function identity");
  series->add_option("identity", series_args.identity,
                     "strong-log, acyclic-inverse, tournament-U, tree-revert or forest-exp")
      ->required()
      ->check(CLI::IsMember(
          {"strong-log", "acyclic-inverse", "tournament-U", "tree-revert", "forest-exp"}));
  series->add_option("-N,--order", series_args.order, "Truncation order (at most 8)");

  ChromaticArgs chromatic_args;
  auto* chromatic = app.add_subcommand("chromatic", "Refined chromatic polynomial of a graph");
  chromatic->add_option("graph", chromatic_args.file, "Edge-list file, or - for stdin")
      ->required();
  chromatic->add_option("--lambda", chromatic_args.lambda, "Evaluate at a number of colours");
  chromatic->add_flag("--interpolate", chromatic_args.interpolate, "Polynomial in lambda");
  chromatic->add_flag("--reciprocity", chromatic_args.reciprocity,
                      "Check X(-1) against acyclic orientations");

  PolyArgs poly_args;
  auto* poly = app.add_subcommand("poly", "Print one family polynomial");
  poly->add_option("family", poly_args.family, "Family name")->required();
  poly->add_option("-n", poly_args.n, "Number of vertices")->required();
  poly->add_option("--method", poly_args.method, "recurrence or series")
      ->check(CLI::IsMember({"recurrence", "series"}));

  EnumerateArgs enumerate_args;
  auto* enumerate = app.add_subcommand("enumerate", "Brute-force census as CSV or JSON");
  enumerate->add_option("kind", enumerate_args.kind, "tournaments, digraphs or trees")
      ->required()
      ->check(CLI::IsMember({"tournaments", "digraphs", "trees"}));
  enumerate->add_option("-n", enumerate_args.n, "Number of vertices")->required();
  enumerate->add_option("--filter", enumerate_args.filter, "all, strong or acyclic")
      ->check(CLI::IsMember({"all", "strong", "acyclic"}));
  enumerate->add_option("--stat", enumerate_args.stat, "Extra digraph statistic")
      ->check(CLI::IsMember({"none", "sources", "ssc"}));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("census");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::ostringstream buffer;
  try {
    int code = 0;
    if (*table) code = cmd_table(g, table_args, buffer);
    if (*verify) code = cmd_verify(g, verify_args, buffer);
    if (*series) code = cmd_series(g, series_args, buffer);
    if (*chromatic) code = cmd_chromatic(g, chromatic_args, buffer);
    if (*poly) code = cmd_poly(g, poly_args, buffer);
    if (*enumerate) code = cmd_enumerate(g, enumerate_args, buffer);
    out << buffer.str();
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace census::cli
