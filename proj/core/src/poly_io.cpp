#include "census/poly_io.hpp"

#include <sstream>

#include "json.hpp"

namespace census {

using nlohmann::json;

namespace {

json poly_doc(const MultiPoly& p) {
  json doc;
  doc["vars"] = json::array();
  for (auto name : kVarNames) doc["vars"].push_back(std::string(name));
  doc["terms"] = json::array();
  for (const auto& t : p.terms()) {
    json term;
    term["e"] = json::array();
    for (auto e : t.exps) term["e"].push_back(e);
    term["n"] = to_string(t.coeff.get_num());
    if (t.coeff.get_den() != 1) term["d"] = to_string(t.coeff.get_den());
    doc["terms"].push_back(std::move(term));
  }
  return doc;
}

json parse_doc(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string(what) + " JSON: " + e.what());
  }
}

MultiPoly poly_from_doc(const json& doc) {
  if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array()) {
    throw std::invalid_argument("polynomial JSON: missing \"terms\" array");
  }
  std::vector<std::size_t> slot;
  if (doc.contains("vars")) {
    for (const auto& name : doc["vars"]) {
      slot.push_back(static_cast<std::size_t>(var_from_name(name.get<std::string>())));
    }
  } else {
    for (std::size_t i = 0; i < kNumVars; ++i) slot.push_back(i);
  }

  std::vector<Term> terms;
  for (const auto& jt : doc["terms"]) {
    if (!jt.contains("e") || !jt.contains("n")) {
      throw std::invalid_argument("polynomial JSON: term needs \"e\" and \"n\"");
    }
    const auto& je = jt["e"];
    if (!je.is_array() || je.size() != slot.size()) {
      throw std::invalid_argument("polynomial JSON: exponent vector length mismatch");
    }
    Term t;
    for (std::size_t i = 0; i < slot.size(); ++i) {
      auto v = je[i].get<long long>();
      if (v < 0 || v > 65535) throw std::invalid_argument("polynomial JSON: bad exponent");
      t.exps[slot[i]] = static_cast<std::uint16_t>(v);
    }
    BigInt num = parse_bigint(jt["n"].get<std::string>());
    BigInt den = jt.contains("d") ? parse_bigint(jt["d"].get<std::string>()) : BigInt(1);
    try {
      t.coeff = make_rat(num, den);
    } catch (const std::domain_error& e) {
      throw std::invalid_argument(std::string("polynomial JSON: ") + e.what());
    }
    terms.push_back(std::move(t));
  }
  return MultiPoly::from_terms(std::move(terms));
}

}  // namespace

std::string to_json(const MultiPoly& p) { return poly_doc(p).dump(); }

MultiPoly poly_from_json(std::string_view text) {
  return poly_from_doc(parse_doc(text, "polynomial"));
}

std::string to_json(const TruncatedSeries& s) {
  json doc;
  doc["family"] = std::string(family_name(s.family()));
  doc["order"] = s.order();
  doc["numerators"] = json::array();
  for (const auto& a : s.numerators()) doc["numerators"].push_back(poly_doc(a));
  return doc.dump();
}

TruncatedSeries series_from_json(std::string_view text) {
  json doc = parse_doc(text, "series");
  if (!doc.is_object() || !doc.contains("family") || !doc.contains("numerators") ||
      !doc["numerators"].is_array() || !doc["family"].is_string()) {
    throw std::invalid_argument("series JSON: needs \"family\" and \"numerators\"");
  }
  std::vector<MultiPoly> numerators;
  for (const auto& a : doc["numerators"]) {
    if (!a.is_object()) throw std::invalid_argument("series JSON: numerator is not an object");
    numerators.push_back(poly_from_doc(a));
  }
  if (numerators.empty()) throw std::invalid_argument("series JSON: no numerators");
  if (doc.contains("order") && doc["order"].get<long long>() + 1 !=
                                   static_cast<long long>(numerators.size())) {
    throw std::invalid_argument("series JSON: order does not match the numerator count");
  }
  return TruncatedSeries(family_from_name(doc["family"].get<std::string>()),
                         std::move(numerators));
}

std::string to_csv(const MultiPoly& p) {
  std::ostringstream out;
  for (auto name : kVarNames) out << name << ',';
  out << "coefficient\n";
  for (const auto& t : p.terms()) {
    for (auto e : t.exps) out << e << ',';
    out << to_string(t.coeff) << '\n';
  }
  return out.str();
}

}  // namespace census
