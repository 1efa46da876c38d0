#include "bicrys/spec.hpp"

#include <fstream>
#include <sstream>

#include "bicrys/error.hpp"
#include "bicrys/expr.hpp"
#include "json.hpp"

namespace bicrys {

using nlohmann::json;

namespace {

std::vector<int> cuts_or(const json& doc, const char* key, int last) {
  if (!doc.contains(key)) return {0, last};
  const auto& v = doc.at(key);
  if (!v.is_array()) throw ParseError(std::string(key) + " must be an array");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw ParseError(std::string(key) + " entries must be integers");
    out.push_back(x.get<int>());
  }
  if (out.empty() || out.back() != last)
    throw ParseError(std::string(key) + " must end at " + std::to_string(last));
  return out;
}

}  // namespace

IdealSpec parse_ideal_spec(const std::string& document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed spec document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("spec document must be an object");
  for (const char* key : {"m", "n", "generators"})
    if (!doc.contains(key)) throw ParseError(std::string("spec document lacks '") + key + "'");
  for (const auto& [key, value] : doc.items())
    if (key != "m" && key != "n" && key != "generators" && key != "levi_rows" && key != "levi_cols" &&
        key != "order" && key != "comment")
      throw ParseError("unknown spec key '" + key + "'");
  if (!doc["m"].is_number_integer() || !doc["n"].is_number_integer())
    throw ParseError("m and n must be integers");

  IdealSpec spec;
  spec.m = doc["m"].get<int>();
  spec.n = doc["n"].get<int>();
  if (spec.m < 1 || spec.n < 1 || spec.m > 12 || spec.n > 12) throw ParseError("m and n must lie in 1..12");

  try {
    spec.datum = LeviDatum(cuts_or(doc, "levi_rows", spec.m), cuts_or(doc, "levi_cols", spec.n));
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid Levi datum: ") + e.what());
  }

  std::string order = "antidiag";
  if (doc.contains("order")) {
    if (!doc["order"].is_string()) throw ParseError("order must be a string");
    order = doc["order"].get<std::string>();
  }
  spec.order = TermOrder::parse(order, spec.m, spec.n);

  if (!doc["generators"].is_array()) throw ParseError("generators must be an array of strings");
  std::size_t k = 0;
  for (const auto& g : doc["generators"]) {
    if (!g.is_string()) throw ParseError("generators must be an array of strings");
    try {
      spec.generators.push_back(parse_polynomial(g.get<std::string>(), spec.m, spec.n));
    } catch (const ParseError& e) {
      throw ParseError("generator " + std::to_string(k + 1) + ": " + e.what());
    }
    ++k;
  }
  return spec;
}

IdealSpec load_ideal_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open spec file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_ideal_spec(buf.str());
}

std::string dump_ideal_spec(const IdealSpec& spec) {
  json doc;
  doc["m"] = spec.m;
  doc["n"] = spec.n;
  json gens = json::array();
  for (const auto& g : spec.generators) gens.push_back(format_polynomial(g, spec.order));
  doc["generators"] = std::move(gens);
  doc["levi_rows"] = spec.datum.row_cuts();
  doc["levi_cols"] = spec.datum.col_cuts();
  doc["order"] = spec.order.name();
  return doc.dump(2) + "\n";
}

}  // namespace bicrys
