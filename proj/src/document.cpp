#include "arrtop/document.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace arrtop {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw ParseError(path + ": " + what); }

Scalar scalar_from_json(const json& j, Field f, const std::string& path) {
  try {
    if (j.is_number_integer()) return Scalar::from_int(j.get<long>(), f);
    if (j.is_string()) return Scalar::parse(j.get<std::string>(), f);
    if (j.is_object()) {
      if (f != Field::QI) fail(path, "{re, im} coefficients need field \"Q(i)\"");
      for (const auto& [k, v] : j.items())
        if (k != "re" && k != "im") fail(path, "unexpected key '" + k + "'");
      Rational re = 0, im = 0;
      if (j.contains("re")) re = scalar_from_json(j["re"], Field::Q, path + ".re").re();
      if (j.contains("im")) im = scalar_from_json(j["im"], Field::Q, path + ".im").re();
      return Scalar(re, im);
    }
  } catch (const ParseError& e) {
    if (std::string(e.what()).starts_with(path)) throw;
    fail(path, e.what());
  }
  if (j.is_number()) fail(path, "floating-point coefficient; write it as an exact string such as \"1/3\"");
  fail(path, "coefficient must be an integer, a string, or {re, im}");
}

}  // namespace

Arrangement parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("$", "document must be an object");
  static const std::set<std::string> known = {"ambient_dim", "field", "planes", "description"};
  for (const auto& [k, v] : doc.items())
    if (!known.count(k)) fail("$." + k, "unknown key");
  if (!doc.contains("ambient_dim") || !doc["ambient_dim"].is_number_integer() || doc["ambient_dim"].get<long>() <= 0)
    fail("$.ambient_dim", "must be a positive integer");
  const std::size_t n = doc["ambient_dim"].get<std::size_t>();
  if (!doc.contains("field") || !doc["field"].is_string()) fail("$.field", "must be \"Q\" or \"Q(i)\"");
  Field f;
  try {
    f = parse_field_name(doc["field"].get<std::string>());
  } catch (const ParseError& e) {
    fail("$.field", e.what());
  }
  if (!doc.contains("planes") || !doc["planes"].is_array() || doc["planes"].empty())
    fail("$.planes", "must be a nonempty array");
  std::vector<PlaneSpec> specs;
  for (std::size_t p = 0; p < doc["planes"].size(); ++p) {
    const json& pj = doc["planes"][p];
    const std::string path = "$.planes[" + std::to_string(p) + "]";
    if (!pj.is_object()) fail(path, "plane must be an object");
    for (const auto& [k, v] : pj.items())
      if (k != "label" && k != "equations") fail(path + "." + k, "unknown key");
    PlaneSpec spec;
    if (pj.contains("label")) {
      if (!pj["label"].is_string()) fail(path + ".label", "must be a string");
      spec.label = pj["label"].get<std::string>();
    }
    if (!pj.contains("equations") || !pj["equations"].is_array() || pj["equations"].empty())
      fail(path + ".equations", "must be a nonempty array of rows");
    for (std::size_t r = 0; r < pj["equations"].size(); ++r) {
      const json& row = pj["equations"][r];
      const std::string rpath = path + ".equations[" + std::to_string(r) + "]";
      if (!row.is_array() || row.size() != n + 1)
        fail(rpath, "row must have ambient_dim + 1 = " + std::to_string(n + 1) + " entries");
      Vector v;
      for (std::size_t c = 0; c < row.size(); ++c)
        v.push_back(scalar_from_json(row[c], f, rpath + "[" + std::to_string(c) + "]"));
      spec.equations.push_back(std::move(v));
    }
    specs.push_back(std::move(spec));
  }
  return Arrangement(n, f, specs);
}

Arrangement load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

json document_json(const Arrangement& arr) {
  json doc;
  doc["ambient_dim"] = arr.ambient_dim();
  doc["field"] = std::string(field_name(arr.field()));
  json planes = json::array();
  for (std::size_t i = 0; i < arr.size(); ++i) {
    json pj;
    pj["label"] = arr.label(i);
    json rows = json::array();
    for (const auto& eq : arr.specs()[i].equations) {
      json row = json::array();
      for (const auto& x : eq) row.push_back(x.to_string());
      rows.push_back(std::move(row));
    }
    pj["equations"] = std::move(rows);
    planes.push_back(std::move(pj));
  }
  doc["planes"] = std::move(planes);
  return doc;
}

std::string serialize_document(const Arrangement& arr) { return document_json(arr).dump(2) + "\n"; }

}  // namespace arrtop
