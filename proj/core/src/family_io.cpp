#include "bercong/family_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bercong/expr.hpp"

namespace bercong {

using json = nlohmann::ordered_json;

namespace {

std::string require_string(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw FamilyFormatError(where + ": missing \"" + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_string()) throw FamilyFormatError(where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

}  // namespace

FamilyFile parse_family_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FamilyFormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FamilyFormatError("family file must be a JSON object");

  FamilyFile file;
  if (!doc.contains("N") || !doc.at("N").is_number_integer()) {
    throw FamilyFormatError("family: \"N\" must be an integer");
  }
  file.N = doc.at("N").get<std::int64_t>();
  file.g0 = require_string(doc, "g0", "family");
  if (doc.contains("name")) file.name = require_string(doc, "name", "family");
  if (doc.contains("description")) file.description = require_string(doc, "description", "family");

  if (!doc.contains("terms") || !doc.at("terms").is_array()) {
    throw FamilyFormatError("family: \"terms\" must be an array");
  }
  std::size_t i = 0;
  for (const auto& t : doc.at("terms")) {
    const std::string where = "terms[" + std::to_string(i++) + "]";
    if (!t.is_object()) throw FamilyFormatError(where + " must be an object");
    file.terms.push_back({require_string(t, "f", where), require_string(t, "g", where)});
  }
  return file;
}

FamilyFile load_family_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FamilyFormatError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_family_json(buf.str());
}

std::string to_json(const FamilyFile& file) {
  json doc;
  if (!file.name.empty()) doc["name"] = file.name;
  if (!file.description.empty()) doc["description"] = file.description;
  doc["N"] = file.N;
  doc["g0"] = file.g0;
  doc["terms"] = json::array();
  for (const auto& t : file.terms) doc["terms"].push_back({{"f", t.f}, {"g", t.g}});
  return doc.dump(2);
}

CongruenceFamily to_family(const FamilyFile& file) {
  auto parse_field = [](const std::string& text, const std::string& where) {
    try {
      return parse_expr(text);
    } catch (const ParseError& e) {
      throw FamilyFormatError(where + ": " + e.what());
    }
  };
  const RationalFunction g0 = parse_field(file.g0, "g0");
  std::vector<FamilyTerm> terms;
  for (std::size_t i = 0; i < file.terms.size(); ++i) {
    const std::string where = "terms[" + std::to_string(i) + "]";
    const RationalFunction f = parse_field(file.terms[i].f, where + ".f");
    if (!f.is_polynomial()) throw FamilyFormatError(where + ".f: index must be a polynomial in t");
    terms.push_back({f.as_polynomial(), parse_field(file.terms[i].g, where + ".g")});
  }
  try {
    return CongruenceFamily(file.N, g0, std::move(terms));
  } catch (const std::invalid_argument& e) {
    throw FamilyFormatError(e.what());
  }
}

}  // namespace bercong
