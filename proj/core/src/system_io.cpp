#include "nbho/system_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace nbho {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& what) {
  throw InputError("ParseError", what);
}

void require_keys(const json& obj, const std::set<std::string>& allowed,
                  const std::string& where) {
  for (const auto& item : obj.items())
    if (!allowed.contains(item.key()))
      parse_fail("unknown key \"" + item.key() + "\" in " + where);
}

std::vector<double> number_array(const json& v, const std::string& where) {
  if (!v.is_array()) parse_fail(where + " must be an array of numbers");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) parse_fail(where + " must contain only numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

}  // namespace

SystemDocument parse_system_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(e.what());
  }
  if (!doc.is_object()) parse_fail("document root must be an object");
  require_keys(doc,
               {"dimension", "masses", "mass_scale", "one_body", "two_body",
                "states"},
               "document root");

  SystemDocument out;
  if (!doc.contains("dimension") || !doc["dimension"].is_number_integer())
    parse_fail("\"dimension\" (integer) is required");
  out.input.dimension = doc["dimension"].get<int>();
  if (!doc.contains("masses")) parse_fail("\"masses\" is required");
  out.input.masses = number_array(doc["masses"], "\"masses\"");

  if (doc.contains("mass_scale")) {
    if (!doc["mass_scale"].is_number())
      parse_fail("\"mass_scale\" must be a number");
    out.input.mass_scale = doc["mass_scale"].get<double>();
  }
  if (doc.contains("one_body"))
    out.input.one_body = number_array(doc["one_body"], "\"one_body\"");

  if (doc.contains("two_body")) {
    if (!doc["two_body"].is_array())
      parse_fail("\"two_body\" must be an array of {i, j, g} objects");
    for (const auto& e : doc["two_body"]) {
      if (!e.is_object()) parse_fail("two_body entries must be objects");
      require_keys(e, {"i", "j", "g"}, "two_body entry");
      if (!e.contains("i") || !e.contains("j") || !e.contains("g") ||
          !e["i"].is_number_integer() || !e["j"].is_number_integer() ||
          !e["g"].is_number())
        parse_fail("two_body entries need integer i, j and numeric g");
      out.input.two_body.push_back(
          {e["i"].get<int>(), e["j"].get<int>(), e["g"].get<double>()});
    }
  }

  if (doc.contains("states")) {
    if (!doc["states"].is_array()) parse_fail("\"states\" must be an array");
    for (const auto& s : doc["states"]) {
      if (!s.is_object()) parse_fail("state entries must be objects");
      require_keys(s, {"n", "l"}, "state entry");
      if (!s.contains("n")) parse_fail("state entries need an \"n\" array");
      QuantumState state;
      const auto ns = number_array(s["n"], "state \"n\"");
      std::vector<double> ls(ns.size(), 0.0);
      if (s.contains("l")) {
        ls = number_array(s["l"], "state \"l\"");
        if (ls.size() != ns.size())
          parse_fail("state \"n\" and \"l\" lengths differ");
      }
      for (std::size_t i = 0; i < ns.size(); ++i)
        state.modes.push_back(
            {static_cast<int>(ns[i]), static_cast<int>(ls[i])});
      out.states.push_back(std::move(state));
    }
  }
  return out;
}

SystemDocument parse_system_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_system_document(ss.str());
}

ParticleSystem parse_system_file(const std::string& path) {
  return validate_system(parse_system_document_file(path).input);
}

std::string serialize_system(const ParticleSystem& sys) {
  json doc;
  doc["dimension"] = sys.dimension();
  doc["masses"] = sys.masses();
  doc["mass_scale"] = sys.mass_scale();
  doc["one_body"] = sys.one_body();
  json pairs = json::array();
  for (const TwoBodyEntry& e : sys.two_body_entries())
    pairs.push_back({{"i", e.i}, {"j", e.j}, {"g", e.g}});
  doc["two_body"] = pairs;
  return doc.dump(2);
}

}  // namespace nbho
