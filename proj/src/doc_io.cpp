#include "pcgroup/doc_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace pcgroup {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) {
  throw std::runtime_error("presentation document: " + msg);
}

int get_int(const json& j, const char* key) {
  if (!j.contains(key)) fail(std::string("missing key \"") + key + "\"");
  if (!j[key].is_number_integer()) fail(std::string("key \"") + key + "\" must be an integer");
  return j[key].get<int>();
}

// Parse "powers"/"conjugates" values: an array of [index, exponent] pairs
// describing a normal word. Document indices are 1-based.
NormalWord parse_relation_word(const json& arr, int ngens, int p, const std::string& where) {
  if (!arr.is_array()) fail(where + ": relation word must be an array of pairs");
  NormalWord w(static_cast<std::size_t>(ngens));
  for (const json& pair : arr) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer())
      fail(where + ": each entry must be an [index, exponent] pair");
    int idx = pair[0].get<int>();
    int exp = pair[1].get<int>();
    if (idx < 1 || idx > ngens) fail(where + ": generator index out of range");
    if (exp < 1 || exp >= p) fail(where + ": exponent out of range");
    if (w.exps[idx - 1]) fail(where + ": repeated generator index");
    w.exps[idx - 1] = static_cast<Exp>(exp);
  }
  return w;
}

GenWord parse_gen_word(const json& arr, int ngens, const std::string& where) {
  if (!arr.is_array()) fail(where + ": word must be an array of pairs");
  GenWord w;
  for (const json& pair : arr) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer())
      fail(where + ": each entry must be an [index, exponent] pair");
    int idx = pair[0].get<int>();
    long exp = pair[1].get<long>();
    if (idx < 1 || idx > ngens) fail(where + ": generator index out of range");
    w.append(idx - 1, exp);
  }
  return w;
}

}  // namespace

PcPresentation parse_presentation(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("not valid JSON (") + e.what() + ")");
  }
  if (!doc.is_object()) fail("top level must be an object");

  static const std::set<std::string> known = {"p",      "ngens",      "dgens",
                                              "weights", "powers",     "conjugates",
                                              "definitions"};
  for (auto& [key, value] : doc.items())
    if (!known.count(key)) fail("unknown key \"" + key + "\"");

  PcData d;
  d.prime = get_int(doc, "p");
  int ngens = get_int(doc, "ngens");
  d.min_gens = get_int(doc, "dgens");
  if (ngens < 0) fail("ngens must be non-negative");

  if (!doc.contains("weights") || !doc["weights"].is_array())
    fail("missing or non-array \"weights\"");
  for (const json& w : doc["weights"]) {
    if (!w.is_number_integer()) fail("weights must be integers");
    d.weights.push_back(w.get<int>());
  }
  if (static_cast<int>(d.weights.size()) != ngens)
    fail("weights length disagrees with ngens");

  if (doc.contains("powers")) {
    if (!doc["powers"].is_object()) fail("\"powers\" must be an object");
    d.powers.assign(ngens, NormalWord(static_cast<std::size_t>(ngens)));
    for (auto& [key, value] : doc["powers"].items()) {
      int idx;
      try {
        idx = std::stoi(key);
      } catch (...) {
        fail("powers key \"" + key + "\" is not a generator index");
      }
      if (idx < 1 || idx > ngens) fail("powers index out of range");
      d.powers[idx - 1] = parse_relation_word(value, ngens, d.prime, "powers[" + key + "]");
    }
  }

  if (doc.contains("conjugates")) {
    if (!doc["conjugates"].is_object()) fail("\"conjugates\" must be an object");
    for (auto& [key, value] : doc["conjugates"].items()) {
      int i = 0, j = 0;
      char comma = 0;
      std::istringstream ss(key);
      if (!(ss >> i >> comma >> j) || comma != ',' || !(ss >> std::ws).eof())
        fail("conjugates key \"" + key + "\" must have the form \"i,j\"");
      if (i < 1 || j < 1 || i > ngens || j > ngens || i >= j)
        fail("conjugates key \"" + key + "\" requires 1 <= i < j <= ngens");
      d.conjugates.push_back(
          {{i - 1, j - 1}, parse_relation_word(value, ngens, d.prime, "conjugates[" + key + "]")});
    }
  }

  if (doc.contains("definitions")) {
    if (!doc["definitions"].is_object()) fail("\"definitions\" must be an object");
    for (auto& [key, value] : doc["definitions"].items()) {
      int idx;
      try {
        idx = std::stoi(key);
      } catch (...) {
        fail("definitions key \"" + key + "\" is not a generator index");
      }
      if (idx < 1 || idx > ngens) fail("definitions index out of range");
      d.definitions.push_back({idx - 1, parse_gen_word(value, ngens, "definitions[" + key + "]")});
    }
  }

  try {
    return PcPresentation(std::move(d));
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

PcPresentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

std::string presentation_to_json(const PcPresentation& pres) {
  json doc;
  doc["p"] = pres.prime();
  doc["ngens"] = pres.ngens();
  doc["dgens"] = pres.min_gens();
  doc["weights"] = pres.weights();

  json powers = json::object();
  for (int i = 0; i < pres.ngens(); ++i) {
    const NormalWord& u = pres.power_rhs(i);
    if (u.is_identity()) continue;
    json arr = json::array();
    for (int k = 0; k < pres.ngens(); ++k)
      if (u.exps[k]) arr.push_back({k + 1, static_cast<int>(u.exps[k])});
    powers[std::to_string(i + 1)] = arr;
  }
  if (!powers.empty()) doc["powers"] = powers;

  json conjs = json::object();
  for (int i = 0; i < pres.ngens(); ++i)
    for (int j = i + 1; j < pres.ngens(); ++j) {
      const NormalWord* tail = pres.conj_tail(i, j);
      if (!tail) continue;
      json arr = json::array();
      for (int k = 0; k < pres.ngens(); ++k)
        if (tail->exps[k]) arr.push_back({k + 1, static_cast<int>(tail->exps[k])});
      conjs[std::to_string(i + 1) + "," + std::to_string(j + 1)] = arr;
    }
  if (!conjs.empty()) doc["conjugates"] = conjs;

  json defs = json::object();
  for (int k = pres.min_gens(); k < pres.ngens(); ++k) {
    const GenWord* def = pres.definition(k);
    if (!def) continue;
    json arr = json::array();
    for (auto& [g, e] : def->syls) arr.push_back({g + 1, e});
    defs[std::to_string(k + 1)] = arr;
  }
  if (!defs.empty()) doc["definitions"] = defs;

  return doc.dump(2) + "\n";
}

void save_presentation(const PcPresentation& pres, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << presentation_to_json(pres);
}

}  // namespace pcgroup
