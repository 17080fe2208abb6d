#include <vwseries/serialize.hpp>

#include <fstream>
#include <stdexcept>

namespace vwseries {

namespace {

// The preset catalogue, kept as schema-true JSON so data/surfaces.json and
// this table cannot drift apart in shape. The general-type entries carry a
// canonical class 3H on the same rank-one lattice; their Euler numbers
// follow Noether's formula 12*chiO - K^2.
constexpr const char* kPresets = R"json({
  "surfaces": [
    {"name": "k3",  "gram": [[2]], "h": [1], "k": [0], "h01": 0, "h02": 1, "h0K": 1, "chiO": 2, "eulS": 24},
    {"name": "gt2", "gram": [[2]], "h": [1], "k": [3], "h01": 0, "h02": 2, "h0K": 2, "chiO": 3, "eulS": 18},
    {"name": "gt3", "gram": [[2]], "h": [1], "k": [3], "h01": 0, "h02": 3, "h0K": 3, "chiO": 4, "eulS": 30},
    {"name": "gt4", "gram": [[2]], "h": [1], "k": [3], "h01": 0, "h02": 4, "h0K": 4, "chiO": 5, "eulS": 42}
  ]
})json";

const nlohmann::json& preset_catalogue() {
  static const nlohmann::json cat = nlohmann::json::parse(kPresets);
  return cat;
}

long require_long(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw std::invalid_argument(std::string("surface JSON: missing integer field '") + key + "'");
  }
  return j.at(key).get<long>();
}

std::vector<long> require_long_vec(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw std::invalid_argument(std::string("surface JSON: missing array field '") + key + "'");
  }
  std::vector<long> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_number_integer()) {
      throw std::invalid_argument(std::string("surface JSON: field '") + key + "' must hold integers");
    }
    out.push_back(v.get<long>());
  }
  return out;
}

}  // namespace

nlohmann::json qseries_to_json(const QSeries& a) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : a.terms()) {
    terms.push_back(nlohmann::json::array({k, c.str()}));
  }
  return nlohmann::json{{"step_den", a.step_den()}, {"order", a.order_scaled()}, {"terms", terms}};
}

QSeries qseries_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("step_den") || !j.contains("order") || !j.contains("terms")) {
    throw std::invalid_argument("series JSON: need fields step_den, order, terms");
  }
  if (!j.at("step_den").is_number_integer() || !j.at("order").is_number_integer() ||
      !j.at("terms").is_array()) {
    throw std::invalid_argument("series JSON: step_den/order must be integers, terms an array");
  }
  const auto D = j.at("step_den").get<QSeries::Key>();
  const auto O = j.at("order").get<QSeries::Key>();
  QSeries::TermMap terms;
  for (const auto& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 2 || !t.at(0).is_number_integer() || !t.at(1).is_string()) {
      throw std::invalid_argument("series JSON: each term must be [exponent, \"num/den\"]");
    }
    const auto k = t.at(0).get<QSeries::Key>();
    if (terms.count(k)) throw std::invalid_argument("series JSON: duplicate exponent");
    terms[k] = Rational::parse(t.at(1).get<std::string>());
  }
  return QSeries(D, O, std::move(terms));
}

nlohmann::json surface_to_json(const SurfaceData& s) {
  nlohmann::json gram = nlohmann::json::array();
  for (const auto& row : s.gram) gram.push_back(row);
  return nlohmann::json{{"name", s.name}, {"gram", gram},   {"h", s.h},
                        {"k", s.k},       {"h01", s.h01},   {"h02", s.h02},
                        {"h0K", s.h0K},   {"chiO", s.chiO}, {"eulS", s.eulS}};
}

SurfaceData surface_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("surface JSON: expected an object");
  SurfaceData s;
  if (!j.contains("name") || !j.at("name").is_string()) {
    throw std::invalid_argument("surface JSON: missing string field 'name'");
  }
  s.name = j.at("name").get<std::string>();
  if (!j.contains("gram") || !j.at("gram").is_array()) {
    throw std::invalid_argument("surface JSON: missing array field 'gram'");
  }
  for (const auto& row : j.at("gram")) {
    if (!row.is_array()) throw std::invalid_argument("surface JSON: gram rows must be arrays");
    std::vector<long> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) {
        throw std::invalid_argument("surface JSON: gram entries must be integers");
      }
      r.push_back(v.get<long>());
    }
    s.gram.push_back(std::move(r));
  }
  s.h = require_long_vec(j, "h");
  s.k = require_long_vec(j, "k");
  s.h01 = require_long(j, "h01");
  s.h02 = require_long(j, "h02");
  s.h0K = require_long(j, "h0K");
  s.chiO = require_long(j, "chiO");
  s.eulS = require_long(j, "eulS");
  validate(s);
  return s;
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& p : preset_catalogue().at("surfaces")) {
    out.push_back(p.at("name").get<std::string>());
  }
  return out;
}

SurfaceData surface_preset(const std::string& name) {
  for (const auto& p : preset_catalogue().at("surfaces")) {
    if (p.at("name").get<std::string>() == name) return surface_from_json(p);
  }
  throw std::invalid_argument("unknown surface preset '" + name + "'");
}

SurfaceData load_surface(const std::string& name_or_path) {
  std::ifstream in(name_or_path);
  if (in.good()) {
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::parse_error& e) {
      throw std::invalid_argument("surface file '" + name_or_path + "': " + e.what());
    }
    return surface_from_json(j);
  }
  return surface_preset(name_or_path);
}

}  // namespace vwseries
