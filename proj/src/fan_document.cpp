#include "toric/fan_document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "toric/error.hpp"

namespace toric {

using json = nlohmann::json;

namespace {

std::string pointer(const std::string& base, const std::string& key) { return base + "/" + key; }
std::string pointer(const std::string& base, std::size_t idx) { return base + "/" + std::to_string(idx); }

void reject_unknown(const json& obj, const std::string& path, const std::set<std::string>& allowed) {
  for (const auto& [key, _] : obj.items())
    if (!allowed.count(key)) throw SchemaError(pointer(path, key), "unknown field");
}

long long as_integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw SchemaError(path, "expected an integer");
  return v.get<long long>();
}

std::size_t as_index(const json& v, const std::string& path) {
  long long x = as_integer(v, path);
  if (x < 0) throw SchemaError(path, "index must be nonnegative");
  return static_cast<std::size_t>(x);
}

}  // namespace

ToricDivisor FanDocument::divisor(const std::string& key) const {
  if (auto it = divisors.find(key); it != divisors.end()) return it->second;
  if (key == "K") return ToricDivisor::canonical(raw.rays.size());
  if (key == "-K") return ToricDivisor::anticanonical(raw.rays.size());
  throw Error(ErrorKind::UnknownDivisor, "no divisor named '" + key + "'");
}

FanDocument parse_fan_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw SchemaError("", "document must be an object");
  reject_unknown(root, "", {"schema_version", "name", "dim", "rays", "max_cones", "divisors", "ample"});

  FanDocument doc;
  if (!root.contains("schema_version")) throw SchemaError("/schema_version", "missing");
  if (as_integer(root["schema_version"], "/schema_version") != kFanSchemaVersion)
    throw SchemaError("/schema_version", "unsupported schema version");
  if (root.contains("name")) {
    if (!root["name"].is_string()) throw SchemaError("/name", "expected a string");
    doc.name = root["name"].get<std::string>();
  }
  for (const char* key : {"dim", "rays", "max_cones"})
    if (!root.contains(key)) throw SchemaError(pointer("", key), "missing");

  long long dim = as_integer(root["dim"], "/dim");
  if (dim < 1) throw SchemaError("/dim", "dimension must be positive");
  doc.raw.dim = static_cast<std::size_t>(dim);

  const json& rays = root["rays"];
  if (!rays.is_array()) throw SchemaError("/rays", "expected an array");
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const auto path = pointer("/rays", i);
    if (!rays[i].is_array()) throw SchemaError(path, "expected an array");
    if (rays[i].size() != doc.raw.dim) throw SchemaError(path, "length differs from dim");
    ZVector v;
    for (std::size_t j = 0; j < rays[i].size(); ++j) v.emplace_back(static_cast<long>(as_integer(rays[i][j], pointer(path, j))));
    if (!is_primitive(v)) throw SchemaError(path, "not primitive");
    doc.raw.rays.push_back(std::move(v));
  }

  const json& cones = root["max_cones"];
  if (!cones.is_array()) throw SchemaError("/max_cones", "expected an array");
  for (std::size_t c = 0; c < cones.size(); ++c) {
    const auto path = pointer("/max_cones", c);
    if (!cones[c].is_array()) throw SchemaError(path, "expected an array");
    ConeIndices cone;
    for (std::size_t j = 0; j < cones[c].size(); ++j) {
      std::size_t idx = as_index(cones[c][j], pointer(path, j));
      if (idx >= doc.raw.rays.size()) throw SchemaError(pointer(path, j), "ray index out of range");
      cone.push_back(idx);
    }
    doc.raw.max_cones.push_back(std::move(cone));
  }

  if (root.contains("divisors")) {
    const json& divs = root["divisors"];
    if (!divs.is_object()) throw SchemaError("/divisors", "expected an object");
    for (const auto& [key, value] : divs.items()) {
      const auto path = pointer("/divisors", key);
      if (key.empty()) throw SchemaError(path, "empty divisor name");
      if (!value.is_array()) throw SchemaError(path, "expected an array of rational strings");
      if (value.size() != doc.raw.rays.size()) throw SchemaError(path, "length differs from ray count");
      QVector coeffs;
      for (std::size_t j = 0; j < value.size(); ++j) {
        if (!value[j].is_string()) throw SchemaError(pointer(path, j), "expected a \"p/q\" string");
        Rational q;
        if (!parse_rational(value[j].get<std::string>(), q))
          throw SchemaError(pointer(path, j), "not a rational in lowest terms");
        coeffs.push_back(q);
      }
      doc.divisors.emplace(key, ToricDivisor(std::move(coeffs)));
    }
  }
  if (root.contains("ample")) {
    if (!root["ample"].is_string()) throw SchemaError("/ample", "expected a divisor name");
    doc.ample = root["ample"].get<std::string>();
    if (!doc.divisors.count(*doc.ample) && *doc.ample != "K" && *doc.ample != "-K")
      throw SchemaError("/ample", "names no divisor");
  }

  try {
    (void)validate_fan(doc.raw);
  } catch (const Error& e) {
    std::string path = "/max_cones";
    if (e.kind() == ErrorKind::NonPrimitiveRay || e.kind() == ErrorKind::DimensionMismatch) path = "/rays";
    throw SchemaError(path, e.what());
  }
  return doc;
}

FanDocument load_fan_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("", "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_fan_document(buf.str());
}

std::string emit_fan_document(const FanDocument& doc) {
  json root;
  root["schema_version"] = doc.schema_version;
  if (doc.name) root["name"] = *doc.name;
  root["dim"] = doc.raw.dim;
  json rays = json::array();
  for (const auto& v : doc.raw.rays) {
    json row = json::array();
    for (const auto& x : v) row.push_back(x.get_si());
    rays.push_back(std::move(row));
  }
  root["rays"] = std::move(rays);
  json cones = json::array();
  for (const auto& c : doc.raw.max_cones) cones.push_back(c);
  root["max_cones"] = std::move(cones);
  if (!doc.divisors.empty()) {
    json divs = json::object();
    for (const auto& [key, d] : doc.divisors) {
      json coeffs = json::array();
      for (const auto& q : d.coefficients) coeffs.push_back(to_string(q));
      divs[key] = std::move(coeffs);
    }
    root["divisors"] = std::move(divs);
  }
  if (doc.ample) root["ample"] = *doc.ample;
  return root.dump(2) + "\n";
}

}  // namespace toric
