#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "toric/divisor.hpp"
#include "toric/fan.hpp"

namespace toric {

inline constexpr int kFanSchemaVersion = 1;

/// Malformed or invalid document. path is a JSON pointer to the offending
/// value ("" for the whole document).
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string path, std::string reason)
      : std::runtime_error("SchemaError(" + path + ", \"" + reason + "\")"),
        path_(std::move(path)),
        reason_(std::move(reason)) {}

  const std::string& path() const noexcept { return path_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string path_;
  std::string reason_;
};

struct FanDocument {
  int schema_version = kFanSchemaVersion;
  std::optional<std::string> name;
  RawFan raw;
  std::map<std::string, ToricDivisor> divisors;
  std::optional<std::string> ample;

  /// The validated fan (parse_fan_document already validated it).
  Fan fan() const { return validate_fan(raw); }

  /// Named divisor. "K" and "-K" resolve to the (anti)canonical divisor
  /// unless the document defines them. Throws Error(UnknownDivisor).
  ToricDivisor divisor(const std::string& name) const;

  friend bool operator==(const FanDocument& a, const FanDocument& b) {
    return a.schema_version == b.schema_version && a.name == b.name && a.raw.dim == b.raw.dim &&
           a.raw.rays == b.raw.rays && a.raw.max_cones == b.raw.max_cones && a.divisors == b.divisors &&
           a.ample == b.ample;
  }
};

/// Strict parse: unknown fields, non-primitive rays, rationals not in lowest
/// terms and invalid fans are all rejected with a SchemaError.
FanDocument parse_fan_document(std::string_view text);
FanDocument load_fan_document(const std::string& path);

/// Canonical JSON text of the document (stable key order, rationals as strings).
std::string emit_fan_document(const FanDocument& doc);

}  // namespace toric
